#include "tvcf/tail.hpp"

namespace tvcf {

int subclass_mu(Subclass s) {
    // Index of the beginning coefficient: matches the leading power of the
    // initial models (De20 grows like n, Dn20 like n^2).
    switch (s) {
        case Subclass::De10: return 1;
        case Subclass::Dn20: return 4;
        default: return 2;
    }
}

int subclass_m(Subclass s) {
    switch (s) {
        case Subclass::De20:
        case Subclass::Dn20: return 0;
        case Subclass::De10: return 1;
        default: return 2;
    }
}

int subclass_theta(Subclass s) {
    switch (s) {
        case Subclass::De10:
        case Subclass::De20: return 1;
        case Subclass::D11: return 4;
        default: return 2;
    }
}

QuadraticRow quadratic_row(const SubclassTag& tag, const ShiftedCoeffs& sc,
                           const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.bits();
    Complex zero(0L, p);
    QuadraticRow row{zero, zero, zero};
    switch (tag.cls) {
        case Subclass::De10:
            row = {sc.qp0, zero, -(sc.q0 * sc.pm1)};
            break;
        case Subclass::Dn10:
            row = {sc.qp0, sc.pm1 - sc.ppm1, zero};
            break;
        case Subclass::D11:
            row = {sc.qpm1, sc.qm1 * sc.qpm1, zero};
            break;
        case Subclass::De20:
            row = {sc.qp0, sc.pm1 - sc.ppm1 - sc.pm2, -(sc.q0 * sc.pm2)};
            break;
        case Subclass::Dn20:
            row = {sc.qp0, sc.pm2 - sc.ppm2, zero};
            break;
        case Subclass::Dt21:
            row = {sc.qpm1, sc.pm2 - sc.ppm2 + sc.qm1 * sc.qpm1, -(sc.qm1 * sc.ppm2)};
            break;
    }
    if (row.alpha.is_zero())
        throw DegenerateCoefficient("quadratic row has alpha = 0");
    return row;
}

namespace {

// sgn(Re w) with a refusal on the boundary |Re w| <= eps_rel |w|: the
// subclass conditions exclude it, so reaching it means misclassification.
long sign_of_re(const Complex& w, const PrecisionContext& ctx) {
    if (abs(w.re()) <= ctx.eps_rel() * abs(w))
        throw BoundaryCondition("sgn argument has vanishing real part");
    return w.re().is_negative() ? -1 : 1;
}

}  // namespace

Complex beginning_coefficient(const SubclassTag& tag, const ShiftedCoeffs& sc,
                              const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.bits();
    switch (tag.cls) {
        case Subclass::De10: {
            if (sc.qp0.is_zero()) throw DegenerateCoefficient("q'_0 = 0 in De10");
            Complex root = sqrt(sc.q0 * sc.pm1 / sc.qp0);
            long s = sign_of_re(sc.qp0 * root / sc.pm1, ctx);
            return root * s;
        }
        case Subclass::Dn10: {
            if (abs(sc.ppm1) < abs(sc.pm1)) return Complex(0L, p);
            return (sc.ppm1 - sc.pm1) / sc.qp0;
        }
        case Subclass::D11:
            return Complex(0L, p);
        case Subclass::De20: {
            QuadraticRow r = quadratic_row(tag, sc, ctx);
            Complex disc = tag.discriminant ? *tag.discriminant
                                            : r.beta * r.beta - 4L * r.alpha * r.gamma;
            Complex root = sqrt(disc);
            long s = sign_of_re(root / sc.pm2, ctx);
            return (-r.beta + root * s) / (r.alpha * 2L);
        }
        case Subclass::Dn20: {
            if (abs(sc.ppm2) < abs(sc.pm2)) return Complex(0L, p);
            return (sc.ppm2 - sc.pm2) / sc.qp0;
        }
        case Subclass::Dt21: {
            if (!tag.roots) throw DegenerateCoefficient("Dt21 tag carries no roots");
            return tag.roots->first;
        }
    }
    throw DomainError("unreachable subclass");
}

TailModel initial_tail(const SubclassTag& tag, const ShiftedCoeffs& sc,
                       const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.bits();
    QuadraticRow row = quadratic_row(tag, sc, ctx);
    TailModel model{tag, subclass_mu(tag.cls), subclass_m(tag.cls), subclass_theta(tag.cls),
                    {}, row.alpha, row.beta, row.gamma};
    Complex tau = beginning_coefficient(tag, sc, ctx);
    switch (tag.cls) {
        case Subclass::De10: {
            model.tau.emplace(-1, tau);
            Complex tau0 =
                (2L * sc.pp0 - 2L * sc.qp0 * sc.q0 + sc.pm1 - 2L * sc.p0) / (4L * sc.qp0);
            model.tau.emplace(0, tau0);
            break;
        }
        case Subclass::Dn10: {
            model.tau.emplace(-2, tau);
            Complex diff = sc.pm1 - sc.ppm1;
            if (diff.is_zero())
                throw DegenerateCoefficient("p_{-1} = p'_{-1} in Dn10 coefficient formula");
            Complex tau0(0L, p);
            if (abs(sc.ppm1) < abs(sc.pm1)) {
                tau0 = sc.ppm1 * sc.q0 / diff;
            } else {
                tau0 = sc.pm1 * sc.q0 / (-diff) + (sc.pm1 + sc.pp0 - sc.p0) / sc.qp0 +
                       diff * sc.qp1 / (sc.qp0 * sc.qp0);
            }
            model.tau.emplace(0, tau0);
            break;
        }
        case Subclass::D11:
            model.tau.emplace(-2, Complex(0L, p));
            model.tau.emplace(0, sc.ppm1 / sc.qpm1);
            break;
        case Subclass::De20:
            model.tau.emplace(-2, tau);
            break;
        case Subclass::Dn20: {
            model.tau.emplace(-4, tau);
            Complex tau2(0L, p);
            if (!(abs(sc.ppm2) < abs(sc.pm2))) {
                tau2 = (2L * sc.pm2 + sc.ppm1 - sc.pm1) / sc.qp0 +
                       sc.qp1 * (sc.pm2 - sc.ppm2) / (sc.qp0 * sc.qp0);
            }
            model.tau.emplace(-2, tau2);
            break;
        }
        case Subclass::Dt21: {
            model.tau.emplace(-2, tau);
            Complex den = 2L * sc.qpm1 * tau + sc.pm2 - sc.ppm2 + sc.qpm1 * sc.qm1;
            if (den.is_zero())
                throw DegenerateCoefficient("Dt21 constant-term denominator vanished");
            Complex num = sc.ppm2 * sc.q0 + sc.ppm1 * sc.qm1 -
                          (sc.qpm1 * sc.q0 + sc.qp0 * sc.qm1 - sc.ppm1 + sc.pm1 - sc.ppm2) * tau -
                          (sc.qpm1 + sc.qp0) * (tau * tau);
            model.tau.emplace(0, num / den);
            break;
        }
    }
    return model;
}

std::map<int, Complex> extended_coefficients(const SubclassTag& tag, const ShiftedCoeffs& sc,
                                             const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.bits();
    Complex zero(0L, p);
    std::map<int, Complex> out;
    TailModel model = initial_tail(tag, sc, ctx);
    switch (tag.cls) {
        case Subclass::De10:
            out.emplace(-2, zero);
            out.emplace(0, model.tau.at(0));
            break;
        case Subclass::Dn10:
            out.emplace(-1, zero);
            out.emplace(0, model.tau.at(0));
            break;
        case Subclass::D11: {
            out.emplace(-1, zero);
            Complex tau = model.tau.at(-2);
            out.emplace(0, tau.is_zero() ? sc.ppm1 / sc.qpm1
                                         : sc.qm1 - sc.q0 - sc.pm1 / sc.qpm1);
            break;
        }
        case Subclass::De20: {
            out.emplace(-4, zero);
            out.emplace(-3, zero);
            out.emplace(-1, zero);
            Complex tau = model.tau.at(-2);
            Complex den = 2L * tau * sc.qp0 + sc.pm1 - sc.ppm1;
            if (den.is_zero())
                throw DegenerateCoefficient("De20 constant-term denominator vanished");
            Complex num = sc.ppm1 * sc.q0 + sc.pm2 * sc.q1 -
                          (sc.qp1 + sc.qp0) * (tau * tau) +
                          (sc.ppm1 + sc.pp0 - sc.p0 - sc.qp0 * sc.q0) * tau;
            out.emplace(0, num / den);
            break;
        }
        case Subclass::Dn20:
            out.emplace(-3, zero);
            out.emplace(-2, model.tau.at(-2));
            out.emplace(-1, zero);
            break;
        case Subclass::Dt21:
            out.emplace(-3, zero);
            out.emplace(-1, zero);
            out.emplace(0, model.tau.at(0));
            break;
    }
    return out;
}

Complex eval_tau_model(const std::map<int, Complex>& tau, long n, const PrecisionContext& ctx) {
    Complex v(0L, ctx.bits());
    Real sqrt_n = sqrt(ctx.real(n));
    for (const auto& [j, c] : tau) {
        if (c.is_zero()) continue;
        v += c * pow(sqrt_n, -static_cast<long>(j));
    }
    return v;
}

Complex TailModel::eval_initial(long n, const PrecisionContext& ctx) const {
    return eval_tau_model(tau, n, ctx);
}

}  // namespace tvcf
