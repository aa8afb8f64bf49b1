#include "tvcf/classify.hpp"

namespace tvcf {

const char* subclass_name(Subclass s) {
    switch (s) {
        case Subclass::De10: return "De10";
        case Subclass::Dn10: return "Dn10";
        case Subclass::D11: return "D11";
        case Subclass::De20: return "De20";
        case Subclass::Dn20: return "Dn20";
        case Subclass::Dt21: return "Dt21";
    }
    return "?";
}

std::optional<Subclass> subclass_from_name(const std::string& name) {
    for (Subclass s : {Subclass::De10, Subclass::Dn10, Subclass::D11, Subclass::De20,
                       Subclass::Dn20, Subclass::Dt21})
        if (name == subclass_name(s)) return s;
    return std::nullopt;
}

std::pair<Complex, Complex> quadratic_roots(const Complex& alpha, const Complex& beta,
                                            const Complex& gamma) {
    if (alpha.is_zero()) throw DegenerateCoefficient("quadratic with zero leading coefficient");
    Complex s = sqrt(beta * beta - 4L * alpha * gamma);
    // pick the sign that avoids cancellation in beta + s
    Real dot = beta.re() * s.re() + beta.im() * s.im();
    Complex q = dot.is_negative() ? (beta - s) : (beta + s);
    q = q / (-2L);
    if (q.is_zero()) {
        Complex z(0L, alpha.prec());
        return {z, z};
    }
    return {q / alpha, gamma / q};
}

namespace {

bool rel_equal(const Complex& a, const Complex& b, const PrecisionContext& ctx) {
    return abs(a - b) <= ctx.eps_rel() * max(abs(a), abs(b));
}

bool moduli_differ(const Complex& a, const Complex& b, const PrecisionContext& ctx) {
    Real ma = abs(a), mb = abs(b);
    return abs(Complex(ma - mb)) > ctx.eps_rel() * max(ma, mb);
}

}  // namespace

SubclassTag classify(const ShiftedCoeffs& sc, const PrecisionContext& ctx) {
    if (sc.k == 1 && sc.l == 0) {
        if (rel_equal(sc.pm1, sc.ppm1, ctx)) {
            if (sc.pm1.is_zero())
                throw DegenerateCoefficient("pm1 = 0 with deg a = 1");
            Complex w = sc.q0 * sc.qp0 / sc.pm1;
            if (is_nonpositive_real(w, ctx))
                throw NotInClassD("D10 equal-coefficient case with q0 q'0 / p_{-1} on (-inf, 0]");
            return SubclassTag{Subclass::De10, w, std::nullopt, std::nullopt};
        }
        if (moduli_differ(sc.pm1, sc.ppm1, ctx)) {
            return SubclassTag{Subclass::Dn10, Complex(abs(sc.ppm1) - abs(sc.pm1)),
                               std::nullopt, std::nullopt};
        }
        throw NotInClassD("D10 with |p'_{-1}| = |p_{-1}| but p_{-1} != p'_{-1}");
    }
    if (sc.k == 1 && sc.l == 1) {
        return SubclassTag{Subclass::D11, std::nullopt, std::nullopt, std::nullopt};
    }
    if (sc.k == 2 && sc.l == 0) {
        if (rel_equal(sc.pm2, sc.ppm2, ctx)) {
            Complex alpha = sc.qp0;
            Complex beta = sc.pm1 - sc.ppm1 - sc.pm2;
            Complex gamma = -(sc.pm2 * sc.q0);
            if (alpha.is_zero()) throw DegenerateCoefficient("q'_0 = 0 in D20");
            Complex disc = beta * beta - 4L * alpha * gamma;
            Complex w = disc / (sc.pm2 * sc.pm2);
            if (is_nonpositive_real(w, ctx))
                throw NotInClassD(
                    "D20 equal-coefficient case with discriminant quotient on (-inf, 0]");
            return SubclassTag{Subclass::De20, w, std::nullopt, disc};
        }
        if (moduli_differ(sc.pm2, sc.ppm2, ctx)) {
            return SubclassTag{Subclass::Dn20, Complex(abs(sc.ppm2) - abs(sc.pm2)),
                               std::nullopt, std::nullopt};
        }
        throw NotInClassD("D20 with |p'_{-2}| = |p_{-2}| but p_{-2} != p'_{-2}");
    }
    if (sc.k == 2 && sc.l == 1) {
        // Fixed-point quadratic q'_{-1} x^2 + (p_{-2}-p'_{-2}+q_{-1} q'_{-1}) x
        //                       - q_{-1} p'_{-2} = 0.
        auto [x0, x1] = quadratic_roots(sc.qpm1, sc.pm2 - sc.ppm2 + sc.qm1 * sc.qpm1,
                                        -(sc.qm1 * sc.ppm2));
        Complex center = sc.ppm2 / sc.qpm1;
        Real d0 = abs(center - x0), d1 = abs(center - x1);
        if (abs(Complex(d0 - d1)) <= ctx.eps_rel() * max(d0, d1))
            throw NotInClassD("D21 fixed-point roots equidistant from p'_{-2}/q'_{-1}");
        if (d1 < d0) std::swap(x0, x1);
        return SubclassTag{Subclass::Dt21, std::nullopt, std::make_pair(x0, x1), std::nullopt};
    }
    throw DegreeOutOfRange("degrees (k, l) = (" + std::to_string(sc.k) + "," +
                           std::to_string(sc.l) + ") not classifiable");
}

}  // namespace tvcf
