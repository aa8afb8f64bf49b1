#include "tvcf/cf.hpp"

#include <cmath>
#include <complex>

#include <json.hpp>

namespace tvcf {

namespace {

// Reject partial-numerator polynomials that vanish at some integer n >= 1.
// Only exact hits matter (ZeroDenominator policy is exact as well), so we
// locate candidate roots and test them with exact evaluation.
void check_no_integer_roots(const Poly& p, const char* name) {
    int deg = p.degree();
    if (deg < 1) return;
    std::vector<double> candidates;
    double c0r = p.coeff(0).re().to_double(), c0i = p.coeff(0).im().to_double();
    double c1r = p.coeff(1).re().to_double(), c1i = p.coeff(1).im().to_double();
    if (deg == 1) {
        double d = c1r * c1r + c1i * c1i;
        candidates.push_back(-(c0r * c1r + c0i * c1i) / d);
    } else {
        double c2r = p.coeff(2).re().to_double(), c2i = p.coeff(2).im().to_double();
        // roots of c2 z^2 + c1 z + c0 in double precision are enough to spot
        // integer candidates
        std::complex<double> A(c2r, c2i), B(c1r, c1i), C(c0r, c0i);
        std::complex<double> disc = std::sqrt(B * B - 4.0 * A * C);
        for (auto r : {(-B + disc) / (2.0 * A), (-B - disc) / (2.0 * A)})
            if (std::abs(r.imag()) < 0.25) candidates.push_back(r.real());
    }
    for (double c : candidates) {
        long n = std::lround(c);
        for (long probe : {n - 1, n, n + 1}) {
            if (probe >= 1 && p.eval(probe).is_zero())
                throw DomainError(std::string(name) + " vanishes at n = " + std::to_string(probe));
        }
    }
}

}  // namespace

TwoVariantCF::TwoVariantCF(Complex b0_prime, Poly a, Poly b, Poly a_prime, Poly b_prime,
                           std::string label, std::vector<PrefixQuotient> prefix)
    : b0p_(std::move(b0_prime)),
      a_(std::move(a)),
      b_(std::move(b)),
      ap_(std::move(a_prime)),
      bp_(std::move(b_prime)),
      a_shift_(a_.shift()),
      b_shift_(b_.shift()),
      label_(std::move(label)),
      prefix_(std::move(prefix)) {
    int ka = a_.degree(), kap = ap_.degree();
    int lb = b_.degree(), lbp = bp_.degree();
    if (ka != kap || lb != lbp || ka < 1 || ka > 2 || lb < 0 || lb > 1)
        throw DegreeOutOfRange("degrees (deg a, deg a', deg b, deg b') = (" +
                               std::to_string(ka) + "," + std::to_string(kap) + "," +
                               std::to_string(lb) + "," + std::to_string(lbp) +
                               ") outside {1,2} x {0,1}");
    check_no_integer_roots(a_, "a_n");
    check_no_integer_roots(ap_, "a'_n");
}

std::pair<Complex, Complex> TwoVariantCF::quotient(long i) const {
    long m = (i + 1) / 2;
    if (i % 2 == 1) return {a_.eval(m), b_.eval(m)};
    return {ap_.eval(m), bp_.eval(m)};
}

ShiftedCoeffs shifted_coeffs(const TwoVariantCF& cf) {
    const Poly as = cf.a_shift();
    const Poly bs = cf.b_shift();
    mpfr_prec_t p = cf.b0_prime().prec();
    auto C = [&](const Poly& q, int k) {
        Complex c = q.coeff(k);
        return c.prec() < p ? Complex(Real(0L, p)) + c : c;
    };
    ShiftedCoeffs sc{C(as, 2),          C(as, 1),          C(as, 0),
                     C(cf.a_prime(), 2), C(cf.a_prime(), 1), C(cf.a_prime(), 0),
                     C(bs, 2),          C(bs, 1),          C(bs, 0), Complex(0L, p),
                     C(cf.b_prime(), 2), C(cf.b_prime(), 1), C(cf.b_prime(), 0), Complex(0L, p),
                     cf.k(),            cf.l()};
    return sc;
}

namespace {

Complex fold_prefix(const TwoVariantCF& cf, Complex v) {
    const auto& pre = cf.prefix();
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
        Complex d = it->den + v;
        if (d.is_zero()) throw ZeroDenominator("prefix quotient denominator vanished");
        v = it->num / d;
    }
    return v;
}

}  // namespace

Complex modified_approximant(const TwoVariantCF& cf, long n, const Complex& omega,
                             const PrecisionContext& ctx) {
    if (n < 0) throw DomainError("approximant index must be nonnegative");
    Complex v = omega + Complex(0L, ctx.bits());
    for (long i = n; i >= 1; --i) {
        auto [num, den] = cf.quotient(i);
        Complex d = den + v;
        if (d.is_zero())
            throw ZeroDenominator("approximant fold hit a zero denominator", i);
        v = num / d;
    }
    return fold_prefix(cf, cf.b0_prime() + v);
}

Complex classical_approximant(const TwoVariantCF& cf, long n, const PrecisionContext& ctx) {
    return modified_approximant(cf, n, Complex(0L, ctx.bits()), ctx);
}

Complex u_plus(const TwoVariantCF& cf, long n, const Complex& u_next,
               const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("u_plus index must be positive");
    (void)ctx;
    Complex inner = cf.b_shift().eval(n) + u_next;
    if (inner.is_zero())
        throw ZeroDenominator("u_plus inner denominator b_{n+1} + u vanished", n);
    Complex outer = cf.b_prime().eval(n) + cf.a_shift().eval(n) / inner;
    if (outer.is_zero()) throw ZeroDenominator("u_plus outer denominator vanished", n);
    return cf.a_prime().eval(n) / outer;
}

Complex odd_tail_residual(const TwoVariantCF& cf, long n, const Complex& x_n,
                          const Complex& x_next, const PrecisionContext& ctx) {
    (void)ctx;
    Complex a1 = cf.a_shift().eval(n);
    Complex b1 = cf.b_shift().eval(n);
    Complex ap = cf.a_prime().eval(n);
    Complex bp = cf.b_prime().eval(n);
    return (bp * b1 + a1) * x_n + bp * x_n * x_next - ap * x_next - ap * b1;
}

TwoVariantCF regroup_one_variant(const Complex& b0, const Poly& c, const Poly& d) {
    return TwoVariantCF(b0, c.compose_linear(2, -1), d.compose_linear(2, -1),
                        c.compose_linear(2, 0), d.compose_linear(2, 0));
}

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) {
    return json::array({z.re().str(), z.im().str()});
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(complex_to_json(c));
    return arr;
}

Complex complex_from_json(const json& j, const PrecisionContext& ctx) {
    if (!j.is_array() || j.size() != 2)
        throw DomainError("complex value must be a [re, im] pair");
    auto field = [&](const json& e) {
        if (e.is_string()) return ctx.real(e.get<std::string>());
        return ctx.real(e.dump());
    };
    return Complex(field(j[0]), field(j[1]));
}

Poly poly_from_json(const json& j, const PrecisionContext& ctx) {
    std::vector<Complex> cs;
    for (const auto& e : j) cs.push_back(complex_from_json(e, ctx));
    return Poly(std::move(cs));
}

}  // namespace

std::string TwoVariantCF::to_json() const {
    json j;
    j["schema"] = "tvcf/1";
    j["label"] = label_;
    j["b0_prime"] = complex_to_json(b0p_);
    j["a"] = poly_to_json(a_);
    j["b"] = poly_to_json(b_);
    j["a_prime"] = poly_to_json(ap_);
    j["b_prime"] = poly_to_json(bp_);
    if (!prefix_.empty()) {
        json pre = json::array();
        for (const auto& q : prefix_)
            pre.push_back(json::array({complex_to_json(q.num), complex_to_json(q.den)}));
        j["prefix"] = pre;
    }
    return j.dump(2);
}

TwoVariantCF TwoVariantCF::from_json(const std::string& text, const PrecisionContext& ctx) {
    json j = json::parse(text);
    std::vector<PrefixQuotient> prefix;
    if (j.contains("prefix")) {
        for (const auto& q : j["prefix"])
            prefix.push_back({complex_from_json(q[0], ctx), complex_from_json(q[1], ctx)});
    }
    return TwoVariantCF(complex_from_json(j.at("b0_prime"), ctx),
                        poly_from_json(j.at("a"), ctx), poly_from_json(j.at("b"), ctx),
                        poly_from_json(j.at("a_prime"), ctx),
                        poly_from_json(j.at("b_prime"), ctx),
                        j.value("label", std::string{}), std::move(prefix));
}

}  // namespace tvcf
