#include "tvcf/poly.hpp"

namespace tvcf {

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::zero(const PrecisionContext& ctx) {
    (void)ctx;
    return Poly(std::vector<Complex>{});
}

Poly Poly::constant(Complex c) {
    std::vector<Complex> v;
    v.push_back(std::move(c));
    return Poly(std::move(v));
}

Complex Poly::coeff(int k) const {
    if (k < 0 || k > degree()) {
        mpfr_prec_t p = coeffs_.empty() ? MPFR_PREC_MIN : coeffs_.front().prec();
        return Complex(0L, p);
    }
    return coeffs_[static_cast<size_t>(k)];
}

Complex Poly::eval(long n) const {
    if (coeffs_.empty()) return Complex(0L, MPFR_PREC_MIN);
    Complex r = coeffs_.back();
    for (size_t i = coeffs_.size(); i-- > 1;) {
        r = r * n + coeffs_[i - 1];
    }
    return r;
}

Complex Poly::eval(const Complex& z) const {
    if (coeffs_.empty()) return Complex(0L, z.prec());
    Complex r = coeffs_.back();
    for (size_t i = coeffs_.size(); i-- > 1;) {
        r = r * z + coeffs_[i - 1];
    }
    return r;
}

Poly Poly::shift() const {
    if (coeffs_.empty()) return Poly(std::vector<Complex>{});
    size_t m = coeffs_.size();
    std::vector<Complex> out;
    out.reserve(m);
    for (size_t j = 0; j < m; ++j) {
        Complex s(0L, coeffs_.front().prec());
        // C(k, j) built incrementally over k = j, j+1, ...
        unsigned long binom = 1;
        for (size_t k = j; k < m; ++k) {
            if (k > j) binom = binom * k / (k - j);
            s += coeffs_[k] * static_cast<long>(binom);
        }
        out.push_back(std::move(s));
    }
    return Poly(std::move(out));
}

Poly Poly::compose_linear(long s, long t) const {
    if (coeffs_.empty()) return Poly(std::vector<Complex>{});
    mpfr_prec_t p = coeffs_.front().prec();
    // Horner in polynomial space: r(n) <- r(n)*(s n + t) + c_k.
    std::vector<Complex> r;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        std::vector<Complex> next;
        next.reserve(r.size() + 1);
        next.emplace_back(0L, p);
        for (size_t d = 0; d < r.size(); ++d) next.emplace_back(r[d] * s);
        for (size_t d = 0; d < r.size(); ++d) next[d] += r[d] * t;
        next[0] += coeffs_[i];
        r = std::move(next);
    }
    return Poly(std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!(coeffs_[i] == o.coeffs_[i])) return false;
    return true;
}

}  // namespace tvcf
