#ifndef TVCF_POLY_HPP_
#define TVCF_POLY_HPP_

#include <vector>

#include "tvcf/mp.hpp"

namespace tvcf {

// Complex-coefficient polynomial in the index variable n, coefficients stored
// ascending. The degree is implied by the trailing exactly-nonzero
// coefficient (-1 for the zero polynomial).
class Poly {
public:
    explicit Poly(std::vector<Complex> coeffs);

    static Poly zero(const PrecisionContext& ctx);
    static Poly constant(Complex c);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

    // Coefficient of n^k (zero beyond the degree).
    Complex coeff(int k) const;

    Complex eval(long n) const;
    Complex eval(const Complex& z) const;

    // Q with Q(n) = p(n+1), coefficient-exact binomial re-expansion:
    // Q_j = sum_{k>=j} C(k,j) p_k.
    Poly shift() const;

    // p(s*n + t) for integer s, t; used to split a one-variant index into
    // the odd/even two-variant pair.
    Poly compose_linear(long s, long t) const;

    bool operator==(const Poly& o) const;

private:
    std::vector<Complex> coeffs_;
};

}  // namespace tvcf

#endif  // TVCF_POLY_HPP_
