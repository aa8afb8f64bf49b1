#ifndef TVCF_SPECIAL_HPP_
#define TVCF_SPECIAL_HPP_

#include "tvcf/mp.hpp"

namespace tvcf {

// B_{2k} at the given precision; exact rationals cached process-wide behind
// a mutex.
Real bernoulli_b2k(int k, mpfr_prec_t prec);

// Digamma by upward recurrence until Re(z) > 10 + 0.6*digits, then the
// asymptotic log series with Bernoulli coefficients. Valid off the poles.
Complex digamma(const Complex& z, const PrecisionContext& ctx);

// Principal-branch arctangent by argument halving plus the Maclaurin series.
Complex arctan_halving(const Complex& x, const PrecisionContext& ctx);

// Complete elliptic integral K(k) = pi / (2 AGM(1, sqrt(1-k^2))), 0 < k < 1.
Real elliptic_k(const Real& k, const PrecisionContext& ctx);

// Jacobi cn(u; k) through the arithmetic-geometric mean and the backward
// amplitude recurrence.
Real jacobi_cn(const Real& u, const Real& k, const PrecisionContext& ctx);

}  // namespace tvcf

#endif  // TVCF_SPECIAL_HPP_
