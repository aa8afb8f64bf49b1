#ifndef TVCF_QUADRATURE_HPP_
#define TVCF_QUADRATURE_HPP_

#include <functional>

#include "tvcf/mp.hpp"

namespace tvcf {

// Tanh-sinh quadrature over a finite interval. Doubles the node density per
// level until two consecutive levels agree to rel_tol; throws NoConvergence
// if max_level is exhausted. Suited to smooth integrands, including ones
// with mild endpoint behaviour.
Real tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
               const Real& rel_tol, int max_level = 14);

}  // namespace tvcf

#endif  // TVCF_QUADRATURE_HPP_
