#ifndef TVCF_TAIL_HPP_
#define TVCF_TAIL_HPP_

#include <map>

#include "tvcf/classify.hpp"

namespace tvcf {

// Asymptotic tail model u_n ~ sum_j tau_j n^{-j/2}. mu indexes the beginning
// coefficient tau_{-mu}, m is the initial order of the model (u_{n0} - u_n =
// O(n^{-m/2})) and theta the per-iteration order gain. tau holds exactly the
// coefficients the initial approximants use; the closed-form coefficients
// beyond them live in extended_coefficients().
struct TailModel {
    SubclassTag tag;
    int mu;     // 1, 2 or 4
    int m;      // 0, 1 or 2
    int theta;  // 1, 2 or 4
    std::map<int, Complex> tau;          // j -> tau_j, absent means zero
    Complex alpha, beta, gamma;          // quadratic row for tau_{-mu}

    // u_{n0}: sum of tau_j n^{-j/2} over the stored coefficients.
    Complex eval_initial(long n, const PrecisionContext& ctx) const;
};

int subclass_mu(Subclass s);
int subclass_m(Subclass s);
int subclass_theta(Subclass s);

// Quadratic coefficient row (alpha, beta, gamma) for the subclass.
struct QuadraticRow {
    Complex alpha, beta, gamma;
};
QuadraticRow quadratic_row(const SubclassTag& tag, const ShiftedCoeffs& sc,
                           const PrecisionContext& ctx);

// The beginning coefficient tau_{-mu}. Raises BoundaryCondition when a sgn
// argument has numerically vanishing real part (subclass boundary).
Complex beginning_coefficient(const SubclassTag& tag, const ShiftedCoeffs& sc,
                              const PrecisionContext& ctx);

// Full initial model: mu/m/theta plus every tau the initial approximants use.
TailModel initial_tail(const SubclassTag& tag, const ShiftedCoeffs& sc,
                       const PrecisionContext& ctx);

// Closed-form coefficients beyond the initial model (fit targets for
// validation; the acceleration loop never reads them).
std::map<int, Complex> extended_coefficients(const SubclassTag& tag, const ShiftedCoeffs& sc,
                                             const PrecisionContext& ctx);

// sum tau_j n^{-j/2} for an arbitrary coefficient map.
Complex eval_tau_model(const std::map<int, Complex>& tau, long n, const PrecisionContext& ctx);

}  // namespace tvcf

#endif  // TVCF_TAIL_HPP_
