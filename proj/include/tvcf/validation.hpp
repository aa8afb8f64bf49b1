#ifndef TVCF_VALIDATION_HPP_
#define TVCF_VALIDATION_HPP_

#include <array>
#include <optional>

#include "tvcf/accel.hpp"

namespace tvcf {

// Truncated backward evaluation of the odd tail u_n: fold quotients from
// index n+depth down to n, innermost value seeded by the initial tail model
// (fallback 0), certified by comparing against the half-depth run.
struct TailOracleConfig {
    long depth = 0;                     // 0 means the default 4 * digits
    std::optional<Complex> seed_tail;   // explicit innermost value
    bool extended_seed = false;         // seed from initial + extended coefficients
};

struct TailEstimate {
    Complex value;
    Real rel_change;   // relative change from the half-depth run
    long depth;
};

// Certified estimate; throws NoConvergence when the depth-doubling change
// exceeds 10 * eps_rel.
TailEstimate numeric_tail_certified(const TwoVariantCF& cf, long n,
                                    const TailOracleConfig& config,
                                    const PrecisionContext& ctx);

Complex numeric_tail(const TwoVariantCF& cf, long n, const TailOracleConfig& config,
                     const PrecisionContext& ctx);

// Least-squares slope of log|error| against log n. Needs >= 4 points with
// strictly positive errors.
Real fit_order(const std::vector<std::pair<long, Real>>& errors);

// Closed-form residuals of the coefficient system c_m = 0 at the supplied
// tau values. Supported indices depend on the subclass; everything else
// raises UnsupportedResidual.
Complex cm_residual(const SubclassTag& tag, const ShiftedCoeffs& sc,
                    const std::map<int, Complex>& tau, int m_index,
                    const PrecisionContext& ctx);

std::vector<int> supported_residuals(Subclass cls);

// alpha tau^2 + beta tau + gamma at the beginning coefficient.
Complex quadratic_residual(const TailModel& model, const PrecisionContext& ctx);

// Compare the numerically evaluated product I_n = a_{n+1} u_n/(b_{n+1}+u_{n+1})
// against the leading forms predicted for the chosen and for the rejected
// root; true when the chosen form tracks better at every sample.
// swap_roots exchanges the two predictions (a failing configuration).
bool branch_check(const TwoVariantCF& cf, const TailModel& model, const ShiftedCoeffs& sc,
                  const PrecisionContext& ctx, bool swap_roots = false);

// |phi_n^(0) - psi_n^(0)| at the given indices, for the eta-slope check.
std::vector<std::pair<long, Real>> phi_psi_gap(const TwoVariantCF& cf, const TailModel& model,
                                               const std::vector<long>& ns,
                                               const PrecisionContext& ctx);

// Least-squares fit of u_n - tau_{-2} n against {1, 1/n} over n in [16, 128];
// recovers the closed-form constant term of a De20 tail expansion.
Complex de20_constant_term_fit(const TwoVariantCF& cf, const TailModel& model,
                               const PrecisionContext& ctx);

// Expected slope -eta of |phi - psi|: 1/2, 1 or 0 by subclass.
double expected_eta(Subclass cls);

// Per-subclass probe calibration: sample indices and fold depths at which
// the tail oracle certifies against the probe context. The two parabolic
// classes need polynomially deep folds, the rest contract geometrically.
struct ProbeConfig {
    std::array<long, 4> order_ns;
    long order_depth;
    std::array<long, 3> branch_ns;
    long branch_depth;
    long fixedpoint_depth;
    int digits;
};
ProbeConfig probe_config(Subclass cls);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// Full residual/branch/order/fixed-point suite for one CF. Algebraic checks
// run at the caller's context; tail-oracle checks run at the probe context
// from probe_config, where the certification threshold is reachable.
std::vector<CheckResult> run_verification(const TwoVariantCF& cf, const PrecisionContext& ctx);

}  // namespace tvcf

#endif  // TVCF_VALIDATION_HPP_
