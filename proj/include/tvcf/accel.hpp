#ifndef TVCF_ACCEL_HPP_
#define TVCF_ACCEL_HPP_

#include "tvcf/tail.hpp"

namespace tvcf {

// Triangular array u_{nj}: row j holds u_{1j} ... u_{N-j,j}. Each iteration
// consumes one trailing entry, so reaching u_{1,J} needs N >= J+1 initial
// approximants. rows keeps every row when built with diagnostics, otherwise
// only the final one.
struct TailTable {
    std::vector<std::vector<Complex>> rows;
    TailModel model;
    long N = 0;
    long J = 0;
    bool full = false;
};

struct AccelResult {
    Complex value;           // S_1(u_{1,J})
    TailTable table;
    TwoVariantCF cf;
    // acc(S_{2n-1}(u_{nj})) per retained cell, present when a reference
    // value was supplied.
    std::optional<std::vector<std::vector<Real>>> delta;
};

// One acceleration step: u_{n,j+1} = (phi u+ - psi u)/(phi - psi) with
// phi = 1 + (m/2 + j theta)/n and
// psi = a'_n a_{n+1} / (a_{n+1} + b'_n b_{n+1} + b'_n u_{n+1,j})^2.
// The returned row is one entry shorter.
std::vector<Complex> iterate_once(const TwoVariantCF& cf, const TailModel& model,
                                  const std::vector<Complex>& row_j, long j,
                                  const PrecisionContext& ctx);

// Full pipeline: classify, build row 0 from the tail model, iterate J times.
// With a reference value the whole table is retained and the per-cell
// accuracy diagnostics are filled in.
AccelResult accelerate(const TwoVariantCF& cf, long n_rows, long iterations,
                       const PrecisionContext& ctx,
                       const std::optional<Complex>& reference = std::nullopt,
                       bool keep_rows = false);

// Triangular acc table against a nonzero reference (full precision; display
// rounding is the caller's concern).
std::vector<std::vector<Real>> delta_table(const AccelResult& result, const Complex& reference,
                                           const PrecisionContext& ctx);

}  // namespace tvcf

#endif  // TVCF_ACCEL_HPP_
