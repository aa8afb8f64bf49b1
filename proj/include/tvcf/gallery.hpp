#ifndef TVCF_GALLERY_HPP_
#define TVCF_GALLERY_HPP_

#include <functional>
#include <map>
#include <vector>

#include "tvcf/cf.hpp"

namespace tvcf {

using ParamMap = std::map<std::string, Complex>;

// A named CF instance: a builder producing the TwoVariantCF for given
// parameters and an oracle computing the reference value by an independent
// route (closed form, series or quadrature; never the CF engine).
struct GalleryEntry {
    std::string id;
    std::vector<std::string> params;
    std::string description;
    std::function<TwoVariantCF(const ParamMap&, const PrecisionContext&)> builder;
    std::function<Complex(const ParamMap&, const PrecisionContext&)> oracle;
};

const std::vector<GalleryEntry>& gallery();
const GalleryEntry& gallery_entry(const std::string& id);

// Oracle with process-wide memoization keyed by (id, params, digits).
Complex gallery_oracle(const std::string& id, const ParamMap& params,
                       const PrecisionContext& ctx);

TwoVariantCF make_perron_digamma(const Complex& x, const Complex& nu,
                                 const PrecisionContext& ctx);
TwoVariantCF make_perron_incgamma(const Real& z, const Real& alpha,
                                  const PrecisionContext& ctx);
TwoVariantCF make_perron_log(const Complex& x, const PrecisionContext& ctx);
TwoVariantCF make_perron_cn(const Real& x, const Real& k, const PrecisionContext& ctx);
TwoVariantCF make_arctan_cf(const Complex& x, const PrecisionContext& ctx);

// Laplace transform of cn(t; k): integral of e^{-tx} cn(t; k) dt over
// [0, inf), by piecewise tanh-sinh over period-length segments. Exposed for
// the oracle cross-checks.
Complex laplace_cn_oracle(const Real& x, const Real& k, const PrecisionContext& ctx);

}  // namespace tvcf

#endif  // TVCF_GALLERY_HPP_
