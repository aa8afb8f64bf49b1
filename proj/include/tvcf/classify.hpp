#ifndef TVCF_CLASSIFY_HPP_
#define TVCF_CLASSIFY_HPP_

#include <optional>
#include <string>

#include "tvcf/cf.hpp"

namespace tvcf {

enum class Subclass { De10, Dn10, D11, De20, Dn20, Dt21 };

const char* subclass_name(Subclass s);
std::optional<Subclass> subclass_from_name(const std::string& name);

// Classification verdict plus the witness values used in the decision, kept
// so downstream coefficient formulas reuse the exact same numbers.
struct SubclassTag {
    Subclass cls;
    // De10/De20: the tested quotient (q0 qp0 / pm1 resp. (beta^2-4 a g)/pm2^2).
    // Dn10/Dn20: |p'| - |p| as a real value.
    std::optional<Complex> witness;
    // Dt21 only: fixed-point roots, chosen root first.
    std::optional<std::pair<Complex, Complex>> roots;
    // De20 only: beta^2 - 4 alpha gamma.
    std::optional<Complex> discriminant;
};

// Decide the subclass from the shifted coefficients. Dispatch is total on
// class D; anything else raises NotInClassD (condition failed or a tie at
// tolerance eps_rel) or DegenerateCoefficient.
SubclassTag classify(const ShiftedCoeffs& sc, const PrecisionContext& ctx);

// Roots of alpha x^2 + beta x + gamma, larger-magnitude root computed via
// -(beta + s)/2 with the sign of s chosen against cancellation, companion via
// gamma/(alpha x).
std::pair<Complex, Complex> quadratic_roots(const Complex& alpha, const Complex& beta,
                                            const Complex& gamma);

}  // namespace tvcf

#endif  // TVCF_CLASSIFY_HPP_
