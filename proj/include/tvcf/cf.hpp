#ifndef TVCF_CF_HPP_
#define TVCF_CF_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tvcf/poly.hpp"

namespace tvcf {

// A leading quotient num/(den + .) applied outside the polynomial core.
// Expansions written "c/x + K(...)" carry one; classification and
// acceleration see only the core.
struct PrefixQuotient {
    Complex num;
    Complex den;
};

// Two-variant continued fraction b0' + K(a_n/b_n + a'_n/b'_n) with polynomial
// coefficient families. deg a = deg a' = k in {1,2}, deg b = deg b' = l in
// {0,1}; partial numerators must not vanish at any integer n >= 1.
class TwoVariantCF {
public:
    TwoVariantCF(Complex b0_prime, Poly a, Poly b, Poly a_prime, Poly b_prime,
                 std::string label = {},
                 std::vector<PrefixQuotient> prefix = {});

    const Complex& b0_prime() const noexcept { return b0p_; }
    const Poly& a() const noexcept { return a_; }
    const Poly& b() const noexcept { return b_; }
    const Poly& a_prime() const noexcept { return ap_; }
    const Poly& b_prime() const noexcept { return bp_; }
    const Poly& a_shift() const noexcept { return a_shift_; }   // a_{n+1} as poly in n
    const Poly& b_shift() const noexcept { return b_shift_; }   // b_{n+1} as poly in n
    const std::string& label() const noexcept { return label_; }
    const std::vector<PrefixQuotient>& prefix() const noexcept { return prefix_; }

    int k() const noexcept { return a_.degree(); }
    int l() const noexcept { return b_.degree(); }

    // Partial quotient #i, 1-based: odd i=2m-1 is (a_m, b_m), even i=2m is
    // (a'_m, b'_m).
    std::pair<Complex, Complex> quotient(long i) const;

    std::string to_json() const;
    static TwoVariantCF from_json(const std::string& text, const PrecisionContext& ctx);

private:
    Complex b0p_;
    Poly a_, b_, ap_, bp_;
    Poly a_shift_, b_shift_;
    std::string label_;
    std::vector<PrefixQuotient> prefix_;
};

// Shifted coefficient frame: a_{n+1} = pm2 n^2 + pm1 n + p0, a'_n with primes,
// b_{n+1} = qm2 n^2 + qm1 n + q0 (+ q1/n formally), b'_n likewise. The names
// follow the subscripts of the frame so the subclass tables read off
// directly; q1 and qp1 are identically zero for polynomial coefficients and
// are retained because the extended coefficient formulas reference them.
// Note: the constant term of b'_n is read as qp0 throughout; the frame
// display reuses the symbol q0 for it, which cannot be meant literally.
struct ShiftedCoeffs {
    Complex pm2, pm1, p0;
    Complex ppm2, ppm1, pp0;
    Complex qm2, qm1, q0, q1;
    Complex qpm2, qpm1, qp0, qp1;
    int k, l;
};

ShiftedCoeffs shifted_coeffs(const TwoVariantCF& cf);

// S_n(omega) by backward recurrence: fold a/(b + .) from quotient n down to 1,
// innermost value omega, then add b0' and apply any prefix quotients
// outermost. Throws ZeroDenominator on an exactly vanishing denominator.
Complex modified_approximant(const TwoVariantCF& cf, long n, const Complex& omega,
                             const PrecisionContext& ctx);

Complex classical_approximant(const TwoVariantCF& cf, long n, const PrecisionContext& ctx);

// u_n^+ = a'_n / (b'_n + a_{n+1}/(b_{n+1} + u_{n+1})). Exact tails are a
// fixed point: S_{2n-1}(u_plus(n, w)) = S_{2n+1}(w) for every w.
Complex u_plus(const TwoVariantCF& cf, long n, const Complex& u_next,
               const PrecisionContext& ctx);

// Left-hand side of the odd-tail equation:
// (b'_n b_{n+1} + a_{n+1}) X_n + b'_n X_n X_{n+1} - a'_n X_{n+1} - a'_n b_{n+1}.
Complex odd_tail_residual(const TwoVariantCF& cf, long n, const Complex& x_n,
                          const Complex& x_next, const PrecisionContext& ctx);

// Split the one-variant K(c_m/d_m) into the two-variant shape by odd/even
// index: a(n) = c(2n-1), b(n) = d(2n-1), a'(n) = c(2n), b'(n) = d(2n).
TwoVariantCF regroup_one_variant(const Complex& b0, const Poly& c, const Poly& d);

}  // namespace tvcf

#endif  // TVCF_CF_HPP_
