#ifndef TVCF_MP_HPP_
#define TVCF_MP_HPP_

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

#include "tvcf/errors.hpp"

namespace tvcf {

class Real;
class Complex;

// Working precision for every arithmetic operation in the library. The
// user-facing knob is decimal significant digits; internally we carry
// ceil(digits*log2(10)) bits plus 8 guard bits. All derived tolerances come
// from here, so two computations with the same context are reproducible
// bit for bit. No global mutable precision state exists anywhere.
class PrecisionContext {
public:
    explicit PrecisionContext(int digits = 128);

    int digits() const noexcept { return digits_; }
    mpfr_prec_t bits() const noexcept { return bits_; }

    // Relative tolerance for equality and tie tests: 10^(-digits/2).
    Real eps_rel() const;

    // Maximum reportable accuracy (decimal digits).
    int acc_cap() const noexcept { return digits_; }

    Real real(long v) const;
    Real real(std::string_view s) const;   // decimal or rational "p/q"
    Complex complex(long re, long im = 0) const;
    Complex complex(std::string_view re, std::string_view im) const;

private:
    int digits_;
    mpfr_prec_t bits_;
};

// Arbitrary-precision real. Thin RAII wrapper over mpfr_t; every value
// carries its own precision, binary operations produce results at the wider
// of the two operand precisions, rounding to nearest.
class Real {
public:
    explicit Real(mpfr_prec_t prec);
    Real(long v, mpfr_prec_t prec);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_prec_t prec() const noexcept { return mpfr_get_prec(v_); }
    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const noexcept { return mpfr_sgn(v_) < 0; }
    int sgn() const noexcept;
    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const noexcept { return mpfr_get_si(v_, MPFR_RNDN); }

    // Shortest decimal string that reads back to the same value at the same
    // precision ("1.25", "3.5e-12", ...).
    std::string str() const;
    // Fixed decimal digits after the point, round-half-away-from-zero.
    std::string str_fixed(int decimals) const;
    // Round-trip decimal with explicit significant digit count.
    std::string str_digits(size_t ndigits) const;

    static Real from_string(std::string_view s, mpfr_prec_t prec);

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real operator-() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator+(const Real& a, long b);
    friend Real operator-(const Real& a, long b);
    friend Real operator*(const Real& a, long b);
    friend Real operator/(const Real& a, long b);
    friend Real operator+(long a, const Real& b);
    friend Real operator-(long a, const Real& b);
    friend Real operator*(long a, const Real& b);
    friend Real operator/(long a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

    friend Real sqrt(const Real& x);
    friend Real abs(const Real& x);
    friend Real log(const Real& x);
    friend Real log10(const Real& x);
    friend Real log1p(const Real& x);
    friend Real exp(const Real& x);
    friend Real sin(const Real& x);
    friend Real cos(const Real& x);
    friend Real sinh(const Real& x);
    friend Real cosh(const Real& x);
    friend Real tanh(const Real& x);
    friend Real asin(const Real& x);
    friend Real atan(const Real& x);
    friend Real atan2(const Real& y, const Real& x);
    friend Real hypot(const Real& x, const Real& y);
    friend Real pow(const Real& x, long e);
    friend Real pow(const Real& x, const Real& e);
    friend Real floor(const Real& x);
    friend Real round_away(const Real& x);  // round half away from zero
    friend Real min(const Real& a, const Real& b);
    friend Real max(const Real& a, const Real& b);
    static Real pi(mpfr_prec_t prec);

    mpfr_srcptr raw() const noexcept { return v_; }
    mpfr_ptr raw() noexcept { return v_; }

private:
    mpfr_t v_;
};

// Complex value over two Reals. Arithmetic is the textbook formulas, faithful
// at the operand precision. sqrt takes the principal branch: nonnegative real
// part, and nonnegative imaginary part on the branch cut.
class Complex {
public:
    explicit Complex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(Real re) : re_(std::move(re)), im_(Real(0L, re_.prec())) {}
    Complex(long v, mpfr_prec_t prec) : re_(v, prec), im_(0L, prec) {}

    const Real& re() const noexcept { return re_; }
    const Real& im() const noexcept { return im_; }
    Real& re() noexcept { return re_; }
    Real& im() noexcept { return im_; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }
    mpfr_prec_t prec() const noexcept { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }

    Complex operator-() const { return Complex(-re_, -im_); }
    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);

    friend Complex operator+(const Complex& a, const Complex& b);
    friend Complex operator-(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Complex& b);
    friend Complex operator/(const Complex& a, const Complex& b);
    friend Complex operator+(const Complex& a, const Real& b);
    friend Complex operator-(const Complex& a, const Real& b);
    friend Complex operator*(const Complex& a, const Real& b);
    friend Complex operator/(const Complex& a, const Real& b);
    friend Complex operator+(const Complex& a, long b);
    friend Complex operator-(const Complex& a, long b);
    friend Complex operator*(const Complex& a, long b);
    friend Complex operator/(const Complex& a, long b);
    friend Complex operator+(long a, const Complex& b);
    friend Complex operator-(long a, const Complex& b);
    friend Complex operator*(long a, const Complex& b);
    friend Complex operator/(long a, const Complex& b);

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    friend Complex conj(const Complex& z) { return Complex(z.re_, -z.im_); }
    friend Real abs(const Complex& z);
    friend Real norm(const Complex& z);  // |z|^2
    friend Complex sqrt(const Complex& z);
    friend Complex log(const Complex& z);  // principal branch
    friend Complex exp(const Complex& z);

    std::string str() const;

private:
    Real re_, im_;
};

// Number of exact significant decimal digits of x against reference v:
// -log10|1 - x/v|, capped at ctx.acc_cap(). Throws DomainError for v = 0.
Real acc(const Complex& x, const Complex& v, const PrecisionContext& ctx);

// |a - b| <= eps_rel * max(|a|, |b|): the library-wide relative tie test.
bool approx_equal(const Complex& a, const Complex& b, const PrecisionContext& ctx);

// Numerically a nonpositive real: |Im w| <= eps*|w| and Re w <= eps*|w|.
// Guards the square-root sign choices; borderline cases count as members.
bool is_nonpositive_real(const Complex& w, const PrecisionContext& ctx);

}  // namespace tvcf

#endif  // TVCF_MP_HPP_
