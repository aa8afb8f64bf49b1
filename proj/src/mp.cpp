#include "tvcf/mp.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace tvcf {

PrecisionContext::PrecisionContext(int digits) : digits_(digits) {
    if (digits < 16)
        throw DomainError("precision must be at least 16 decimal digits");
    bits_ = static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 8;
}

Real PrecisionContext::eps_rel() const {
    Real e(digits_, bits_);
    mpfr_div_si(e.raw(), e.raw(), -2, MPFR_RNDN);
    mpfr_exp10(e.raw(), e.raw(), MPFR_RNDN);
    return e;
}

Real PrecisionContext::real(long v) const { return Real(v, bits_); }

Real PrecisionContext::real(std::string_view s) const { return Real::from_string(s, bits_); }

Complex PrecisionContext::complex(long re, long im) const {
    return Complex(Real(re, bits_), Real(im, bits_));
}

Complex PrecisionContext::complex(std::string_view re, std::string_view im) const {
    return Complex(Real::from_string(re, bits_), Real::from_string(im, bits_));
}

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

int Real::sgn() const noexcept {
    if (mpfr_zero_p(v_)) return 0;
    return mpfr_sgn(v_) > 0 ? 1 : -1;
}

Real Real::from_string(std::string_view s, mpfr_prec_t prec) {
    std::string buf(s);
    auto slash = buf.find('/');
    Real r(prec);
    if (slash != std::string::npos) {
        Real num = from_string(buf.substr(0, slash), prec);
        Real den = from_string(buf.substr(slash + 1), prec);
        if (den.is_zero()) throw DomainError("rational literal with zero denominator: " + buf);
        mpfr_div(r.v_, num.v_, den.v_, MPFR_RNDN);
        return r;
    }
    if (mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("cannot parse real literal: " + buf);
    return r;
}

std::string Real::str() const { return str_digits(0); }

std::string Real::str_digits(size_t ndigits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, ndigits, v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    std::string sign;
    if (digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // strip trailing zeros but keep at least one digit
    auto last = digits.find_last_not_of('0');
    digits.erase(last + 1);
    long ee = static_cast<long>(e);  // value = 0.digits * 10^ee
    // positional form for moderate exponents, scientific otherwise
    if (ee > 0 && ee <= 21) {
        std::string out = digits;
        while (out.size() < static_cast<size_t>(ee)) out += "0";
        if (out.size() > static_cast<size_t>(ee)) out.insert(static_cast<size_t>(ee), ".");
        return sign + out;
    }
    if (ee <= 0 && ee > -6) {
        return sign + "0." + std::string(static_cast<size_t>(-ee), '0') + digits;
    }
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    if (ee - 1 != 0) out += "e" + std::to_string(ee - 1);
    return out;
}

std::string Real::str_fixed(int decimals) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    Real scaled(*this);
    for (int i = 0; i < decimals; ++i) mpfr_mul_ui(scaled.v_, scaled.v_, 10, MPFR_RNDN);
    mpfr_round(scaled.v_, scaled.v_);
    long units = mpfr_get_si(scaled.v_, MPFR_RNDN);
    bool neg = units < 0;
    unsigned long mag = neg ? static_cast<unsigned long>(-units)
                            : static_cast<unsigned long>(units);
    std::string digits = std::to_string(mag);
    if (decimals == 0) return (neg ? "-" : "") + digits;
    while (digits.size() <= static_cast<size_t>(decimals)) digits.insert(0, "0");
    digits.insert(digits.size() - decimals, ".");
    return (neg ? "-" : "") + digits;
}

Real& Real::operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {
inline mpfr_prec_t wider(const Real& a, const Real& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
}
}  // namespace

#define TVCF_REAL_BINOP(op, fn)                              \
    Real operator op(const Real& a, const Real& b) {         \
        Real r(wider(a, b));                                 \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);            \
        return r;                                            \
    }
TVCF_REAL_BINOP(+, mpfr_add)
TVCF_REAL_BINOP(-, mpfr_sub)
TVCF_REAL_BINOP(*, mpfr_mul)
TVCF_REAL_BINOP(/, mpfr_div)
#undef TVCF_REAL_BINOP

Real operator+(const Real& a, long b) {
    Real r(a.prec());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, long b) {
    Real r(a.prec());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, long b) {
    Real r(a.prec());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, long b) {
    Real r(a.prec());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

#define TVCF_REAL_FN(name, fn)            \
    Real name(const Real& x) {            \
        Real r(x.prec());                 \
        fn(r.raw(), x.raw(), MPFR_RNDN);  \
        return r;                         \
    }
TVCF_REAL_FN(sqrt, mpfr_sqrt)
TVCF_REAL_FN(abs, mpfr_abs)
TVCF_REAL_FN(log, mpfr_log)
TVCF_REAL_FN(log10, mpfr_log10)
TVCF_REAL_FN(log1p, mpfr_log1p)
TVCF_REAL_FN(exp, mpfr_exp)
TVCF_REAL_FN(sin, mpfr_sin)
TVCF_REAL_FN(cos, mpfr_cos)
TVCF_REAL_FN(sinh, mpfr_sinh)
TVCF_REAL_FN(cosh, mpfr_cosh)
TVCF_REAL_FN(tanh, mpfr_tanh)
TVCF_REAL_FN(asin, mpfr_asin)
TVCF_REAL_FN(atan, mpfr_atan)
#undef TVCF_REAL_FN

Real atan2(const Real& y, const Real& x) {
    Real r(wider(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(wider(x, y));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long e) {
    Real r(x.prec());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& e) {
    Real r(wider(x, e));
    mpfr_pow(r.raw(), x.raw(), e.raw(), MPFR_RNDN);
    return r;
}

Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real round_away(const Real& x) {
    Real r(x.prec());
    mpfr_round(r.raw(), x.raw());
    return r;
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Complex& Complex::operator+=(const Complex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
}
Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
}
Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}
Complex operator/(const Complex& a, const Complex& b) {
    Real d = norm(b);
    return Complex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}
Complex operator+(const Complex& a, const Real& b) { return Complex(a.re_ + b, a.im_); }
Complex operator-(const Complex& a, const Real& b) { return Complex(a.re_ - b, a.im_); }
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re_ * b, a.im_ * b); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re_ / b, a.im_ / b); }
Complex operator+(const Complex& a, long b) { return Complex(a.re_ + b, a.im_); }
Complex operator-(const Complex& a, long b) { return Complex(a.re_ - b, a.im_); }
Complex operator*(const Complex& a, long b) { return Complex(a.re_ * b, a.im_ * b); }
Complex operator/(const Complex& a, long b) { return Complex(a.re_ / b, a.im_ / b); }
Complex operator+(long a, const Complex& b) { return b + a; }
Complex operator-(long a, const Complex& b) { return Complex(a - b.re_, -b.im_); }
Complex operator*(long a, const Complex& b) { return b * a; }
Complex operator/(long a, const Complex& b) {
    Real d = norm(b);
    return Complex(a * b.re_ / d, (-a) * b.im_ / d);
}

Real abs(const Complex& z) { return hypot(z.re_, z.im_); }

Real norm(const Complex& z) { return z.re_ * z.re_ + z.im_ * z.im_; }

Complex sqrt(const Complex& z) {
    mpfr_prec_t p = z.prec();
    if (z.is_zero()) return Complex(Real(0L, p), Real(0L, p));
    // w = sqrt((|z| + |Re z|)/2); the other component is |Im z|/(2w).
    Real w = sqrt((abs(z) + abs(z.re())) / 2);
    if (z.re() >= Real(0L, p)) {
        return Complex(w, z.im() / (w * 2));
    }
    Real t = abs(z.im()) / (w * 2);
    if (z.im().is_negative()) return Complex(t, -w);
    return Complex(t, w);
}

Complex log(const Complex& z) {
    return Complex(log(abs(z)), atan2(z.im(), z.re()));
}

Complex exp(const Complex& z) {
    Real m = exp(z.re());
    return Complex(m * cos(z.im()), m * sin(z.im()));
}

std::string Complex::str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.str();
    if (!im_.is_negative()) s += "+";
    return s + im_.str() + "i";
}

Real acc(const Complex& x, const Complex& v, const PrecisionContext& ctx) {
    if (v.is_zero()) throw DomainError("acc reference value must be nonzero");
    Real cap = ctx.real(ctx.acc_cap());
    Complex one(1L, ctx.bits());
    Real r = abs(one - x / v);
    if (r.is_zero()) return cap;
    return min(-log10(r), cap);
}

bool approx_equal(const Complex& a, const Complex& b, const PrecisionContext& ctx) {
    Real scale = max(abs(a), abs(b));
    return abs(a - b) <= ctx.eps_rel() * scale;
}

bool is_nonpositive_real(const Complex& w, const PrecisionContext& ctx) {
    Real tol = ctx.eps_rel() * abs(w);
    return abs(w.im()) <= tol && w.re() <= tol;
}

}  // namespace tvcf
