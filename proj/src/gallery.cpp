#include "tvcf/gallery.hpp"

#include <cmath>
#include <mutex>

#include "tvcf/quadrature.hpp"
#include "tvcf/special.hpp"

namespace tvcf {

namespace {

Complex param(const ParamMap& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) throw DomainError("missing parameter '" + name + "'");
    return it->second;
}

Real real_param(const ParamMap& params, const std::string& name) {
    Complex v = param(params, name);
    if (!v.is_real()) throw DomainError("parameter '" + name + "' must be real");
    return v.re();
}

}  // namespace

TwoVariantCF make_perron_digamma(const Complex& x, const Complex& nu,
                                 const PrecisionContext& ctx) {
    if (!(x.re() > 0L)) throw DomainError("perron_digamma requires Re x > 0");
    mpfr_prec_t p = ctx.bits();
    Complex one(1L, p), four(4L, p);
    // a(n) = (2n-1)^2 - nu^2, b(n) = x, a'(n) = (2n)^2, b'(n) = x
    Poly a({one - nu * nu, -four, four});
    Poly b({x});
    Poly ap({Complex(0L, p), Complex(0L, p), four});
    Poly bp({x});
    return TwoVariantCF(x, a, b, ap, bp, "perron_digamma");
}

TwoVariantCF make_perron_incgamma(const Real& z, const Real& alpha,
                                  const PrecisionContext& ctx) {
    if (!(z > 0L)) throw DomainError("perron_incgamma requires z > 0");
    mpfr_prec_t p = ctx.bits();
    Complex zero(0L, p), one(1L, p);
    // a(n) = n + alpha - 1, b(n) = 1, a'(n) = n, b'(n) = z
    Poly a({Complex(alpha - 1L), one});
    Poly b({one});
    Poly ap({zero, one});
    Poly bp({Complex(z)});
    return TwoVariantCF(Complex(z), a, b, ap, bp, "perron_incgamma");
}

TwoVariantCF make_perron_log(const Complex& x, const PrecisionContext& ctx) {
    if (x.is_zero()) throw DomainError("perron_log degenerates at x = 0");
    Complex shifted = x + 1L;
    if (is_nonpositive_real(shifted, ctx))
        throw DomainError("perron_log requires x outside (-inf, -1]");
    mpfr_prec_t p = ctx.bits();
    Complex zero(0L, p), one(1L, p), two(2L, p);
    // a(n) = a'(n) = n^2 x, b(n) = 2n, b'(n) = 2n+1
    Poly a({zero, zero, x});
    Poly b({zero, two});
    Poly bp({one, two});
    return TwoVariantCF(one, a, b, a, bp, "perron_log");
}

TwoVariantCF make_perron_cn(const Real& x, const Real& k, const PrecisionContext& ctx) {
    if (!(x > 0L)) throw DomainError("perron_cn requires x > 0");
    if (!(k > 0L) || !(k < 1L)) throw DomainError("perron_cn requires 0 < k < 1");
    mpfr_prec_t p = ctx.bits();
    Complex zero(0L, p), one(1L, p), four(4L, p);
    Complex xc(x);
    // core K((2n-1)^2/x + (2n)^2 k^2/x) behind the leading 1/x quotient
    Poly a({one, -four, four});
    Poly b({xc});
    Poly ap({zero, zero, Complex(k * k * 4L)});
    return TwoVariantCF(zero, a, b, ap, b, "perron_cn", {{one, xc}});
}

TwoVariantCF make_arctan_cf(const Complex& x, const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.bits();
    if (x.is_zero()) throw DomainError("arctan CF degenerates at x = 0");
    if (abs(x) > Real(1L, p)) throw DomainError("arctan CF requires |x| <= 1");
    Complex i_unit(Real(0L, p), Real(1L, p));
    if ((x - i_unit).is_zero() || (x + i_unit).is_zero())
        throw DomainError("arctan CF is singular at x = +-i");
    Complex one(1L, p), x2 = x * x;
    // one-variant K(c_m/d_m): c(m) = (2m-1)^2 x^2, d(m) = 2m+1 - (2m-1) x^2
    Poly c({x2, -4L * x2, 4L * x2});
    Poly d({one + x2, 2L * (one - x2)});
    TwoVariantCF core = regroup_one_variant(Complex(0L, p), c, d);
    return TwoVariantCF(core.b0_prime(), core.a(), core.b(), core.a_prime(), core.b_prime(),
                        "arctan_cf", {{x, one}});
}

namespace {

Complex oracle_digamma_combo(const ParamMap& params, const PrecisionContext& ctx) {
    Complex x = param(params, "x");
    Complex nu = param(params, "nu");
    Complex s = digamma((x + 3L + nu) / 4L, ctx) + digamma((x + 3L - nu) / 4L, ctx) -
                digamma((x + 1L + nu) / 4L, ctx) - digamma((x + 1L - nu) / 4L, ctx);
    if (s.is_zero()) throw DomainError("digamma combination vanished");
    return Complex(4L, ctx.bits()) / s;
}

Complex oracle_incgamma(const ParamMap& params, const PrecisionContext& ctx) {
    Real z = real_param(params, "z");
    Real alpha = real_param(params, "alpha");
    if (!(z > 0L)) throw DomainError("oracle requires z > 0");
    // work at ~1.2x the target digits
    PrecisionContext work(static_cast<int>(ctx.digits() * 12L / 10) + 6);
    Real zw = Real(0L, work.bits()) + z;
    Real aw = Real(0L, work.bits()) + alpha;
    Real upper = zw + work.real(work.digits() + 4) * log(work.real(10));
    Real tol = work.eps_rel() * work.eps_rel();
    Real integral = tanh_sinh(
        [&](const Real& v) { return exp(-v - aw * log(v)); }, zw, upper, tol);
    Real value = 1L / (exp((aw - 1L) * log(zw) + zw) * integral);
    return Complex(Real(0L, ctx.bits()) + value);
}

Complex oracle_log(const ParamMap& params, const PrecisionContext& ctx) {
    Complex x = param(params, "x");
    Complex w = x + 1L;
    if (is_nonpositive_real(w, ctx)) throw DomainError("log oracle needs x outside (-inf,-1]");
    return x / log(w);
}

Complex oracle_arctan(const ParamMap& params, const PrecisionContext& ctx) {
    return arctan_halving(param(params, "x"), ctx);
}

Complex oracle_cn(const ParamMap& params, const PrecisionContext& ctx) {
    Real x = real_param(params, "x");
    Real k = real_param(params, "k");
    return laplace_cn_oracle(x, k, ctx);
}

}  // namespace

Complex laplace_cn_oracle(const Real& x, const Real& k, const PrecisionContext& ctx) {
    if (!(x > 0L)) throw DomainError("laplace_cn_oracle requires x > 0");
    PrecisionContext work(ctx.digits() + 8);
    Real xw = Real(0L, work.bits()) + x;
    Real kw = Real(0L, work.bits()) + k;
    Real period = 4L * elliptic_k(kw, work);
    // e^{-Tx} below the digit budget bounds the discarded tail
    Real upper = work.real(work.digits() + 4) * log(work.real(10)) / xw;
    long pieces = static_cast<long>(std::ceil((upper / period).to_double()));
    if (pieces < 1) pieces = 1;
    Real tol = work.eps_rel() * work.eps_rel();
    Real total(0L, work.bits());
    auto f = [&](const Real& t) { return exp(-t * xw) * jacobi_cn(t, kw, work); };
    for (long j = 0; j < pieces; ++j) {
        Real lo = period * j;
        Real hi = min(period * (j + 1), upper);
        total += tanh_sinh(f, lo, hi, tol);
        if (hi == upper) break;
    }
    return Complex(Real(0L, ctx.bits()) + total);
}

const std::vector<GalleryEntry>& gallery() {
    static const std::vector<GalleryEntry> entries = {
        {"perron_digamma",
         {"x", "nu"},
         "x + K((2n-1)^2 - nu^2 / x ; (2n)^2 / x), Re x > 0; reciprocal digamma combination",
         [](const ParamMap& pm, const PrecisionContext& ctx) {
             return make_perron_digamma(param(pm, "x"), param(pm, "nu"), ctx);
         },
         oracle_digamma_combo},
        {"perron_incgamma",
         {"z", "alpha"},
         "z + K(n+alpha-1 / 1 ; n / z), z > 0; reciprocal incomplete-gamma integral",
         [](const ParamMap& pm, const PrecisionContext& ctx) {
             return make_perron_incgamma(real_param(pm, "z"), real_param(pm, "alpha"), ctx);
         },
         oracle_incgamma},
        {"perron_log",
         {"x"},
         "x/log(1+x) = 1 + K(n^2 x / 2n ; n^2 x / 2n+1), x outside (-inf,-1]",
         [](const ParamMap& pm, const PrecisionContext& ctx) {
             return make_perron_log(param(pm, "x"), ctx);
         },
         oracle_log},
        {"perron_cn",
         {"x", "k"},
         "Laplace transform of Jacobi cn(t;k): 1/x + K((2n-1)^2/x ; (2n)^2 k^2/x)",
         [](const ParamMap& pm, const PrecisionContext& ctx) {
             return make_perron_cn(real_param(pm, "x"), real_param(pm, "k"), ctx);
         },
         oracle_cn},
        {"arctan_cf",
         {"x"},
         "arctan x = x/1 + K((2n-1)^2 x^2 / 2n+1-(2n-1)x^2), regrouped odd/even",
         [](const ParamMap& pm, const PrecisionContext& ctx) {
             return make_arctan_cf(param(pm, "x"), ctx);
         },
         oracle_arctan},
    };
    return entries;
}

const GalleryEntry& gallery_entry(const std::string& id) {
    for (const auto& e : gallery())
        if (e.id == id) return e;
    throw DomainError("unknown gallery id '" + id + "'");
}

Complex gallery_oracle(const std::string& id, const ParamMap& params,
                       const PrecisionContext& ctx) {
    static std::mutex mu;
    static std::map<std::string, Complex> cache;

    std::string key = id + "@" + std::to_string(ctx.digits());
    for (const auto& [name, value] : params) key += "|" + name + "=" + value.str();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Complex value = gallery_entry(id).oracle(params, ctx);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, value);
    return value;
}

}  // namespace tvcf
