#include "tvcf/special.hpp"

#include <gmp.h>

#include <mutex>
#include <vector>

namespace tvcf {

namespace {

class BernoulliCache {
public:
    ~BernoulliCache() {
        for (auto& q : b_) mpq_clear(&q);
    }

    // B_m for even m via the binomial recurrence, exact in rationals.
    void ensure(size_t m_max) {
        std::lock_guard<std::mutex> lock(mu_);
        if (b_.size() > m_max) return;
        if (b_.empty()) {
            push_rational(1, 1);      // B_0
            push_rational(-1, 2);     // B_1
        }
        mpq_t s, c, t;
        mpq_inits(s, c, t, nullptr);
        for (size_t m = b_.size(); m <= m_max; ++m) {
            mpq_set_ui(s, 0, 1);
            mpq_set_ui(c, 1, 1);  // C(m+1, 0)
            for (size_t j = 0; j < m; ++j) {
                mpq_mul(t, c, &b_[j]);
                mpq_add(s, s, t);
                // C(m+1, j+1) = C(m+1, j) * (m+1-j) / (j+1)
                mpq_set_ui(t, static_cast<unsigned long>(m + 1 - j),
                           static_cast<unsigned long>(j + 1));
                mpq_mul(c, c, t);
                mpq_canonicalize(c);
            }
            mpq_set_si(t, -1, 1);
            mpq_mul(s, s, t);
            mpq_set_ui(t, 1, static_cast<unsigned long>(m + 1));
            mpq_mul(s, s, t);
            push_copy(s);
        }
        mpq_clears(s, c, t, nullptr);
    }

    Real get(size_t m, mpfr_prec_t prec) {
        ensure(m);
        std::lock_guard<std::mutex> lock(mu_);
        Real r(prec);
        mpfr_set_q(r.raw(), &b_[m], MPFR_RNDN);
        return r;
    }

private:
    void push_rational(long num, long den) {
        b_.emplace_back();
        mpq_init(&b_.back());
        mpq_set_si(&b_.back(), num, den);
        mpq_canonicalize(&b_.back());
    }
    void push_copy(mpq_t v) {
        b_.emplace_back();
        mpq_init(&b_.back());
        mpq_set(&b_.back(), v);
    }

    std::mutex mu_;
    std::vector<__mpq_struct> b_;
};

BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

}  // namespace

Real bernoulli_b2k(int k, mpfr_prec_t prec) {
    if (k < 0) throw DomainError("bernoulli index must be nonnegative");
    return bernoulli_cache().get(static_cast<size_t>(2 * k), prec);
}

Complex digamma(const Complex& z, const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.bits();
    Real lift_to = ctx.real(10) + ctx.real(ctx.digits()) * ctx.real("0.6");
    Complex w = z + Complex(0L, p);
    Complex shift_sum(0L, p);
    long guard = 0;
    while (w.re() < lift_to) {
        if (w.is_zero()) throw DomainError("digamma pole at a nonpositive integer");
        shift_sum -= 1L / w;
        w += Complex(1L, p);
        if (++guard > 8 * ctx.digits() + 1000)
            throw NoConvergence("digamma recurrence lift did not terminate");
    }
    Complex res = log(w) - 1L / (w * 2L) + shift_sum;
    Complex w2 = 1L / (w * w);
    Complex power = w2;
    Real target = ctx.eps_rel() * ctx.eps_rel() * abs(res);  // ~10^-digits scale
    for (int k = 1; k <= 400; ++k) {
        Complex term = power * (bernoulli_b2k(k, p) / (2 * k));
        res -= term;
        if (abs(term) < target) return res;
        power = power * w2;
    }
    throw NoConvergence("digamma asymptotic series did not reach the target accuracy");
}

Complex arctan_halving(const Complex& x, const PrecisionContext& ctx) {
    mpfr_prec_t p = ctx.bits();
    Complex one(1L, p);
    if ((x - Complex(Real(0L, p), Real(1L, p))).is_zero() ||
        (x + Complex(Real(0L, p), Real(1L, p))).is_zero())
        throw DomainError("arctan is singular at x = +-i");
    Complex y = x + Complex(0L, p);
    long doublings = 0;
    Real eighth = ctx.real(1) / 8;
    while (abs(y) > eighth) {
        y = y / (one + sqrt(one + y * y));
        ++doublings;
        if (doublings > 64) throw NoConvergence("arctan halving did not contract");
    }
    Complex y2 = y * y;
    Complex term = y;
    Complex sum = y;
    Real eps = ctx.eps_rel() * ctx.eps_rel();  // ~10^-digits
    for (long k = 1; k <= 4000; ++k) {
        term = term * y2;
        Complex contrib = term / (2 * k + 1);
        if (k % 2 == 1)
            sum -= contrib;
        else
            sum += contrib;
        if (abs(contrib) <= eps * abs(sum)) break;
    }
    for (long i = 0; i < doublings; ++i) sum = sum * 2L;
    return sum;
}

Real elliptic_k(const Real& k, const PrecisionContext& ctx) {
    if (!(k > 0L) || !(k < 1L)) throw DomainError("elliptic_k requires 0 < k < 1");
    mpfr_prec_t p = ctx.bits();
    Real a(1L, p);
    Real b = sqrt(1L - k * k);
    Real eps = ctx.eps_rel() * ctx.eps_rel();
    for (int i = 0; i < 200; ++i) {
        Real an = (a + b) / 2;
        Real bn = sqrt(a * b);
        a = an;
        b = bn;
        if (abs(a - b) <= eps * a) break;
    }
    return Real::pi(p) / (2L * a);
}

Real jacobi_cn(const Real& u, const Real& k, const PrecisionContext& ctx) {
    if (!(k > 0L) || !(k < 1L)) throw DomainError("jacobi_cn requires 0 < k < 1");
    mpfr_prec_t p = ctx.bits();
    if (u.is_zero()) return Real(1L, p);

    std::vector<Real> a, c;
    a.emplace_back(1L, p);
    Real b = sqrt(1L - k * k);
    c.push_back(k);
    Real floor_eps = ctx.eps_rel() * ctx.eps_rel();
    int n = 0;
    while (abs(c.back()) > floor_eps && n < 64) {
        Real an = (a.back() + b) / 2;
        Real cn = (a.back() - b) / 2;
        b = sqrt(a.back() * b);
        a.push_back(an);
        c.push_back(cn);
        ++n;
    }
    Real phi = a[static_cast<size_t>(n)] * u;
    for (int i = 0; i < n; ++i) phi = phi * 2L;
    for (int i = n; i >= 1; --i) {
        Real s = c[static_cast<size_t>(i)] / a[static_cast<size_t>(i)] * sin(phi);
        // clamp roundoff excursions outside [-1, 1]
        if (s > 1L) s = Real(1L, p);
        if (s < -1L) s = -Real(1L, p);
        phi = (phi + asin(s)) / 2;
    }
    return cos(phi);
}

}  // namespace tvcf
