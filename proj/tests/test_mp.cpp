#include <doctest.h>

#include "test_util.hpp"
#include "tvcf/poly.hpp"

using namespace tvcf;
using namespace tvcf::test;

TEST_CASE("precision context derives eps_rel and caps") {
    PrecisionContext ctx(128);
    CHECK(ctx.digits() == 128);
    CHECK(ctx.acc_cap() == 128);
    // eps_rel = 10^{-64}
    Real lg = log10(ctx.eps_rel());
    CHECK(abs(lg + 64L) < ctx.real("1e-30"));
    CHECK_THROWS_AS(PrecisionContext(15), DomainError);
    PrecisionContext ctx16(16);
    CHECK(abs(log10(ctx16.eps_rel()) + 8L) < ctx16.real("1e-10"));
}

TEST_CASE("real parsing, printing and fixed rounding") {
    PrecisionContext ctx(40);
    CHECK(ctx.real("3/4").str() == "0.75");
    CHECK(ctx.real("-1/2").str() == "-0.5");
    Real x = ctx.real("2.345");
    CHECK(x.str_fixed(2) == "2.35");          // round half away from zero
    CHECK(ctx.real("-2.345").str_fixed(2) == "-2.35");
    CHECK(ctx.real("0.125").str_fixed(2) == "0.13");
    CHECK(ctx.real("-0.125").str_fixed(2) == "-0.13");
    CHECK(ctx.real("10.08").str_fixed(2) == "10.08");
    CHECK(ctx.real(0).str() == "0");
    CHECK_THROWS_AS(ctx.real("zebra"), DomainError);
    CHECK_THROWS_AS(ctx.real("1/0"), DomainError);

    // round trip through the shortest decimal form
    Real pi = Real::pi(ctx.bits());
    Real back = ctx.real(pi.str());
    CHECK(pi == back);
}

TEST_CASE("complex arithmetic and principal square root") {
    PrecisionContext ctx(50);
    Complex z = C(ctx, "3", "4");
    CHECK(abs(z) == ctx.real(5));
    CHECK((z * conj(z)).re() == ctx.real(25));

    Complex r = sqrt(C(ctx, "-4", "0"));
    CHECK(r.re().is_zero());
    CHECK(close_to(r.im(), "2", "1e-45", ctx));

    Complex s = sqrt(C(ctx, "3", "4"));
    CHECK(close_to(s, C(ctx, "2", "1"), ctx.real("1e-45")));

    // principal branch: nonnegative real part everywhere
    RandomComplex rng(7);
    for (int i = 0; i < 50; ++i) {
        Complex w = rng.next(ctx, 10);
        Complex root = sqrt(w);
        CHECK(!root.re().is_negative());
        CHECK(close_to(root * root, w, ctx.real("1e-40") * (abs(w) + 1L)));
    }

    Complex q = C(ctx, "1", "2") / C(ctx, "3", "-1");
    CHECK(close_to(q * C(ctx, "3", "-1"), C(ctx, "1", "2"), ctx.real("1e-45")));
}

TEST_CASE("acc counts exact significant digits") {
    PrecisionContext ctx(128);
    Complex v = C(ctx, "1.327052799890558739735");
    CHECK(acc(v, v, ctx) == ctx.real(128));                        // cap at x = V
    CHECK(acc(ctx.complex(0), v, ctx).is_zero());                  // |1 - 0| = 1
    Real a = acc(C(ctx, "1.319558029"), v, ctx);
    CHECK(close_to(a, "2.25", "0.01", ctx));
    CHECK_THROWS_AS(acc(v, ctx.complex(0), ctx), DomainError);
}

TEST_CASE("acc is monotone in the relative error") {
    PrecisionContext ctx(40);
    RandomComplex rng(11);
    Complex v = C(ctx, "2", "-1");
    for (int i = 0; i < 40; ++i) {
        Complex x1 = rng.next(ctx, 3), x2 = rng.next(ctx, 3);
        Real r1 = abs(1L - x1 / v), r2 = abs(1L - x2 / v);
        if (r1.is_zero() || r2.is_zero() || r1 == r2) continue;
        if (r1 < r2)
            CHECK(acc(x1, v, ctx) > acc(x2, v, ctx));
        else
            CHECK(acc(x1, v, ctx) < acc(x2, v, ctx));
    }
}

TEST_CASE("poly eval and exact shift") {
    PrecisionContext ctx(64);
    Complex zero = ctx.complex(0);

    SUBCASE("shift of zero polynomial") {
        Poly z = Poly::zero(ctx);
        CHECK(z.shift().degree() == -1);
        CHECK(z.eval(5).is_zero());
    }
    SUBCASE("binomial identity n^2 -> (n+1)^2") {
        Poly p({zero, zero, ctx.complex(1)});
        Poly q = p.shift();
        CHECK(q.coeff(0) == ctx.complex(1));
        CHECK(q.coeff(1) == ctx.complex(2));
        CHECK(q.coeff(2) == ctx.complex(1));
    }
    SUBCASE("(2n+1)^2 - 1/4 shifts to (2n+3)^2 - 1/4") {
        Poly p({C(ctx, "3/4"), ctx.complex(4), ctx.complex(4)});
        Poly q = p.shift();
        CHECK(q.coeff(0) == C(ctx, "35/4"));
        CHECK(q.coeff(1) == ctx.complex(12));
        CHECK(q.coeff(2) == ctx.complex(4));
    }
    SUBCASE("eval(shift(p), n) == eval(p, n+1) exactly for dyadic coefficients") {
        RandomComplex rng(3);
        for (int t = 0; t < 12; ++t) {
            std::vector<Complex> cs;
            for (int d = 0; d < 3; ++d) {
                long num = (rng.next(ctx, 64).re()).to_long();
                cs.push_back(Complex(ctx.real(num) / 4));
            }
            Poly p(std::move(cs));
            Poly q = p.shift();
            bool all_equal = true;
            for (long n = 0; n <= 100; ++n)
                all_equal = all_equal && q.eval(n) == p.eval(n + 1);
            CHECK(all_equal);
        }
    }
    SUBCASE("compose_linear splits odd and even indices") {
        // c(m) = m^2 + 1 at m = 2n-1
        Poly c({ctx.complex(1), zero, ctx.complex(1)});
        Poly odd = c.compose_linear(2, -1);
        for (long n = 1; n <= 5; ++n) CHECK(odd.eval(n) == c.eval(2 * n - 1));
    }
}

TEST_CASE("gallery values change only below the coarser eps when digits double") {
    PrecisionContext lo(32), hi(64);
    TwoVariantCF cf_lo = example1_cf(lo);
    TwoVariantCF cf_hi = example1_cf(hi);
    Complex a = classical_approximant(cf_lo, 50, lo);
    Complex b = classical_approximant(cf_hi, 50, hi);
    CHECK(abs(a - b) <= lo.eps_rel() * abs(b));
}
