#include <doctest.h>

#include "test_util.hpp"
#include "tvcf/validation.hpp"

using namespace tvcf;
using namespace tvcf::test;

TEST_CASE("modified approximants by backward fold") {
    PrecisionContext ctx(64);
    TwoVariantCF cf = example1_cf(ctx);

    SUBCASE("S_0(omega) = b0' + omega") {
        CHECK(modified_approximant(cf, 0, ctx.complex(0), ctx) == ctx.complex(1));
        CHECK(modified_approximant(cf, 0, ctx.complex(5), ctx) == ctx.complex(6));
    }
    SUBCASE("S_3(0) folds the first three quotients") {
        // 1 + (3/4)/(1 + 4/(1 + (35/4)/1)) = 337/220
        Complex s = classical_approximant(cf, 3, ctx);
        CHECK(close_to(s, C(ctx, "337/220"), ctx.eps_rel()));
    }
    SUBCASE("classical approximant matches the printed digits at n = 100") {
        PrecisionContext big(128);
        TwoVariantCF cfb = example1_cf(big);
        Complex s = classical_approximant(cfb, 100, big);
        Real a = acc(s, C(big, "1.327052799890558739735"), big);
        CHECK(close_to(a, "2.25", "0.01", big));
        CHECK(close_to(s, C(big, "1.319558"), big.real("1e-6")));
    }
}

TEST_CASE("u_plus nests one double-step of the recurrence") {
    PrecisionContext ctx(64);
    TwoVariantCF cf = example1_cf(ctx);

    SUBCASE("hand value at n = 1, u_next = 4") {
        // a'_1/(b'_1 + a_2/(b_2 + 4)) = 4/(1 + (35/4)/5) = 16/11
        Complex u = u_plus(cf, 1, ctx.complex(4), ctx);
        CHECK(close_to(u, C(ctx, "16/11"), ctx.eps_rel()));
    }
    SUBCASE("S_{2n-1}(u_plus(n, w)) = S_{2n+1}(w)") {
        RandomComplex rng(17);
        for (long n = 1; n <= 20; ++n) {
            for (int t = 0; t < 10; ++t) {
                Complex w = rng.next(ctx, 10);
                Complex lhs = modified_approximant(cf, 2 * n - 1, u_plus(cf, n, w, ctx), ctx);
                Complex rhs = modified_approximant(cf, 2 * n + 1, w, ctx);
                CHECK(abs(lhs - rhs) <= ctx.eps_rel() * abs(rhs));
            }
        }
    }
    SUBCASE("telescoping: S_{2n+1}(0) = S_{2n-1}(u_plus(n, 0))") {
        for (long n : {1L, 3L, 9L}) {
            Complex lhs = modified_approximant(cf, 2 * n - 1, u_plus(cf, n, ctx.complex(0), ctx), ctx);
            Complex rhs = classical_approximant(cf, 2 * n + 1, ctx);
            CHECK(abs(lhs - rhs) <= ctx.eps_rel() * abs(rhs));
        }
    }
}

TEST_CASE("odd tail equation residual") {
    PrecisionContext ctx(64);
    TwoVariantCF cf = example1_cf(ctx);

    SUBCASE("zero arguments leave -a'_n b_{n+1}") {
        Complex r = odd_tail_residual(cf, 1, ctx.complex(0), ctx.complex(0), ctx);
        CHECK(r == ctx.complex(-4));  // -a'_1 b_2 = -4 * 1
    }
    SUBCASE("u_plus pairs satisfy the equation") {
        RandomComplex rng(23);
        for (int t = 0; t < 20; ++t) {
            Complex w = rng.next(ctx, 5);
            long n = 1 + t % 7;
            Complex x = u_plus(cf, n, w, ctx);
            Complex r = odd_tail_residual(cf, n, x, w, ctx);
            Real scale = abs(cf.a_prime().eval(n) * cf.b_shift().eval(n)) + abs(x * w) + 1L;
            CHECK(abs(r) <= ctx.eps_rel() * scale * 10L);
        }
    }
    SUBCASE("matches an independently reordered evaluation") {
        RandomComplex rng(29);
        for (int t = 0; t < 20; ++t) {
            Complex x = rng.next(ctx, 8), y = rng.next(ctx, 8);
            long n = 1 + t % 5;
            Complex r = odd_tail_residual(cf, n, x, y, ctx);
            Complex a1 = cf.a().eval(n + 1), b1 = cf.b().eval(n + 1);
            Complex ap = cf.a_prime().eval(n), bp = cf.b_prime().eval(n);
            Complex other = bp * (b1 * x + x * y) - ap * (y + b1) + a1 * x;
            CHECK(abs(r - other) <= ctx.eps_rel() * (abs(r) + abs(other) + 1L));
        }
    }
}

TEST_CASE("zero denominators are exact-only errors") {
    PrecisionContext ctx(48);
    TwoVariantCF cf = example1_cf(ctx);
    // S_1(omega) with omega = -b_1 makes the innermost denominator exactly zero
    CHECK_THROWS_AS(modified_approximant(cf, 1, ctx.complex(-1), ctx), ZeroDenominator);
    // a near-zero denominator propagates instead of throwing
    Complex near = ctx.complex(-1) + Complex(ctx.eps_rel() * ctx.eps_rel());
    CHECK_NOTHROW(modified_approximant(cf, 1, near, ctx));
    CHECK_THROWS_AS(u_plus(cf, 1, C(ctx, "-1") - C(ctx, "35/4"), ctx), ZeroDenominator);
}

TEST_CASE("regroup_one_variant splits odd and even indices") {
    PrecisionContext ctx(48);
    Complex zero = ctx.complex(0), one = ctx.complex(1);

    SUBCASE("c(m) = m, d(m) = 1") {
        TwoVariantCF cf = regroup_one_variant(zero, Poly({zero, one}), Poly({one}));
        CHECK(cf.a().eval(3) == ctx.complex(5));        // 2n-1
        CHECK(cf.a_prime().eval(3) == ctx.complex(6));  // 2n
        CHECK(cf.b().eval(2) == one);
        CHECK(cf.b_prime().eval(2) == one);
    }
    SUBCASE("arctan(1): c(m) = (2m-1)^2, d(m) = 2") {
        TwoVariantCF cf = regroup_one_variant(zero, Poly({one, ctx.complex(-4), ctx.complex(4)}),
                                              Poly({ctx.complex(2)}));
        for (long n = 1; n <= 4; ++n) {
            CHECK(cf.a().eval(n) == ctx.complex((4 * n - 3) * (4 * n - 3)));
            CHECK(cf.a_prime().eval(n) == ctx.complex((4 * n - 1) * (4 * n - 1)));
        }
    }
    SUBCASE("cubic numerator is out of range") {
        Poly cubic({zero, zero, zero, one});
        CHECK_THROWS_AS(regroup_one_variant(zero, cubic, Poly({one})), DegreeOutOfRange);
    }
}

TEST_CASE("constructor rejects vanishing partial numerators") {
    PrecisionContext ctx(48);
    // a(n) = (2n-1)^2 - 9 vanishes at n = 2
    CHECK_THROWS_AS(make_perron_digamma(ctx.complex(1), ctx.complex(3), ctx), DomainError);
}

TEST_CASE("serialization round trip preserves values and prefix") {
    PrecisionContext ctx(96);
    TwoVariantCF cf = make_perron_cn(ctx.real("0.8"), ctx.real("0.9"), ctx);
    TwoVariantCF back = TwoVariantCF::from_json(cf.to_json(), ctx);
    CHECK(back.a() == cf.a());
    CHECK(back.b() == cf.b());
    CHECK(back.a_prime() == cf.a_prime());
    CHECK(back.b_prime() == cf.b_prime());
    CHECK(back.b0_prime() == cf.b0_prime());
    REQUIRE(back.prefix().size() == 1);
    CHECK(back.prefix()[0].num == cf.prefix()[0].num);
    // identical fold results bit for bit
    Complex s1 = classical_approximant(cf, 17, ctx);
    Complex s2 = classical_approximant(back, 17, ctx);
    CHECK(s1 == s2);
}
