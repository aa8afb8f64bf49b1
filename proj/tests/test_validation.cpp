#include <doctest.h>

#include "test_util.hpp"
#include "tvcf/validation.hpp"

using namespace tvcf;
using namespace tvcf::test;

TEST_CASE("numeric tail oracle with depth-doubling certification") {
    PrecisionContext ctx(24);

    SUBCASE("tails of the log CF satisfy the odd-tail equation") {
        TwoVariantCF cf = make_perron_log(C(ctx, "-1.5", "0.01"), ctx);
        TailOracleConfig cfg;
        cfg.depth = 8192;
        TailEstimate e1 = numeric_tail_certified(cf, 3, cfg, ctx);
        TailEstimate e2 = numeric_tail_certified(cf, 4, cfg, ctx);
        CHECK(e1.rel_change <= ctx.eps_rel() * 10L);
        Complex r = odd_tail_residual(cf, 3, e1.value, e2.value, ctx);
        Real scale = abs(cf.a_prime().eval(3) * cf.b_shift().eval(3)) + 1L;
        CHECK(abs(r) <= ctx.eps_rel() * scale * 100L);
    }
    SUBCASE("D11 tails approach the constant p'_{-1}/q'_{-1}") {
        TwoVariantCF cf = d11_cf(ctx);
        TailOracleConfig cfg;
        cfg.depth = 512;
        Complex u64 = numeric_tail(cf, 64, cfg, ctx);
        Complex u256 = numeric_tail(cf, 256, cfg, ctx);
        Real d64 = abs(u64 - C(ctx, "3/2"));
        Real d256 = abs(u256 - C(ctx, "3/2"));
        CHECK(d256 < d64);
        CHECK(d256 < ctx.real("0.01"));
    }
    SUBCASE("non-convergent configuration raises NoConvergence") {
        // parabolic-type CF at full precision with a shallow fold cannot
        // certify against 10*eps_rel
        PrecisionContext strict(128);
        TwoVariantCF cf = example1_cf(strict);
        TailOracleConfig cfg;
        cfg.depth = 64;
        CHECK_THROWS_AS(numeric_tail(cf, 1, cfg, strict), NoConvergence);
    }
    SUBCASE("explicit seed value is honored") {
        TwoVariantCF cf = d11_cf(ctx);
        TailOracleConfig cfg;
        cfg.depth = 512;
        cfg.seed_tail = ctx.complex(1);
        CHECK_NOTHROW(numeric_tail(cf, 2, cfg, ctx));
    }
}

TEST_CASE("fit_order recovers power-law slopes") {
    PrecisionContext ctx(48);
    SUBCASE("synthetic c n^-3") {
        std::vector<std::pair<long, Real>> pts;
        for (long n : {8L, 16L, 32L, 64L})
            pts.emplace_back(n, ctx.real(7) / (ctx.real(n) * ctx.real(n) * ctx.real(n)));
        Real slope = fit_order(pts);
        CHECK(abs(slope + 3L) <= ctx.real("1e-6"));
    }
    SUBCASE("degenerate inputs") {
        std::vector<std::pair<long, Real>> few = {{8, ctx.real(1)}, {16, ctx.real(1)},
                                                  {32, ctx.real(1)}};
        CHECK_THROWS_AS(fit_order(few), DegenerateInput);
        std::vector<std::pair<long, Real>> zero = {
            {8, ctx.real(1)}, {16, ctx.real(1)}, {32, ctx.real(1)}, {64, ctx.real(0)}};
        CHECK_THROWS_AS(fit_order(zero), DegenerateInput);
    }
}

TEST_CASE("coefficient-system residuals vanish at the model coefficients") {
    PrecisionContext ctx(64);
    auto residuals_of = [&](const TwoVariantCF& cf) {
        ShiftedCoeffs sc = shifted_coeffs(cf);
        SubclassTag tag = classify(sc, ctx);
        TailModel model = initial_tail(tag, sc, ctx);
        std::map<int, Complex> tau = model.tau;
        for (const auto& [j, c] : extended_coefficients(tag, sc, ctx)) tau.emplace(j, c);
        Real worst(0L, ctx.bits());
        for (int m : supported_residuals(tag.cls))
            worst = max(worst, abs(cm_residual(tag, sc, tau, m, ctx)));
        return worst;
    };
    CHECK(residuals_of(example1_cf(ctx)) <= ctx.eps_rel() * 100L);
    CHECK(residuals_of(make_perron_incgamma(ctx.real("1/16"), ctx.real(4), ctx)) <=
          ctx.eps_rel() * 100L);
    CHECK(residuals_of(make_perron_log(C(ctx, "-1.5", "0.01"), ctx)) <= ctx.eps_rel() * 100L);
    CHECK(residuals_of(make_perron_cn(ctx.real("0.8"), ctx.real("0.9"), ctx)) <=
          ctx.eps_rel() * 100L);
    CHECK(residuals_of(d11_cf(ctx)) <= ctx.eps_rel() * 100L);
    CHECK(residuals_of(dn10_big_cf(ctx)) <= ctx.eps_rel() * 100L);
    CHECK(residuals_of(dn20_big_cf(ctx)) <= ctx.eps_rel() * 100L);

    SUBCASE("Dt21 residual at m = -6 is the quadratic itself") {
        TwoVariantCF cf = make_perron_log(ctx.complex(1), ctx);
        ShiftedCoeffs sc = shifted_coeffs(cf);
        SubclassTag tag = classify(sc, ctx);
        std::map<int, Complex> tau{{-2, Complex(sqrt(ctx.real(2)) - 1L)}};
        CHECK(abs(cm_residual(tag, sc, tau, -6, ctx)) <= ctx.real("1e-60"));
    }
    SUBCASE("negated De10 coefficient still solves the even quadratic") {
        TwoVariantCF cf = make_perron_incgamma(ctx.real("1/16"), ctx.real(4), ctx);
        ShiftedCoeffs sc = shifted_coeffs(cf);
        SubclassTag tag = classify(sc, ctx);
        std::map<int, Complex> tau{{-1, ctx.complex(-4)}};  // wrong branch, same square
        CHECK(abs(cm_residual(tag, sc, tau, -2, ctx)) <= ctx.real("1e-60"));
    }
    SUBCASE("unsupported index is refused") {
        ShiftedCoeffs sc = shifted_coeffs(example1_cf(ctx));
        SubclassTag tag = classify(sc, ctx);
        CHECK_THROWS_AS(cm_residual(tag, sc, {}, -6, ctx), UnsupportedResidual);
        CHECK_THROWS_AS(cm_residual(tag, sc, {}, -2, ctx), UnsupportedResidual);
    }
}

TEST_CASE("branch check separates the chosen root from the rejected one") {
    PrecisionContext ctx(24);
    auto run = [&](const TwoVariantCF& cf, bool swap) {
        ShiftedCoeffs sc = shifted_coeffs(cf);
        SubclassTag tag = classify(sc, ctx);
        TailModel model = initial_tail(tag, sc, ctx);
        return branch_check(cf, model, sc, ctx, swap);
    };
    SUBCASE("digamma CF (De20)") {
        TwoVariantCF cf = example1_cf(ctx);
        CHECK(run(cf, false));
        CHECK(!run(cf, true));
    }
    SUBCASE("log CF (Dt21)") {
        TwoVariantCF cf = make_perron_log(ctx.complex(1), ctx);
        CHECK(run(cf, false));
        CHECK(!run(cf, true));
    }
    SUBCASE("cn CF (Dn20)") {
        TwoVariantCF cf = make_perron_cn(ctx.real("0.8"), ctx.real("0.9"), ctx);
        CHECK(run(cf, false));
        CHECK(!run(cf, true));
    }
}

TEST_CASE("phi - psi gap never vanishes and follows the predicted decay") {
    PrecisionContext ctx(24);
    std::vector<long> ns = {8, 16, 32, 64, 128};
    std::vector<long> all_n;
    for (long n = 4; n <= 64; ++n) all_n.push_back(n);
    auto slope_of = [&](const TwoVariantCF& cf) {
        ShiftedCoeffs sc = shifted_coeffs(cf);
        TailModel model = initial_tail(classify(sc, ctx), sc, ctx);
        for (const auto& [n, gap] : phi_psi_gap(cf, model, all_n, ctx)) CHECK(gap > 0L);
        return fit_order(phi_psi_gap(cf, model, ns, ctx)).to_double();
    };
    CHECK(slope_of(example1_cf(ctx)) == doctest::Approx(-1.0).epsilon(0.3));
    CHECK(slope_of(make_perron_incgamma(ctx.real("1/16"), ctx.real(4), ctx)) ==
          doctest::Approx(-0.5).epsilon(0.6));
    CHECK(std::abs(slope_of(make_perron_log(C(ctx, "-1.5", "0.01"), ctx)))  <= 0.3);
    CHECK(std::abs(slope_of(d11_cf(ctx))) <= 0.3);
    CHECK(std::abs(slope_of(make_perron_cn(ctx.real("0.8"), ctx.real("0.9"), ctx))) <= 0.3);
}

TEST_CASE("order fits confirm m/2 + j theta over a fast class") {
    PrecisionContext ctx(24);
    // Dt21 contracts geometrically, so this stays cheap enough for unit tests;
    // the full per-class sweep lives in the acceptance suite.
    TwoVariantCF cf = make_perron_log(C(ctx, "-1.5", "0.01"), ctx);
    ShiftedCoeffs sc = shifted_coeffs(cf);
    TailModel model = initial_tail(classify(sc, ctx), sc, ctx);
    ProbeConfig probe = probe_config(Subclass::Dt21);
    TailOracleConfig cfg;
    cfg.depth = probe.order_depth;
    AccelResult sweep = accelerate(cf, probe.order_ns.back() + 3, 2, ctx, std::nullopt, true);
    for (int j = 0; j <= 2; ++j) {
        std::vector<std::pair<long, Real>> errs;
        for (long n : probe.order_ns) {
            Complex truth = numeric_tail(cf, n, cfg, ctx);
            errs.emplace_back(
                n, abs(sweep.table.rows[static_cast<size_t>(j)][static_cast<size_t>(n - 1)] -
                       truth));
        }
        double slope = fit_order(errs).to_double();
        double target = -(model.m / 2.0 + j * model.theta);
        CHECK(std::abs(slope - target) <= 0.5);
    }
}

TEST_CASE("verification suite passes for the log CF") {
    PrecisionContext ctx(32);
    TwoVariantCF cf = make_perron_log(C(ctx, "-1.5", "0.01"), ctx);
    auto checks = run_verification(cf, ctx);
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("verification suite covers the remaining subclasses") {
    PrecisionContext ctx(32);
    for (const TwoVariantCF& cf : {d11_cf(ctx), dn10_big_cf(ctx), dn10_small_cf(ctx),
                                   dn20_big_cf(ctx)}) {
        CAPTURE(cf.label());
        for (const auto& c : run_verification(cf, ctx)) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("De20 constant term matches the asymptotic fit") {
    PrecisionContext ctx(24);
    TwoVariantCF cf = example1_cf(ctx);
    ShiftedCoeffs sc = shifted_coeffs(cf);
    SubclassTag tag = classify(sc, ctx);
    TailModel model = initial_tail(tag, sc, ctx);
    Complex fitted = de20_constant_term_fit(cf, model, ctx);
    Complex want = extended_coefficients(tag, sc, ctx).at(0);  // -15/16
    CHECK(abs(fitted - want) <= abs(want) * ctx.real("5e-4"));
    // not applicable off the subclass
    TwoVariantCF log_cf = make_perron_log(ctx.complex(1), ctx);
    ShiftedCoeffs lsc = shifted_coeffs(log_cf);
    TailModel lmodel = initial_tail(classify(lsc, ctx), lsc, ctx);
    CHECK_THROWS_AS(de20_constant_term_fit(log_cf, lmodel, ctx), DomainError);
}
