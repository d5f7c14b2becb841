#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modunits/errors.hpp"
#include "modunits/numerics.hpp"
#include "modunits/qseries.hpp"
#include "modunits/quadpoint.hpp"
#include "test_util.hpp"

using namespace modunits;
using testutil::rel_err_log2;

namespace {

// independent exponential oracle at doubled precision:
// e^{2 pi i (x + i y)} = e^{-2 pi y} (cos 2 pi x + i sin 2 pi x)
BigComplex exp_oracle(const mpq_class& x, const mpq_class& y, mpfr_prec_t prec) {
    BigFloat two_pi = BigFloat::pi(2 * prec).mul_2si(1);
    BigFloat ang = two_pi * BigFloat::from_mpq(x, 2 * prec);
    BigFloat s(2 * prec), c(2 * prec);
    mpfr_sin_cos(s.get(), c.get(), ang.get(), MPFR_RNDN);
    BigFloat mag = (-(two_pi * BigFloat::from_mpq(y, 2 * prec))).exp();
    return {mag * c, mag * s};
}

// direct scan for the smallest T with |q|^{T+1/2}/(1-|q|)^2 < 2^-target
long truncation_oracle(const BigFloat& aq, long target) {
    mpfr_prec_t p = 256;
    BigFloat one_minus = 1 - aq;
    BigFloat eps(p);
    mpfr_set_si_2exp(eps.get(), 1, -target, MPFR_RNDN);
    BigFloat bound = eps * one_minus * one_minus;
    BigFloat half_pow = aq.sqrt();
    BigFloat qq = aq * half_pow;  // |q|^{T+1/2} at T = 1
    long T = 1;
    while (!(qq < bound)) {
        qq = qq * aq;
        ++T;
    }
    return T;
}

}  // namespace

TEST_CASE("to_complex canonical examples") {
    EvalContext ctx(128);
    {
        BigComplex v = to_complex(QuadraticPoint(-1, 0, 1, 1), ctx);
        CHECK(v.re().is_zero());
        CHECK(rel_err_log2(v.im(), BigFloat::from_si(1, 160)) < -120);
    }
    {
        BigComplex v = to_complex(QuadraticPoint(-3, -1, 1, 2), ctx);
        CHECK(rel_err_log2(v.re(), BigFloat::from_double(-0.5, 160)) < -120);
        CHECK(rel_err_log2(v.im(), BigFloat::from_si(3, 160).sqrt() / 2) < -120);
    }
    {
        // (0 + sqrt(-4))/2 = i exactly
        BigComplex v = to_complex(QuadraticPoint(-4, 0, 1, 2), ctx);
        CHECK(v.re().is_zero());
        CHECK(rel_err_log2(v.im(), BigFloat::from_si(1, 160)) < -120);
    }
    CHECK_THROWS_AS(QuadraticPoint(-1, 0, -1, 1), NonPositiveImaginaryPart);
    CHECK_THROWS_AS(QuadraticPoint(-1, 0, 1, 0), UsageError);
    CHECK_THROWS_AS(QuadraticPoint(4, 0, 1, 1), UsageError);
    // canonical form: gcd reduced, r > 0
    QuadraticPoint pt(-1, -2, -4, -6);
    CHECK(pt.p == 1);
    CHECK(pt.q == 2);
    CHECK(pt.r == 3);
    CHECK(pt.q > 0);
}

TEST_CASE("nome against the independent exponential") {
    EvalContext ctx(256);
    BigComplex i_pt(BigFloat(ctx.working_prec()), BigFloat::from_si(1, ctx.working_prec()));
    BigComplex q = nome(i_pt, ctx);
    CHECK(rel_err_log2(q, exp_oracle(mpq_class(0), mpq_class(1), ctx.working_prec())) < -250);
    // e^{-2 pi} = 0.00186744...
    CHECK(q.re().to_double() == doctest::Approx(0.0018674427317).epsilon(1e-9));
    CHECK(q.im().abs().log2_abs() < -250);

    // tau = i + 1: same modulus, argument 0
    BigComplex ip1(BigFloat::from_si(1, ctx.working_prec()), BigFloat::from_si(1, ctx.working_prec()));
    BigComplex q2 = nome(ip1, ctx);
    CHECK(rel_err_log2(q2.abs(), q.abs()) < -250);
    CHECK(rel_err_log2(q2, q) < -248);  // e^{2 pi i} = 1

    // tau = 2i
    BigComplex twoi(BigFloat(ctx.working_prec()), BigFloat::from_si(2, ctx.working_prec()));
    CHECK(rel_err_log2(nome(twoi, ctx), exp_oracle(mpq_class(0), mpq_class(2), ctx.working_prec())) < -250);

    CHECK_THROWS_AS(nome(BigComplex(BigFloat(128), BigFloat::from_si(-1, 128)), ctx),
                    NonPositiveImaginaryPart);
}

TEST_CASE("nome of quadratic Gaussian points matches the oracle") {
    EvalContext ctx(192);
    for (auto [p, q, r] : {std::tuple{0L, 1L, 1L}, {1L, 1L, 2L}, {-3L, 2L, 5L}}) {
        QuadraticPoint pt(-1, p, q, r);
        BigComplex tau = to_complex(pt, ctx);
        BigComplex expect =
            exp_oracle(mpq_class(p, r), mpq_class(q, r), ctx.working_prec());
        CHECK(rel_err_log2(nome(tau, ctx), expect) < -186);
    }
}

TEST_CASE("truncation_terms matches the scan oracle") {
    mpfr_prec_t p = 256;
    BigFloat q_i = (-(BigFloat::pi(p).mul_2si(1))).exp();  // e^{-2 pi}
    long T = truncation_terms(q_i, 256);
    CHECK(T == truncation_oracle(q_i, 256));
    CHECK(T >= 26);
    CHECK(T <= 31);

    // |q| -> 0 limit
    BigFloat tiny = BigFloat::from_double(1e-300, p);
    CHECK(truncation_terms(tiny, 256) == 1);

    // tau = i/2: |q| = e^{-pi}, roughly double the tau = i count
    BigFloat q_half = (-BigFloat::pi(p)).exp();
    long T2 = truncation_terms(q_half, 256);
    CHECK(T2 == truncation_oracle(q_half, 256));
    CHECK(T2 >= 2 * T - 3);
    CHECK(T2 <= 2 * T + 3);

    // smallest-T property at an awkward |q|
    BigFloat q3 = BigFloat::from_double(0.83, p);
    long T3 = truncation_terms(q3, 200);
    CHECK(T3 == truncation_oracle(q3, 200));

    BigFloat close(p);
    mpfr_set_si_2exp(close.get(), 1, -200, MPFR_RNDN);
    close = 1 - close;
    CHECK_THROWS_AS(truncation_terms(close, 256), QTooCloseToOne);
}

TEST_CASE("near-degenerate points are refused, not looped over") {
    EvalContext ctx(256);
    BigComplex tau(BigFloat(ctx.working_prec()), BigFloat::from_double(1e-30, ctx.working_prec()));
    CHECK_THROWS_AS(product_terms(nome(tau, ctx).abs(), ctx), QTooCloseToOne);
}

TEST_CASE("max_terms overrides the automatic term count") {
    EvalContext ctx(256, 32, 50);
    BigFloat q = BigFloat::from_double(0.5, 256);
    CHECK(product_terms(q, ctx) == 50);
    EvalContext auto_ctx(256);
    CHECK(product_terms(q, auto_ctx) == truncation_terms(q, 256 + 32 + 8));
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(EvalContext(32), UsageError);          // prec too small
    CHECK_THROWS_AS(EvalContext(128, 128), UsageError);    // guard >= prec
    CHECK_THROWS_AS(EvalContext(128, 32, -1), UsageError); // negative max_terms
}

TEST_CASE("precision-doubling stability of the exported evaluators") {
    const long P = 128;
    EvalContext lo(P, 32), hi(2 * P, 32);
    std::mt19937_64 rng(42);
    SiegelIndex hh(1, 2, 1, 2);
    for (int i = 0; i < 20; ++i) {
        BigComplex tau_lo = testutil::random_tau(rng, hi);  // same point in both contexts
        for (int which = 0; which < 4; ++which) {
            BigComplex a(lo.working_prec()), b(hi.working_prec());
            switch (which) {
                case 0: a = eta(tau_lo, lo); b = eta(tau_lo, hi); break;
                case 1: a = phi(tau_lo, lo); b = phi(tau_lo, hi); break;
                case 2: a = delta(tau_lo, lo); b = delta(tau_lo, hi); break;
                default: a = siegel(hh, tau_lo, lo); b = siegel(hh, tau_lo, hi); break;
            }
            CHECK(rel_err_log2(a, b) < -P + 32);
        }
    }
}

TEST_CASE("tau parsing grammar") {
    EvalContext ctx(128);
    QuadraticPoint pt = parse_quad_point("quad:-4:0,1,2");
    CHECK(pt == QuadraticPoint(-4, 0, 1, 2));
    BigComplex v = parse_tau("c:0.25,1.5", ctx);
    CHECK(v.re().to_double() == doctest::Approx(0.25));
    CHECK(v.im().to_double() == doctest::Approx(1.5));
    CHECK_THROWS_AS(parse_tau("quad:-4:0,1", ctx), UsageError);
    CHECK_THROWS_AS(parse_tau("x:1,2", ctx), UsageError);
    CHECK_THROWS_AS(parse_tau("quad:4:0,1,1", ctx), UsageError);
}
