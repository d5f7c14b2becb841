#include "modunits/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "modunits/errors.hpp"

namespace modunits {

BigComplex nome(const BigComplex& tau, const EvalContext& ctx) {
    if (tau.im().sign() <= 0) throw NonPositiveImaginaryPart("nome: Im(tau) <= 0");
    mpfr_prec_t wp = ctx.working_prec();
    BigComplex t(BigFloat(wp) + tau.re(), BigFloat(wp) + tau.im());
    return BigComplex::exp_2pi_i(t);
}

namespace {

// tail bound B(T) = |q|^{T+1/2} / (1-|q|)^2, compared against 2^-target
bool tail_small_enough(const BigFloat& aq, long T, long target_bits) {
    mpfr_prec_t p = std::max<mpfr_prec_t>(aq.prec(), 128);
    BigFloat one_minus(p);
    mpfr_ui_sub(one_minus.get(), 1, aq.get(), MPFR_RNDN);
    BigFloat lhs(p);
    mpfr_pow_si(lhs.get(), aq.get(), 2 * T + 1, MPFR_RNDN);  // |q|^{2T+1} vs bound^2
    BigFloat rhs(p);
    mpfr_set_si_2exp(rhs.get(), 1, -target_bits, MPFR_RNDN);
    rhs = rhs * one_minus * one_minus;
    return lhs < rhs * rhs;  // |q|^{T+1/2} < 2^-t (1-|q|)^2, squared to stay rational
}

}  // namespace

long truncation_terms(const BigFloat& abs_q, long target_bits) {
    if (abs_q.sign() < 0 || abs_q.cmp_si(1) >= 0)
        throw UsageError("truncation_terms: need 0 <= |q| < 1");
    if (abs_q.is_zero()) return 1;

    mpfr_prec_t p = std::max<mpfr_prec_t>(abs_q.prec(), 128);
    BigFloat one_minus(p);
    mpfr_ui_sub(one_minus.get(), 1, abs_q.get(), MPFR_RNDN);
    BigFloat thresh(p);
    mpfr_set_si_2exp(thresh.get(), 1, -(target_bits / 2), MPFR_RNDN);
    if (one_minus < thresh) throw QTooCloseToOne();

    // T ~ (target ln2 - 2 ln(1-|q|)) / (-ln|q|) - 1/2, then fix up exactly
    BigFloat ln2(p);
    mpfr_const_log2(ln2.get(), MPFR_RNDN);
    BigFloat num = ln2 * target_bits - one_minus.log() * 2;
    BigFloat den = -(abs_q.log());
    double est = (num / den).to_double();
    // a term count beyond any feasible product means the precision is
    // unattainable, and 2T+1 must stay in range for the exact fix-up below
    if (!(est < 1e12)) throw QTooCloseToOne("tail bound needs ~" + std::to_string(est) + " terms");
    long T = std::max(1L, static_cast<long>(std::ceil(est - 0.5)));
    while (!tail_small_enough(abs_q, T, target_bits)) ++T;
    while (T > 1 && tail_small_enough(abs_q, T - 1, target_bits)) --T;
    return T;
}

long product_terms(const BigFloat& abs_q, const EvalContext& ctx) {
    if (ctx.max_terms > 0) return ctx.max_terms;
    long T = truncation_terms(abs_q, ctx.prec_bits + ctx.guard_bits + 8);
    // |q| can pass the closeness threshold and still demand an absurd number
    // of factors (Im tau around 1e-30); refuse instead of looping for weeks
    if (T > 50'000'000) throw QTooCloseToOne("product needs " + std::to_string(T) + " factors");
    return T;
}

BigComplex exp_2pi_i_scaled(const BigComplex& tau, const mpq_class& scale, const EvalContext& ctx) {
    mpfr_prec_t wp = ctx.working_prec();
    BigFloat s = BigFloat::from_mpq(scale, wp);
    return BigComplex::exp_2pi_i({tau.re() * s, tau.im() * s});
}

double eval_error_log2(const BigComplex& tau, const EvalContext& ctx) {
    if (tau.im().sign() <= 0) throw NonPositiveImaginaryPart();
    BigFloat aq = nome(tau, ctx).abs();
    long T = product_terms(aq, ctx);
    // rounding dominates: ~3 mpfr operations per product term
    return -static_cast<double>(ctx.working_prec()) + std::log2(3.0 * static_cast<double>(T) + 32.0);
}

}  // namespace modunits
