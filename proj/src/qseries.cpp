#include "modunits/qseries.hpp"

#include <cmath>

#include "modunits/errors.hpp"
#include "modunits/numerics.hpp"

namespace modunits {

mpq_class bernoulli2(const mpq_class& x) {
    mpq_class v = x * x - x + mpq_class(1, 6);
    v.canonicalize();
    return v;
}

namespace {

// prod_{n=1}^{T} (1 - q^n)
BigComplex euler_product(const BigComplex& q, long T, mpfr_prec_t wp) {
    BigComplex one = BigComplex::from_si(1, wp);
    BigComplex acc = one;
    BigComplex qn = one;
    for (long n = 1; n <= T; ++n) {
        qn = qn * q;
        acc = acc * (one - qn);
    }
    return acc;
}

BigComplex sqrt_2pi_e_pi_i_4(mpfr_prec_t wp) {
    BigFloat pi = BigFloat::pi(wp);
    BigFloat mag = (pi.mul_2si(1)).sqrt();
    BigComplex dir = BigComplex::unit_phase(mpq_class(1, 8), wp);
    return dir * mag;
}

}  // namespace

BigComplex eta(const BigComplex& tau, const EvalContext& ctx) {
    if (tau.im().sign() <= 0) throw NonPositiveImaginaryPart("eta: Im(tau) <= 0");
    mpfr_prec_t wp = ctx.working_prec();
    BigComplex q = nome(tau, ctx);
    long T = product_terms(q.abs(), ctx);
    BigComplex q24 = exp_2pi_i_scaled(tau, mpq_class(1, 24), ctx);
    return sqrt_2pi_e_pi_i_4(wp) * q24 * euler_product(q, T, wp);
}

BigComplex phi(const BigComplex& tau, const EvalContext& ctx) {
    if (tau.im().sign() <= 0) throw NonPositiveImaginaryPart("phi: Im(tau) <= 0");
    mpfr_prec_t wp = ctx.working_prec();
    BigComplex q = nome(tau, ctx);
    long T = product_terms(q.abs(), ctx);
    BigComplex qh = exp_2pi_i_scaled(tau, mpq_class(1, 2), ctx);  // q^{1/2}
    BigComplex one = BigComplex::from_si(1, wp);
    BigComplex acc = one;
    BigComplex qn = one;       // q^n
    BigComplex qnmh = qh;      // q^{n-1/2}
    for (long n = 1; n <= T; ++n) {
        qn = qn * q;
        BigComplex f = one + qnmh;
        acc = acc * f * f * (one - qn);
        qnmh = qnmh * q;
    }
    return acc;
}

BigComplex delta(const BigComplex& tau, const EvalContext& ctx) {
    if (tau.im().sign() <= 0) throw NonPositiveImaginaryPart("delta: Im(tau) <= 0");
    mpfr_prec_t wp = ctx.working_prec();
    BigComplex q = nome(tau, ctx);
    long T = product_terms(q.abs(), ctx);
    BigFloat two_pi = BigFloat::pi(wp).mul_2si(1);
    BigComplex pref = BigComplex(two_pi, BigFloat(wp)).pow_si(12);
    return pref * q * euler_product(q, T, wp).pow_si(24);
}

BigComplex jfun(const BigComplex& tau, const EvalContext& ctx) {
    BigComplex e1 = eta(tau, ctx);
    BigComplex e2 = eta(tau + tau, ctx);
    BigComplex e1_8 = e1.pow_si(8);
    BigComplex e2_8 = e2.pow_si(8);
    BigComplex num = e1_8.pow_si(3) + e2_8.pow_si(3).mul_2si(8);
    BigComplex den = e1_8.pow_si(2) * e2_8;
    return (num / den).pow_si(3);
}

BigComplex siegel(const SiegelIndex& r_in, const BigComplex& tau, const EvalContext& ctx) {
    if (tau.im().sign() <= 0) throw NonPositiveImaginaryPart("siegel: Im(tau) <= 0");
    mpfr_prec_t wp = ctx.working_prec();

    // evaluate at the representative with r1 in [0,1), where |q_z| <= 1 and
    // the truncation bound applies; the translation phase is exact
    auto [r, shift] = reduce_index(r_in);

    BigComplex q = nome(tau, ctx);
    BigFloat aq = q.abs();
    long T = product_terms(aq, ctx) + 1;  // one extra term covers r1 up to 1

    // q_z = e^{2 pi i (r1 tau + r2)}
    BigFloat s1 = BigFloat::from_mpq(r.r1(), wp);
    BigComplex qz = BigComplex::exp_2pi_i({tau.re() * s1 + BigFloat::from_mpq(r.r2(), wp),
                                           tau.im() * s1});
    BigComplex qz_inv = qz.inverse();

    // -q^{B2(r1)/2} e^{pi i r2 (r1 - 1)}
    mpq_class b2 = bernoulli2(r.r1()) / 2;
    b2.canonicalize();
    mpq_class half_arg = r.r2() * (r.r1() - 1) / 2;
    half_arg.canonicalize();
    BigComplex pre = -(exp_2pi_i_scaled(tau, b2, ctx) * BigComplex::unit_phase(half_arg, wp));

    BigComplex one = BigComplex::from_si(1, wp);
    BigComplex acc = one - qz;
    BigComplex qn = one;
    for (long n = 1; n <= T; ++n) {
        qn = qn * q;
        acc = acc * (one - qn * qz) * (one - qn * qz_inv);
    }
    BigComplex g = pre * acc;
    if (!shift.trivial()) g = shift.value(wp) * g;  // g_{r_in} = e^{2 pi i shift} g_r

    // g_r has no zeros on the upper half-plane; a value at the error floor
    // means the precision budget is spent
    if (!g.abs().is_finite() ||
        g.abs().log2_abs() < pre.abs().log2_abs() - static_cast<double>(wp) +
                                 std::log2(6.0 * static_cast<double>(T) + 32.0) + 1.0)
        throw CertificationFailure("siegel: value indistinguishable from the error bound");
    return g;
}

}  // namespace modunits
