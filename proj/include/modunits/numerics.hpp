#pragma once

#include <gmpxx.h>

#include "modunits/bigcomplex.hpp"
#include "modunits/context.hpp"

namespace modunits {

/// q = e^{2 pi i tau}; requires Im(tau) > 0, so |q| < 1.
BigComplex nome(const BigComplex& tau, const EvalContext& ctx);

/**
 * Smallest T with sum_{n>T} |q|^{n-1/2} / (1-|q|) < 2^-target_bits.
 *
 * Truncating any of the q-products used here after T factors then leaves a
 * relative tail error below 2^-target_bits, since every discarded factor is
 * 1 - w with |w| <= |q|^{n-1/2}.
 */
long truncation_terms(const BigFloat& abs_q, long target_bits);

/// Term count an evaluator should use at tau: the context override if set,
/// otherwise truncation_terms at working precision plus a small margin.
long product_terms(const BigFloat& abs_q, const EvalContext& ctx);

/// e^{2 pi i * scale * tau} for an exact rational scale (fractional q-powers).
BigComplex exp_2pi_i_scaled(const BigComplex& tau, const mpq_class& scale, const EvalContext& ctx);

/// Conservative log2 of the relative evaluation error at tau (for reporting).
double eval_error_log2(const BigComplex& tau, const EvalContext& ctx);

}  // namespace modunits
