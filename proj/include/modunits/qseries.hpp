#pragma once

#include <gmpxx.h>

#include "modunits/bigcomplex.hpp"
#include "modunits/context.hpp"
#include "modunits/siegel_algebra.hpp"

namespace modunits {

/// Second Bernoulli polynomial B2(x) = x^2 - x + 1/6, exact.
mpq_class bernoulli2(const mpq_class& x);

/**
 * Dedekind eta in the normalisation used throughout this project,
 *   eta(tau) = sqrt(2 pi) e^{pi i/4} q^{1/24} prod_{n>=1} (1 - q^n),
 * which carries the constant prefactor sqrt(2 pi) e^{pi i/4} relative to
 * the classical eta.  The prefactor cancels in every ratio we certify.
 */
BigComplex eta(const BigComplex& tau, const EvalContext& ctx);

/// phi(tau) = prod_{n>=1} (1 + q^{n-1/2})^2 (1 - q^n), evaluated from the
/// product itself (the eta-quotient form is kept as a cross-check only).
BigComplex phi(const BigComplex& tau, const EvalContext& ctx);

/// Modular discriminant Delta(tau) = eta(tau)^24 = (2 pi)^12 q prod (1-q^n)^24.
BigComplex delta(const BigComplex& tau, const EvalContext& ctx);

/// Modular j-function via the eta quotient
/// ((eta(tau)^24 + 2^8 eta(2 tau)^24) / (eta(tau)^16 eta(2 tau)^8))^3.
BigComplex jfun(const BigComplex& tau, const EvalContext& ctx);

/**
 * Siegel function
 *   g_{(r1,r2)}(tau) = -q^{B2(r1)/2} e^{pi i r2 (r1-1)} (1 - q_z)
 *                      prod_{n>=1} (1 - q^n q_z)(1 - q^n q_z^{-1}),
 * with z = r1 tau + r2.  Nonvanishing on the upper half-plane; the returned
 * magnitude is checked against the truncation error bound.
 */
BigComplex siegel(const SiegelIndex& r, const BigComplex& tau, const EvalContext& ctx);

}  // namespace modunits
