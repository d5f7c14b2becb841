#pragma once

#include <mpfr.h>

#include "modunits/errors.hpp"

namespace modunits {

/**
 * Evaluation context: target precision, guard bits and the q-product
 * truncation policy shared by every numeric evaluator.
 *
 * All products are computed internally at prec_bits + guard_bits so that
 * the exported values carry a relative error below 2^-prec_bits.
 */
struct EvalContext {
    long prec_bits = 256;
    long guard_bits = 32;
    long max_terms = 0;  // 0 = choose automatically from the tail bound

    EvalContext() = default;
    EvalContext(long prec, long guard = 32, long terms = 0)
        : prec_bits(prec), guard_bits(guard), max_terms(terms) {
        validate();
    }

    void validate() const {
        if (prec_bits < 64) throw UsageError("prec_bits must be >= 64");
        if (guard_bits < 1 || guard_bits >= prec_bits)
            throw UsageError("guard_bits must satisfy 1 <= guard_bits < prec_bits");
        if (max_terms < 0) throw UsageError("max_terms must be positive or 0 (auto)");
    }

    mpfr_prec_t working_prec() const { return static_cast<mpfr_prec_t>(prec_bits + guard_bits); }

    EvalContext with_prec(long prec) const { return EvalContext(prec, guard_bits, max_terms); }
};

}  // namespace modunits
