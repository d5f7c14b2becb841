#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modunits/context.hpp"

namespace modunits {

struct IdentityReport {
    std::string name;
    int samples = 0;
    double max_residual_log2 = -1e9;  // log2 of worst relative residual
    double bound_log2 = 0;            // acceptance bound, -prec + 16
    bool pass = false;
};

/**
 * Numeric identity suite at randomized tau (Im in [0.5, 3]):
 *   - phi(tau) = -(1/sqrt(2 pi)) eta(tau) g_{(1/2,1/2)}(tau)
 *   - g_{(0,1/2)} g_{(1/2,0)} g_{(1/2,1/2)} = 2 e^{pi i/4}
 *   - g_{(1/2,1/2)}(m tau)/g_{(1/2,1/2)}(tau) = (-1)^{(m-1)/2} prod_k g_{(1/2,1/2+k/m)}(tau),
 *     m in {3,5,7}
 *   - prod_{(a,b) != 0, 0 <= a,b < m} g_{(a/m,b/m)}^{12m} = m^{12m}, m in {2,3}
 *   - prod_k g_{(0,k/m)} = i^{m-1} (sqrt(m) eta(m tau)/eta(tau))^2, m in 2..7
 *
 * Residuals are relative; each identity passes when the worst residual over
 * all samples stays below 2^{-prec_bits+16}.  `inject_sign_error` flips one
 * sign as a negative control.
 */
std::vector<IdentityReport> run_identity_suite(const EvalContext& ctx, std::uint64_t seed,
                                               int samples_per_identity,
                                               bool inject_sign_error = false);

/**
 * Transformation-law check: random pairs (r, gamma) with gamma in SL2(Z),
 * entries in [-20,20], verifying g_r(gamma tau) = eps g_{r gamma}(tau) with
 * the tracked root of unity, at randomized tau.
 */
IdentityReport run_transformation_check(const EvalContext& ctx, std::uint64_t seed, int pairs);

bool all_pass(const std::vector<IdentityReport>& reports);

}  // namespace modunits
