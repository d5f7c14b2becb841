#pragma once

#include <string>
#include <vector>

#include "modunits/classfield.hpp"
#include "modunits/recognition.hpp"

namespace modunits {

struct CertifyOptions {
    int max_retries = 2;   // precision doublings after the first attempt
    bool parallel = true;  // evaluate conjugates in parallel
};

struct HypothesisReport {
    bool m_odd = false;
    std::vector<std::pair<long, bool>> prime_splits;  // (prime, splits in K)
    bool holds = false;                               // unit_theorem_hypothesis
};

struct CertifyResult {
    long d_K = 0;
    long m = 0;
    AlgebraicCertificate certificate;
    HypothesisReport hypothesis;
    bool conjugation_closed = false;  // multiset was closed under complex conjugation
    long coset_count = 0;
    double elapsed_seconds = 0.0;
};

/**
 * Full certification pipeline for x = (sqrt(m) phi(m theta_K)/phi(theta_K))^{2e}
 * with e the Galois-stable power of the squared ratio:
 * decompose -> stabilize -> conjugate over W_{K,2m} -> reconstruct the integer
 * polynomial -> certify divisibility by m^e, unit-ness and the radical form.
 *
 * When the conjugate multiset is not closed under complex conjugation (this
 * happens for d_K = 1 mod 4), the complex-conjugate values are adjoined so
 * the coefficients become rational; such roots are still Galois conjugates
 * of x over Q.  Retries at doubled precision when coefficient rounding fails.
 */
CertifyResult certify_phi_ratio(long d_K, long m, const EvalContext& ctx,
                                const CertifyOptions& opts = {});

/// Certificate (plus hypothesis report) as deterministic JSON text.
std::string certificate_json(const CertifyResult& res, int indent = 2);
std::string certificate_text(const CertifyResult& res);

}  // namespace modunits
