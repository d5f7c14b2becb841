#pragma once

#include <string>

#include "modunits/bigcomplex.hpp"
#include "modunits/context.hpp"

namespace modunits {

/**
 * Imaginary-quadratic point (p + q*sqrt(D))/r with D < 0, kept in the
 * canonical form gcd(p,q,r) = 1, r > 0.  The point must lie in the upper
 * half-plane, i.e. q/r > 0 after normalisation.
 */
struct QuadraticPoint {
    long D = -1;  // negative radicand
    long p = 0;
    long q = 1;
    long r = 1;

    QuadraticPoint() = default;
    QuadraticPoint(long D_, long p_, long q_, long r_);

    bool operator==(const QuadraticPoint&) const = default;
};

BigComplex to_complex(const QuadraticPoint& pt, const EvalContext& ctx);

/// Parses the CLI grammar `quad:D:p,q,r`. Throws UsageError on malformed input.
QuadraticPoint parse_quad_point(const std::string& text);

/// Parses either `quad:D:p,q,r` or the decimal alternative `c:<re>,<im>`.
BigComplex parse_tau(const std::string& text, const EvalContext& ctx);

}  // namespace modunits
