#include "modunits/quadpoint.hpp"

#include <numeric>

#include "modunits/errors.hpp"

namespace modunits {

QuadraticPoint::QuadraticPoint(long D_, long p_, long q_, long r_) : D(D_), p(p_), q(q_), r(r_) {
    if (D >= 0) throw UsageError("QuadraticPoint: D must be negative");
    if (r == 0) throw UsageError("QuadraticPoint: r must be nonzero");
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    long g = std::gcd(std::gcd(std::abs(p), std::abs(q)), r);
    if (g > 1) {
        p /= g;
        q /= g;
        r /= g;
    }
    if (q <= 0) throw NonPositiveImaginaryPart("QuadraticPoint: q/r must be positive");
}

BigComplex to_complex(const QuadraticPoint& pt, const EvalContext& ctx) {
    mpfr_prec_t wp = ctx.working_prec();
    BigFloat root = BigFloat::from_si(-pt.D, wp).sqrt();
    BigFloat re = BigFloat::from_si(pt.p, wp) / pt.r;
    BigFloat im = root * pt.q / pt.r;
    return {re, im};
}

QuadraticPoint parse_quad_point(const std::string& text) {
    // quad:D:p,q,r
    if (text.rfind("quad:", 0) != 0) throw UsageError("expected 'quad:D:p,q,r', got '" + text + "'");
    std::string rest = text.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw UsageError("expected 'quad:D:p,q,r', got '" + text + "'");
    try {
        long D = std::stol(rest.substr(0, colon));
        std::string nums = rest.substr(colon + 1);
        auto c1 = nums.find(',');
        auto c2 = nums.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw UsageError("expected 'quad:D:p,q,r', got '" + text + "'");
        long p = std::stol(nums.substr(0, c1));
        long q = std::stol(nums.substr(c1 + 1, c2 - c1 - 1));
        long r = std::stol(nums.substr(c2 + 1));
        return QuadraticPoint(D, p, q, r);
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed quadratic point '" + text + "'");
    } catch (const std::out_of_range&) {
        throw UsageError("malformed quadratic point '" + text + "'");
    }
}

BigComplex parse_tau(const std::string& text, const EvalContext& ctx) {
    if (text.rfind("quad:", 0) == 0) return to_complex(parse_quad_point(text), ctx);
    if (text.rfind("c:", 0) == 0) {
        std::string nums = text.substr(2);
        auto comma = nums.find(',');
        if (comma == std::string::npos) throw UsageError("expected 'c:<re>,<im>', got '" + text + "'");
        mpfr_prec_t wp = ctx.working_prec();
        try {
            BigFloat re = BigFloat::from_string(nums.substr(0, comma), wp);
            BigFloat im = BigFloat::from_string(nums.substr(comma + 1), wp);
            return {re, im};
        } catch (const std::invalid_argument&) {
            throw UsageError("malformed decimal point '" + text + "'");
        }
    }
    throw UsageError("tau must be 'quad:D:p,q,r' or 'c:<re>,<im>', got '" + text + "'");
}

}  // namespace modunits
