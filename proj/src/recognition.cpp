#include "modunits/recognition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "modunits/errors.hpp"

namespace modunits {

BigComplex IntPolynomial::eval(const BigComplex& x) const {
    mpfr_prec_t wp = x.prec();
    BigComplex acc(wp);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + BigComplex(BigFloat::from_mpz(*it, wp), BigFloat(wp));
    return acc;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    std::vector<mpz_class> c(a.coeffs.size() + b.coeffs.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return {std::move(c)};
}

IntPolynomial IntPolynomial::pow(long e) const {
    IntPolynomial acc{{mpz_class(1)}};
    IntPolynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string IntPolynomial::str() const {
    std::ostringstream os;
    for (long i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (os.tellp() > 0) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpz_class a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) os << "X";
        if (i > 1) os << "^" << i;
    }
    if (os.tellp() == 0) os << "0";
    return os.str();
}

IntPolynomial build_polynomial(const std::vector<BigComplex>& conjugates, const EvalContext& ctx) {
    if (conjugates.empty()) throw UsageError("build_polynomial: empty conjugate list");
    mpfr_prec_t wp = ctx.working_prec();

    std::vector<BigComplex> poly{BigComplex::from_si(1, wp)};
    for (const BigComplex& root : conjugates) {
        std::vector<BigComplex> next(poly.size() + 1, BigComplex(wp));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = next[k + 1] + poly[k];
            next[k] = next[k] - root * poly[k];
        }
        poly = std::move(next);
    }

    const double tol_log2 = -2.0 * static_cast<double>(ctx.guard_bits);
    const long max_bits = ctx.prec_bits - 2 * ctx.guard_bits;
    std::vector<mpz_class> coeffs;
    coeffs.reserve(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const BigComplex& c = poly[i];
        double re_mag = c.re().abs().log2_abs();
        if (c.im().abs().log2_abs() > std::max(0.0, re_mag) + tol_log2)
            throw ImaginaryResidue("coefficient " + std::to_string(i) +
                                   " has a non-negligible imaginary part");
        mpz_class z = c.re().round_to_mpz();
        BigFloat dist = (c.re() - BigFloat::from_mpz(z, wp)).abs();
        if (dist.log2_abs() > tol_log2)
            throw CoefficientNotNearInteger(
                static_cast<long>(i), dist.log2_abs(),
                "coefficient " + std::to_string(i) + " is 2^" +
                    std::to_string(dist.log2_abs()) + " away from an integer");
        if (static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)) > max_bits)
            throw CoefficientNotNearInteger(
                static_cast<long>(i), dist.log2_abs(),
                "coefficient " + std::to_string(i) + " needs more bits than the precision allows");
        coeffs.push_back(std::move(z));
    }
    IntPolynomial result{std::move(coeffs)};

    // re-verify: the rounded polynomial must vanish at every input root
    for (const BigComplex& root : conjugates) {
        double scale = 0.0;  // log2 of sum |a_i| |x|^i
        double lx = std::max(0.0, root.abs().log2_abs());
        for (std::size_t i = 0; i < result.coeffs.size(); ++i) {
            double term = static_cast<double>(
                              mpz_sizeinbase(result.coeffs[i].get_mpz_t(), 2)) +
                          static_cast<double>(i) * lx;
            scale = std::max(scale, term);
        }
        double residual = result.eval(root).abs().log2_abs();
        if (residual > scale - static_cast<double>(ctx.prec_bits) + 16.0)
            throw CoefficientNotNearInteger(-1, residual,
                                            "rounded polynomial does not vanish at a conjugate");
    }
    return result;
}

bool certify_algebraic_integer(const IntPolynomial& p) {
    return !p.coeffs.empty() && p.monic();
}

bool certify_divides(const IntPolynomial& p, const mpz_class& n) {
    if (p.coeffs.empty() || n == 0) throw UsageError("certify_divides: empty polynomial or n = 0");
    const mpz_class& a0 = p.constant();
    if (a0 == 0) throw ZeroConstantTerm();
    // n/x is an algebraic integer iff a_0 | a_j n^j for j = 1..d (a_d = 1)
    mpz_class npow(1);
    for (long j = 1; j <= p.degree(); ++j) {
        npow *= n;
        if (!mpz_divisible_p(mpz_class(p.coeffs[static_cast<std::size_t>(j)] * npow).get_mpz_t(),
                             a0.get_mpz_t()))
            return false;
    }
    return true;
}

bool certify_unit(const IntPolynomial& p) {
    if (p.coeffs.empty() || !p.monic()) return false;
    return p.constant() == 1 || p.constant() == -1;
}

namespace {

// exact multiplication in Z[sqrt(d)]
std::pair<mpz_class, mpz_class> quad_mul(const std::pair<mpz_class, mpz_class>& x,
                                         const std::pair<mpz_class, mpz_class>& y, long d) {
    return {x.first * y.first + x.second * y.second * d, x.first * y.second + x.second * y.first};
}

std::pair<mpz_class, mpz_class> quad_pow(std::pair<mpz_class, mpz_class> base, long e, long d) {
    std::pair<mpz_class, mpz_class> acc{1, 0};
    while (e > 0) {
        if (e & 1) acc = quad_mul(acc, base, d);
        base = quad_mul(base, base, d);
        e >>= 1;
    }
    return acc;
}

}  // namespace

std::optional<std::pair<mpz_class, mpz_class>> pth_power_in_quadratic(const mpz_class& a,
                                                                      const mpz_class& b, long d,
                                                                      long e) {
    if (e < 2 || d < 2) return std::nullopt;
    long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2) +
                                  mpz_sizeinbase(b.get_mpz_t(), 2));
    mpfr_prec_t wp = static_cast<mpfr_prec_t>(std::max(256L, 2 * bits + 128));

    BigFloat sd = BigFloat::from_si(d, wp).sqrt();
    BigFloat x = BigFloat::from_mpz(a, wp) + BigFloat::from_mpz(b, wp) * sd;
    if (x.sign() <= 0) return std::nullopt;
    BigFloat xbar = BigFloat::from_mpz(a, wp) - BigFloat::from_mpz(b, wp) * sd;
    BigFloat rho = x.root_ui(static_cast<unsigned long>(e));
    BigFloat sigma_abs = xbar.abs().root_ui(static_cast<unsigned long>(e));

    for (int sign : {+1, -1}) {
        BigFloat sigma = sign > 0 ? sigma_abs : -sigma_abs;
        mpz_class ca = ((rho + sigma) / 2).round_to_mpz();
        mpz_class cb = ((rho - sigma) / (sd * 2)).round_to_mpz();
        auto [ea, eb] = quad_pow({ca, cb}, e, d);
        if (ea == a && eb == b) return std::make_pair(ca, cb);
    }
    return std::nullopt;
}

std::optional<std::tuple<mpz_class, mpz_class, long>> quadratic_power_shape(const IntPolynomial& p) {
    long deg = p.degree();
    if (deg < 2 || deg % 2 != 0 || !p.monic()) return std::nullopt;
    long k = deg / 2;
    // coefficient of X^{2k-1} is -k u; constant is v^k
    mpz_class num = -p.coeffs[static_cast<std::size_t>(deg - 1)];
    if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(k))) return std::nullopt;
    mpz_class u = num / k;
    const mpz_class& c0 = p.constant();
    if (k % 2 == 0 && c0 < 0) return std::nullopt;
    mpz_class av = abs(c0), r;
    if (!mpz_root(r.get_mpz_t(), av.get_mpz_t(), static_cast<unsigned long>(k))) return std::nullopt;
    std::vector<mpz_class> candidates;
    if (k % 2 == 1) {
        candidates.push_back(c0 < 0 ? mpz_class(-r) : r);
    } else {
        candidates.push_back(r);
        candidates.push_back(-r);
    }
    for (const mpz_class& v : candidates) {
        IntPolynomial quad{{v, -u, mpz_class(1)}};
        if (quad.pow(k) == p) return std::make_tuple(u, v, k);
    }
    return std::nullopt;
}

std::string RadicalForm::str() const {
    std::string inner = a.get_str();
    if (b != 0) inner += (b > 0 ? " + " : " - ") + mpz_class(abs(b)).get_str() + "*sqrt(" +
                         std::to_string(d) + ")";
    if (root == 1) return inner;
    return "(" + inner + ")^(1/" + std::to_string(root) + ")";
}

std::optional<RadicalForm> simplify_radical(const BigComplex& x_value, const IntPolynomial& x_poly,
                                            long total_root, long d) {
    if (total_root < 1 || d < 2) return std::nullopt;
    // only positive real values have a radical presentation here
    if (x_value.re().sign() <= 0 ||
        x_value.im().abs().log2_abs() > x_value.re().abs().log2_abs() - 8.0)
        return std::nullopt;

    mpz_class ra, rb;  // radicand a + b sqrt(d)
    if (x_poly.degree() >= 1 && x_poly.monic()) {
        bool linear_power = true;  // (X - c)^k pattern
        mpz_class c;
        long k = x_poly.degree();
        mpz_class num = -x_poly.coeffs[static_cast<std::size_t>(k - 1)];
        if (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(k))) {
            c = num / k;
            IntPolynomial lin{{-c, mpz_class(1)}};
            linear_power = (lin.pow(k) == x_poly);
        } else {
            linear_power = false;
        }
        if (linear_power) {
            ra = c;
            rb = 0;
        } else {
            auto shape = quadratic_power_shape(x_poly);
            if (!shape) throw NotQuadraticPower();
            auto [u, v, kk] = *shape;
            // x = (u + w sqrt(d))/2 with w^2 d = u^2 - 4v
            mpz_class disc = u * u - 4 * v;
            if (disc < 0) throw NotQuadraticPower("complex quadratic roots");
            mpz_class wd = disc / d;
            if (disc % d != 0 || !mpz_perfect_square_p(wd.get_mpz_t())) return std::nullopt;
            mpz_class w;
            mpz_sqrt(w.get_mpz_t(), wd.get_mpz_t());
            // pick the root matching the numeric value
            mpfr_prec_t wp = std::max<mpfr_prec_t>(x_value.prec(), 256);
            BigFloat sd = BigFloat::from_si(d, wp).sqrt();
            BigFloat plus = (BigFloat::from_mpz(u, wp) + BigFloat::from_mpz(w, wp) * sd) / 2;
            BigFloat minus = (BigFloat::from_mpz(u, wp) - BigFloat::from_mpz(w, wp) * sd) / 2;
            if ((x_value.re() - minus).abs() < (x_value.re() - plus).abs()) w = -w;
            if (mpz_odd_p(u.get_mpz_t()) || mpz_odd_p(w.get_mpz_t()))
                return std::nullopt;  // no integral a + b sqrt(d) form
            ra = u / 2;
            rb = w / 2;
        }
    } else {
        throw NotQuadraticPower();
    }

    // the radicand itself must be a positive real; exact sign of a + b sqrt(d)
    auto radicand_positive = [&]() {
        if (ra >= 0 && rb >= 0) return ra != 0 || rb != 0;
        if (ra <= 0 && rb <= 0) return false;
        return rb < 0 ? ra * ra > rb * rb * d : rb * rb * d > ra * ra;
    };
    if (!radicand_positive()) return std::nullopt;

    // peel square and cube roots off the radicand while the index allows
    long k = total_root;
    bool progress = true;
    while (progress && k > 1) {
        progress = false;
        for (long p : {2L, 3L}) {
            if (k % p != 0) continue;
            auto root = pth_power_in_quadratic(ra, rb, d, p);
            if (root) {
                ra = root->first;
                rb = root->second;
                k /= p;
                progress = true;
                break;
            }
        }
    }
    return RadicalForm{ra, rb, d, k};
}

}  // namespace modunits
