#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "modunits/bigcomplex.hpp"
#include "modunits/context.hpp"
#include "modunits/errors.hpp"

namespace modunits {

/**
 * Index (r1, r2) of a Siegel function, a rational pair not in Z^2.
 * Indices are kept exactly; the canonical representative used inside
 * products has both components in [0,1).
 */
class SiegelIndex {
  public:
    SiegelIndex(mpq_class r1, mpq_class r2);
    SiegelIndex(long n1, long d1, long n2, long d2);

    const mpq_class& r1() const { return r1_; }
    const mpq_class& r2() const { return r2_; }

    /// Smallest N >= 2 with (N r1, N r2) in Z^2.
    long primitive_denominator() const;
    /// Whether the primitive denominator has at least two distinct prime factors.
    bool composite_denominator() const;
    bool is_canonical() const;

    bool operator==(const SiegelIndex& o) const { return r1_ == o.r1_ && r2_ == o.r2_; }
    bool operator<(const SiegelIndex& o) const {
        int c = cmp(r1_, o.r1_);
        return c != 0 ? c < 0 : cmp(r2_, o.r2_) < 0;
    }
    std::string str() const;

  private:
    mpq_class r1_, r2_;
};

/// Exact root of unity e^{2 pi i k}, k a rational kept in [0,1).
class Phase {
  public:
    Phase() : k_(0) {}
    explicit Phase(mpq_class k) : k_(std::move(k)) { normalize(); }

    const mpq_class& k() const { return k_; }
    bool trivial() const { return k_ == 0; }
    long denominator() const { return static_cast<long>(k_.get_den().get_si()); }

    Phase& operator+=(const Phase& o) {
        k_ += o.k_;
        normalize();
        return *this;
    }
    Phase& operator*=(long e) {
        k_ *= e;
        normalize();
        return *this;
    }
    friend Phase operator+(Phase a, const Phase& b) { return a += b; }

    BigComplex value(mpfr_prec_t prec) const { return BigComplex::unit_phase(k_, prec); }
    bool operator==(const Phase& o) const { return k_ == o.k_; }

  private:
    void normalize();
    mpq_class k_;
};

/// 2x2 integer matrix; SL2(Z) elements or GL2(Z/NZ) class representatives.
struct Mat2 {
    long long a = 1, b = 0, c = 0, d = 1;

    long long det() const { return a * d - b * c; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    Mat2 mod(long N) const {
        auto m = [N](long long v) { return ((v % N) + N) % N; };
        return {m(a), m(b), m(c), m(d)};
    }
    bool operator==(const Mat2&) const = default;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 S() { return {0, -1, 1, 0}; }
    static Mat2 T() { return {1, 1, 0, 1}; }
    std::string str() const;
};

/**
 * Reduces an index to its canonical representative in [0,1)^2.
 * Returns (r', p) with g_r = e^{2 pi i p} g_{r'}; the phase comes from the
 * integer-translation law and is exact.
 */
std::pair<SiegelIndex, Phase> reduce_index(const SiegelIndex& r);

/// g_{-r} = -g_r, followed by reduction of -r.
std::pair<SiegelIndex, Phase> negate_index(const SiegelIndex& r);

long primitive_denominator(const SiegelIndex& r);

/**
 * Action of gamma in SL2(Z) through the S/T generator laws:
 * g_r(gamma tau) = e^{2 pi i p} g_{r'}(tau) with r' = reduce(r gamma).
 * gamma is decomposed into S/T generators by Euclidean reduction of the
 * bottom row; each generator contributes an exact 12th root of unity.
 */
std::pair<SiegelIndex, Phase> act_sl2(const SiegelIndex& r, const Mat2& gamma);

/// zeta_12 exponent of the root of unity attached to gamma (the epsilon of
/// the SL2 transformation law), computed from the generator word.
int sl2_phase_exponent(const Mat2& gamma);

/// 1/2 B2(<r1>) with <.> the fractional part: the order of g_r at infinity.
mpq_class order_at_infinity(const SiegelIndex& r);

/**
 * Formal product prod g_{r_i}^{e_i} with an exact root-of-unity phase.
 * Indices are stored canonically; level = lcm of primitive denominators.
 */
class SiegelProduct {
  public:
    SiegelProduct() = default;

    /// Multiplies by g_r^{exponent} (r is reduced, the phase tracked).
    void mul(const SiegelIndex& r, long exponent);
    void mul_phase(const Phase& p) { phase_ += p; }

    const std::map<SiegelIndex, long>& factors() const { return factors_; }
    const Phase& phase() const { return phase_; }
    bool empty() const { return factors_.empty(); }
    long level() const;

    SiegelProduct pow(long e) const;
    std::string str() const;
    bool operator==(const SiegelProduct&) const = default;

  private:
    std::map<SiegelIndex, long> factors_;
    Phase phase_;
};

/**
 * Smallest e >= 1 such that p^e is fixed by the coefficient field and carries
 * the GL2(Z/N) action factor-by-factor: every exponent times e becomes a
 * multiple of 12 N_r / gcd(6, N_r) and the phase of p^e is trivial.
 */
long galois_stable_power(const SiegelProduct& p);

/**
 * GL2(Z/NZ) action on a Galois-stable product: each index maps to
 * (r1 a + r2 c, r1 b + r2 d) reduced mod 1.  Requires level(p) = N,
 * det(alpha) invertible mod N, and p stable (galois_stable_power = 1).
 */
SiegelProduct act_gl2_on_power(const SiegelProduct& p, const Mat2& alpha);

/**
 * The square of sqrt(m) phi(m tau)/phi(tau) as a formal Siegel product,
 * for odd m >= 3:
 *   prod_{k=1}^{m-1} g_{(0,k/m)} g_{(1/2,1/2+k/m)}^2
 * with the sign (-1)^{(1-m)/2} absorbed into the phase.  Level 2m.
 */
SiegelProduct phi_ratio_squared_product(long m);

/// Numeric value e^{2 pi i phase} prod g_r(tau)^{e_r}.
BigComplex eval_product(const SiegelProduct& p, const BigComplex& tau, const EvalContext& ctx);

}  // namespace modunits
