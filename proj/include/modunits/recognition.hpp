#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "modunits/bigcomplex.hpp"
#include "modunits/context.hpp"

namespace modunits {

/// Integer polynomial, coefficients ascending by degree.
struct IntPolynomial {
    std::vector<mpz_class> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    bool monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    const mpz_class& constant() const { return coeffs.front(); }

    BigComplex eval(const BigComplex& x) const;
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial pow(long e) const;
    bool operator==(const IntPolynomial&) const = default;
    std::string str() const;
};

/**
 * Expands prod (X - x_k) in working precision and rounds to an integer
 * polynomial.  A coefficient is accepted when it is within 2^-(2 guard_bits)
 * of an integer of bit-size at most prec_bits - 2 guard_bits; the rounded
 * polynomial is re-verified at every root.  Raises CoefficientNotNearInteger
 * or ImaginaryResidue otherwise (the caller retries at higher precision).
 */
IntPolynomial build_polynomial(const std::vector<BigComplex>& conjugates, const EvalContext& ctx);

/// True iff p is monic with integer coefficients.
bool certify_algebraic_integer(const IntPolynomial& p);

/**
 * Exact divisibility test: a root x of monic p divides n iff n/x is an
 * algebraic integer, iff a_0 | a_j n^j for j = 1..d (a_d = 1).
 */
bool certify_divides(const IntPolynomial& p, const mpz_class& n);

/// True iff |constant term| = 1, i.e. every root is a unit.
bool certify_unit(const IntPolynomial& p);

/**
 * Searches for (a', b') with (a' + b' sqrt(d))^e = a + b sqrt(d), by taking
 * the numeric e-th root together with its conjugate candidate, projecting
 * onto {1, sqrt(d)}, rounding and verifying by exact expansion.
 */
std::optional<std::pair<mpz_class, mpz_class>> pth_power_in_quadratic(const mpz_class& a,
                                                                      const mpz_class& b, long d,
                                                                      long e);

/// value = (a + b sqrt(d))^{1/root}
struct RadicalForm {
    mpz_class a, b;
    long d = 0;
    long root = 1;
    bool operator==(const RadicalForm&) const = default;
    std::string str() const;
};

/**
 * Given x with char polynomial (X^2 - uX + v)^k (or (X - c)^k), writes x as
 * an element of Z[sqrt(d)] and repeatedly extracts exact square and cube
 * roots of the radicand while the root index admits them.  Returns the
 * simplified radical, the unsimplified radicand at index total_root if no
 * extraction succeeds, or nullopt when x has no integral representation
 * over {1, sqrt(d)}.  Raises NotQuadraticPower if the polynomial does not
 * have the power shape.
 */
std::optional<RadicalForm> simplify_radical(const BigComplex& x_value, const IntPolynomial& x_poly,
                                            long total_root, long d);

/// Detects p = (X^2 - uX + v)^k exactly; returns (u, v, k).
std::optional<std::tuple<mpz_class, mpz_class, long>> quadratic_power_shape(const IntPolynomial& p);

struct AlgebraicCertificate {
    BigComplex value;
    long power_taken = 1;
    IntPolynomial polynomial;
    bool is_algebraic_integer = false;
    std::optional<mpz_class> divides;
    bool is_unit = false;
    std::optional<RadicalForm> radical;
    long prec_bits = 0;
};

}  // namespace modunits
