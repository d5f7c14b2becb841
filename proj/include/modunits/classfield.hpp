#pragma once

#include <utility>
#include <vector>

#include "modunits/quadpoint.hpp"
#include "modunits/siegel_algebra.hpp"

namespace modunits {

/**
 * Imaginary quadratic field of fundamental discriminant d_K, with the
 * standard ring-of-integers generator theta_K and the coefficients of
 * min(theta_K, Q) = X^2 + BX + C:
 *   d_K = 0 mod 4:  theta_K = sqrt(d_K)/2,      (B,C) = (0, -d_K/4)
 *   d_K = 1 mod 4:  theta_K = (-1+sqrt(d_K))/2, (B,C) = (1, (1-d_K)/4)
 */
struct QuadField {
    long d_K;
    long B, C;
    QuadraticPoint theta;
};

QuadField make_field(long d_K);

/**
 * The reciprocity matrix group W_{K,N} = { [[t-Bs, -Cs],[s, t]] } with
 * invertible determinant mod N, partitioned into cosets of the kernel of
 * the surjection onto Gal(K_(N)/H_K).  The kernel is {+-1, +-S} for
 * Q(sqrt(-1)), the six listed matrices for Q(sqrt(-3)), and {+-1} otherwise.
 * Representatives are the lexicographically smallest (t,s) of each coset,
 * listed in (t,s) order.
 */
struct ReciprocityGroup {
    QuadField field;
    long N = 0;
    std::vector<Mat2> cosets;                      // one representative per coset
    std::vector<std::pair<long, long>> coset_ts;   // the (t,s) of each representative
    std::vector<std::pair<long, long>> kernel_ts;  // kernel as (t,s) pairs mod N

    Mat2 kernel_matrix(std::size_t i) const;
};

ReciprocityGroup enumerate_reciprocity(const QuadField& field, long N);

/// Matrix of t + s*theta_K acting on the basis, i.e. [[t-Bs, -Cs],[s, t]] mod N.
Mat2 reciprocity_matrix(const QuadField& field, long t, long s, long N);

/// True iff the rational prime p splits in K (Kronecker symbol (d_K|p) = 1).
bool splits(long p, const QuadField& field);

/// Theorem hypothesis: m >= 3, odd, and every prime factor of m splits in K.
bool unit_theorem_hypothesis(long m, const QuadField& field);

/// Distinct prime factors of m > 1 in increasing order.
std::vector<long> prime_factors(long m);

/**
 * Galois conjugates of a stable product evaluated at theta_K: one value per
 * coset of W_{K,N}, N = level(p), in the deterministic coset order.  The
 * multiset is kept as-is (no deduplication).
 *
 * conjugates() evaluates cosets in parallel (OpenMP) when available;
 * conjugates_serial() is the reference implementation.  Both return
 * bit-identical results.
 */
std::vector<BigComplex> conjugates(const SiegelProduct& p, const QuadField& field,
                                   const EvalContext& ctx);
std::vector<BigComplex> conjugates_serial(const SiegelProduct& p, const QuadField& field,
                                          const EvalContext& ctx);

}  // namespace modunits
