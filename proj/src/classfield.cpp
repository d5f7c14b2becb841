#include "modunits/classfield.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modunits {

namespace {

bool squarefree(long n) {
    n = std::abs(n);
    for (long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

long mod(long long v, long N) { return static_cast<long>(((v % N) + N) % N); }

}  // namespace

QuadField make_field(long d_K) {
    if (d_K >= 0) throw NotFundamentalDiscriminant("discriminant must be negative");
    long r = mod(d_K, 4);
    if (r == 1) {
        if (!squarefree(d_K)) throw NotFundamentalDiscriminant();
        // theta = (-1 + sqrt(d_K))/2, X^2 + X + (1 - d_K)/4
        return {d_K, 1, (1 - d_K) / 4, QuadraticPoint(d_K, -1, 1, 2)};
    }
    if (r == 0) {
        long q = d_K / 4;
        long qr = mod(q, 4);
        if (!squarefree(q) || (qr != 2 && qr != 3)) throw NotFundamentalDiscriminant();
        // theta = sqrt(d_K)/2, X^2 - d_K/4
        return {d_K, 0, -d_K / 4, QuadraticPoint(d_K, 0, 1, 2)};
    }
    throw NotFundamentalDiscriminant();
}

Mat2 reciprocity_matrix(const QuadField& field, long t, long s, long N) {
    return Mat2{mod(t - static_cast<long long>(field.B) * s, N), mod(-static_cast<long long>(field.C) * s, N),
                mod(s, N), mod(t, N)};
}

ReciprocityGroup enumerate_reciprocity(const QuadField& field, long N) {
    if (N < 2) throw UsageError("enumerate_reciprocity: N must be >= 2");
    ReciprocityGroup grp;
    grp.field = field;
    grp.N = N;

    // kernel of W_{K,N} -> Gal(K_(N)/H_K) as (t,s) pairs: units of O_K
    std::vector<std::pair<long, long>> kernel{{1, 0}, {mod(-1, N), 0}};
    if (field.d_K == -4) {
        kernel.push_back({0, 1});
        kernel.push_back({0, mod(-1, N)});
    } else if (field.d_K == -3) {
        kernel.push_back({0, 1});
        kernel.push_back({0, mod(-1, N)});
        kernel.push_back({1, 1});
        kernel.push_back({mod(-1, N), mod(-1, N)});
    }
    std::set<std::pair<long, long>> kset(kernel.begin(), kernel.end());
    grp.kernel_ts.assign(kset.begin(), kset.end());

    auto det_ok = [&](long t, long s) {
        long long det = static_cast<long long>(t) * t - static_cast<long long>(field.B) * t * s +
                        static_cast<long long>(field.C) * s * s;
        return std::gcd(mod(det, N), N) == 1;
    };
    // (t1 + s1 theta)(t2 + s2 theta) with theta^2 = -B theta - C
    auto compose = [&](std::pair<long, long> x, std::pair<long, long> y) {
        long long t = static_cast<long long>(x.first) * y.first -
                      static_cast<long long>(field.C) * x.second * y.second;
        long long s = static_cast<long long>(x.first) * y.second +
                      static_cast<long long>(x.second) * y.first -
                      static_cast<long long>(field.B) * x.second * y.second;
        return std::pair<long, long>{mod(t, N), mod(s, N)};
    };

    std::set<std::pair<long, long>> seen;
    for (long t = 0; t < N; ++t) {
        for (long s = 0; s < N; ++s) {
            if (!det_ok(t, s) || seen.count({t, s})) continue;
            std::set<std::pair<long, long>> orbit;
            for (const auto& k : grp.kernel_ts) orbit.insert(compose({t, s}, k));
            seen.insert(orbit.begin(), orbit.end());
            grp.coset_ts.push_back(*orbit.begin());  // lexicographically smallest member
        }
    }
    std::sort(grp.coset_ts.begin(), grp.coset_ts.end());
    grp.cosets.reserve(grp.coset_ts.size());
    for (const auto& [t, s] : grp.coset_ts) grp.cosets.push_back(reciprocity_matrix(field, t, s, N));
    return grp;
}

Mat2 ReciprocityGroup::kernel_matrix(std::size_t i) const {
    return reciprocity_matrix(field, kernel_ts[i].first, kernel_ts[i].second, N);
}

bool splits(long p, const QuadField& field) {
    if (p < 2) throw NotPrime(std::to_string(p) + " is not prime");
    mpz_class pz(p);
    if (!mpz_probab_prime_p(pz.get_mpz_t(), 40)) throw NotPrime(std::to_string(p) + " is not prime");
    mpz_class d(field.d_K);
    return mpz_kronecker(d.get_mpz_t(), pz.get_mpz_t()) == 1;
}

std::vector<long> prime_factors(long m) {
    std::vector<long> out;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

bool unit_theorem_hypothesis(long m, const QuadField& field) {
    if (m < 3 || m % 2 == 0) return false;
    for (long p : prime_factors(m))
        if (!splits(p, field)) return false;
    return true;
}

namespace {

std::vector<BigComplex> conjugates_impl(const SiegelProduct& p, const QuadField& field,
                                        const EvalContext& ctx, bool parallel) {
    if (galois_stable_power(p) != 1)
        throw NotGaloisStable("conjugates: product is not a Galois-stable power");
    long N = p.level();
    ReciprocityGroup grp = enumerate_reciprocity(field, N);
    BigComplex theta = to_complex(field.theta, ctx);

    long n = static_cast<long>(grp.cosets.size());
    std::vector<BigComplex> out(static_cast<std::size_t>(n), BigComplex(ctx.working_prec()));
    std::exception_ptr err;

    // results land in their coset slot, so the order is deterministic
    // regardless of scheduling
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long i = 0; i < n; ++i) {
        try {
            SiegelProduct q = act_gl2_on_power(p, grp.cosets[static_cast<std::size_t>(i)]);
            out[static_cast<std::size_t>(i)] = eval_product(q, theta, ctx);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace

std::vector<BigComplex> conjugates(const SiegelProduct& p, const QuadField& field,
                                   const EvalContext& ctx) {
    return conjugates_impl(p, field, ctx, true);
}

std::vector<BigComplex> conjugates_serial(const SiegelProduct& p, const QuadField& field,
                                          const EvalContext& ctx) {
    return conjugates_impl(p, field, ctx, false);
}

}  // namespace modunits
