#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "modunits/classfield.hpp"
#include "modunits/errors.hpp"
#include "modunits/recognition.hpp"
#include "test_util.hpp"

using namespace modunits;
using testutil::rel_err_log2;

namespace {

// brute-force (t,s) enumeration used as an oracle against enumerate_reciprocity
long coset_count_oracle(const QuadField& f, long N) {
    auto mod = [N](long long v) { return static_cast<long>(((v % N) + N) % N); };
    std::vector<std::pair<long, long>> kernel{{1, 0}, {mod(-1), 0}};
    if (f.d_K == -4) {
        kernel.push_back({0, 1});
        kernel.push_back({0, mod(-1)});
    } else if (f.d_K == -3) {
        kernel.push_back({0, 1});
        kernel.push_back({0, mod(-1)});
        kernel.push_back({1, 1});
        kernel.push_back({mod(-1), mod(-1)});
    }
    auto mul = [&](std::pair<long, long> x, std::pair<long, long> y) {
        return std::pair<long, long>{mod(1LL * x.first * y.first - 1LL * f.C * x.second * y.second),
                                     mod(1LL * x.first * y.second + 1LL * x.second * y.first -
                                         1LL * f.B * x.second * y.second)};
    };
    std::set<std::set<std::pair<long, long>>> orbits;
    for (long t = 0; t < N; ++t)
        for (long s = 0; s < N; ++s) {
            long det = mod(1LL * t * t - 1LL * f.B * t * s + 1LL * f.C * s * s);
            if (std::gcd(det, N) != 1) continue;
            std::set<std::pair<long, long>> orbit;
            for (auto& k : kernel) orbit.insert(mul({t, s}, k));
            orbits.insert(orbit);
        }
    return static_cast<long>(orbits.size());
}

bool same_up_to_kernel(const ReciprocityGroup& grp, const Mat2& a, const Mat2& b) {
    Mat2 am = a.mod(grp.N);
    for (std::size_t i = 0; i < grp.kernel_ts.size(); ++i) {
        if ((b * grp.kernel_matrix(i)).mod(grp.N) == am) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("make_field canonical data") {
    QuadField f4 = make_field(-4);
    CHECK(f4.B == 0);
    CHECK(f4.C == 1);
    CHECK(f4.theta == QuadraticPoint(-4, 0, 1, 2));

    QuadField f3 = make_field(-3);
    CHECK(f3.B == 1);
    CHECK(f3.C == 1);
    CHECK(f3.theta == QuadraticPoint(-3, -1, 1, 2));

    QuadField f7 = make_field(-7);
    CHECK(f7.B == 1);
    CHECK(f7.C == 2);

    QuadField f8 = make_field(-8);
    CHECK(f8.B == 0);
    CHECK(f8.C == 2);

    CHECK_THROWS_AS(make_field(-12), NotFundamentalDiscriminant);  // -12/4 = -3 = 1 mod 4
    CHECK_THROWS_AS(make_field(-5), NotFundamentalDiscriminant);   // -5 = 3 mod 4
    CHECK_THROWS_AS(make_field(-9), NotFundamentalDiscriminant);   // not squarefree
    CHECK_THROWS_AS(make_field(5), NotFundamentalDiscriminant);
}

TEST_CASE("reciprocity group golden tests against the alpha tables") {
    QuadField f = make_field(-4);
    {
        ReciprocityGroup grp = enumerate_reciprocity(f, 6);
        REQUIRE(grp.cosets.size() == 4);
        std::vector<Mat2> paper{{1, 0, 0, 1}, {1, -2, 2, 1}, {1, -4, 4, 1}, {3, -2, 2, 3}};
        for (const Mat2& alpha : paper) {
            bool found = false;
            for (const Mat2& rep : grp.cosets) found = found || same_up_to_kernel(grp, alpha, rep);
            CHECK(found);
        }
    }
    {
        ReciprocityGroup grp = enumerate_reciprocity(f, 10);
        REQUIRE(grp.cosets.size() == 8);
        std::vector<Mat2> paper{{1, 0, 0, 1},  {1, -4, 4, 1}, {1, -6, 6, 1}, {2, -3, 3, 2},
                                {2, -5, 5, 2}, {2, -7, 7, 2}, {3, 0, 0, 3},  {4, -5, 5, 4}};
        for (const Mat2& alpha : paper) {
            bool found = false;
            for (const Mat2& rep : grp.cosets) found = found || same_up_to_kernel(grp, alpha, rep);
            CHECK(found);
        }
    }
}

TEST_CASE("coset counts match the brute-force oracle") {
    for (long d : {-3L, -4L, -7L, -8L}) {
        QuadField f = make_field(d);
        for (long N = 2; N <= 12; ++N) {
            ReciprocityGroup grp = enumerate_reciprocity(f, N);
            CHECK(static_cast<long>(grp.cosets.size()) == coset_count_oracle(f, N));
        }
    }
}

TEST_CASE("matrix shapes are closed under multiplication up to kernel") {
    for (long d : {-3L, -4L, -7L, -8L}) {
        QuadField f = make_field(d);
        for (long N = 2; N <= 12; ++N) {
            ReciprocityGroup grp = enumerate_reciprocity(f, N);
            for (const Mat2& x : grp.cosets)
                for (const Mat2& y : grp.cosets) {
                    Mat2 prod = (x * y).mod(N);
                    bool found = false;
                    for (const Mat2& rep : grp.cosets)
                        found = found || same_up_to_kernel(grp, prod, rep);
                    CHECK(found);
                }
        }
    }
}

TEST_CASE("splitting of rational primes") {
    QuadField f4 = make_field(-4);
    CHECK(splits(5, f4));
    CHECK_FALSE(splits(3, f4));
    CHECK(splits(2, make_field(-7)));  // x^2 + xy + 2y^2 = 2 at (0,1)
    CHECK_THROWS_AS(splits(15, f4), NotPrime);
    CHECK_THROWS_AS(splits(1, f4), NotPrime);
}

TEST_CASE("unit theorem hypothesis") {
    QuadField f4 = make_field(-4);
    CHECK_FALSE(unit_theorem_hypothesis(15, f4));  // 3 does not split
    CHECK(unit_theorem_hypothesis(5, f4));
    CHECK(unit_theorem_hypothesis(25, f4));
    CHECK_FALSE(unit_theorem_hypothesis(3, f4));
    CHECK_FALSE(unit_theorem_hypothesis(10, f4));  // even
    CHECK_FALSE(unit_theorem_hypothesis(1, f4));
}

TEST_CASE("conjugates of the Example 1 product") {
    EvalContext ctx(256);
    QuadField f = make_field(-4);
    SiegelProduct p = phi_ratio_squared_product(3).pow(12);
    auto vals = conjugates(p, f, ctx);
    REQUIRE(vals.size() == 4);

    // all real within 2^{-prec+16}
    for (const auto& v : vals)
        CHECK(v.im().abs().log2_abs() - std::max(0.0, v.re().abs().log2_abs()) < -240);

    // symmetric functions are the coefficients of (X^2 - 72954 X + 729)^2
    IntPolynomial poly = build_polynomial(vals, ctx);
    IntPolynomial quad{{mpz_class(729), mpz_class(-72954), mpz_class(1)}};
    CHECK(poly == quad.pow(2));

    // serial and parallel evaluation agree bit for bit
    auto vals2 = conjugates_serial(p, f, ctx);
    REQUIRE(vals2.size() == vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        CHECK(vals[i].re() == vals2[i].re());
        CHECK(vals[i].im() == vals2[i].im());
    }
}

TEST_CASE("conjugates of the Example 2 product") {
    EvalContext ctx(1024);
    QuadField f = make_field(-4);
    SiegelProduct p = phi_ratio_squared_product(5).pow(60);
    auto vals = conjugates(p, f, ctx);
    REQUIRE(vals.size() == 8);
    for (const auto& v : vals)
        CHECK(v.im().abs().log2_abs() - std::max(0.0, v.re().abs().log2_abs()) < -1000);

    // paper's value equalities: x1 = x5 = x7 = x8 and x3 = x6, as multisets of
    // magnitudes: four values equal x and four equal 1/x
    long big = 0, small = 0;
    for (const auto& v : vals) {
        if (v.re().log2_abs() > 100) ++big;
        if (v.re().log2_abs() < -100) ++small;
    }
    CHECK(big == 4);
    CHECK(small == 4);
}

TEST_CASE("kernel acts trivially on values at theta_K") {
    EvalContext ctx(192);
    QuadField f = make_field(-4);
    SiegelProduct p = phi_ratio_squared_product(3).pow(12);
    ReciprocityGroup grp = enumerate_reciprocity(f, p.level());
    BigComplex theta = to_complex(f.theta, ctx);

    auto direct = conjugates(p, f, ctx);
    for (std::size_t ki = 0; ki < grp.kernel_ts.size(); ++ki) {
        Mat2 k = grp.kernel_matrix(ki);
        for (std::size_t ci = 0; ci < grp.cosets.size(); ++ci) {
            Mat2 twisted = (grp.cosets[ci] * k).mod(grp.N);
            BigComplex v = eval_product(act_gl2_on_power(p, twisted), theta, ctx);
            CHECK(rel_err_log2(v, direct[ci]) < -170);
        }
    }
}

TEST_CASE("conjugates requires a stable power") {
    EvalContext ctx(128);
    QuadField f = make_field(-4);
    CHECK_THROWS_AS(conjugates(phi_ratio_squared_product(3), f, ctx), NotGaloisStable);
}

TEST_CASE("trivial reciprocity group gives a singleton conjugate list") {
    // Q(sqrt(-7)) at N = 2 has a single coset, so the only conjugate is the
    // value itself
    EvalContext ctx(192);
    QuadField f = make_field(-7);
    REQUIRE(enumerate_reciprocity(f, 2).cosets.size() == 1);
    SiegelProduct p;
    p.mul(SiegelIndex(1, 2, 1, 2), 12);  // level 2, stable power
    REQUIRE(galois_stable_power(p) == 1);
    auto vals = conjugates(p, f, ctx);
    REQUIRE(vals.size() == 1);
    BigComplex direct = eval_product(p, to_complex(f.theta, ctx), ctx);
    CHECK(rel_err_log2(vals[0], direct) < -180);
}
