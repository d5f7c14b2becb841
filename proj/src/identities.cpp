#include "modunits/identities.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "modunits/numerics.hpp"
#include "modunits/qseries.hpp"
#include "modunits/siegel_algebra.hpp"

namespace modunits {

namespace {

double residual_log2(const BigComplex& lhs, const BigComplex& rhs) {
    double scale = std::max({0.0, lhs.abs().log2_abs(), rhs.abs().log2_abs()});
    return (lhs - rhs).abs().log2_abs() - scale;
}

BigComplex random_tau(std::mt19937_64& rng, mpfr_prec_t wp) {
    std::uniform_real_distribution<double> ure(-0.5, 0.5), uim(0.5, 3.0);
    return {BigFloat::from_double(ure(rng), wp), BigFloat::from_double(uim(rng), wp)};
}

struct Checker {
    const EvalContext& ctx;
    std::vector<IdentityReport>& out;
    double bound;

    void run(const std::string& name, int samples, std::uint64_t seed,
             const std::function<double(const BigComplex&)>& residual) {
        IdentityReport rep;
        rep.name = name;
        rep.samples = samples;
        rep.bound_log2 = bound;
        std::mt19937_64 rng(seed);
        std::vector<BigComplex> taus;
        taus.reserve(static_cast<std::size_t>(samples));
        for (int i = 0; i < samples; ++i) taus.push_back(random_tau(rng, ctx.working_prec()));
        std::vector<double> res(static_cast<std::size_t>(samples), -1e9);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < samples; ++i)
            res[static_cast<std::size_t>(i)] = residual(taus[static_cast<std::size_t>(i)]);
        rep.max_residual_log2 = *std::max_element(res.begin(), res.end());
        rep.pass = rep.max_residual_log2 < bound;
        out.push_back(std::move(rep));
    }
};

}  // namespace

std::vector<IdentityReport> run_identity_suite(const EvalContext& ctx, std::uint64_t seed,
                                               int samples, bool inject_sign_error) {
    std::vector<IdentityReport> reports;
    double bound = -static_cast<double>(ctx.prec_bits) + 16.0;
    Checker chk{ctx, reports, bound};
    mpfr_prec_t wp = ctx.working_prec();
    const SiegelIndex half_half(1, 2, 1, 2);

    // phi(tau) = -(1/sqrt(2 pi)) eta(tau) g_{(1/2,1/2)}(tau)
    chk.run("phiexpression(i)", samples, seed ^ 0x1, [&](const BigComplex& tau) {
        BigComplex lhs = phi(tau, ctx);
        BigFloat inv = BigFloat::from_si(1, wp) / (BigFloat::pi(wp).mul_2si(1)).sqrt();
        BigComplex rhs = -(eta(tau, ctx) * siegel(half_half, tau, ctx)) * inv;
        return residual_log2(lhs, rhs);
    });

    // g_{(0,1/2)} g_{(1/2,0)} g_{(1/2,1/2)} = 2 e^{pi i/4}
    chk.run("phiexpression(ii)", samples, seed ^ 0x2, [&](const BigComplex& tau) {
        BigComplex lhs = siegel(SiegelIndex(0, 1, 1, 2), tau, ctx) *
                         siegel(SiegelIndex(1, 2, 0, 1), tau, ctx) * siegel(half_half, tau, ctx);
        BigComplex rhs = BigComplex::unit_phase(mpq_class(1, 8), wp).mul_2si(1);
        if (inject_sign_error) rhs = -rhs;
        return residual_log2(lhs, rhs);
    });

    // g_{(1/2,1/2)}(m tau)/g_{(1/2,1/2)}(tau) = (-1)^{(m-1)/2} prod_k g_{(1/2,1/2+k/m)}(tau)
    for (long m : {3L, 5L, 7L}) {
        chk.run("phiexpression(iii) m=" + std::to_string(m), samples, seed ^ (0x30 + m),
                [&, m](const BigComplex& tau) {
                    BigComplex lhs =
                        siegel(half_half, tau * BigFloat::from_si(m, wp), ctx) /
                        siegel(half_half, tau, ctx);
                    BigComplex rhs = BigComplex::from_si(((m - 1) / 2) % 2 ? -1 : 1, wp);
                    for (long k = 1; k < m; ++k)
                        rhs = rhs *
                              siegel(SiegelIndex(mpq_class(1, 2), mpq_class(1, 2) + mpq_class(k, m)),
                                     tau, ctx);
                    return residual_log2(lhs, rhs);
                });
    }

    // prod_{(a,b) != (0,0)} g_{(a/m,b/m)}^{12m} = m^{12m}
    for (long m : {2L, 3L}) {
        chk.run("morerelation(i) m=" + std::to_string(m), samples, seed ^ (0x40 + m),
                [&, m](const BigComplex& tau) {
                    BigComplex lhs = BigComplex::from_si(1, wp);
                    for (long a = 0; a < m; ++a)
                        for (long b = 0; b < m; ++b) {
                            if (a == 0 && b == 0) continue;
                            lhs = lhs * siegel(SiegelIndex(a, m, b, m), tau, ctx).pow_si(12 * m);
                        }
                    BigComplex rhs = BigComplex::from_si(m, wp).pow_si(12 * m);
                    return residual_log2(lhs, rhs);
                });
    }

    // prod_k g_{(0,k/m)} = i^{m-1} (sqrt(m) eta(m tau)/eta(tau))^2
    for (long m = 2; m <= 7; ++m) {
        chk.run("morerelation(ii) m=" + std::to_string(m), samples, seed ^ (0x50 + m),
                [&, m](const BigComplex& tau) {
                    BigComplex lhs = BigComplex::from_si(1, wp);
                    for (long k = 1; k < m; ++k)
                        lhs = lhs * siegel(SiegelIndex(0, 1, k, m), tau, ctx);
                    BigComplex ratio = eta(tau * BigFloat::from_si(m, wp), ctx) / eta(tau, ctx);
                    BigComplex rhs = ratio * ratio * BigFloat::from_si(m, wp);
                    rhs = rhs * BigComplex::unit_phase(mpq_class(m - 1, 4), wp);  // i^{m-1}
                    return residual_log2(lhs, rhs);
                });
    }

    return reports;
}

IdentityReport run_transformation_check(const EvalContext& ctx, std::uint64_t seed, int pairs) {
    IdentityReport rep;
    rep.name = "sl2 transformation law";
    rep.samples = pairs;
    rep.bound_log2 = -static_cast<double>(ctx.prec_bits) + 16.0;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> entry(-20, 20);
    std::uniform_int_distribution<long> den(2, 12);
    mpfr_prec_t wp = ctx.working_prec();

    struct Case {
        SiegelIndex r;
        Mat2 g;
        BigComplex tau;
    };
    std::vector<Case> cases;
    cases.reserve(static_cast<std::size_t>(pairs));
    while (cases.size() < static_cast<std::size_t>(pairs)) {
        // random SL2(Z): complete a random coprime bottom row (c,d)
        long c = entry(rng), d = entry(rng);
        if (std::gcd(std::abs(c), std::abs(d)) != 1) continue;
        long a = 0, b = 0;  // solve a d - b c = 1
        {
            long x = 0, y = 0;
            long g = [&] {
                long r0 = d, r1 = c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
                while (r1 != 0) {
                    long q = r0 / r1;
                    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
                    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
                    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
                }
                x = s0;
                y = t0;
                return r0;
            }();
            if (g != 1 && g != -1) continue;
            a = g == 1 ? x : -x;
            b = g == 1 ? -y : y;
        }
        Mat2 gm{a, b, c, d};
        if (gm.det() != 1) continue;
        long d1 = den(rng), d2 = den(rng);
        std::uniform_int_distribution<long> num1(0, d1 - 1), num2(0, d2 - 1);
        long n1 = num1(rng), n2 = num2(rng);
        if (n1 == 0 && n2 == 0) continue;  // index would lie in Z^2
        cases.push_back({SiegelIndex(n1, d1, n2, d2), gm,
                         {BigFloat::from_double(std::uniform_real_distribution<double>(-0.5, 0.5)(rng), wp),
                          BigFloat::from_double(std::uniform_real_distribution<double>(0.5, 3.0)(rng), wp)}});
    }

    std::vector<double> res(cases.size(), -1e9);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(cases.size()); ++i) {
        const Case& cs = cases[static_cast<std::size_t>(i)];
        BigComplex num = cs.tau * BigFloat::from_si(cs.g.a, wp) + BigComplex::from_si(cs.g.b, wp);
        BigComplex denm = cs.tau * BigFloat::from_si(cs.g.c, wp) + BigComplex::from_si(cs.g.d, wp);
        BigComplex gtau = num / denm;
        BigComplex lhs = siegel(cs.r, gtau, ctx);
        auto [rp, ph] = act_sl2(cs.r, cs.g);
        BigComplex rhs = ph.value(wp) * siegel(rp, cs.tau, ctx);
        res[static_cast<std::size_t>(i)] = residual_log2(lhs, rhs);
    }
    rep.max_residual_log2 = res.empty() ? -1e9 : *std::max_element(res.begin(), res.end());
    rep.pass = rep.max_residual_log2 < rep.bound_log2;
    return rep;
}

bool all_pass(const std::vector<IdentityReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

}  // namespace modunits
