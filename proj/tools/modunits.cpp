// Command-line front end: raw evaluators, the numeric identity suite,
// conjugate enumeration and the certification pipeline.
//
// Exit codes: 0 success, 2 usage error, 3 precision/certification failure,
// 4 identity violation.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "modunits/classfield.hpp"
#include "modunits/identities.hpp"
#include "modunits/numerics.hpp"
#include "modunits/pipeline.hpp"
#include "modunits/qseries.hpp"
#include "modunits/quadpoint.hpp"

using namespace modunits;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCertification = 3;
constexpr int kExitIdentity = 4;

struct GlobalOpts {
    long prec = 256;
    long guard = 32;
    std::uint64_t seed = 20260808;
    std::string out = "text";
};

SiegelIndex parse_index(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError("index must be 'p/q,p/q', got '" + text + "'");
    auto parse_q = [](const std::string& s) {
        try {
            mpq_class v(s);
            v.canonicalize();
            return v;
        } catch (const std::invalid_argument&) {
            throw UsageError("malformed rational '" + s + "'");
        }
    };
    return SiegelIndex(parse_q(text.substr(0, comma)), parse_q(text.substr(comma + 1)));
}

void print_value(const BigComplex& v, const BigComplex& tau, const EvalContext& ctx,
                 const std::string& out) {
    double err = eval_error_log2(tau, ctx);
    if (out == "json") {
        ordered_json j;
        j["re"] = v.re().str();
        j["im"] = v.im().str();
        j["err_bound_log2"] = err;
        j["prec_bits"] = ctx.prec_bits;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << v.str() << "\n";
        std::printf("error bound ~ 2^%.1f\n", err);
    }
}

int cmd_eval(const GlobalOpts& g, const std::string& func, const std::string& tau_text,
             const std::string& index_text, long m) {
    EvalContext ctx(g.prec, g.guard);
    BigComplex tau = parse_tau(tau_text, ctx);
    BigComplex v(ctx.working_prec());
    if (func == "eta") {
        v = eta(tau, ctx);
    } else if (func == "phi") {
        v = phi(tau, ctx);
    } else if (func == "delta") {
        v = delta(tau, ctx);
    } else if (func == "j") {
        v = jfun(tau, ctx);
    } else if (func == "siegel") {
        if (index_text.empty()) throw UsageError("eval siegel requires --index");
        v = siegel(parse_index(index_text), tau, ctx);
    } else if (func == "phi_ratio") {
        if (m < 1) throw UsageError("eval phi_ratio requires --m >= 1");
        BigFloat mf = BigFloat::from_si(m, ctx.working_prec());
        v = phi(tau * mf, ctx) / phi(tau, ctx) * mf.sqrt();
        if (m % 2 == 0) v = v.mul_2si(1);  // even m: 2 sqrt(m) phi(m tau)/phi(tau)
    } else {
        throw UsageError("unknown function '" + func + "'");
    }
    print_value(v, tau, ctx, g.out);
    return kExitOk;
}

int cmd_identity_check(const GlobalOpts& g, int samples, bool inject) {
    EvalContext ctx(g.prec, g.guard);
    std::printf("identity suite: prec=%ld guard=%ld seed=%llu samples=%d bound=2^%.0f\n", g.prec,
                g.guard, static_cast<unsigned long long>(g.seed), samples,
                -static_cast<double>(g.prec) + 16.0);
    auto reports = run_identity_suite(ctx, g.seed, samples, inject);
    reports.push_back(run_transformation_check(ctx, g.seed ^ 0x9e3779b97f4a7c15ull, samples));
    bool ok = true;
    for (const auto& r : reports) {
        std::printf("%-28s max residual 2^%-9.1f %s\n", r.name.c_str(), r.max_residual_log2,
                    r.pass ? "ok" : "VIOLATED");
        ok = ok && r.pass;
    }
    if (!ok) {
        std::fprintf(stderr, "identity violation detected\n");
        return kExitIdentity;
    }
    return kExitOk;
}

ordered_json product_json(const SiegelProduct& p) {
    ordered_json j;
    ordered_json factors = ordered_json::array();
    for (const auto& [r, e] : p.factors())
        factors.push_back({r.r1().get_str(), r.r2().get_str(), e});
    j["factors"] = factors;
    j["phase"] = p.phase().k().get_str();
    return j;
}

int cmd_conjugates(const GlobalOpts& g, long disc, long m) {
    EvalContext ctx(g.prec, g.guard);
    QuadField field = make_field(disc);
    SiegelProduct stable = phi_ratio_squared_product(m);
    stable = stable.pow(galois_stable_power(stable));
    ReciprocityGroup grp = enumerate_reciprocity(field, stable.level());
    auto values = conjugates(stable, field, ctx);
    if (g.out == "json") {
        ordered_json j;
        j["product"] = product_json(stable);
        j["level"] = stable.level();
        ordered_json list = ordered_json::array();
        for (std::size_t i = 0; i < values.size(); ++i) {
            ordered_json e;
            e["t"] = grp.coset_ts[i].first;
            e["s"] = grp.coset_ts[i].second;
            e["matrix"] = {{grp.cosets[i].a, grp.cosets[i].b}, {grp.cosets[i].c, grp.cosets[i].d}};
            e["product"] = product_json(act_gl2_on_power(stable, grp.cosets[i]));
            e["re"] = values[i].re().str();
            e["im"] = values[i].im().str();
            list.push_back(e);
        }
        j["conjugates"] = list;
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            std::printf("alpha_%zu (t=%ld,s=%ld) %s: %s\n", i + 1, grp.coset_ts[i].first,
                        grp.coset_ts[i].second, grp.cosets[i].str().c_str(),
                        values[i].str(30).c_str());
    }
    return kExitOk;
}

int cmd_certify(const GlobalOpts& g, long disc, long m) {
    EvalContext ctx(g.prec, g.guard);
    CertifyResult res = certify_phi_ratio(disc, m, ctx);
    if (g.out == "json")
        std::cout << certificate_json(res) << "\n";
    else
        std::cout << certificate_text(res);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular-unit evaluation and certification"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--prec", g.prec, "working precision in bits")->capture_default_str();
    app.add_option("--guard", g.guard, "guard bits")->capture_default_str();
    app.add_option("--seed", g.seed, "PRNG seed for randomized checks")->capture_default_str();
    app.add_option("--out", g.out, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* eval = app.add_subcommand("eval", "evaluate a modular function at a point");
    std::string func, tau_text, index_text;
    long eval_m = 0;
    eval->add_option("func", func, "eta|phi|delta|j|siegel|phi_ratio")->required();
    eval->add_option("--tau", tau_text, "point: quad:D:p,q,r or c:<re>,<im>")->required();
    eval->add_option("--index", index_text, "Siegel index p/q,p/q (for siegel)");
    eval->add_option("--m", eval_m, "multiplier (for phi_ratio)");

    auto* idc = app.add_subcommand("identity-check", "run the numeric identity suite");
    int samples = 20;
    bool inject = false;
    idc->add_option("--samples", samples, "sample points per identity")->capture_default_str();
    idc->add_flag("--inject-sign-error", inject, "negative control: corrupt one identity");

    auto* conj = app.add_subcommand("conjugates", "Galois conjugates of the stabilized phi-ratio power");
    long disc = 0, m = 0;
    conj->add_option("--disc", disc, "fundamental discriminant d_K < 0")->required();
    conj->add_option("--m", m, "odd multiplier >= 3")->required();

    auto* cert = app.add_subcommand("certify", "produce an algebraic certificate");
    cert->add_option("--disc", disc, "fundamental discriminant d_K < 0")->required();
    cert->add_option("--m", m, "odd multiplier >= 3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(eval)) return cmd_eval(g, func, tau_text, index_text, eval_m);
        if (app.got_subcommand(idc)) return cmd_identity_check(g, samples, inject);
        if (app.got_subcommand(conj)) return cmd_conjugates(g, disc, m);
        if (app.got_subcommand(cert)) return cmd_certify(g, disc, m);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const EvenOrSmallM& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const NotFundamentalDiscriminant& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const NonPositiveImaginaryPart& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const IdentityViolation& e) {
        std::fprintf(stderr, "identity violation: %s\n", e.what());
        return kExitIdentity;
    } catch (const CertificationFailure& e) {
        std::fprintf(stderr, "certification failure: %s\n", e.what());
        return kExitCertification;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCertification;
    }
    return kExitUsage;
}
