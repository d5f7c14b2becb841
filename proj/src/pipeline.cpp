#include "modunits/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "modunits/numerics.hpp"
#include "modunits/qseries.hpp"

namespace modunits {

namespace {

using ordered_json = nlohmann::ordered_json;

long squarefree_part(long m) {
    long d = 1;
    for (long p = 2; p * p <= m; ++p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e % 2 == 1) d *= p;
    }
    return d * m;
}

bool coefficients_real(const std::vector<BigComplex>& roots, const EvalContext& ctx) {
    // the elementary symmetric functions are real iff the multiset is closed
    // under conjugation; detect via the polynomial itself
    mpfr_prec_t wp = ctx.working_prec();
    std::vector<BigComplex> poly{BigComplex::from_si(1, wp)};
    for (const BigComplex& root : roots) {
        std::vector<BigComplex> next(poly.size() + 1, BigComplex(wp));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = next[k + 1] + poly[k];
            next[k] = next[k] - root * poly[k];
        }
        poly = std::move(next);
    }
    for (const BigComplex& c : poly) {
        double floor = std::max(0.0, c.re().abs().log2_abs());
        if (c.im().abs().log2_abs() > floor - 2.0 * static_cast<double>(ctx.guard_bits))
            return false;
    }
    return true;
}

std::string decimal(const BigFloat& x, long prec_bits) {
    int digits = static_cast<int>(static_cast<double>(prec_bits) * 0.30103) + 2;
    return x.str(digits);
}

}  // namespace

CertifyResult certify_phi_ratio(long d_K, long m, const EvalContext& base_ctx,
                                const CertifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    if (m < 3 || m % 2 == 0) throw UsageError("certify: m must be an odd integer >= 3");

    CertifyResult res;
    res.d_K = d_K;
    res.m = m;
    QuadField field = make_field(d_K);

    res.hypothesis.m_odd = (m % 2 == 1);
    for (long p : prime_factors(m)) res.hypothesis.prime_splits.emplace_back(p, splits(p, field));
    res.hypothesis.holds = unit_theorem_hypothesis(m, field);

    SiegelProduct squared = phi_ratio_squared_product(m);
    long e = galois_stable_power(squared);
    SiegelProduct stable = squared.pow(e);
    long power_taken = 2 * e;  // x = ratio^{2e}

    IntPolynomial poly;
    EvalContext ctx = base_ctx;
    bool done = false;
    std::string last_error;
    for (int attempt = 0; attempt <= opts.max_retries && !done; ++attempt) {
        if (attempt > 0) ctx = ctx.with_prec(ctx.prec_bits * 2);
        try {
            std::vector<BigComplex> conj = opts.parallel ? conjugates(stable, field, ctx)
                                                         : conjugates_serial(stable, field, ctx);
            res.coset_count = static_cast<long>(conj.size());
            res.conjugation_closed = false;
            if (!coefficients_real(conj, ctx)) {
                // close the multiset under complex conjugation: the conjugate
                // of a value of a level-N function at theta_K is again a
                // Galois conjugate of x over Q, and the closed product has
                // rational coefficients
                std::size_t n = conj.size();
                conj.reserve(2 * n);
                for (std::size_t i = 0; i < n; ++i) conj.push_back(conj[i].conj());
                res.conjugation_closed = true;
            }
            poly = build_polynomial(conj, ctx);
            done = true;
        } catch (const CoefficientNotNearInteger& err) {
            last_error = err.what();
        } catch (const ImaginaryResidue& err) {
            last_error = err.what();
        }
    }
    if (!done)
        throw CertificationFailure("certify: precision exhausted after " +
                                   std::to_string(opts.max_retries) + " retries (" + last_error +
                                   ")");

    AlgebraicCertificate& cert = res.certificate;
    cert.power_taken = power_taken;
    cert.polynomial = poly;
    cert.prec_bits = ctx.prec_bits;
    cert.value = eval_product(stable, to_complex(field.theta, ctx), ctx);
    cert.is_algebraic_integer = certify_algebraic_integer(poly);
    if (!cert.is_algebraic_integer)
        throw CertificationFailure("certify: reconstructed polynomial is not monic");

    // x = (sqrt(m) phi(m theta)/phi(theta))^{2e} divides (sqrt m)^{2e} = m^e
    mpz_class target;
    mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(e));
    if (!certify_divides(poly, target))
        throw CertificationFailure("certify: divisibility by m^e failed");
    cert.divides = target;

    cert.is_unit = certify_unit(poly);
    if (res.hypothesis.holds && !cert.is_unit)
        throw CertificationFailure("certify: unit hypothesis holds but the value is not a unit");

    try {
        cert.radical = simplify_radical(cert.value, poly, power_taken, squarefree_part(m));
    } catch (const NotQuadraticPower&) {
        cert.radical = std::nullopt;
    }

    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::string certificate_json(const CertifyResult& res, int indent) {
    const AlgebraicCertificate& cert = res.certificate;
    ordered_json j;
    j["value"]["re"] = decimal(cert.value.re(), cert.prec_bits);
    j["value"]["im"] = decimal(cert.value.im(), cert.prec_bits);
    j["power_taken"] = cert.power_taken;
    ordered_json mp = ordered_json::array();
    for (const mpz_class& c : cert.polynomial.coeffs) mp.push_back(c.get_str());
    j["minpoly"] = mp;
    j["is_algebraic_integer"] = cert.is_algebraic_integer;
    if (cert.divides)
        j["divides"] = cert.divides->get_str();
    else
        j["divides"] = nullptr;
    j["is_unit"] = cert.is_unit;
    if (cert.radical) {
        j["radical"]["a"] = cert.radical->a.get_str();
        j["radical"]["b"] = cert.radical->b.get_str();
        j["radical"]["d"] = cert.radical->d;
        j["radical"]["root"] = cert.radical->root;
    } else {
        j["radical"] = nullptr;
    }
    j["prec_bits"] = cert.prec_bits;

    j["hypothesis"]["m_odd"] = res.hypothesis.m_odd;
    ordered_json sp = ordered_json::object();
    for (const auto& [p, s] : res.hypothesis.prime_splits) sp[std::to_string(p)] = s;
    j["hypothesis"]["prime_splits"] = sp;
    j["hypothesis"]["holds"] = res.hypothesis.holds;
    j["disc"] = res.d_K;
    j["m"] = res.m;
    j["conjugates"] = res.coset_count;
    j["conjugation_closed"] = res.conjugation_closed;
    return j.dump(indent);
}

std::string certificate_text(const CertifyResult& res) {
    const AlgebraicCertificate& cert = res.certificate;
    std::ostringstream os;
    os << "x = (sqrt(" << res.m << ") phi(" << res.m << " theta)/phi(theta))^" << cert.power_taken
       << " over Q(sqrt(" << res.d_K << "))\n";
    os << "value             = " << cert.value.str(40) << "\n";
    os << "minimal poly      = " << cert.polynomial.str() << "\n";
    os << "algebraic integer = " << (cert.is_algebraic_integer ? "yes" : "no") << "\n";
    os << "divides           = " << (cert.divides ? cert.divides->get_str() : "-") << "\n";
    os << "unit              = " << (cert.is_unit ? "yes" : "no") << "\n";
    os << "radical           = " << (cert.radical ? cert.radical->str() : "-") << "\n";
    os << "hypothesis        = " << (res.hypothesis.holds ? "holds" : "fails");
    for (const auto& [p, s] : res.hypothesis.prime_splits)
        os << "  [" << p << (s ? " splits" : " inert/ramified") << "]";
    os << "\n";
    os << "prec_bits         = " << cert.prec_bits << "\n";
    return os.str();
}

}  // namespace modunits
