#include "modunits/siegel_algebra.hpp"

#include <numeric>
#include <sstream>

#include "modunits/qseries.hpp"

namespace modunits {

namespace {

bool is_integer(const mpq_class& x) { return x.get_den() == 1; }

// fractional part in [0,1)
mpq_class frac(const mpq_class& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    mpq_class r = x - fl;
    r.canonicalize();
    return r;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

SiegelIndex::SiegelIndex(mpq_class r1, mpq_class r2) : r1_(std::move(r1)), r2_(std::move(r2)) {
    r1_.canonicalize();
    r2_.canonicalize();
    if (is_integer(r1_) && is_integer(r2_)) throw IntegerIndex();
}

SiegelIndex::SiegelIndex(long n1, long d1, long n2, long d2)
    : SiegelIndex(mpq_class(n1, d1), mpq_class(n2, d2)) {}

long SiegelIndex::primitive_denominator() const {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), r1_.get_den().get_mpz_t(), r2_.get_den().get_mpz_t());
    return static_cast<long>(l.get_si());
}

bool SiegelIndex::composite_denominator() const {
    long n = primitive_denominator();
    int distinct = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ++distinct;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ++distinct;
    return distinct >= 2;
}

bool SiegelIndex::is_canonical() const {
    return r1_ >= 0 && r1_ < 1 && r2_ >= 0 && r2_ < 1;
}

std::string SiegelIndex::str() const {
    return "(" + r1_.get_str() + "," + r2_.get_str() + ")";
}

void Phase::normalize() {
    k_.canonicalize();
    k_ = frac(k_);
}

std::string Mat2::str() const {
    std::ostringstream os;
    os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
    return os.str();
}

std::pair<SiegelIndex, Phase> reduce_index(const SiegelIndex& r) {
    mpq_class f1 = frac(r.r1()), f2 = frac(r.r2());
    mpz_class s1(mpq_class(r.r1() - f1).get_num());  // integer shifts, r = r' + s
    mpz_class s2(mpq_class(r.r2() - f2).get_num());
    // g_{r'+s} = (-1)^{s1 s2 + s1 + s2} e^{-pi i (s1 r2' - s2 r1')} g_{r'}
    mpz_class sign = s1 * s2 + s1 + s2;
    mpq_class k = mpq_class(sign, 1) / 2 - (f2 * s1 - f1 * s2) / 2;
    k.canonicalize();
    return {SiegelIndex(f1, f2), Phase(k)};
}

std::pair<SiegelIndex, Phase> negate_index(const SiegelIndex& r) {
    auto [red, ph] = reduce_index(SiegelIndex(-r.r1(), -r.r2()));
    return {red, ph + Phase(mpq_class(1, 2))};
}

long primitive_denominator(const SiegelIndex& r) { return r.primitive_denominator(); }

int sl2_phase_exponent(const Mat2& gamma) {
    if (gamma.det() != 1) throw NotUnimodular("sl2_phase_exponent: det != 1");
    // peel T^n and S factors off the right; each S contributes zeta_12^9,
    // T^n contributes zeta_12^n
    long long a = gamma.a, b = gamma.b, c = gamma.c, d = gamma.d;
    long long k = 0;
    while (c != 0) {
        // nearest integer to d/c keeps |d - n c| <= |c|/2, so |c| strictly shrinks
        long long n = static_cast<long long>(std::llround(static_cast<double>(d) / static_cast<double>(c)));
        b -= n * a;
        d -= n * c;
        k += n;
        long long na = -b, nb = a, nc = -d, nd = c;  // right-multiply by S^{-1}
        a = na;
        b = nb;
        c = nc;
        d = nd;
        k += 9;
    }
    if (a == 1) {
        k += b;  // gamma_rest = T^b
    } else {
        k += 18 - b;  // gamma_rest = -T^{-b} = S^2 T^{-b}
    }
    return static_cast<int>(((k % 12) + 12) % 12);
}

std::pair<SiegelIndex, Phase> act_sl2(const SiegelIndex& r, const Mat2& gamma) {
    if (gamma.det() != 1) throw NotUnimodular("act_sl2: det != 1");
    int eps = sl2_phase_exponent(gamma);
    mpq_class n1 = r.r1() * static_cast<long>(gamma.a) + r.r2() * static_cast<long>(gamma.c);
    mpq_class n2 = r.r1() * static_cast<long>(gamma.b) + r.r2() * static_cast<long>(gamma.d);
    auto [red, ph] = reduce_index(SiegelIndex(n1, n2));
    return {red, ph + Phase(mpq_class(eps, 12))};
}

mpq_class order_at_infinity(const SiegelIndex& r) {
    mpq_class v = bernoulli2(frac(r.r1())) / 2;
    v.canonicalize();
    return v;
}

void SiegelProduct::mul(const SiegelIndex& r, long exponent) {
    if (exponent == 0) return;
    auto [red, ph] = reduce_index(r);
    Phase scaled = ph;
    scaled *= exponent;
    phase_ += scaled;
    auto it = factors_.find(red);
    if (it == factors_.end()) {
        factors_.emplace(red, exponent);
    } else {
        it->second += exponent;
        if (it->second == 0) factors_.erase(it);
    }
}

long SiegelProduct::level() const {
    long l = 1;
    for (const auto& [r, e] : factors_) l = lcm_long(l, r.primitive_denominator());
    return l;
}

SiegelProduct SiegelProduct::pow(long e) const {
    SiegelProduct q;
    for (const auto& [r, ex] : factors_) q.mul(r, ex * e);
    Phase ph = phase_;
    ph *= e;
    q.mul_phase(ph);
    return q;
}

std::string SiegelProduct::str() const {
    std::ostringstream os;
    if (!phase_.trivial()) os << "e(" << phase_.k().get_str() << ") ";
    bool first = true;
    for (const auto& [r, e] : factors_) {
        if (!first) os << " ";
        os << "g" << r.str() << "^" << e;
        first = false;
    }
    if (factors_.empty()) os << "1";
    return os.str();
}

namespace {

// exponent threshold of Prop-style stability for one factor
long stable_exponent_unit(long N_r) { return 12 * N_r / std::gcd(6L, N_r); }

}  // namespace

long galois_stable_power(const SiegelProduct& p) {
    long e = 1;
    for (const auto& [r, ex] : p.factors()) {
        long L = stable_exponent_unit(r.primitive_denominator());
        e = lcm_long(e, L / std::gcd(L, std::abs(ex)));
    }
    // phase^e must be trivial: denominator of the (reduced) phase divides e
    e = lcm_long(e, std::max(1L, p.phase().denominator()));
    return e;
}

SiegelProduct act_gl2_on_power(const SiegelProduct& p, const Mat2& alpha) {
    long N = p.level();
    Mat2 al = alpha.mod(N);
    if (std::gcd(static_cast<long>(((al.det() % N) + N) % N), N) != 1)
        throw NotInvertibleDeterminant("act_gl2_on_power: det(alpha) not invertible mod " +
                                       std::to_string(N));
    if (!p.phase().trivial())
        throw NotGaloisStable("act_gl2_on_power: product carries a nontrivial phase");

    SiegelProduct out;
    for (const auto& [r, ex] : p.factors()) {
        long L = stable_exponent_unit(r.primitive_denominator());
        if (ex % L != 0)
            throw NotGaloisStable("act_gl2_on_power: exponent " + std::to_string(ex) + " of g" +
                                  r.str() + " is not a multiple of " + std::to_string(L));
        mpq_class n1 = r.r1() * static_cast<long>(al.a) + r.r2() * static_cast<long>(al.c);
        mpq_class n2 = r.r1() * static_cast<long>(al.b) + r.r2() * static_cast<long>(al.d);
        out.mul(SiegelIndex(n1, n2), ex);
    }
    // reduction phases die on stable exponents: 12 N_r/gcd(6,N_r) times any
    // phase with denominator dividing 2 N_r is an integer
    if (!out.phase().trivial()) throw Error("act_gl2_on_power: phase should have cancelled");
    return out;
}

SiegelProduct phi_ratio_squared_product(long m) {
    if (m < 3 || m % 2 == 0) throw EvenOrSmallM();
    SiegelProduct p;
    for (long k = 1; k < m; ++k) {
        p.mul(SiegelIndex(mpq_class(0), mpq_class(k, m)), 1);
        p.mul(SiegelIndex(mpq_class(1, 2), mpq_class(1, 2) + mpq_class(k, m)), 2);
    }
    // sign (-1)^{(1-m)/2}
    if (((m - 1) / 2) % 2 == 1) p.mul_phase(Phase(mpq_class(1, 2)));
    return p;
}

BigComplex eval_product(const SiegelProduct& p, const BigComplex& tau, const EvalContext& ctx) {
    mpfr_prec_t wp = ctx.working_prec();
    BigComplex acc = p.phase().trivial() ? BigComplex::from_si(1, wp) : p.phase().value(wp);
    for (const auto& [r, e] : p.factors()) acc = acc * siegel(r, tau, ctx).pow_si(e);
    return acc;
}

}  // namespace modunits
