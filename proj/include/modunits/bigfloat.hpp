#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <cmath>
#include <string>
#include <utility>

namespace modunits {

/**
 * Arbitrary-precision real number, RAII wrapper over mpfr_t.
 *
 * Every value carries its own precision; binary operations round to the
 * larger of the two operand precisions.  All rounding is to nearest.
 */
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_si(long x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat from_double(double x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat from_mpz(const mpz_class& x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from_mpq(const mpq_class& x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from_string(const std::string& s, mpfr_prec_t prec) {
        BigFloat r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
        return r;
    }
    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, long b) {
        BigFloat r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, long b) {
        BigFloat r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator+(const BigFloat& a, long b) {
        BigFloat r(a.prec());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, long b) {
        BigFloat r(a.prec());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(long a, const BigFloat& b) {
        BigFloat r(b.prec());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    BigFloat sqrt() const {
        BigFloat r(prec());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat exp() const {
        BigFloat r(prec());
        mpfr_exp(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat log() const {
        BigFloat r(prec());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    // value * 2^k, exact
    BigFloat mul_2si(long k) const {
        BigFloat r(prec());
        mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
        return r;
    }
    BigFloat root_ui(unsigned long k) const {
        BigFloat r(prec());
        mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
        return r;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp_si(long o) const { return mpfr_cmp_si(v_, o); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_finite() const { return mpfr_number_p(v_); }

    // nearest integer, exact
    mpz_class round_to_mpz() const {
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
        return z;
    }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // log2(|x|) as a double; very negative for 0
    double log2_abs() const {
        if (mpfr_zero_p(v_)) return -1e9;
        long e = static_cast<long>(mpfr_get_exp(v_));
        BigFloat m(64);
        mpfr_abs(m.v_, v_, MPFR_RNDN);
        mpfr_mul_2si(m.v_, m.v_, -e, MPFR_RNDN);
        return static_cast<double>(e) + std::log2(mpfr_get_d(m.v_, MPFR_RNDN));
    }

    std::string str(int sig_digits = 0) const {
        if (sig_digits <= 0)
            sig_digits = static_cast<int>(static_cast<double>(prec()) * 0.30103) + 2;
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", sig_digits - 1, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

  private:
    static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }
    mpfr_t v_;
};

}  // namespace modunits
