#pragma once

#include <gmpxx.h>

#include "modunits/bigfloat.hpp"
#include "modunits/errors.hpp"

namespace modunits {

/// Arbitrary-precision complex number over BigFloat. Operations raise on
/// non-finite results instead of letting NaN/Inf propagate.
class BigComplex {
  public:
    explicit BigComplex(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}

    static BigComplex from_si(long x, mpfr_prec_t prec) {
        return {BigFloat::from_si(x, prec), BigFloat(prec)};
    }

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.norm2();
        if (n.is_zero()) throw Error("BigComplex: division by zero");
        return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
    }
    BigComplex operator-() const { return {-re_, -im_}; }
    friend BigComplex operator*(const BigComplex& a, const BigFloat& s) {
        return {a.re_ * s, a.im_ * s};
    }
    friend BigComplex operator*(const BigComplex& a, long s) { return {a.re_ * s, a.im_ * s}; }

    BigComplex conj() const { return {re_, -im_}; }
    BigComplex mul_2si(long k) const { return {re_.mul_2si(k), im_.mul_2si(k)}; }
    BigFloat norm2() const { return re_ * re_ + im_ * im_; }
    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
        return r;
    }

    BigComplex inverse() const {
        BigFloat n = norm2();
        if (n.is_zero()) throw Error("BigComplex: inverse of zero");
        return {re_ / n, -im_ / n};
    }

    // integer power by repeated squaring; negative exponents invert
    BigComplex pow_si(long e) const {
        if (e < 0) return inverse().pow_si(-e);
        BigComplex acc = from_si(1, prec());
        BigComplex base = *this;
        unsigned long u = static_cast<unsigned long>(e);
        while (u > 0) {
            if (u & 1) acc = acc * base;
            base = base * base;
            u >>= 1;
        }
        return acc;
    }

    /// e^{2 pi i w} for complex w.
    static BigComplex exp_2pi_i(const BigComplex& w) {
        mpfr_prec_t p = w.prec();
        BigFloat two_pi = BigFloat::pi(p).mul_2si(1);
        BigFloat ang = two_pi * w.re();
        BigFloat s(p), c(p);
        mpfr_sin_cos(s.get(), c.get(), ang.get(), MPFR_RNDN);
        BigFloat mag = (-(two_pi * w.im())).exp();
        return {mag * c, mag * s};
    }

    /// e^{2 pi i k} for exact rational k (a root of unity).
    static BigComplex unit_phase(const mpq_class& k, mpfr_prec_t prec) {
        BigFloat ang = BigFloat::pi(prec).mul_2si(1) * BigFloat::from_mpq(k, prec);
        BigFloat s(prec), c(prec);
        mpfr_sin_cos(s.get(), c.get(), ang.get(), MPFR_RNDN);
        return {c, s};
    }

    std::string str(int sig_digits = 0) const {
        return re_.str(sig_digits) + (im_.sign() < 0 ? " - " : " + ") + im_.abs().str(sig_digits) + "*i";
    }

  private:
    BigFloat re_, im_;
};

}  // namespace modunits
