#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace smalldiv {

// Arbitrary-precision real backed by MPFR, round-to-nearest throughout.
// Binary operations carry the minimum of the operand precisions; unary
// operations keep the operand precision.
class BigFloat {
  public:
    static constexpr long kMinPrec = 53;

    explicit BigFloat(long prec = 53) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
    BigFloat(double x, long prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(long x, long prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(const std::string& dec, long prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_str(v_, dec.c_str(), 10, MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, kMinPrec); mpfr_swap(v_, o.v_); }
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

    long prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // Decimal rendering with enough digits to identify the value at its precision.
    std::string str(int digits = 0) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(minp(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(minp(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(minp(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(minp(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log10(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_log10(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r(minp(a, b));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat floor(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_floor(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

    static BigFloat pi(long prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    // 2^e at the given precision (exact).
    static BigFloat pow2(long e, long prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

  private:
    static long clamp(long p) { return p < kMinPrec ? kMinPrec : p; }
    static long minp(const BigFloat& a, const BigFloat& b) {
        long pa = mpfr_get_prec(a.v_), pb = mpfr_get_prec(b.v_);
        return pa < pb ? pa : pb;
    }
    mpfr_t v_;
};

// Complex value over BigFloat; component precision follows the same
// min-of-operands rule.
class BigComplex {
  public:
    explicit BigComplex(long prec = 53) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(double re, double im, long prec) : re_(re, prec), im_(im, prec) {}

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    BigFloat& re() { return re_; }
    BigFloat& im() { return im_; }
    long prec() const { return re_.prec() < im_.prec() ? re_.prec() : im_.prec(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

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
        BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    BigComplex operator-() const { return {-re_, -im_}; }
    BigComplex& operator+=(const BigComplex& b) {
        re_ += b.re_;
        im_ += b.im_;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& b) {
        re_ -= b.re_;
        im_ -= b.im_;
        return *this;
    }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend BigFloat abs(const BigComplex& a) { return hypot(a.re_, a.im_); }
    friend BigComplex conj(const BigComplex& a) { return {a.re_, -a.im_}; }

    // z^k by binary powering, k >= 0.
    friend BigComplex pow_ui(const BigComplex& z, unsigned long k) {
        BigComplex acc(1.0, 0.0, z.prec());
        BigComplex base = z;
        while (k > 0) {
            if (k & 1UL) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    // e^{2 pi i alpha}
    static BigComplex unit_angle(const BigFloat& alpha, long prec);
    static BigComplex from_double(double re, double im, long prec) { return {re, im, prec}; }

    std::string str(int digits = 0) const;

  private:
    BigFloat re_, im_;
};

}  // namespace smalldiv
