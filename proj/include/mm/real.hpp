// Arbitrary-precision real/complex arithmetic on top of MPFR.
//
// Every BigReal carries its own precision in bits; binary operations round
// at the larger of the two operand precisions. Values are immutable after
// construction in the sense that no shared state exists (deep copies).

#ifndef MM_REAL_HPP
#define MM_REAL_HPP

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace mm {

class BigReal {
public:
    static constexpr long kDefaultPrec = 256;

    BigReal() { mpfr_init2(v_, kDefaultPrec); mpfr_set_zero(v_, 1); }
    explicit BigReal(long prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigReal(double x, long prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigReal(long x, long prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigReal(const std::string& s, long prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigReal: unparsable literal: " + s);
    }

    BigReal(const BigReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigReal() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    BigReal with_prec(long p) const {
        BigReal r(p); mpfr_set(r.v_, v_, MPFR_RNDN); return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    std::string str(int digits = 0) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sign() const { return mpfr_sgn(v_); }

    static long join(const BigReal& a, const BigReal& b) {
        return std::max(a.prec(), b.prec());
    }

#define MM_BINOP(op, fn)                                             \
    friend BigReal operator op(const BigReal& a, const BigReal& b) { \
        BigReal r(join(a, b));                                       \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                             \
        return r;                                                    \
    }
    MM_BINOP(+, mpfr_add)
    MM_BINOP(-, mpfr_sub)
    MM_BINOP(*, mpfr_mul)
    MM_BINOP(/, mpfr_div)
#undef MM_BINOP

    friend BigReal operator-(const BigReal& a) {
        BigReal r(a.prec()); mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r;
    }
    BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
    BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
    BigReal& operator*=(const BigReal& o) { return *this = *this * o; }
    BigReal& operator/=(const BigReal& o) { return *this = *this / o; }

    friend BigReal operator*(const BigReal& a, long b) {
        BigReal r(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }
    friend BigReal operator/(const BigReal& a, long b) {
        BigReal r(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r;
    }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

#define MM_UNFN(name, fn)                          \
    friend BigReal name(const BigReal& a) {        \
        BigReal r(a.prec());                       \
        fn(r.v_, a.v_, MPFR_RNDN);                 \
        return r;                                  \
    }
    MM_UNFN(sqrt, mpfr_sqrt)
    MM_UNFN(exp, mpfr_exp)
    MM_UNFN(log, mpfr_log)
    MM_UNFN(sin, mpfr_sin)
    MM_UNFN(cos, mpfr_cos)
    MM_UNFN(tan, mpfr_tan)
    MM_UNFN(atan, mpfr_atan)
    MM_UNFN(acos, mpfr_acos)
    MM_UNFN(sinh, mpfr_sinh)
    MM_UNFN(cosh, mpfr_cosh)
    MM_UNFN(tanh, mpfr_tanh)
    MM_UNFN(abs, mpfr_abs)
    MM_UNFN(floor_r, mpfr_rint_floor)
    MM_UNFN(round_r, mpfr_rint_round)
#undef MM_UNFN

    friend BigReal atan2(const BigReal& y, const BigReal& x) {
        BigReal r(join(y, x)); mpfr_atan2(r.v_, y.raw(), x.raw(), MPFR_RNDN); return r;
    }
    friend BigReal pow(const BigReal& a, long n) {
        BigReal r(a.prec()); mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN); return r;
    }
    friend BigReal hypot(const BigReal& a, const BigReal& b) {
        BigReal r(join(a, b)); mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }

    static BigReal pi(long prec) {
        BigReal r(prec); mpfr_const_pi(r.raw(), MPFR_RNDN); return r;
    }
    // 2^e at the given precision.
    static BigReal pow2(long e, long prec) {
        BigReal r(prec); mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN); return r;
    }

private:
    mpfr_t v_;
};

struct BigComplex {
    BigReal re, im;

    BigComplex() = default;
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, long prec) : re(r, prec), im(i, prec) {}
    explicit BigComplex(const BigReal& r) : re(r), im(BigReal(0.0, r.prec())) {}

    long prec() const { return std::max(re.prec(), im.prec()); }
    BigComplex with_prec(long p) const { return {re.with_prec(p), im.with_prec(p)}; }

    static BigComplex zero(long prec) { return {BigReal(0.0, prec), BigReal(0.0, prec)}; }
    static BigComplex one(long prec) { return {BigReal(1.0, prec), BigReal(0.0, prec)}; }
    static BigComplex i(long prec) { return {BigReal(0.0, prec), BigReal(1.0, prec)}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigComplex& a, const BigReal& s) {
        return {a.re * s, a.im * s};
    }
    friend BigComplex operator*(const BigReal& s, const BigComplex& a) { return a * s; }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend BigComplex operator/(const BigComplex& a, const BigReal& s) {
        return {a.re / s, a.im / s};
    }
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
    BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }

    friend BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
    friend BigReal norm(const BigComplex& a) { return a.re * a.re + a.im * a.im; }
    friend BigReal abs(const BigComplex& a) { return hypot(a.re, a.im); }
    friend BigReal arg(const BigComplex& a) { return atan2(a.im, a.re); }

    friend BigComplex exp(const BigComplex& a) {
        BigReal m = exp(a.re);
        return {m * cos(a.im), m * sin(a.im)};
    }
    friend BigComplex log(const BigComplex& a) { return {log(abs(a)), arg(a)}; }
    // Principal branch.
    friend BigComplex sqrt(const BigComplex& a);
    friend BigComplex pow(const BigComplex& a, long n);
    friend BigComplex inv(const BigComplex& a) {
        BigReal d = norm(a);
        return {a.re / d, -a.im / d};
    }

    std::string str(int digits = 0) const;
};

// exp(2*pi*i*tau / den) at the precision of tau.
BigComplex exp2pii(const BigComplex& tau, long den = 1);

}  // namespace mm

#endif
