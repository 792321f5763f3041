#include "mm/real.hpp"

#include <cstdio>
#include <vector>

namespace mm {

std::string BigReal::str(int digits) const {
    if (digits <= 0) digits = static_cast<int>(prec() * 0.30103) + 2;
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

std::string BigComplex::str(int digits) const {
    if (im.is_zero()) return re.str(digits);
    std::string s = re.str(digits);
    if (!im.is_negative()) s += "+";
    return s + im.str(digits) + "i";
}

BigComplex sqrt(const BigComplex& a) {
    long p = a.prec();
    if (a.im.is_zero()) {
        if (!a.re.is_negative()) return BigComplex(sqrt(a.re));
        return {BigReal(0.0, p), sqrt(-a.re)};
    }
    // w = sqrt((|a|+re)/2), im/(2w); stable for re >= 0, else use conjugate form
    BigReal m = abs(a);
    if (!a.re.is_negative()) {
        BigReal w = sqrt((m + a.re) / 2);
        return {w, a.im / (w * 2)};
    }
    BigReal w = sqrt((m - a.re) / 2);
    if (a.im.is_negative()) w = -w;
    return {a.im / (w * 2), w};
}

BigComplex pow(const BigComplex& a, long n) {
    long p = a.prec();
    if (n == 0) return BigComplex::one(p);
    bool inv_flag = n < 0;
    unsigned long e = inv_flag ? -static_cast<unsigned long>(n) : n;
    BigComplex base = a, acc = BigComplex::one(p);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return inv_flag ? inv(acc) : acc;
}

BigComplex exp2pii(const BigComplex& tau, long den) {
    long p = tau.prec();
    BigReal two_pi = BigReal::pi(p) * 2;
    return exp(BigComplex{-two_pi * tau.im / den, two_pi * tau.re / den});
}

}  // namespace mm
