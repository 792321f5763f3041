#include "mm/modular.hpp"

#include <vector>

#include "mm/errors.hpp"

namespace mm {

namespace {

// Move tau into |Re| <= 1/2, |tau| >= 1, keeping the eta multiplier so
// that the original value is pref * eta(tau).
void reduce_for_eta(BigComplex& tau, BigComplex& pref, long wp) {
    BigReal half = BigReal(1L, wp) / 2;
    BigReal one(1L, wp);
    BigReal pi_ = BigReal::pi(wp);
    for (int iter = 0; iter < 10000; ++iter) {
        if (abs(tau.re) > half) {
            BigReal t = round_r(tau.re);
            tau.re = tau.re - t;
            // eta(tau) = exp(i pi t / 12) eta(tau - t)
            BigReal ang = pi_ * t / 12;
            pref = pref * BigComplex(cos(ang), sin(ang));
            continue;
        }
        if (norm(tau) < one) {
            // eta(tau) = eta(-1/tau) / sqrt(-i tau)
            BigComplex mi_tau(tau.im, -tau.re);
            pref = pref * inv(sqrt(mi_tau));
            tau = -inv(tau);
            continue;
        }
        return;
    }
    throw NoConvergence("eta argument reduction did not terminate");
}

BigComplex eta_reduced(const BigComplex& tau, long wp) {
    BigComplex q24 = exp2pii(tau, 24);
    BigComplex q = pow(q24, 24);
    BigComplex sum = BigComplex::one(wp);
    BigReal tol = BigReal::pow2(-(wp - 8), wp);
    for (long k = 1; k < 100000; ++k) {
        long e1 = k * (3 * k - 1) / 2;
        long e2 = k * (3 * k + 1) / 2;
        BigComplex t1 = pow(q, e1);
        BigComplex term = t1 + pow(q, e2);
        if (k % 2 == 1) sum -= term;
        else sum += term;
        if (abs(t1) < tol) return q24 * sum;
    }
    throw NoConvergence("eta series did not converge");
}

long work_prec(long prec) { return (prec > 0 ? prec : BigReal::kDefaultPrec) + 32; }

}  // namespace

BigComplex eta_numeric(const BigComplex& tau, long prec) {
    long wp = work_prec(prec);
    BigComplex t = tau.with_prec(wp);
    if (!(t.im > BigReal::pow2(-10, wp)))
        throw DomainError("eta argument too close to the real axis");
    BigComplex pref = BigComplex::one(wp);
    reduce_for_eta(t, pref, wp);
    return pref * eta_reduced(t, wp);
}

BigComplex lambda2(const BigComplex& tau, long prec) {
    long wp = work_prec(prec) + 32;
    BigComplex t = tau.with_prec(wp);
    BigComplex e1 = eta_numeric(t, wp);
    BigComplex e2 = eta_numeric(t + t, wp);
    BigComplex e4 = eta_numeric((t + t) + (t + t), wp);
    return pow(e1, 8) * pow(e4, 16) * inv(pow(e2, 24)) * BigReal(16L, wp);
}

BigComplex j_numeric(const BigComplex& tau, long prec) {
    long wp = work_prec(prec) + 32;
    BigComplex t = tau.with_prec(wp);
    if (!(t.im > BigReal::pow2(-10, wp)))
        throw DomainError("j argument too close to the real axis");
    BigComplex pref = BigComplex::one(wp);
    reduce_for_eta(t, pref, wp);  // j only needs the reduced point
    BigComplex q = exp2pii(t, 1);
    // E4 = 1 + 240 sum sigma_3(n) q^n; after reduction |q| <= e^(-pi sqrt 3)
    long nmax = static_cast<long>(wp * 0.6931 / 5.441) + 4;
    std::vector<long> sig3(static_cast<size_t>(nmax + 1), 0);
    for (long d = 1; d <= nmax; ++d)
        for (long n = d; n <= nmax; n += d) sig3[static_cast<size_t>(n)] += d * d * d;
    BigComplex e4 = BigComplex::one(wp);
    BigComplex qn = q;
    for (long n = 1; n <= nmax; ++n) {
        e4 += qn * BigReal(240 * sig3[static_cast<size_t>(n)], wp);
        qn *= q;
    }
    BigComplex delta = pow(eta_reduced(t, wp), 24);
    return pow(e4, 3) * inv(delta);
}

BigComplex weber_f(const BigComplex& tau, long prec) {
    long wp = work_prec(prec) + 32;
    BigComplex t = tau.with_prec(wp);
    BigComplex half(BigReal(1L, wp) / 2);
    BigComplex num = eta_numeric((t + BigComplex::one(wp)) * half, wp);
    BigComplex den = eta_numeric(t, wp);
    BigReal ang = BigReal::pi(wp) / -24;
    return BigComplex(cos(ang), sin(ang)) * num * inv(den);
}

BigComplex weber_f1(const BigComplex& tau, long prec) {
    long wp = work_prec(prec) + 32;
    BigComplex t = tau.with_prec(wp);
    BigComplex half(BigReal(1L, wp) / 2);
    return eta_numeric(t * half, wp) * inv(eta_numeric(t, wp));
}

BigComplex weber_f2(const BigComplex& tau, long prec) {
    long wp = work_prec(prec) + 32;
    BigComplex t = tau.with_prec(wp);
    return eta_numeric(t + t, wp) * inv(eta_numeric(t, wp)) * sqrt(BigReal(2L, wp));
}

BigComplex k_from_tau(const BigComplex& tau, long prec) {
    long wp = work_prec(prec) + 32;
    return BigReal(4L, wp) * inv(sqrt(lambda2(tau, wp)));
}

}  // namespace mm
