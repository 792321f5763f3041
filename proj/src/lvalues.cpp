#include "mm/lvalues.hpp"

#include <algorithm>
#include <cmath>

#include "mm/mahler.hpp"

namespace mm {

FormSpec FormSpec::make_theta(const ThetaSpec& t, long level) {
    FormSpec s;
    s.kind = Kind::theta;
    s.theta = t;
    s.level = level;
    return s;
}

FormSpec FormSpec::make_eta(const EtaQuotient& e, long level) {
    FormSpec s;
    s.kind = Kind::eta;
    s.eta = e;
    s.level = level;
    return s;
}

FormSpec FormSpec::make_combo(std::vector<Term> terms, long level) {
    FormSpec s;
    s.kind = Kind::combo;
    s.terms = std::move(terms);
    s.level = level;
    return s;
}

PowerSeriesZ form_expansion(const FormSpec& spec, long order) {
    switch (spec.kind) {
        case FormSpec::Kind::theta:
            return theta_expansion(spec.theta, order);
        case FormSpec::Kind::eta:
            return eta_quotient_expansion(spec.eta, order);
        case FormSpec::Kind::combo: {
            bool first = true;
            PowerSeriesZ acc;
            for (auto& t : spec.terms) {
                long inner_order = (order + t.dilation - 1) / t.dilation + 1;
                PowerSeriesZ part = form_expansion(*t.inner, inner_order)
                                        .dilated(t.dilation)
                                        .truncated(order);
                part.scaled(t.coeff);
                acc = first ? part : acc + part;
                first = false;
            }
            return acc.truncated(order);
        }
    }
    throw std::logic_error("form_expansion: bad kind");
}

std::vector<mpq_class> form_coefficients(const FormSpec& spec, long nmax) {
    PowerSeriesZ s = form_expansion(spec, nmax + 2);
    if (s.integer_horizon() <= nmax) throw std::runtime_error("coefficients: horizon short");
    std::vector<mpq_class> out(static_cast<size_t>(nmax) + 1);
    for (long n = 0; n <= nmax; ++n) out[static_cast<size_t>(n)] = s.integer_coeff(n);
    return out;
}

BigReal lvalue2(const FormSpec& spec, const BigReal& eps, long prec) {
    long p = prec ? prec : eps.prec() + 32;
    long pw = p + 64;
    double er = mpfr_get_d(eps.raw(), MPFR_RNDN);
    if (er <= 0) er = 1e-30;

    auto probe = form_coefficients(spec, 256);
    double C = 1.0;
    for (long n = 1; n <= 256; ++n) {
        double cn = std::abs(probe[static_cast<size_t>(n)].get_d());
        C = std::max(C, cn / n);
    }
    C *= 4;

    double c = 2 * M_PI / spec.level;  // cusp-decay exponent constant
    double tm = c / std::log(1e6 * C / er);
    std::vector<mpq_class> coeffs;
    long nmax = 0;

    for (int attempt = 0;; ++attempt) {
        if (attempt > 60 || tm < c / 10000.0)
            throw TailBoundExceeded("lvalue2: cusp remainder bound will not meet eps");
        // choose truncation so the series tail at tm is < eps/16
        double w = 2 * M_PI * tm;
        nmax = 64;
        while (C * (1.0 / nmax + w) * std::exp(-w * nmax) / w > er / 16 && nmax < 100000000)
            nmax = nmax * 13 / 10 + 1;
        if (static_cast<long>(coeffs.size()) < nmax + 1) coeffs = form_coefficients(spec, nmax);

        BigReal tmb(tm, pw);
        BigReal twopi = BigReal::pi(pw) * 2;
        BigReal q = exp(-(twopi * tmb));
        BigReal qn(1L, pw), S(0L, pw), F(0L, pw);
        for (long n = 1; n <= nmax; ++n) {
            qn *= q;
            if (coeffs[static_cast<size_t>(n)] == 0) continue;
            BigReal cn(pw);
            mpfr_set_q(cn.raw(), coeffs[static_cast<size_t>(n)].get_mpq_t(), MPFR_RNDN);
            BigReal term = cn * qn;
            F += term;
            S += term * (BigReal(1L, pw) + twopi * tmb * n) / n / n;
        }
        // calibrate kappa from |f(i t_min)| against the decay model, then
        // bound |4 pi^2 int_0^tm f t dt| <= kappa (tm/c) exp(-c/tm) * 4 pi^2
        double fval = std::abs(mpfr_get_d(F.raw(), MPFR_RNDN));
        double kappa = std::max(fval, 1e-30) * tm * tm * std::exp(c / tm) * 1e4;
        double bound = 4 * M_PI * M_PI * kappa * (tm / c) * std::exp(-c / tm);
        if (bound < er / 8) return S.with_prec(p);
        tm *= 0.7;
    }
}

std::pair<BigComplex, BigComplex> extract_conjugate_pair(const BigComplex& L1,
                                                         const BigComplex& L2,
                                                         const BigComplex& a,
                                                         const BigComplex& b,
                                                         const BigReal& tol) {
    long p = std::max(L1.re.prec(), a.re.prec());
    BigComplex det = a * conj(b) - conj(a) * b;
    if (abs(det) < BigReal::pow2(-p + 16, p)) throw SingularSystem("conjugate pair system");
    BigComplex Lf = (L1 * conj(b) - L2 * conj(a)) * inv(det);
    BigComplex Lg = (a * L2 - b * L1) * inv(det);
    bool zero = abs(L1) < tol && abs(L2) < tol;
    if (!zero && abs(Lg - conj(Lf)) > tol)
        throw ConjugacyViolation("solved pair is not conjugate");
    return {Lf, Lg};
}

BigComplex k_value(const IdentityRecord& row, long prec) {
    long p = prec ? prec : BigReal::kDefaultPrec;
    BigReal u(p), v(p);
    mpfr_set_q(u.raw(), row.ku.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(v.raw(), row.kv.get_mpq_t(), MPFR_RNDN);
    BigReal root = sqrt(BigReal(std::labs(row.kd), p));
    BigComplex k2;
    if (row.kd >= 0)
        k2 = {u + v * root, BigReal(0L, p)};
    else
        k2 = {u, v * root};
    return sqrt(k2);
}

IdentityResult verify_identity(const IdentityRecord& row, const BigReal& eps, long prec) {
    long p = prec ? prec : eps.prec() + 32;
    BigReal half_eps = (eps / 4).with_prec(p);
    BigReal m = mahler_jensen(k_value(row, p), half_eps, p);
    BigReal L = lvalue2(FormSpec::make_theta(row.form, row.level), half_eps, p);
    BigReal cr(p);
    mpfr_set_q(cr.raw(), row.c_r.get_mpq_t(), MPFR_RNDN);
    BigReal pi2 = BigReal::pi(p) * BigReal::pi(p);
    BigReal cL = cr * sqrt(BigReal(row.c_s, p)) / pi2 * L;
    return {m, cL, abs(m - cL)};
}

}  // namespace mm
