#include "mm/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "mm/quadrature.hpp"

namespace mm {

namespace {
long pick_prec(long prec) { return prec ? prec : BigReal::kDefaultPrec; }
}  // namespace

std::pair<BigComplex, BigComplex> roots_y(const BigComplex& x, const BigComplex& k,
                                          long prec) {
    long p = pick_prec(prec);
    BigComplex xx = x.with_prec(p);
    BigComplex b = xx + inv(xx) + k.with_prec(p);
    BigComplex s = sqrt(b * b - BigComplex::one(p) * BigReal(4L, p));
    BigReal half(0.5, p);
    BigComplex y1 = (-b - s) * half;
    BigComplex y2 = (-b + s) * half;
    if (abs(y1) < abs(y2)) std::swap(y1, y2);
    return {y1, y2};
}

BranchData branch_data(const BigComplex& k, long prec) {
    long p = pick_prec(prec);
    BranchData out;
    BigReal zero(0L, p), one(1L, p), two(2L, p), piv = BigReal::pi(p);
    if (!(k.im == zero)) {
        out.panels.push_back({zero, piv});
        return out;
    }
    // b(theta) = 2 cos(theta) + k decreases from k+2 to k-2 on [0, pi];
    // roots merge where b = +-2.
    std::vector<BigReal> cuts;
    for (int sgn : {+1, -1}) {
        BigReal c = (BigReal(2L * sgn, p) - k.re) / 2;
        if (c > -one && c < one) cuts.push_back(acos(c));
    }
    std::sort(cuts.begin(), cuts.end());
    out.crossings = cuts;
    std::vector<BigReal> pts;
    pts.push_back(zero);
    for (auto& c : cuts) pts.push_back(c);
    pts.push_back(piv);
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        BigReal mid = (pts[i] + pts[i + 1]) / 2;
        BigReal b = cos(mid) * 2 + k.re;
        if (abs(b) > two) out.panels.push_back({pts[i], pts[i + 1]});
    }
    return out;
}

BigReal mahler_jensen(const BigComplex& k, const BigReal& eps, long prec) {
    long p = prec ? prec : eps.prec() + 32;
    BranchData bd = branch_data(k, p);
    BigComplex kp = k.with_prec(p);
    BigReal total(0L, p);
    if (bd.panels.empty()) return total;
    BigReal panel_eps = eps / (4 * static_cast<long>(bd.panels.size()));
    BigReal tiny = BigReal::pow2(-p / 2, p);
    auto is_crossing = [&](const BigReal& t) {
        for (const auto& c : bd.crossings)
            if (abs(t - c) < tiny) return true;
        return false;
    };
    auto f = [&](const BigReal& theta) {
        BigComplex x{cos(theta), sin(theta)};
        auto [y1, y2] = roots_y(x, kp, p);
        BigReal ly = log(abs(y1));
        if (ly < BigReal(0L, p)) ly = BigReal(0L, p);
        return BigComplex{ly, BigReal(0L, p)};
    };
    QuadratureOptions opt;
    opt.prec = p;
    for (auto& [a, b] : bd.panels) {
        // The roots merge at crossing endpoints, so log|y1| vanishes there
        // like sqrt(theta - theta_c); theta = theta_c +- s^2 makes the
        // integrand smooth. Split at the midpoint so each half has at most
        // one singular end.
        BigReal mid = (a + b) / 2;
        if (is_crossing(a)) {
            auto g = [&](const BigReal& s) { return f(a + s * s) * (s * 2); };
            total += adaptive_integrate(g, BigReal(0L, p), sqrt(mid - a), panel_eps, opt).re;
        } else {
            total += adaptive_integrate(f, a, mid, panel_eps, opt).re;
        }
        if (is_crossing(b)) {
            auto g = [&](const BigReal& s) { return f(b - s * s) * (s * 2); };
            total += adaptive_integrate(g, BigReal(0L, p), sqrt(b - mid), panel_eps, opt).re;
        } else {
            total += adaptive_integrate(f, mid, b, panel_eps, opt).re;
        }
    }
    return (total / BigReal::pi(p)).with_prec(pick_prec(prec));
}

namespace {

// Exact two-sided sums over odd n with chi_{-4} signs:
//   sum chi(n)/(n + a)   = (pi/2) sec(pi a / 2)
//   sum chi(n)/(n + a)^2 = -(pi^2/4) sec(pi a / 2) tan(pi a / 2)
// (group n = 4j+1 and n = 4j+3 and use the cotangent expansion).
struct SecTan {
    BigComplex sec, tan;
};

SecTan sec_tan(const BigComplex& z, long p) {
    // z = pi a / 2; cos and sin via exp(iz).
    BigComplex iz{-z.im, z.re};
    BigComplex e1 = exp(iz), e2 = inv(e1);
    BigReal half(0.5, p);
    BigComplex c = (e1 + e2) * half;
    BigComplex ihalf{BigReal(0L, p), BigReal(-0.5, p)};
    BigComplex s = (e1 - e2) * ihalf;  // sin = (e^{iz} - e^{-iz}) / (2i)
    BigComplex sec = inv(c);
    return {sec, s * sec};
}

BigReal lattice_accel(const BigComplex& tau, const BigReal& eps, long prec) {
    long p = prec ? prec : eps.prec() + 32;
    BigComplex t = tau.with_prec(p);
    BigReal pip = BigReal::pi(p);
    // m = 0 line: sum chi(n)/n^3 = 2 L(chi_{-4}, 3) = pi^3/16.
    BigComplex S{pip * pip * pip / 16, BigReal(0L, p)};
    BigReal cutoff = eps * BigReal::pow2(-8, p);
    for (long m = 1;; ++m) {
        BigReal mag(0L, p);
        for (long sm : {m, -m}) {
            BigComplex a = t * BigReal(4L * sm, p);
            BigComplex bb = conj(t) * BigReal(4L * sm, p);
            BigComplex d = bb - a;
            BigComplex d2i = inv(d * d);
            auto A = sec_tan(a * (pip / 2), p);
            auto B = sec_tan(bb * (pip / 2), p);
            BigReal halfpi = pip / 2;
            BigComplex term = (B.sec - A.sec) * halfpi * d2i -
                              A.sec * A.tan * (pip * pip / 4) * inv(d);
            S += term;
            mag += abs(term);
        }
        if (mag < cutoff && m > 2) break;
        if (m > 4000) throw std::runtime_error("lattice_accel: no decay");
    }
    BigReal result = (S * (t.im * 16 / (pip * pip))).re;
    return result.with_prec(prec ? prec : BigReal::kDefaultPrec);
}

BigReal lattice_direct(const BigComplex& tau, const BigReal& eps) {
    double er = mpfr_get_d(eps.raw(), MPFR_RNDN);
    if (er < 1e-6)
        throw StrategyPrecisionExceeded("direct lattice strategy floors near 1e-6");
    std::complex<double> t(mpfr_get_d(tau.re.raw(), MPFR_RNDN),
                           mpfr_get_d(tau.im.raw(), MPFR_RNDN));
    double y = t.imag();
    long M = static_cast<long>(std::ceil(16.0 / y)) + 8;
    long N = 40001;
    std::complex<double> S(0, 0);
    for (long m = -M; m <= M; ++m) {
        std::complex<double> a = 4.0 * static_cast<double>(m) * t;
        std::complex<double> b = std::conj(a);
        std::complex<double> row(0, 0);
        if (m == 0) {
            for (long n = 1; n <= N; n += 2) {
                double sgn = (n % 4 == 1) ? 1.0 : -1.0;
                double n3 = static_cast<double>(n) * n * n;
                row += std::complex<double>(2.0 * sgn / n3, 0);
            }
        } else {
            for (long n = -N; n <= N; n += 2) {
                long r = ((n % 4) + 4) % 4;
                double sgn = (r == 1) ? 1.0 : -1.0;
                std::complex<double> wa = a + static_cast<double>(n);
                std::complex<double> wb = b + static_cast<double>(n);
                row += sgn / (wa * wa * wb);
            }
        }
        S += row;
    }
    double out = (S * std::complex<double>(16.0 * y, 0)).real() / (M_PI * M_PI);
    return BigReal(out, 64);
}

}  // namespace

BigReal mahler_lattice(const BigComplex& tau, const BigReal& eps, LatticeStrategy strategy,
                       long prec) {
    if (strategy == LatticeStrategy::accelerated) return lattice_accel(tau, eps, prec);
    return lattice_direct(tau, eps);
}

}  // namespace mm
