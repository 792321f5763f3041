#include <cmath>
#include <complex>

#include "doctest.h"
#include "mm/mahler.hpp"
#include "mm/modular.hpp"

using namespace mm;

namespace {

double dd(const BigReal& x) { return mpfr_get_d(x.raw(), MPFR_RNDN); }

// Trapezoid rule for (1/2pi)^2 integral of log|P_k| over the torus; spectrally
// accurate when |2cos t + k| > 2 everywhere (no zeros of P_k on the torus touch
// the singular set smoothly otherwise).
double torus_riemann(std::complex<double> k, int N) {
    double sum = 0;
    for (int i = 0; i < N; ++i) {
        double a = 2 * M_PI * (i + 0.5) / N;
        for (int j = 0; j < N; ++j) {
            double b = 2 * M_PI * (j + 0.5) / N;
            sum += std::log(std::abs(2.0 * std::cos(a) + 2.0 * std::cos(b) + k));
        }
    }
    return sum / N / N;
}

BigComplex cplx(double re, double im, long p = 192) {
    return {BigReal(re, p), BigReal(im, p)};
}

}  // namespace

TEST_CASE("y-roots: ordering, product, conjugate region") {
    long p = 128;
    auto [y1, y2] = roots_y(BigComplex::i(p), BigComplex::zero(p), p);
    CHECK(dd(abs(y1)) == doctest::Approx(1.0).epsilon(1e-25));
    CHECK(dd(abs(y2)) == doctest::Approx(1.0).epsilon(1e-25));

    BigReal s2 = sqrt(BigReal(2L, p));
    BigComplex kp{BigReal(12L, p) + s2 * 8, BigReal(0L, p)};
    auto [z1, z2] = roots_y(BigComplex::one(p), kp, p);
    CHECK(dd(z1.im) == doctest::Approx(0.0).epsilon(1e-30));
    CHECK(dd(abs(z1)) > 1.0);
    CHECK(dd(abs(z1 * z2)) == doctest::Approx(1.0).epsilon(1e-30));
}

TEST_CASE("branch crossing of k = 12 - 8 sqrt 2 at theta0") {
    long p = 192;
    BigReal s2 = sqrt(BigReal(2L, p));
    BigComplex km{BigReal(12L, p) - s2 * 8, BigReal(0L, p)};
    auto bd = branch_data(km, p);
    REQUIRE(bd.crossings.size() == 1);
    // theta0 = arctan(2 sqrt(2 + 10 sqrt 2) / 7)
    BigReal theta0 = atan(sqrt(BigReal(2L, p) + s2 * 10) * 2 / 7);
    CHECK(dd(abs(bd.crossings[0] - theta0)) < 1e-40);
    // roots merge there
    BigComplex x{cos(theta0), sin(theta0)};
    auto [y1, y2] = roots_y(x, km, p);
    CHECK(dd(abs(y1 - y2)) < 1e-25);
    // real-root panel is [0, theta0]
    REQUIRE(bd.panels.size() == 1);
    CHECK(dd(bd.panels[0].first) == 0.0);
    CHECK(dd(abs(bd.panels[0].second - theta0)) < 1e-40);
}

TEST_CASE("jensen: trivial and large-k values") {
    long p = 128;
    BigReal eps = BigReal::pow2(-40, p);
    CHECK(dd(mahler_jensen(BigComplex::zero(p), eps, p)) == 0.0);

    double m100 = dd(mahler_jensen(cplx(100, 0), eps, p));
    CHECK(m100 == doctest::Approx(torus_riemann({100, 0}, 256)).epsilon(1e-11));
    CHECK(std::abs(m100 - std::log(100.0)) < 2.1e-4);
}

TEST_CASE("jensen vs torus Riemann oracle") {
    long p = 128;
    BigReal eps = BigReal::pow2(-40, p);
    CHECK(dd(mahler_jensen(cplx(8, 0), eps, p)) ==
          doctest::Approx(torus_riemann({8, 0}, 256)).epsilon(1e-11));
    CHECK(dd(mahler_jensen(cplx(0, 4), eps, p)) ==
          doctest::Approx(torus_riemann({0, 4}, 256)).epsilon(1e-11));
    // with on-torus zeros the oracle converges slowly; loose tolerance
    CHECK(std::abs(dd(mahler_jensen(cplx(3, 0), eps, p)) - torus_riemann({3, 0}, 1500)) <
          5e-3);
    CHECK(std::abs(dd(mahler_jensen(cplx(1, 0), eps, p)) - torus_riemann({1, 0}, 1500)) <
          5e-3);
}

TEST_CASE("jensen symmetries m(k) = m(-k) = m(conj k)") {
    long p = 128;
    BigReal eps = BigReal::pow2(-40, p);
    for (auto k : {std::complex<double>(2.3, 1.1), std::complex<double>(0.4, -2.0)}) {
        double a = dd(mahler_jensen(cplx(k.real(), k.imag()), eps, p));
        double b = dd(mahler_jensen(cplx(-k.real(), -k.imag()), eps, p));
        double c = dd(mahler_jensen(cplx(k.real(), -k.imag()), eps, p));
        CHECK(a == doctest::Approx(b).epsilon(1e-11));
        CHECK(a == doctest::Approx(c).epsilon(1e-11));
    }
}

TEST_CASE("accelerated lattice sum matches jensen through k(tau)") {
    long p = 256;
    BigReal eps = BigReal::pow2(-100, p);
    BigReal s2 = sqrt(BigReal(2L, p));

    // tau = i <-> k = 12 + 8 sqrt 2
    BigReal mlat = mahler_lattice(BigComplex::i(p), eps, LatticeStrategy::accelerated, p);
    BigComplex kp{BigReal(12L, p) + s2 * 8, BigReal(0L, p)};
    BigReal mj = mahler_jensen(kp, BigReal::pow2(-110, p), p);
    CHECK(dd(abs(mlat - mj)) < 1e-28);

    // tau = (2+i)/5 <-> k = 12 - 8 sqrt 2
    BigComplex tau{BigReal(2L, p) / 5, BigReal(1L, p) / 5};
    BigReal mlat2 = mahler_lattice(tau, eps, LatticeStrategy::accelerated, p);
    BigComplex km{BigReal(12L, p) - s2 * 8, BigReal(0L, p)};
    BigReal mj2 = mahler_jensen(km, BigReal::pow2(-110, p), p);
    CHECK(dd(abs(mlat2 - mj2)) < 1e-28);

    // consistency with k_from_tau
    BigComplex kt = k_from_tau(BigComplex::i(p), p);
    CHECK(dd(abs(kt - kp)) < 1e-50);
}

TEST_CASE("direct lattice strategy: 1e-3 agreement and precision floor") {
    long p = 128;
    BigReal eps3(1e-3, p);
    BigReal d1 = mahler_lattice(BigComplex::i(p), eps3, LatticeStrategy::direct, p);
    BigReal a1 = mahler_lattice(BigComplex::i(p), BigReal::pow2(-60, p), LatticeStrategy::accelerated, p);
    CHECK(dd(abs(d1 - a1)) < 1e-3);

    // tau = (1+i)/2 <-> lambda = -1, k = -4i; m(-4i) = m(4i)
    BigComplex tau{BigReal(1L, p) / 2, BigReal(1L, p) / 2};
    BigReal d2 = mahler_lattice(tau, eps3, LatticeStrategy::direct, p);
    BigReal mj = mahler_jensen(cplx(0, 4), BigReal::pow2(-40, p), p);
    CHECK(dd(abs(d2 - mj)) < 1e-3);

    CHECK_THROWS_AS(mahler_lattice(BigComplex::i(p), BigReal::pow2(-40, p), LatticeStrategy::direct, p),
                    StrategyPrecisionExceeded);
}
