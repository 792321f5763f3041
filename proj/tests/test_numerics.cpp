#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mm/intpoly.hpp"
#include "mm/quadrature.hpp"
#include "mm/real.hpp"

using namespace mm;

static double dval(const BigReal& x) { return x.to_double(); }

TEST_CASE("real arithmetic basics") {
    long p = 256;
    BigReal a(2L, p);
    CHECK(dval(sqrt(a)) == doctest::Approx(1.41421356237309515).epsilon(1e-15));
    BigReal pi_ = BigReal::pi(p);
    CHECK(dval(sin(pi_ / 6)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(dval(BigReal::pow2(-10, p)) == doctest::Approx(1.0 / 1024));
}

TEST_CASE("complex principal sqrt") {
    long p = 256;
    BigComplex m1(-1.0, 0.0, p);
    BigComplex r = sqrt(m1);
    CHECK(dval(r.re) == doctest::Approx(0.0));
    CHECK(dval(r.im) == doctest::Approx(1.0));
    BigComplex z(0.0, 2.0, p);
    BigComplex s = sqrt(z);
    CHECK(dval(s.re) == doctest::Approx(1.0));
    CHECK(dval(s.im) == doctest::Approx(1.0));
    // principal branch: sqrt of -2i has positive real part, negative imag
    BigComplex t = sqrt(conj(z));
    CHECK(dval(t.re) == doctest::Approx(1.0));
    CHECK(dval(t.im) == doctest::Approx(-1.0));
}

TEST_CASE("tanh-sinh quadrature, smooth integrand") {
    long p = 256;
    BigReal eps = BigReal::pow2(-200, p);
    BigReal four(4L, p), one(1L, p), zero(0L, p);
    BigReal v = adaptive_integrate_real(
        [&](const BigReal& t) { return four / (one + t * t); }, zero, one, eps);
    BigReal err = abs(v - BigReal::pi(p));
    CHECK(err < BigReal::pow2(-190, p));
}

TEST_CASE("tanh-sinh quadrature absorbs endpoint singularity") {
    long p = 192;
    BigReal eps = BigReal::pow2(-150, p);
    BigReal one(1L, p), zero(0L, p);
    QuadratureOptions opt;
    opt.endpoint_singularity = true;
    BigReal v = adaptive_integrate_real(
        [&](const BigReal& t) { return one / sqrt(t); }, zero, one, eps, opt);
    CHECK(abs(v - BigReal(2L, p)) < BigReal::pow2(-140, p));
}

TEST_CASE("quadrature of a complex integrand") {
    long p = 192;
    BigReal eps = BigReal::pow2(-150, p);
    BigReal zero(0L, p);
    BigReal pi_ = BigReal::pi(p);
    BigComplex v = adaptive_integrate(
        [&](const BigReal& t) { return BigComplex(cos(t), sin(t)); }, zero, pi_, eps);
    CHECK(abs(v - BigComplex(0.0, 2.0, p)) < BigReal::pow2(-140, p));
}

TEST_CASE("minimal polynomial of a real quadratic unit") {
    long p = 256;
    BigReal x = BigReal(17L, p) - BigReal(12L, p) * sqrt(BigReal(2L, p));
    auto rel = integer_relation(BigComplex(x), 4, 64);
    REQUIRE(rel.has_value());
    IntPolynomial expect{{1, -34, 1}};
    CHECK(*rel == expect);
}

TEST_CASE("minimal polynomial of a complex quadratic integer") {
    long p = 256;
    // (1 + i sqrt 7)/2 satisfies x^2 - x + 2
    BigComplex x(BigReal(1L, p) / 2, sqrt(BigReal(7L, p)) / 2);
    auto rel = integer_relation(x, 4, 64);
    REQUIRE(rel.has_value());
    IntPolynomial expect{{2, -1, 1}};
    CHECK(*rel == expect);
}

TEST_CASE("minimal polynomial of a rational") {
    long p = 256;
    BigReal x = BigReal(22L, p) / 7;
    auto rel = integer_relation(BigComplex(x), 3, 32);
    REQUIRE(rel.has_value());
    IntPolynomial expect{{-22, 7}};
    CHECK(*rel == expect);
}

TEST_CASE("no small relation for pi") {
    long p = 320;
    BigComplex x(BigReal::pi(p));
    auto rel = integer_relation(x, 4, 24);
    CHECK(!rel.has_value());
}

TEST_CASE("degree-4 recognition") {
    long p = 384;
    // sqrt(2) + sqrt(3) satisfies x^4 - 10 x^2 + 1
    BigReal x = sqrt(BigReal(2L, p)) + sqrt(BigReal(3L, p));
    auto rel = integer_relation(BigComplex(x), 6, 48);
    REQUIRE(rel.has_value());
    IntPolynomial expect{{1, 0, -10, 0, 1}};
    CHECK(*rel == expect);
}
