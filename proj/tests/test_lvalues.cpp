#include <cmath>
#include <memory>

#include "doctest.h"
#include "mm/lvalues.hpp"
#include "mm/mahler.hpp"

using namespace mm;

namespace {
double dd(const BigReal& x) { return mpfr_get_d(x.raw(), MPFR_RNDN); }

FormSpec f64_spec() {
    return FormSpec::make_eta({{{8, 8}, {4, -2}, {16, -2}}}, 64);
}
FormSpec f32_spec() {
    return FormSpec::make_eta({{{4, 2}, {8, 2}}}, 32);
}
}  // namespace

TEST_CASE("form_expansion: combo (f64+f32)/2 matches the 16m^2+n^2 theta") {
    auto combo = FormSpec::make_combo(
        {{mpq_class(1, 2), 1, std::make_shared<FormSpec>(f64_spec())},
         {mpq_class(1, 2), 1, std::make_shared<FormSpec>(f32_spec())}},
        64);
    ThetaSpec th;
    th.A = 16; th.B = 0; th.C = 1;
    th.alpha = 0; th.beta = 1;
    th.scale = mpq_class(1, 2);
    auto lhs = form_expansion(combo, 40);
    auto rhs = theta_expansion(th, 40);
    for (long n = 0; n < 40; ++n) CHECK(lhs.integer_coeff(n) == rhs.integer_coeff(n));
}

TEST_CASE("form_expansion: dilation maps exponents") {
    ThetaSpec th;  // sum chi(n) n q^{n^2} restricted: use (1,0,1)-style small theta
    th.A = 1; th.B = 0; th.C = 1;
    th.alpha = 0; th.beta = 1;
    th.scale = mpq_class(1, 2);
    auto base = FormSpec::make_theta(th, 64);
    auto dil = FormSpec::make_combo({{mpq_class(1), 2, std::make_shared<FormSpec>(base)}}, 128);
    auto a = form_coefficients(base, 20);
    auto b = form_coefficients(dil, 40);
    for (long n = 1; n <= 20; ++n) {
        CHECK(b[static_cast<size_t>(2 * n)] == a[static_cast<size_t>(n)]);
        CHECK(b[static_cast<size_t>(2 * n - 1)] == 0);
    }
}

TEST_CASE("lvalue2: dilation law L(f(d tau),2) = L(f,2)/d^2") {
    long p = 160;
    BigReal eps = BigReal::pow2(-60, p);
    auto f = f32_spec();
    BigReal L = lvalue2(f, eps, p);
    CHECK(dd(L) > 0);
    for (long d : {2L, 4L}) {
        auto fd = FormSpec::make_combo({{mpq_class(1), d, std::make_shared<FormSpec>(f)}},
                                       32 * d);
        BigReal Ld = lvalue2(fd, eps, p);
        CHECK(dd(abs(Ld * (d * d) - L)) < 1e-16);
    }
}

TEST_CASE("lvalue2: stable under eps tightening and precision doubling") {
    long p = 128;
    auto f = f64_spec();
    BigReal a = lvalue2(f, BigReal::pow2(-40, p), p);
    BigReal b = lvalue2(f, BigReal::pow2(-72, 256), 256);
    CHECK(dd(abs(a - b.with_prec(p))) < 1e-12);
}

TEST_CASE("identity table: 35 rows, k values sane") {
    auto& tab = identity_table();
    REQUIRE(tab.size() == 35);
    long p = 128;
    // spot-check a few numeric k values against their surd displays
    BigComplex k4 = k_value(tab[3], p);  // 8^(1/4)(sqrt 2 - 1) i
    double want = std::pow(8.0, 0.25) * (std::sqrt(2.0) - 1.0);
    CHECK(dd(k4.re) == doctest::Approx(0.0));
    CHECK(dd(k4.im) == doctest::Approx(want).epsilon(1e-12));
    BigComplex k34 = k_value(tab[33], p);  // 3 sqrt7/2 + i/2
    CHECK(dd(k34.re) == doctest::Approx(3.0 * std::sqrt(7.0) / 2).epsilon(1e-12));
    CHECK(dd(k34.im) == doctest::Approx(0.5).epsilon(1e-12));
    // positive-definite forms only
    for (auto& r : tab) CHECK(r.form.B * r.form.B < 4 * r.form.A * r.form.C);
}

TEST_CASE("verify_identity: proved and worked rows at 1e-10") {
    long p = 224;
    BigReal eps(1e-11, p);
    for (int i : {0, 1, 5, 6}) {  // 4i, 4 sqrt 2, 12 +- 8 sqrt 2
        auto res = verify_identity(identity_table()[static_cast<size_t>(i)], eps, p);
        CAPTURE(i);
        CHECK(dd(res.residual) < 1e-10);
        CHECK(dd(res.m) > 0);
    }
}

TEST_CASE("verify_identity: all 35 rows at 1e-8") {
    long p = 192;
    BigReal eps(1e-9, p);
    for (size_t i = 0; i < identity_table().size(); ++i) {
        auto res = verify_identity(identity_table()[i], eps, p);
        CAPTURE(i);
        CAPTURE(identity_table()[i].k_display);
        CHECK(dd(res.residual) < 1e-8);
    }
}

TEST_CASE("extract_conjugate_pair") {
    long p = 192;
    BigReal tol(1e-20, p);
    BigComplex a{BigReal(1L, p), BigReal(0L, p)};
    BigComplex b{BigReal(0L, p), BigReal(1L, p)};
    auto z = extract_conjugate_pair(BigComplex::zero(p), BigComplex::zero(p), a, b, tol);
    CHECK(dd(abs(z.first)) == 0.0);
    CHECK(dd(abs(z.second)) == 0.0);

    // alpha = conj(beta) real multiples -> singular
    BigComplex c{BigReal(2L, p), BigReal(0L, p)};
    CHECK_THROWS_AS(extract_conjugate_pair(a, a, a, c, tol), SingularSystem);

    // synthetic conjugate pair roundtrip
    BigComplex alpha{BigReal(0.5, p), BigReal(0.25, p)};
    BigComplex beta{BigReal(1L, p), BigReal(-2L, p)};
    BigComplex Lf{BigReal(0.7, p), BigReal(0.1, p)};
    BigComplex Lg = conj(Lf);
    BigComplex L1 = alpha * Lf + conj(alpha) * Lg;
    BigComplex L2 = beta * Lf + conj(beta) * Lg;
    auto s = extract_conjugate_pair(L1, L2, alpha, beta, tol);
    CHECK(dd(abs(s.first - Lf)) < 1e-40);
}
