#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mm/cmsearch.hpp"
#include "mm/errors.hpp"
#include "mm/modular.hpp"
#include "mm/quadforms.hpp"
#include "mm/refdata.hpp"

using namespace mm;

TEST_CASE("form reduction basics") {
    QuadForm f = reduce_form({2, -2, 1});
    CHECK(f == QuadForm{1, 0, 1});
    CHECK(reduce_form({1, 1, 1}) == QuadForm{1, 1, 1});
    CHECK(reduce_form({3, -3, 1}).disc() == -3);
    CHECK(reduce_form({3, -3, 1}) == QuadForm{1, 1, 1});
    CHECK_THROWS_AS(reduce_form({1, 3, 1}), BadDiscriminant);
}

TEST_CASE("reduction preserves the j invariant") {
    std::mt19937 rng(12345);
    long P = 192;
    for (int trial = 0; trial < 20; ++trial) {
        long a = 1 + static_cast<long>(rng() % 40);
        long b = static_cast<long>(rng() % 81) - 40;
        // choose c to force a negative discriminant
        long cmin = (b * b) / (4 * a) + 1;
        long c = cmin + static_cast<long>(rng() % 30);
        QuadForm f{a, b, c};
        QuadForm r = reduce_form(f);
        REQUIRE(r.disc() == f.disc());
        CHECK(r.is_reduced());
        BigComplex j1 = j_numeric(tau_of(f, P), P);
        BigComplex j2 = j_numeric(tau_of(r, P), P);
        CHECK(abs(j1 - j2) < BigReal::pow2(-120, P) * (abs(j1) + BigReal(1L, P)));
    }
}

TEST_CASE("class number spot values") {
    CHECK(class_number(-3) == 1);
    CHECK(class_number(-4) == 1);
    CHECK(class_number(-15) == 2);
    CHECK(class_number(-23) == 3);
    CHECK(class_number(-47) == 5);
    CHECK(class_number(-64) == 2);
    CHECK(class_number(-163) == 1);
    CHECK(class_number(-427) == 2);
}

TEST_CASE("order formula agrees with direct enumeration") {
    for (long D0 : {-3L, -4L, -7L, -8L, -11L, -15L, -20L, -23L}) {
        for (long m : {2L, 3L, 4L, 5L, 6L}) {
            CHECK(class_number_by_order_formula(D0, m) == class_number(D0 * m * m));
        }
    }
}

TEST_CASE("published class number 1 and 2 discriminant lists") {
    CHECK(discriminants_with_h(1, 2000) == class_number_one_discs());
    CHECK(discriminants_with_h(2, 2000) == class_number_two_discs());
}

TEST_CASE("fundamental part") {
    CHECK(fundamental_part(-4) == std::pair<long, long>(1, -4));
    CHECK(fundamental_part(-12) == std::pair<long, long>(2, -3));
    CHECK(fundamental_part(-16) == std::pair<long, long>(2, -4));
    CHECK(fundamental_part(-27) == std::pair<long, long>(3, -3));
    CHECK(fundamental_part(-64) == std::pair<long, long>(4, -4));
    CHECK(fundamental_part(-100) == std::pair<long, long>(5, -4));
}

TEST_CASE("cm_scale composes with the root point") {
    long P = 192;
    QuadForm f{3, 2, 5};
    for (long n : {2L, 3L, 4L}) {
        QuadForm g = cm_scale(f, n);
        BigComplex t = tau_of(f, P);
        BigComplex s = tau_of(g, P);
        BigComplex nt = t * BigReal(n, P);
        CHECK(abs(s - nt) < BigReal::pow2(-150, P));
    }
}

TEST_CASE("matrix action matches the moebius action on roots") {
    long P = 192;
    QuadForm f{5, -4, 1};
    for (const Mat2& g : fprime_cover()) {
        QuadForm img = matrix_act(g, f);
        BigComplex t = tau_of(f, P);
        BigComplex num = t * BigReal(g.p, P) + BigComplex(BigReal(g.q, P), BigReal(0L, P));
        BigComplex den = t * BigReal(g.r, P) + BigComplex(BigReal(g.s, P), BigReal(0L, P));
        BigComplex expect = num * inv(den);
        // the image form may be the conjugate normalization; compare roots
        BigComplex got = tau_of(img, P);
        CHECK(abs(got - expect) < BigReal::pow2(-120, P));
        CHECK(img.primitive());
    }
}

TEST_CASE("membership tests for F and F'") {
    CHECK(root_in_F({1, 0, 1}));      // i
    CHECK(root_in_F({1, 1, 1}));      // sixth root of unity
    CHECK(!root_in_F({2, 0, 1}));     // i/sqrt(2): |tau| < 1
    CHECK(root_in_Fprime({2, 0, 1})); // but inside F'
    CHECK(root_in_Fprime({2, -2, 1}));
    CHECK(root_in_Fprime({3, 2, 1}));
    // root (3 + 2i)/13 lies inside the excluded circle |tau - 1/4| < 1/4
    CHECK(!root_in_Fprime({13, -6, 1}));
}

namespace {

// One unit in the fifth significant digit; the published lambda column is
// truncated, not rounded, so a match must hold within this.
double ulp5(double x) {
    if (x == 0.0) return 1e-10;
    return std::pow(10.0, std::floor(std::log10(std::abs(x))) - 4.0);
}

bool lambda_matches(const BigComplex& computed, double re, double im) {
    return std::abs(computed.re.to_double() - re) <= 1.0001 * ulp5(re) &&
           std::abs(computed.im.to_double() - im) <= 1.0001 * ulp5(im);
}

}  // namespace

TEST_CASE("cm point search reproduces the reference table") {
    auto found = search_cm_points(4, 128);
    const auto& table = cm_table();
    CHECK(found.size() == table.size());

    long P = 128;
    std::vector<bool> used(found.size(), false);
    for (const auto& row : table) {
        // the published form itself must carry the published data
        QuadForm f = row.form;
        CHECK(f.primitive());
        long hD = class_number(f.disc());
        long h4 = class_number(cm_scale(f, 4).disc());
        long h2 = class_number(cm_scale(f, 2).disc());
        CHECK(h2 == row.h2);
        CHECK(hD * h4 == row.h_product);
        BigComplex lam = lambda2(tau_of(f, P), P);
        CHECK(lambda_matches(lam, row.lambda_re, row.lambda_im));

        // and exactly one search class carries this lambda value
        auto it = std::find_if(found.begin(), found.end(), [&](const CMPoint& p) {
            return lambda_matches(p.lambda, row.lambda_re, row.lambda_im);
        });
        REQUIRE(it != found.end());
        size_t idx = static_cast<size_t>(it - found.begin());
        CHECK(!used[idx]);
        used[idx] = true;
        CHECK(it->h2 == row.h2);
        CHECK(it->h_product == row.h_product);
    }
    CHECK(std::count(used.begin(), used.end(), false) == 0);
}
