#include <doctest.h>

#include "mm/intpoly.hpp"
#include "mm/modular.hpp"

using namespace mm;

namespace {
const long P = 256;
BigReal tol() { return BigReal::pow2(-200, P); }
}  // namespace

TEST_CASE("eta at i") {
    // eta(i) = Gamma(1/4) / (2 pi^(3/4))
    BigComplex v = eta_numeric(BigComplex::i(P), P);
    CHECK(v.re.to_double() == doctest::Approx(0.7682254223260567).epsilon(1e-14));
    CHECK(abs(v.im) < tol());
}

TEST_CASE("eta transformation consistency off the fundamental domain") {
    // evaluate at a point requiring several reduction moves and compare
    // against the defining q-product summed directly (converges since Im > 0)
    BigComplex tau(3.375, 0.25, P);
    BigComplex v = eta_numeric(tau, P);
    BigComplex q24 = exp2pii(tau, 24);
    BigComplex q = pow(q24, 24);
    BigComplex prod = BigComplex::one(P);
    BigComplex qn = q;
    for (int n = 1; n < 900; ++n) {
        prod *= BigComplex::one(P) - qn;
        qn *= q;
    }
    CHECK(abs(v - q24 * prod) < BigReal::pow2(-180, P));
}

TEST_CASE("lambda(2 tau) at tau = i") {
    BigComplex v = lambda2(BigComplex::i(P), P);
    BigReal expect = BigReal(17L, P) - BigReal(12L, P) * sqrt(BigReal(2L, P));
    CHECK(abs(v.re - expect) < tol());
    CHECK(abs(v.im) < tol());
    auto rel = integer_relation(v, 2, 32);
    REQUIRE(rel.has_value());
    CHECK(*rel == IntPolynomial{{1, -34, 1}});
}

TEST_CASE("j invariant spot values") {
    BigComplex ji = j_numeric(BigComplex::i(P), P);
    CHECK(abs(ji - BigComplex(1728.0, 0.0, P)) < tol());

    BigComplex j2i = j_numeric(BigComplex(0.0, 2.0, P), P);
    CHECK(abs(j2i - BigComplex(287496.0, 0.0, P)) < tol());

    BigComplex rho(BigReal(-1L, P) / 2, sqrt(BigReal(3L, P)) / 2);
    CHECK(abs(j_numeric(rho, P)) < tol());
}

TEST_CASE("weber function values at 2i") {
    BigComplex f1 = weber_f1(BigComplex(0.0, 2.0, P), P);
    CHECK(abs(pow(f1, 24) - BigComplex(512.0, 0.0, P)) < BigReal::pow2(-190, P));

    BigComplex f2 = weber_f2(BigComplex(0.0, 2.0, P), P);
    BigReal expect = BigReal(-280L, P) + BigReal(198L, P) * sqrt(BigReal(2L, P));
    CHECK(abs(pow(f2, 24) - BigComplex(expect)) < BigReal::pow2(-180, P));

    // f^8 = f1^8 + f2^8 and f f1 f2 = sqrt 2
    BigComplex f = weber_f(BigComplex(0.0, 2.0, P), P);
    CHECK(abs(pow(f, 8) - pow(f1, 8) - pow(f2, 8)) < BigReal::pow2(-190, P));
    CHECK(abs(f * f1 * f2 - BigComplex(sqrt(BigReal(2L, P)))) < BigReal::pow2(-190, P));
}

TEST_CASE("k from tau at the Gaussian point") {
    BigComplex k = k_from_tau(BigComplex::i(P), P);
    BigReal expect = BigReal(12L, P) + BigReal(8L, P) * sqrt(BigReal(2L, P));
    CHECK(abs(k.re - expect) < tol());
    CHECK(abs(k.im) < tol());
}

TEST_CASE("numeric lambda matches its q-expansion") {
    BigComplex tau(0.125, 1.25, P);
    BigComplex v = lambda2(tau, P);
    // 16q - 128q^2 + 704q^3 - 3072q^4 + 11488q^5 - 38400q^6, q = e^(2 pi i tau)
    BigComplex q = exp2pii(tau, 1);
    long coef[] = {16, -128, 704, -3072, 11488, -38400};
    BigComplex s = BigComplex::zero(P);
    for (int n = 1; n <= 6; ++n) s += pow(q, n) * BigReal(coef[n - 1], P);
    // truncation error: coefficient growth times |q|^7 ~ 1e-19
    CHECK(abs(v - s) < BigReal(1e-17, P));
}
