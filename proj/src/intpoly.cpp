#include "mm/intpoly.hpp"

#include "mm/errors.hpp"

namespace mm {

BigReal to_bigreal(const mpz_class& z, long prec) {
    BigReal r(prec);
    mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

mpz_class round_to_mpz(const BigReal& x) {
    BigReal r = round_r(x);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), r.raw(), MPFR_RNDN);
    return z;
}

void IntPolynomial::normalize() {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    mpz_class g = 0;
    for (const auto& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : coeffs) c /= g;
    if (coeffs.back() < 0)
        for (auto& c : coeffs) c = -c;
}

BigComplex IntPolynomial::eval(const BigComplex& x) const {
    long p = x.prec();
    BigComplex acc = BigComplex::zero(p);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + BigComplex(to_bigreal(*it, p));
    return acc;
}

std::string IntPolynomial::str() const {
    std::string s;
    for (int j = degree(); j >= 0; --j) {
        const mpz_class& c = coeffs[j];
        if (c == 0 && degree() > 0) continue;
        std::string a = mpz_class(abs(c)).get_str();
        bool first = s.empty();
        s += (c < 0) ? "-" : (first ? "" : "+");
        if (j == 0 || a != "1") s += a;
        if (j >= 1) s += "x";
        if (j >= 2) s += "^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
}

void lll_reduce(std::vector<std::vector<mpz_class>>& basis, long fprec) {
    const size_t n = basis.size();
    auto dot = [&](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
        mpz_class s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };

    std::vector<std::vector<BigReal>> mu(n, std::vector<BigReal>(n, BigReal(0.0, fprec)));
    std::vector<BigReal> Bstar(n, BigReal(0.0, fprec));

    auto gram_schmidt = [&]() {
        // b*_i = b_i - sum mu_ij b*_j; everything via exact dot products.
        std::vector<std::vector<BigReal>> bs(n);
        for (size_t i = 0; i < n; ++i) {
            bs[i].clear();
            for (const auto& z : basis[i]) bs[i].push_back(to_bigreal(z, fprec));
            for (size_t j = 0; j < i; ++j) {
                BigReal d(0.0, fprec);
                for (size_t k = 0; k < bs[i].size(); ++k) {
                    BigReal bi = to_bigreal(basis[i][k], fprec);
                    d += bi * bs[j][k];
                }
                mu[i][j] = Bstar[j].is_zero() ? BigReal(0.0, fprec) : d / Bstar[j];
                for (size_t k = 0; k < bs[i].size(); ++k) bs[i][k] -= mu[i][j] * bs[j][k];
            }
            BigReal nb(0.0, fprec);
            for (const auto& v : bs[i]) nb += v * v;
            Bstar[i] = nb;
        }
    };

    gram_schmidt();
    BigReal half(0.5, fprec), delta(0.99, fprec);
    size_t k = 1;
    int guard = 0;
    while (k < n) {
        if (++guard > 100000) throw NoConvergence("lll_reduce: iteration limit");
        // Size reduction
        for (size_t j = k; j-- > 0;) {
            if (abs(mu[k][j]) > half) {
                mpz_class q = round_to_mpz(mu[k][j]);
                for (size_t t = 0; t < basis[k].size(); ++t) basis[k][t] -= q * basis[j][t];
                gram_schmidt();
            }
        }
        // Lovász condition
        BigReal lhs = Bstar[k];
        BigReal rhs = (delta - mu[k][k - 1] * mu[k][k - 1]) * Bstar[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            gram_schmidt();
            k = (k > 1) ? k - 1 : 1;
        }
    }
    (void)dot;
}

std::optional<IntPolynomial> integer_relation(const BigComplex& x, int max_degree,
                                              int max_coeff_bits) {
    long prec = x.prec();
    if (prec < 2 * max_coeff_bits + 64)
        throw InsufficientPrecision("integer_relation: too few bits for the coefficient bound");
    const long B = prec - 16;
    const bool complex_x = !x.im.is_zero();

    for (int d = 1; d <= max_degree; ++d) {
        // Rows: [e_j | round(2^B Re x^j) (, round(2^B Im x^j))], j = 0..d.
        std::vector<std::vector<mpz_class>> basis;
        BigComplex scale{BigReal::pow2(B, prec), BigReal(0.0, prec)};
        for (int j = 0; j <= d; ++j) {
            std::vector<mpz_class> row(static_cast<size_t>(d) + (complex_x ? 3 : 2), 0);
            row[j] = 1;
            BigComplex xj = pow(x, j) * scale;
            row[d + 1] = round_to_mpz(xj.re);
            if (complex_x) row[d + 2] = round_to_mpz(xj.im);
            basis.push_back(std::move(row));
        }
        lll_reduce(basis, prec + 64);

        // Shortest vector whose polynomial part is nonzero.
        for (const auto& v : basis) {
            IntPolynomial p;
            p.coeffs.assign(v.begin(), v.begin() + d + 1);
            bool zero = true;
            for (const auto& c : p.coeffs) zero = zero && (c == 0);
            if (zero) continue;
            p.normalize();
            if (p.degree() < 1) continue;
            mpz_class biggest = 0;
            for (const auto& c : p.coeffs)
                if (abs(c) > biggest) biggest = abs(c);
            if (mpz_sizeinbase(biggest.get_mpz_t(), 2) >
                static_cast<size_t>(max_coeff_bits))
                continue;  // over the coefficient budget; cannot be the answer
            BigReal val = abs(p.eval(x));
            BigReal tol = BigReal::pow2(-B / 4, prec);
            if (val < tol) return p;
            if (val < BigReal::pow2(-B / 8, prec))
                throw InsufficientPrecision(
                    "integer_relation: candidate relation in the ambiguity band");
            break;  // rows are sorted short-to-long closely enough; give up on this degree
        }
    }
    return std::nullopt;
}

}  // namespace mm
