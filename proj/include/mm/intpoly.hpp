// Integer polynomials and minimal-polynomial recognition by lattice
// reduction on the row matrix [I | round(2^B x^j)].

#ifndef MM_INTPOLY_HPP
#define MM_INTPOLY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "mm/real.hpp"

namespace mm {

struct IntPolynomial {
    std::vector<mpz_class> coeffs;  // ascending, leading nonzero

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    void normalize();  // strip leading zeros, divide by content, leading > 0
    BigComplex eval(const BigComplex& x) const;
    std::string str() const;  // human-readable, e.g. "x^2-34x+1"

    bool operator==(const IntPolynomial&) const = default;
};

BigReal to_bigreal(const mpz_class& z, long prec);
mpz_class round_to_mpz(const BigReal& x);

// In-place LLL (delta = 0.99) on integer row vectors, Gram-Schmidt in floats
// at precision fprec.
void lll_reduce(std::vector<std::vector<mpz_class>>& basis, long fprec);

// Minimal polynomial of x of degree <= max_degree with coefficients below
// 2^max_coeff_bits, or nullopt. Throws InsufficientPrecision when the
// certificate is ambiguous at x's precision.
std::optional<IntPolynomial> integer_relation(const BigComplex& x, int max_degree,
                                              int max_coeff_bits);

}  // namespace mm

#endif
