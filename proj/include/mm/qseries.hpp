// Exact truncated q-expansions on the exponent grid (1/24)Z.
//
// A PowerSeriesZ is q^(base24/24) * sum_{i<order} c[i] q^i with exact
// rational coefficients; indices at or beyond the truncation order are
// unknown, never assumed zero.

#ifndef MM_QSERIES_HPP
#define MM_QSERIES_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mm {

struct PowerSeriesZ {
    long base24 = 0;               // leading exponent in units of 1/24
    std::vector<mpq_class> c;      // c[i] multiplies q^(base24/24 + i)

    long order() const { return static_cast<long>(c.size()); }
    const mpq_class& coeff(long i) const;  // i indexes q^i past the base

    PowerSeriesZ& scaled(const mpq_class& s);
    PowerSeriesZ dilated(long d) const;  // q -> q^d
    PowerSeriesZ truncated(long new_order) const;

    friend PowerSeriesZ operator+(const PowerSeriesZ& a, const PowerSeriesZ& b);
    friend PowerSeriesZ operator-(const PowerSeriesZ& a, const PowerSeriesZ& b);
    friend PowerSeriesZ operator*(const PowerSeriesZ& a, const PowerSeriesZ& b);
    PowerSeriesZ inverse() const;        // needs unit (nonzero) leading coefficient
    PowerSeriesZ power(long e) const;    // negative e via inverse

    // Exact coefficient of q^n for a series on the integer grid
    // (base24 divisible by 24); zero off-grid positions below the horizon.
    mpq_class integer_coeff(long n) const;
    long integer_horizon() const;  // coefficients of q^n known for n < horizon

    std::string str(long max_terms = 8) const;
    std::string to_json() const;
};

struct EtaQuotient {
    std::vector<std::pair<long, long>> factors;  // (divisor m, exponent r_m), m distinct
};

struct ModularityInfo {
    mpq_class weight;
    long level = 0;
    long character_discriminant = 1;
};

struct ThetaSpec {
    long A = 1, B = 0, C = 1;        // positive definite quadratic form
    mpq_class alpha = 0, beta = 0;   // spherical linear form alpha*m + beta*n
    enum class CharSlot { M, N } slot = CharSlot::N;  // argument of chi_{-4}
    mpq_class scale = 1;
    std::optional<std::pair<int, int>> mod2;  // (m mod 2, n mod 2) constraint
};

// Kronecker symbol (-4/n).
int chi_minus4(long n);

// Euler/pentagonal expansion of eta(m*tau), truncated at `order` coefficients.
PowerSeriesZ eta_expansion(long order, long m = 1);

PowerSeriesZ eta_quotient_expansion(const EtaQuotient& eq, long order);

// Ligozat-style congruence conditions with a search over candidate levels
// (multiples of lcm of the divisors, up to level_bound).
std::optional<ModularityInfo> eta_quotient_modularity(const EtaQuotient& eq,
                                                      long level_bound = 4096);

PowerSeriesZ theta_expansion(const ThetaSpec& spec, long order);

long sturm_bound(long level, long weight);

struct SturmResult {
    bool equal = false;
    std::optional<long> first_mismatch;
};
SturmResult sturm_compare(const PowerSeriesZ& lhs, const PowerSeriesZ& rhs, long level,
                          long weight);

}  // namespace mm

#endif
