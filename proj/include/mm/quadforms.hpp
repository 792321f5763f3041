// Binary quadratic forms a x^2 + b x y + c y^2 of negative discriminant,
// reduction, class numbers, and the root point tau in the upper half plane.

#ifndef MM_QUADFORMS_HPP
#define MM_QUADFORMS_HPP

#include <vector>

#include "mm/real.hpp"

namespace mm {

struct QuadForm {
    long a = 1, b = 0, c = 1;

    long disc() const { return b * b - 4 * a * c; }
    bool operator==(const QuadForm&) const = default;
    auto operator<=>(const QuadForm&) const = default;
    bool is_reduced() const;
    bool primitive() const;
};

// Gauss reduction to |b| <= a <= c with b >= 0 when |b| = a or a = c.
QuadForm reduce_form(QuadForm f);

// All reduced primitive forms of discriminant D < 0.
std::vector<QuadForm> reduced_forms(long D);

long class_number(long D);

// h(m^2 D0) from h(D0) by the order formula
//   h(m^2 D0) = h(D0) * m / [O_K^* : O^*] * prod_{p | m} (1 - (D0/p)/p).
long class_number_by_order_formula(long D0, long m);

// Imaginary quadratic discriminants (not necessarily fundamental) with
// class number 1 or 2, found by bounded enumeration.
std::vector<long> discriminants_with_h(long h, long bound = 100000);

// Root of a x^2 + b x + c = 0 in the upper half plane.
BigComplex tau_of(const QuadForm& f, long prec = 0);

// Form whose root is n * tau for tau the root of f (content removed).
QuadForm cm_scale(const QuadForm& f, long n);

// Exact membership of the root point in the standard fundamental domain F
// and in F' = { |Re| <= 1/2, |tau +- 1/4| >= 1/4 }.
bool root_in_F(const QuadForm& f);
bool root_in_Fprime(const QuadForm& f);

// Kronecker symbol (D/p) for odd or even prime p.
int kronecker_symbol(long D, long p);

// Largest m with m^2 | D and D/m^2 still a discriminant (0 or 1 mod 4);
// writes D = m^2 * D0 with D0 fundamental.
std::pair<long, long> fundamental_part(long D);

}  // namespace mm

#endif
