#include "mm/quadforms.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numeric>

#include "mm/errors.hpp"

namespace mm {

bool QuadForm::is_reduced() const {
    long ab = std::labs(b);
    if (!(ab <= a && a <= c)) return false;
    if (b < 0 && (ab == a || a == c)) return false;
    return true;
}

bool QuadForm::primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }

QuadForm reduce_form(QuadForm f) {
    if (f.disc() >= 0) throw BadDiscriminant("reduce_form: discriminant must be negative");
    if (f.a < 0) { f.a = -f.a; f.b = -f.b; f.c = -f.c; }
    if (f.a == 0) throw DomainError("reduce_form: degenerate form");
    long D = f.disc();
    for (int iter = 0; iter < 100000; ++iter) {
        // translate b into (-a, a]
        long twoa = 2 * f.a;
        long r = f.b % twoa;
        if (r <= -f.a) r += twoa;
        else if (r > f.a) r -= twoa;
        if (r != f.b) {
            f.b = r;
            f.c = (r * r - D) / (4 * f.a);
        }
        if (f.a > f.c) {
            long t = f.a; f.a = f.c; f.c = t;
            f.b = -f.b;
            continue;
        }
        if (f.b < 0 && (f.a == f.c || -f.b == f.a)) f.b = -f.b;
        return f;
    }
    throw NoConvergence("reduce_form did not terminate");
}

std::vector<QuadForm> reduced_forms(long D) {
    if (D >= 0 || ((D % 4 + 4) % 4 != 0 && (D % 4 + 4) % 4 != 1))
        throw BadDiscriminant("reduced_forms: D must be negative, 0 or 1 mod 4");
    std::vector<QuadForm> out;
    long amax = static_cast<long>(std::sqrt(static_cast<double>(-D) / 3.0)) + 1;
    for (long a = 1; a <= amax; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if (((b - D) % 2 + 2) % 2 != 0) continue;
            long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            QuadForm f{a, b, c};
            if (!f.is_reduced() || !f.primitive()) continue;
            out.push_back(f);
        }
    }
    return out;
}

long class_number(long D) { return static_cast<long>(reduced_forms(D).size()); }

int kronecker_symbol(long D, long p) {
    mpz_class d(D);
    return mpz_kronecker_si(d.get_mpz_t(), p);
}

long class_number_by_order_formula(long D0, long m) {
    long h0 = class_number(D0);
    long units = (D0 == -3) ? 3 : (D0 == -4) ? 2 : 1;
    long num = h0 * m;
    long den = units;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        num /= p;
        num *= p - kronecker_symbol(D0, p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) {
        num /= n;
        num *= n - kronecker_symbol(D0, n);
    }
    if (num % den != 0) throw DomainError("order formula: unit index does not divide");
    return num / den;
}

std::vector<long> discriminants_with_h(long h, long bound) {
    std::vector<long> out;
    for (long D = -3; D >= -bound; --D) {
        long r = (D % 4 + 4) % 4;
        if (r != 0 && r != 1) continue;
        if (class_number(D) == h) out.push_back(D);
    }
    return out;
}

BigComplex tau_of(const QuadForm& f, long prec) {
    long p = prec > 0 ? prec : BigReal::kDefaultPrec;
    long D = f.disc();
    if (D >= 0 || f.a <= 0) throw DomainError("tau_of: need a positive definite form");
    BigReal den = BigReal(2 * f.a, p);
    return {BigReal(-f.b, p) / den, sqrt(BigReal(-D, p)) / den};
}

QuadForm cm_scale(const QuadForm& f, long n) {
    if (n == 0) throw DomainError("cm_scale: zero multiplier");
    QuadForm g{f.a, n * f.b, n * n * f.c};
    long g_ = std::gcd(std::gcd(g.a, g.b), g.c);
    g.a /= g_; g.b /= g_; g.c /= g_;
    return g;
}

bool root_in_F(const QuadForm& f) {
    return std::labs(f.b) <= f.a && f.a <= f.c;
}

bool root_in_Fprime(const QuadForm& f) {
    // |tau +- 1/4|^2 - 1/16 = |tau|^2 +- Re(tau)/2 = (4c -+ b) / (4a) * (1/4)... sign only
    return std::labs(f.b) <= f.a && 4 * f.c >= std::labs(f.b);
}

std::pair<long, long> fundamental_part(long D) {
    if (D >= 0) throw BadDiscriminant("fundamental_part: D must be negative");
    for (long m = static_cast<long>(std::sqrt(static_cast<double>(-D))) + 1; m >= 1; --m) {
        if (D % (m * m) != 0) continue;
        long D0 = D / (m * m);
        long r = (D0 % 4 + 4) % 4;
        if (r != 0 && r != 1) continue;
        // D0 fundamental: squarefree odd part and D0 = 1 mod 4, or D0/4 squarefree
        // with D0/4 = 2 or 3 mod 4; the maximal m guarantees this
        return {m, D0};
    }
    throw BadDiscriminant("fundamental_part: not a discriminant");
}

}  // namespace mm
