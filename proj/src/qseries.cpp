#include "mm/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mm/errors.hpp"

namespace mm {

static const mpq_class kZero = 0;

const mpq_class& PowerSeriesZ::coeff(long i) const {
    if (i < 0) return kZero;
    if (i >= order()) throw TruncationTooShort("coefficient index beyond truncation order");
    return c[static_cast<size_t>(i)];
}

PowerSeriesZ& PowerSeriesZ::scaled(const mpq_class& s) {
    for (auto& x : c) x *= s;
    return *this;
}

PowerSeriesZ PowerSeriesZ::dilated(long d) const {
    if (d <= 0) throw DomainError("dilation factor must be positive");
    PowerSeriesZ r;
    r.base24 = base24 * d;
    r.c.assign(static_cast<size_t>((order() - 1) * d + 1), 0);
    for (long i = 0; i < order(); ++i) r.c[static_cast<size_t>(i * d)] = c[static_cast<size_t>(i)];
    return r;
}

PowerSeriesZ PowerSeriesZ::truncated(long new_order) const {
    if (new_order > order()) throw TruncationTooShort("cannot extend a truncated series");
    PowerSeriesZ r;
    r.base24 = base24;
    r.c.assign(c.begin(), c.begin() + new_order);
    return r;
}

PowerSeriesZ operator+(const PowerSeriesZ& a, const PowerSeriesZ& b) {
    long diff = a.base24 - b.base24;
    if (diff % 24 != 0)
        throw DomainError("series live on incompatible exponent grids");
    // align to the smaller base
    const PowerSeriesZ& lo = (diff >= 0) ? b : a;
    const PowerSeriesZ& hi = (diff >= 0) ? a : b;
    long shift = std::labs(diff) / 24;
    long new_order = std::min(lo.order(), hi.order() + shift);
    if (new_order <= 0) throw TruncationTooShort("sum has no known coefficients");
    PowerSeriesZ r;
    r.base24 = lo.base24;
    r.c.assign(static_cast<size_t>(new_order), 0);
    for (long i = 0; i < new_order; ++i) {
        mpq_class v = lo.c[static_cast<size_t>(i)];
        if (i >= shift) v += hi.c[static_cast<size_t>(i - shift)];
        r.c[static_cast<size_t>(i)] = v;
    }
    return r;
}

PowerSeriesZ operator-(const PowerSeriesZ& a, const PowerSeriesZ& b) {
    PowerSeriesZ nb = b;
    nb.scaled(-1);
    return a + nb;
}

PowerSeriesZ operator*(const PowerSeriesZ& a, const PowerSeriesZ& b) {
    long new_order = std::min(a.order(), b.order());
    if (new_order <= 0) throw TruncationTooShort("product has no known coefficients");
    PowerSeriesZ r;
    r.base24 = a.base24 + b.base24;
    r.c.assign(static_cast<size_t>(new_order), 0);
    for (long i = 0; i < std::min(a.order(), new_order); ++i) {
        if (a.c[static_cast<size_t>(i)] == 0) continue;
        long jmax = std::min(b.order(), new_order - i);
        for (long j = 0; j < jmax; ++j) {
            if (b.c[static_cast<size_t>(j)] == 0) continue;
            r.c[static_cast<size_t>(i + j)] += a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)];
        }
    }
    return r;
}

PowerSeriesZ PowerSeriesZ::inverse() const {
    if (order() <= 0 || c[0] == 0)
        throw DomainError("series inversion needs a nonzero leading coefficient");
    PowerSeriesZ r;
    r.base24 = -base24;
    r.c.assign(c.size(), 0);
    mpq_class lead_inv = 1 / c[0];
    r.c[0] = lead_inv;
    for (long n = 1; n < order(); ++n) {
        mpq_class s = 0;
        for (long k = 1; k <= n; ++k) s += c[static_cast<size_t>(k)] * r.c[static_cast<size_t>(n - k)];
        r.c[static_cast<size_t>(n)] = -lead_inv * s;
    }
    return r;
}

PowerSeriesZ PowerSeriesZ::power(long e) const {
    PowerSeriesZ base = (e < 0) ? inverse() : *this;
    long n = std::labs(e);
    PowerSeriesZ r;
    r.base24 = 0;
    r.c.assign(c.size(), 0);
    r.c[0] = 1;
    while (n > 0) {
        if (n & 1) r = r * base;
        if (n >>= 1) base = base * base;
    }
    return r;
}

mpq_class PowerSeriesZ::integer_coeff(long n) const {
    if (base24 % 24 != 0) throw DomainError("series not on the integer exponent grid");
    long i = n - base24 / 24;
    if (i < 0) return 0;
    return coeff(i);
}

long PowerSeriesZ::integer_horizon() const {
    if (base24 % 24 != 0) throw DomainError("series not on the integer exponent grid");
    return base24 / 24 + order();
}

std::string PowerSeriesZ::str(long max_terms) const {
    std::ostringstream os;
    long shown = 0;
    for (long i = 0; i < order() && shown < max_terms; ++i) {
        const mpq_class& v = c[static_cast<size_t>(i)];
        if (v == 0) continue;
        if (shown > 0) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        mpq_class a = abs(v);
        long num = base24 + 24 * i;
        bool unit = (a == 1) && num != 0;
        if (!unit) os << a.get_str();
        if (num != 0) {
            if (!unit) os << "*";
            os << "q";
            if (num % 24 == 0) {
                if (num != 24) os << "^" << num / 24;
            } else {
                os << "^(" << num << "/24)";
            }
        }
        ++shown;
    }
    if (shown == 0) os << "0";
    os << " + O(q^" << (base24 + 24 * order()) << "/24)";
    return os.str();
}

std::string PowerSeriesZ::to_json() const {
    std::ostringstream os;
    os << "{\"base_exponent_num\":" << base24 << ",\"base_exponent_den\":24,\"order\":" << order()
       << ",\"coefficients\":[";
    for (long i = 0; i < order(); ++i) {
        if (i) os << ",";
        os << "\"" << c[static_cast<size_t>(i)].get_str() << "\"";
    }
    os << "]}";
    return os.str();
}

int chi_minus4(long n) {
    long r = ((n % 4) + 4) % 4;
    if (r == 1) return 1;
    if (r == 3) return -1;
    return 0;
}

PowerSeriesZ eta_expansion(long order, long m) {
    if (order <= 0 || m <= 0) throw DomainError("eta_expansion needs positive order and divisor");
    PowerSeriesZ r;
    r.base24 = m;
    r.c.assign(static_cast<size_t>(order), 0);
    // sum over k in Z of (-1)^k q^(m*k(3k-1)/2)
    for (long k = 0;; ++k) {
        long e1 = m * (k * (3 * k - 1) / 2);
        long e2 = m * (k * (3 * k + 1) / 2);
        if (e1 >= order && e2 >= order) break;
        int sgn = (k % 2 == 0) ? 1 : -1;
        if (e1 < order) r.c[static_cast<size_t>(e1)] += sgn;
        if (k > 0 && e2 < order) r.c[static_cast<size_t>(e2)] += sgn;
    }
    return r;
}

PowerSeriesZ eta_quotient_expansion(const EtaQuotient& eq, long order) {
    if (eq.factors.empty()) throw DomainError("empty eta quotient");
    PowerSeriesZ r;
    r.base24 = 0;
    r.c.assign(static_cast<size_t>(order), 0);
    r.c[0] = 1;
    for (const auto& [m, rm] : eq.factors) {
        if (rm == 0) continue;
        PowerSeriesZ em = eta_expansion(order, m);
        em.base24 = 0;  // strip the q^(m/24) prefactor; account for it below
        r = r * em.power(rm);
        r.base24 += m * rm;
    }
    return r;
}

std::optional<ModularityInfo> eta_quotient_modularity(const EtaQuotient& eq, long level_bound) {
    long sum_mr = 0, sum_r = 0;
    long l = 1;
    mpq_class prod = 1;  // product of m^r_m
    for (const auto& [m, rm] : eq.factors) {
        if (m <= 0) throw DomainError("eta quotient divisor must be positive");
        sum_mr += m * rm;
        sum_r += rm;
        l = std::lcm(l, m);
        mpq_class mm_(m);
        for (long i = 0; i < std::labs(rm); ++i) prod *= (rm > 0) ? mm_ : 1 / mm_;
    }
    if (sum_mr % 24 != 0) return std::nullopt;
    if (sum_r % 2 != 0) return std::nullopt;  // half-integral weight: out of scope
    for (long N = l; N <= level_bound; N += l) {
        long s = 0;
        bool ok = true;
        for (const auto& [m, rm] : eq.factors) {
            if (N % m != 0) { ok = false; break; }
            s += (N / m) * rm;
        }
        if (!ok) continue;
        if (s % 24 != 0) continue;
        ModularityInfo info;
        info.weight = mpq_class(sum_r, 2);
        info.weight.canonicalize();
        info.level = N;
        // character: Kronecker symbol of (-1)^k * prod m^r_m; reduce to a
        // fundamental discriminant via the squarefree part
        mpz_class num = prod.get_num() * prod.get_den();
        if (sum_r % 4 != 0) num = -num;
        mpz_class sf = 1;
        mpz_class n = abs(num);
        for (mpz_class p = 2; p * p <= n; ++p) {
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) &&
                   mpz_divisible_p(mpz_class(n / p).get_mpz_t(), p.get_mpz_t())) {
                n /= p * p;
            }
        }
        sf = (num < 0) ? -n : n;
        long d = sf.get_si();
        if (d == 1) info.character_discriminant = 1;
        else info.character_discriminant = (((d - 1) % 4 == 0)) ? d : 4 * d;
        return info;
    }
    return std::nullopt;
}

PowerSeriesZ theta_expansion(const ThetaSpec& spec, long order) {
    if (spec.A <= 0 || 4 * spec.A * spec.C - spec.B * spec.B <= 0)
        throw DomainError("theta form must be positive definite");
    PowerSeriesZ r;
    r.base24 = 0;
    r.c.assign(static_cast<size_t>(order), 0);
    // Q(m,n) = A m^2 + B m n + C n^2 < order; bound |m| via the minimum of
    // Q over n at fixed m: (A - B^2/(4C)) m^2
    double amin = spec.A - static_cast<double>(spec.B) * spec.B / (4.0 * spec.C);
    long mbound = static_cast<long>(std::sqrt(order / amin)) + 2;
    for (long m = -mbound; m <= mbound; ++m) {
        if (spec.mod2 && ((m % 2 + 2) % 2) != spec.mod2->first) continue;
        // C n^2 + B m n + (A m^2 - order) <= 0
        double disc = static_cast<double>(spec.B) * spec.B * m * m -
                      4.0 * spec.C * (static_cast<double>(spec.A) * m * m - order);
        if (disc < 0) continue;
        double sq = std::sqrt(disc);
        long nlo = static_cast<long>(std::floor((-spec.B * m - sq) / (2.0 * spec.C))) - 1;
        long nhi = static_cast<long>(std::ceil((-spec.B * m + sq) / (2.0 * spec.C))) + 1;
        for (long n = nlo; n <= nhi; ++n) {
            if (spec.mod2 && ((n % 2 + 2) % 2) != spec.mod2->second) continue;
            long q = spec.A * m * m + spec.B * m * n + spec.C * n * n;
            if (q < 0 || q >= order) continue;
            int ch = chi_minus4(spec.slot == ThetaSpec::CharSlot::N ? n : m);
            if (ch == 0) continue;
            mpq_class lin = spec.alpha * m + spec.beta * n;
            if (lin == 0) continue;
            r.c[static_cast<size_t>(q)] += spec.scale * ch * lin;
        }
    }
    return r;
}

long sturm_bound(long level, long weight) {
    if (level <= 0 || weight <= 0) throw DomainError("sturm_bound needs positive level and weight");
    // index of Gamma_0(N): N * prod_{p|N} (1 + 1/p)
    long index = level;
    long n = level;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            index = index / p * (p + 1);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) index = index / n * (n + 1);
    return (weight * index + 11) / 12;  // ceil(k * index / 12)
}

SturmResult sturm_compare(const PowerSeriesZ& lhs, const PowerSeriesZ& rhs, long level,
                          long weight) {
    long bound = sturm_bound(level, weight);
    if (lhs.integer_horizon() <= bound || rhs.integer_horizon() <= bound)
        throw TruncationTooShort("expansions shorter than the Sturm bound");
    SturmResult res;
    for (long n = 0; n <= bound; ++n) {
        if (lhs.integer_coeff(n) != rhs.integer_coeff(n)) {
            res.equal = false;
            res.first_mismatch = n;
            return res;
        }
    }
    res.equal = true;
    return res;
}

}  // namespace mm
