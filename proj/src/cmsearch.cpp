#include "mm/cmsearch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "mm/errors.hpp"
#include "mm/modular.hpp"

namespace mm {

const std::array<Mat2, 8>& fprime_cover() {
    static const std::array<Mat2, 8> cover = {{
        {1, 0, 0, 1},    // I
        {0, -1, 1, 0},   // S
        {0, -1, 1, 1},   // ST
        {0, -1, 1, -1},  // ST^-1
        {0, -1, 1, 2},   // ST^2
        {0, -1, 1, -2},  // ST^-2
        {-1, 0, 2, -1},  // ST^2 S
        {-1, 0, -2, -1}, // ST^-2 S
    }};
    return cover;
}

QuadForm matrix_act(const Mat2& g, const QuadForm& f) {
    // root tau of f maps to (p tau + q)/(r tau + s), a root of the
    // transformed form below (f composed with the inverse matrix)
    long a = f.a * g.s * g.s - f.b * g.s * g.r + f.c * g.r * g.r;
    long b = -2 * f.a * g.s * g.q + f.b * (g.s * g.p + g.q * g.r) - 2 * f.c * g.r * g.p;
    long c = f.a * g.q * g.q - f.b * g.q * g.p + f.c * g.p * g.p;
    QuadForm out{a, b, c};
    long g_ = std::gcd(std::gcd(out.a, std::labs(out.b)), out.c);
    if (g_ == 0) throw DomainError("matrix_act: degenerate image");
    out.a /= g_; out.b /= g_; out.c /= g_;
    if (out.a < 0) { out.a = -out.a; out.b = -out.b; out.c = -out.c; }
    return out;
}

std::string lambda_key_of(const BigComplex& z) {
    double re = z.re.to_double();
    double im = z.im.to_double();
    double mag = std::max({std::abs(re), std::abs(im), 1e-300});
    // snap numerical noise so real values do not split on the sign of a
    // residual imaginary part
    if (std::abs(re) < 1e-12 * mag) re = 0.0;
    if (std::abs(im) < 1e-12 * mag) im = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4e,%.4e", re, im);
    return buf;
}

namespace {

long class_number_cached(long D) {
    static std::map<long, long> cache;
    auto it = cache.find(D);
    if (it != cache.end()) return it->second;
    long h = class_number(D);
    cache[D] = h;
    return h;
}

}  // namespace

std::vector<CMPoint> search_cm_points(long max_product, long prec) {
    // Discriminants of class number 1 and 2. Every imaginary quadratic
    // discriminant with h <= 2 satisfies |D| <= 427; enumerating past that
    // is re-verified in the tests.
    std::vector<long> small_h = discriminants_with_h(1, 500);
    {
        auto h2list = discriminants_with_h(2, 500);
        small_h.insert(small_h.end(), h2list.begin(), h2list.end());
    }

    // Both class numbers h(D_tau) and h(D_{4 tau}) are bounded by
    // max_product / 2 individually; allowing one factor up to max_product
    // admits further points (e.g. the root of x^2 + 2 with
    // h(D_tau) = 1, h(D_{4 tau}) = 4) that fall outside the classified list.
    long factor_bound = max_product / 2;

    std::map<std::string, CMPoint> classes;
    for (long D : small_h) {
        long hD = class_number_cached(D);
        if (hD > factor_bound) continue;
        for (const QuadForm& f : reduced_forms(D)) {
            for (const Mat2& g : fprime_cover()) {
                QuadForm p = matrix_act(g, f);
                if (!root_in_Fprime(p)) continue;
                long h4 = class_number_cached(cm_scale(p, 4).disc());
                if (h4 > factor_bound || hD * h4 > max_product) continue;
                BigComplex lam = lambda2(tau_of(p, prec), prec);
                std::string key = lambda_key_of(lam);
                auto it = classes.find(key);
                if (it == classes.end()) {
                    CMPoint pt;
                    pt.form = p;
                    pt.h2 = class_number_cached(cm_scale(p, 2).disc());
                    pt.h_product = hD * h4;
                    pt.lambda = lam;
                    pt.lambda_key = key;
                    pt.equivalents.push_back(p);
                    classes.emplace(key, std::move(pt));
                } else {
                    CMPoint& pt = it->second;
                    if (std::find(pt.equivalents.begin(), pt.equivalents.end(), p) ==
                        pt.equivalents.end())
                        pt.equivalents.push_back(p);
                    if (p < pt.form) pt.form = p;
                }
            }
        }
    }

    std::vector<CMPoint> out;
    out.reserve(classes.size());
    for (auto& [key, pt] : classes) {
        std::sort(pt.equivalents.begin(), pt.equivalents.end());
        out.push_back(std::move(pt));
    }
    std::sort(out.begin(), out.end(),
              [](const CMPoint& x, const CMPoint& y) { return x.form < y.form; });
    return out;
}

}  // namespace mm
