// Search for CM points in the region F' = { |Re tau| <= 1/2,
// |tau +- 1/4| >= 1/4 } with small class numbers, classified by the value
// of lambda(2 tau) to five significant digits.

#ifndef MM_CMSEARCH_HPP
#define MM_CMSEARCH_HPP

#include <array>
#include <string>
#include <vector>

#include "mm/quadforms.hpp"

namespace mm {

struct Mat2 {
    long p, q, r, s;  // (p q; r s), det 1
};

// The eight coset representatives whose translates of the standard
// fundamental domain cover F'.
const std::array<Mat2, 8>& fprime_cover();

// Form of the image point gamma(tau) for tau the root of f.
QuadForm matrix_act(const Mat2& g, const QuadForm& f);

struct CMPoint {
    QuadForm form;            // primitive form of tau_0, a > 0
    long h2 = 0;              // h(D_{2 tau_0})
    long h_product = 0;       // h(D_{tau_0}) h(D_{4 tau_0})
    BigComplex lambda;        // lambda(2 tau_0)
    std::string lambda_key;   // 5-significant-digit classifier
    std::vector<QuadForm> equivalents;  // all forms in F' with this lambda
};

// Round both parts of z to 5 significant digits, as a dedup key.
std::string lambda_key_of(const BigComplex& z);

// All CM points in F' with h(D_tau) h(D_{4 tau}) <= max_product, one
// representative per lambda(2 tau) value. Deterministic order: sorted by
// the representative form, which is the lexicographically least candidate.
std::vector<CMPoint> search_cm_points(long max_product = 4, long prec = 128);

}  // namespace mm

#endif
