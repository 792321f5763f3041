// Mahler measure of P_k = x + 1/x + y + 1/y + k, by Jensen reduction on
// |x| = 1 and by the weight-(2,1) lattice sum attached to a CM point.

#ifndef MM_MAHLER_HPP
#define MM_MAHLER_HPP

#include <utility>
#include <vector>

#include "mm/errors.hpp"
#include "mm/real.hpp"

namespace mm {

// Angles in (0, pi) where |2 cos(theta) + k| = 2, i.e. where the two
// y-roots merge on the unit circle. Empty for non-real k.
struct BranchData {
    std::vector<BigReal> crossings;
    // Subintervals of [0, pi] (pairs of endpoints) where |y1| > 1; the
    // complement carries conjugate roots on the circle and contributes 0.
    std::vector<std::pair<BigReal, BigReal>> panels;
};

BranchData branch_data(const BigComplex& k, long prec = 0);

// Roots of y^2 + (x + 1/x + k) y + 1 = 0, ordered |y1| >= |y2|.
std::pair<BigComplex, BigComplex> roots_y(const BigComplex& x, const BigComplex& k,
                                          long prec = 0);

// m(k) = (1/pi) * integral over the real-root panels of log|y1|.
BigReal mahler_jensen(const BigComplex& k, const BigReal& eps, long prec = 0);

enum class LatticeStrategy { direct, accelerated };

// m(k) for k = 4/sqrt(lambda(2 tau)) as
// Re(16 Im(tau)/pi^2 * sum' chi_{-4}(n) / ((4m tau + n)^2 (4m conj(tau) + n))),
// the n-sum taken first.  `direct` truncates in double precision (floor
// around 1e-6); `accelerated` sums the exact secant/tangent closed form of
// each n-line, converging like e^{-2 pi |m| Im tau}.
BigReal mahler_lattice(const BigComplex& tau, const BigReal& eps, LatticeStrategy strategy,
                       long prec = 0);

}  // namespace mm

#endif
