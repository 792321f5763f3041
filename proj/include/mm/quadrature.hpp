// Tanh-sinh (double-exponential) quadrature. The substitution
// x = tanh((pi/2) sinh t) pushes the endpoints to infinity, so integrable
// endpoint singularities up to inverse-square-root type are absorbed
// without special casing.

#ifndef MM_QUADRATURE_HPP
#define MM_QUADRATURE_HPP

#include <functional>

#include "mm/real.hpp"

namespace mm {

using ComplexFn = std::function<BigComplex(const BigReal&)>;

struct QuadratureOptions {
    bool endpoint_singularity = false;
    int max_level = 11;
    long prec = 0;  // 0: inherit from eps/endpoints
};

// Integral of f over (a, b) with estimated error < eps.
// Throws NoConvergence past max_level refinements.
BigComplex adaptive_integrate(const ComplexFn& f, const BigReal& a, const BigReal& b,
                              const BigReal& eps, const QuadratureOptions& opt = {});

BigReal adaptive_integrate_real(const std::function<BigReal(const BigReal&)>& f,
                                const BigReal& a, const BigReal& b, const BigReal& eps,
                                const QuadratureOptions& opt = {});

}  // namespace mm

#endif
