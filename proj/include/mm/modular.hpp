// Numeric evaluation of eta, lambda, j and the Weber functions at points
// in the upper half plane, at arbitrary precision.

#ifndef MM_MODULAR_HPP
#define MM_MODULAR_HPP

#include "mm/real.hpp"

namespace mm {

// Dedekind eta via the pentagonal series after reducing the argument into
// the fundamental domain with T and S moves.
BigComplex eta_numeric(const BigComplex& tau, long prec = 0);

// lambda(2*tau) as the eta quotient 16 eta(tau)^8 eta(4tau)^16 / eta(2tau)^24.
BigComplex lambda2(const BigComplex& tau, long prec = 0);

// Klein j from E4^3 / Delta.
BigComplex j_numeric(const BigComplex& tau, long prec = 0);

// Weber f, f1, f2.
BigComplex weber_f(const BigComplex& tau, long prec = 0);
BigComplex weber_f1(const BigComplex& tau, long prec = 0);
BigComplex weber_f2(const BigComplex& tau, long prec = 0);

// k = 4 / sqrt(lambda(2*tau)), principal square root.
BigComplex k_from_tau(const BigComplex& tau, long prec = 0);

}  // namespace mm

#endif
