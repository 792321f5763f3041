// L(f,2) for weight-2 forms given as theta series, eta quotients, or
// rational linear combinations with dilations, plus the embedded table of
// Mahler-measure / L-value identities.

#ifndef MM_LVALUES_HPP
#define MM_LVALUES_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mm/errors.hpp"
#include "mm/qseries.hpp"
#include "mm/real.hpp"

namespace mm {

struct FormSpec {
    enum class Kind { theta, eta, combo } kind = Kind::theta;
    ThetaSpec theta;
    EtaQuotient eta;
    struct Term {
        mpq_class coeff;
        long dilation = 1;  // inner evaluated at (dilation * tau)
        std::shared_ptr<const FormSpec> inner;
    };
    std::vector<Term> terms;
    long level = 0;

    static FormSpec make_theta(const ThetaSpec& t, long level);
    static FormSpec make_eta(const EtaQuotient& e, long level);
    static FormSpec make_combo(std::vector<Term> terms, long level);
};

PowerSeriesZ form_expansion(const FormSpec& spec, long order);
std::vector<mpq_class> form_coefficients(const FormSpec& spec, long nmax);

// L(f,2) = 4 pi^2 int_0^infty f(it) t dt.  The integral over [t_min, infty)
// is summed term by term (exact per term); the remainder below t_min is
// bounded with a cusp-decay model kappa t^-2 exp(-2 pi/(level t)) calibrated
// at t_min, and t_min is shrunk until that bound meets eps.
BigReal lvalue2(const FormSpec& spec, const BigReal& eps, long prec = 0);

// Solve L1 = a Lf + conj(a) Lg, L2 = b Lf + conj(b) Lg and check that
// Lg = conj(Lf) within tol.
std::pair<BigComplex, BigComplex> extract_conjugate_pair(const BigComplex& L1,
                                                         const BigComplex& L2,
                                                         const BigComplex& a,
                                                         const BigComplex& b,
                                                         const BigReal& tol);

// One row of the identity table: m(k) = (c_r sqrt(c_s) / pi^2) L(f, 2)
// where k = principal sqrt of ku + kv*sqrt(kd) (kd may be negative).
struct IdentityRecord {
    std::string k_display;
    mpq_class ku, kv;
    long kd = 1;
    mpq_class c_r;
    long c_s = 1;
    long level = 0;
    ThetaSpec form;
};

const std::vector<IdentityRecord>& identity_table();  // 35 rows

BigComplex k_value(const IdentityRecord& row, long prec);

struct IdentityResult {
    BigReal m, cL, residual;
};

IdentityResult verify_identity(const IdentityRecord& row, const BigReal& eps, long prec = 0);

}  // namespace mm

#endif
