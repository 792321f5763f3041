// Regulator pipeline over real quadratic fields: exact Q(sqrt d) arithmetic,
// the two curve charts, Velu isogenies driven by kernel polynomials, Deninger
// paths, period and eta line integrals, pushforward multipliers, and the
// final R vs const/pi^4 * L * L comparisons for the five embedded cases.

#ifndef MM_BEILINSON_HPP
#define MM_BEILINSON_HPP

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "mm/errors.hpp"
#include "mm/lvalues.hpp"
#include "mm/real.hpp"

namespace mm {

// ---------------------------------------------------------------------------
// Exact arithmetic in Q(sqrt d), d squarefree (value u + v*sqrt(d)).
// ---------------------------------------------------------------------------

struct QuadFieldElem {
    long d = 1;
    mpq_class u = 0, v = 0;

    QuadFieldElem() = default;
    QuadFieldElem(long d_, mpq_class u_, mpq_class v_ = 0)
        : d(d_), u(std::move(u_)), v(std::move(v_)) {}

    bool is_zero() const { return u == 0 && v == 0; }
    QuadFieldElem sigma() const { return {d, u, -v}; }  // sqrt(d) -> -sqrt(d)

    // Numeric embedding; conj=true uses the sigma embedding.
    BigReal embed(long prec, bool conj = false) const;

    friend QuadFieldElem operator+(const QuadFieldElem& a, const QuadFieldElem& b);
    friend QuadFieldElem operator-(const QuadFieldElem& a, const QuadFieldElem& b);
    friend QuadFieldElem operator-(const QuadFieldElem& a);
    friend QuadFieldElem operator*(const QuadFieldElem& a, const QuadFieldElem& b);
    friend QuadFieldElem operator*(const QuadFieldElem& a, const mpq_class& c);
    friend bool operator==(const QuadFieldElem& a, const QuadFieldElem& b);
    QuadFieldElem inv() const;  // throws DomainError on zero
};

// Polynomials with QuadFieldElem coefficients, index = degree.
using KPoly = std::vector<QuadFieldElem>;

KPoly kp_add(const KPoly& a, const KPoly& b);
KPoly kp_sub(const KPoly& a, const KPoly& b);
KPoly kp_mul(const KPoly& a, const KPoly& b);
KPoly kp_scale(const KPoly& a, const QuadFieldElem& c);
KPoly kp_derivative(const KPoly& a);
bool kp_is_zero(const KPoly& a);
long kp_degree(const KPoly& a);  // -1 for zero
BigComplex kp_eval(const KPoly& a, const BigComplex& x, long prec, bool conj = false);
QuadFieldElem kp_eval_exact(const KPoly& a, const QuadFieldElem& x);

// ---------------------------------------------------------------------------
// Curves and maps.
// ---------------------------------------------------------------------------

enum class Chart { eq14, eq71 };  // Y^2 = X^3 + (k^2/4-2)X^2 + X  /  ... + (k^2/2-4)X^2 + 4X

struct Curve {
    Chart chart = Chart::eq14;
    QuadFieldElem a2, a4, a6;  // a1 = a3 = 0
};

// k^2 = k2 (exact); chart selects the a2/a4 shape.
Curve curve_from_k(const QuadFieldElem& k2, Chart chart);

// X-map xn/xd, Y-map  Y * yn/yd.
struct RationalMapK {
    KPoly xn, xd, yn, yd;
};

struct Isogeny {
    Curve domain, codomain;
    RationalMapK map;
    long degree = 0;
    std::vector<QuadFieldElem> kernel_two_torsion_x;  // distinct 2-torsion x-coords
    KPoly kernel_pair_poly;                           // monic, roots = +-pairs
};

// Velu / Kohel construction from the kernel polynomial data.  The pair factor
// must be monic; throws KernelNotSubgroup when the closure relations fail
// (detected as non-exact cancellation in the codomain check).
Isogeny velu_isogeny(const Curve& E,
                     const std::vector<QuadFieldElem>& two_torsion_x,
                     const KPoly& pair_poly);

// (X,Y) -> (u2*X + r, u3*Y) with u3^2 = u2^3; returns the transformed curve.
Curve twist_curve(const Curve& E, const QuadFieldElem& u2, const QuadFieldElem& u3,
                  const QuadFieldElem& r);
// Applies the same substitution to an isogeny's codomain and maps.
Isogeny twist_isogeny(const Isogeny& phi, const QuadFieldElem& u2,
                      const QuadFieldElem& u3, const QuadFieldElem& r);

// ---------------------------------------------------------------------------
// Numeric points and group law (BigComplex coordinates).
// ---------------------------------------------------------------------------

struct CPoint {
    bool inf = true;
    BigComplex x, y;
};

struct NumCurve {  // numeric embedding of a Curve
    BigComplex a2, a4, a6;
    long prec = 0;
};

NumCurve embed_curve(const Curve& E, long prec, bool conj = false);
BigComplex curve_rhs(const NumCurve& E, const BigComplex& x);
CPoint ec_neg(const CPoint& P);
CPoint ec_add(const NumCurve& E, const CPoint& P, const CPoint& Q);
CPoint ec_mul(const NumCurve& E, long n, const CPoint& P);
// Point with given x on E (principal-branch y).
CPoint ec_lift_x(const NumCurve& E, const BigComplex& x);
BigReal ec_on_curve_residual(const NumCurve& E, const CPoint& P);

// Apply a rational map numerically (conj selects the sigma embedding of the
// coefficients).
CPoint apply_isogeny(const Isogeny& phi, const CPoint& P, long prec, bool conj = false);

// ---------------------------------------------------------------------------
// Paths, integrals, periods.
// ---------------------------------------------------------------------------

struct PathSegment {
    BigReal theta_a, theta_b;
    int branch = 1;       // 1: |y| >= 1 root, 2: the other
    int orientation = 1;  // +1: theta increasing
};

struct PathSpec {
    Chart chart = Chart::eq14;
    BigComplex k;
    std::vector<PathSegment> segments;
    bool is_loop = false;  // single full loop on branch 1
};

// The y-branches of y + 1/y + x + 1/x + k = 0 at x = e^{i theta}:
// branch 1 has |y| >= 1.
std::pair<BigComplex, BigComplex> torus_y_roots(const BigReal& theta, const BigComplex& k,
                                                long prec);

struct CaseData;  // forward declaration (full definition below)

enum class Side { plus, minus };

PathSpec deninger_path(const CaseData& cs, Side side, long prec);

// Integral of the holomorphic differential dX/(2Y) over the path, using the
// closed-form chart substitution X(x, y).
BigComplex path_integral_omega(const CaseData& cs, Side side, const PathSpec& path,
                               const BigReal& eps, long prec);

// Period of the lattice of E (embedding per `conj`) that is a generator in the
// direction of `target` (the path integral): returns the period and the signed
// integer ratio target/period (must be +-1, else AGMBranchFailure).
struct PeriodPair {
    BigComplex omega1, omega2;
};
PeriodPair fundamental_periods(const Curve& E, long prec, bool conj = false);
// Certifies target / P in {+1, -1} for some pure-imaginary lattice generator P
// built from the AGM basis; returns {P, sign}.
std::pair<BigComplex, int> certify_generator(const PeriodPair& periods,
                                             const BigComplex& target, const BigReal& tol);

// ---------------------------------------------------------------------------
// Case dossiers and regulator assembly.
// ---------------------------------------------------------------------------

enum class Symbol { M1, M2 };

struct PairingEntry {
    long coef = 0;     // closed form = coef * m(k_side)
    Side side = Side::plus;
};

struct CaseData {
    std::string id;  // "6", "7.1", "7.2", "7.3", "7.4"
    long d = 0;      // field Q(sqrt d)
    Chart chart = Chart::eq14;
    QuadFieldElem k2_plus;  // k^2 of the plus curve; sigma gives the minus one
    int k_minus_sign = 1;   // sign of the minus-side k (k_minus = sign * sqrt(sigma(k^2)))
    std::string k_plus_display, k_minus_display;

    // Kernel of phi : E_plus -> (twist) -> E_minus.
    std::vector<QuadFieldElem> kernel_two_torsion_x;
    KPoly kernel_pair_poly;
    long degree = 0;

    // Post-Velu isomorphism onto the sigma curve.
    QuadFieldElem tw_u2, tw_u3, tw_r;

    // Printed rational maps of the composed isogeny (X-map pxn/pxd, Y-scalar pyn/pyd).
    RationalMapK printed_map;

    int compose_sign = 1;          // phi^sigma . phi = [compose_sign * degree]
    QuadFieldElem diff_multiplier; // phi^* omega' = c * omega

    // Closed-form pairing matrix, indexed [symbol][side]:
    // [[<gE,M1>, <gEs,M1>], [<gE,M2>, <gEs,M2>]].
    PairingEntry pairing[2][2];

    long reg_const = 0;  // R = reg_const / pi^4 * L(f,2) L(g,2)

    // L-side: indices into identity_table() rows, and the conjugate-pair
    // extraction coefficients (for d7x cases; section 6 uses the two rows
    // directly as L(f64), L(f32)).
    int row_L1 = -1, row_L2 = -1;
    bool direct_L = false;  // true: Lf = L(form_f), Lg = L(form_g) directly
    FormSpec form_f, form_g;  // eta-quotient forms (direct_L cases)
    // L1 = alpha Lf + conj(alpha) Lg, L2 = beta Lf + conj(beta) Lg where
    // alpha = au + av*i*sqrt(dneg), etc. (exact rationals, dneg = d of field).
    mpq_class al_u, al_v, be_u, be_v;

    std::string lmfdb_curve, lmfdb_form;
};

const std::vector<CaseData>& regulator_cases();  // the five cases
const CaseData& regulator_case_by_id(const std::string& id);

Curve case_curve(const CaseData& cs, Side side);

struct IsogenyCheckReport {
    BigReal max_codomain_residual;   // images satisfy the codomain equation
    BigReal max_compose_residual;    // phi^sigma(phi(P)) vs [+-n]P
    BigReal multiplier_residual;     // measured c vs stored diff_multiplier
    BigReal velu_vs_printed;         // Velu map vs printed map at random points
    int compose_sign = 0;
};

IsogenyCheckReport check_isogeny_identities(const CaseData& cs, long prec);

// (1/2 pi) int eta(a,b) over the path: direct line integral, and the paper's
// closed form from the pairing table; returns {direct, closed, difference}.
struct PairingValue {
    BigReal direct, closed, difference;
};
PairingValue regulator_pairing(const CaseData& cs, Side side, Symbol sym,
                               const BigReal& eps, long prec);

struct RegulatorReport {
    std::string id;
    BigReal m_plus, m_minus;
    BigReal matrix[2][2];
    int mult_a = 0, mult_b = 0;
    BigReal R;
    BigComplex Lf, Lg;
    BigReal R_target;
    BigReal residual;
};

// a = (c * int_{gE} w) / int_{gEs} w' rounded, likewise b; a*b = +-degree.
std::pair<int, int> pushforward_multipliers(const CaseData& cs, const BigReal& eps,
                                            long prec);

RegulatorReport regulator_case(const CaseData& cs, const BigReal& eps, long prec);

}  // namespace mm

#endif
