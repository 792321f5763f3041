#include "mm/quadrature.hpp"

#include <vector>

#include "mm/errors.hpp"

namespace mm {

namespace {

struct Node {
    BigReal x;  // abscissa in (-1, 1)
    BigReal w;  // weight, already includes the Jacobian of tanh-sinh
};

// Nodes at t = k*h for k odd (so levels nest; level 0 uses all k).
// node_prec exceeds the target precision so that abscissas near +-1 stay
// distinguishable from the endpoints; cut_bits bounds the truncated tail.
void emit_nodes(long node_prec, long cut_bits, const BigReal& h, bool odd_only,
                std::vector<Node>& out) {
    BigReal half_pi = BigReal::pi(node_prec) / 2;
    BigReal log_cut = BigReal(cut_bits, node_prec) * log(BigReal(2.0, node_prec));
    for (long k = odd_only ? 1 : 0;; k += odd_only ? 2 : 1) {
        BigReal t = h.with_prec(node_prec) * k;
        BigReal u = half_pi * sinh(t);
        if (u > log_cut) break;
        BigReal c = cosh(u);
        BigReal x = tanh(u);
        BigReal w = half_pi * cosh(t) / (c * c);
        out.push_back({x, w});
        if (k == 0) continue;
    }
}

}  // namespace

BigComplex adaptive_integrate(const ComplexFn& f, const BigReal& a, const BigReal& b,
                              const BigReal& eps, const QuadratureOptions& opt) {
    long prec = opt.prec ? opt.prec : std::max<long>(BigReal::join(a, b), 128);
    // With an integrable endpoint singularity the summand decays like
    // exp(-u/2) instead of exp(-u), so the tail cutoff doubles and the
    // abscissas approach +-1 twice as fast; node precision covers that.
    long cut_bits = opt.endpoint_singularity ? 2 * (prec + 40) : prec + 32;
    long node_prec = 2 * cut_bits + 64;
    BigReal mid = ((a + b) / 2).with_prec(node_prec);
    BigReal rad = ((b - a) / 2).with_prec(node_prec);
    if (rad.is_zero()) return BigComplex::zero(prec);

    auto g = [&](const BigReal& x) { return f(mid + rad * x); };

    BigReal h(1.0, prec);
    BigComplex sum = BigComplex::zero(prec);
    BigComplex prev = BigComplex::zero(prec);
    bool have_prev = false;

    // Trapezoid in t at spacing 2^-level; each level adds the odd nodes.
    for (int level = 0; level <= opt.max_level; ++level) {
        std::vector<Node> nodes;
        emit_nodes(node_prec, cut_bits, h, level > 0, nodes);
        BigComplex add = BigComplex::zero(prec);
        for (const Node& n : nodes) {
            add += g(n.x) * n.w;
            if (!n.x.is_zero()) add += g(-n.x) * n.w;
        }
        sum = (level == 0) ? add * h : sum * BigReal(0.5, prec) + add * h;
        BigComplex result = sum * rad;
        if (have_prev && level >= 2) {
            BigReal err = abs(result - prev);
            if (err < eps) return result;
        }
        prev = result;
        have_prev = true;
        h = h / 2;
    }
    throw NoConvergence("adaptive_integrate: refinement limit reached");
}

BigReal adaptive_integrate_real(const std::function<BigReal(const BigReal&)>& f,
                                const BigReal& a, const BigReal& b, const BigReal& eps,
                                const QuadratureOptions& opt) {
    auto g = [&](const BigReal& x) { return BigComplex(f(x)); };
    return adaptive_integrate(g, a, b, eps, opt).re;
}

}  // namespace mm
