// Python bindings for the main operations: modular evaluators, CM search,
// Mahler measures, identity verification, algebraic recognition, and the
// regulator pipeline. Values cross the boundary as double-precision
// complex/float (computations still run at the requested MPFR precision);
// string variants are provided where full precision matters.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mm/beilinson.hpp"
#include "mm/cmsearch.hpp"
#include "mm/errors.hpp"
#include "mm/intpoly.hpp"
#include "mm/lvalues.hpp"
#include "mm/mahler.hpp"
#include "mm/modular.hpp"
#include "mm/quadforms.hpp"
#include "mm/refdata.hpp"

namespace py = pybind11;
using namespace mm;

namespace {

BigComplex to_big(std::complex<double> z, long prec) {
    return {BigReal(z.real(), prec), BigReal(z.imag(), prec)};
}

std::complex<double> to_std(const BigComplex& z) {
    return {z.re.to_double(), z.im.to_double()};
}

py::dict identity_result_dict(const IdentityRecord& row, const IdentityResult& res) {
    py::dict d;
    d["k"] = row.k_display;
    d["m"] = res.m.to_double();
    d["cL"] = res.cL.to_double();
    d["residual"] = res.residual.to_double();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "High-precision Mahler measure / modular function / regulator engine";

    py::register_exception<Error>(mod, "MMError");

    mod.def(
        "lambda2",
        [](std::complex<double> tau, long prec) { return to_std(lambda2(to_big(tau, prec), prec)); },
        py::arg("tau"), py::arg("prec") = 256,
        "lambda(2*tau) for tau in the upper half plane");
    mod.def(
        "lambda2_str",
        [](std::complex<double> tau, long prec, long digits) {
            BigComplex v = lambda2(to_big(tau, prec), prec);
            return py::make_tuple(v.re.str(digits), v.im.str(digits));
        },
        py::arg("tau"), py::arg("prec") = 256, py::arg("digits") = 50,
        "lambda(2*tau) as a pair of decimal strings (re, im)");
    mod.def(
        "j_invariant",
        [](std::complex<double> tau, long prec) { return to_std(j_numeric(to_big(tau, prec), prec)); },
        py::arg("tau"), py::arg("prec") = 256);
    mod.def(
        "weber_f",
        [](std::complex<double> tau, long prec) { return to_std(weber_f(to_big(tau, prec), prec)); },
        py::arg("tau"), py::arg("prec") = 256);
    mod.def(
        "weber_f1",
        [](std::complex<double> tau, long prec) { return to_std(weber_f1(to_big(tau, prec), prec)); },
        py::arg("tau"), py::arg("prec") = 256);
    mod.def(
        "weber_f2",
        [](std::complex<double> tau, long prec) { return to_std(weber_f2(to_big(tau, prec), prec)); },
        py::arg("tau"), py::arg("prec") = 256);

    mod.def("class_number_one_discs", [] { return class_number_one_discs(); },
            "the 13 discriminants with h(D) = 1");
    mod.def("class_number_two_discs", [] { return class_number_two_discs(); },
            "the 29 discriminants with h(D) = 2");

    mod.def(
        "cm_table",
        [] {
            py::list out;
            for (const auto& row : cm_table()) {
                py::dict d;
                d["form"] = py::make_tuple(row.form.a, row.form.b, row.form.c);
                d["h2"] = row.h2;
                d["h_product"] = row.h_product;
                d["lambda"] = std::complex<double>(row.lambda_re, row.lambda_im);
                out.append(d);
            }
            return out;
        },
        "reference table of CM points with h(D_tau) h(D_4tau) <= 4");

    mod.def(
        "search_cm_points",
        [](long max_product, long prec) {
            py::list out;
            for (const auto& pt : search_cm_points(max_product, prec)) {
                py::dict d;
                d["form"] = py::make_tuple(pt.form.a, pt.form.b, pt.form.c);
                d["h2"] = pt.h2;
                d["h_product"] = pt.h_product;
                d["lambda"] = to_std(pt.lambda);
                out.append(d);
            }
            return out;
        },
        py::arg("max_product") = 4, py::arg("prec") = 128,
        "CM points in F' with h(D_tau) h(D_4tau) <= max_product, one per lambda value");

    mod.def(
        "mahler_jensen",
        [](std::complex<double> k, double eps, long prec) {
            BigComplex kk = to_big(k, prec);
            if (k.imag() == 0.0) kk = BigComplex(kk.re);
            return mahler_jensen(kk, BigReal(eps, prec), prec).to_double();
        },
        py::arg("k"), py::arg("eps") = 1e-10, py::arg("prec") = 128,
        "Mahler measure of x + 1/x + y + 1/y + k via Jensen's formula");
    mod.def(
        "mahler_lattice",
        [](std::complex<double> tau, double eps, const std::string& strategy, long prec) {
            LatticeStrategy s = strategy == "accelerated" ? LatticeStrategy::accelerated
                                                          : LatticeStrategy::direct;
            return mahler_lattice(to_big(tau, prec), BigReal(eps, prec), s, prec).to_double();
        },
        py::arg("tau"), py::arg("eps") = 1e-5, py::arg("strategy") = "direct",
        py::arg("prec") = 128,
        "Mahler measure at k = 4/sqrt(lambda(2 tau)) via the lattice sum");

    mod.def("identity_count", [] { return identity_table().size(); });
    mod.def(
        "verify_identity",
        [](size_t row, double eps, long prec) {
            const auto& table = identity_table();
            if (row >= table.size()) throw py::index_error("identity row out of range");
            auto res = verify_identity(table[row], BigReal(eps, prec), prec);
            return identity_result_dict(table[row], res);
        },
        py::arg("row"), py::arg("eps") = 1e-12, py::arg("prec") = 256,
        "check m(k) = c L(f,2) for one identity row; returns k, m, cL, residual");

    mod.def(
        "algdep",
        [](size_t row, long prec, int max_coeff_bits) {
            const auto& table = cm_table();
            if (row >= table.size()) throw py::index_error("table row out of range");
            const auto& r = table[row];
            BigComplex lam = lambda2(tau_of(r.form, prec), prec);
            if (abs(BigComplex(lam.im)).to_double() < 1e-30 * abs(lam).to_double())
                lam = BigComplex(lam.re);
            long cap = r.h_product;
            if (!lam.im.is_zero() && cap % 2 == 1) cap *= 2;
            auto poly = integer_relation(lam, static_cast<int>(cap), max_coeff_bits);
            py::list coeffs;
            if (!poly) return coeffs;
            for (const auto& c : poly->coeffs) coeffs.append(py::int_(py::str(c.get_str())));
            return coeffs;
        },
        py::arg("row"), py::arg("prec") = 256, py::arg("max_coeff_bits") = 64,
        "minimal polynomial coefficients (constant first) of a table row's lambda value");

    mod.def(
        "recognize",
        [](const std::string& re, const std::string& im, long prec, int max_degree,
           int max_coeff_bits) {
            BigComplex x{BigReal(re, prec), BigReal(im, prec)};
            auto poly = integer_relation(x, max_degree, max_coeff_bits);
            py::list coeffs;
            if (!poly) return coeffs;
            for (const auto& c : poly->coeffs) coeffs.append(py::int_(py::str(c.get_str())));
            return coeffs;
        },
        py::arg("re"), py::arg("im") = "0", py::arg("prec") = 256, py::arg("max_degree") = 8,
        py::arg("max_coeff_bits") = 64,
        "integer polynomial vanishing at the value given as decimal strings");

    mod.def("regulator_case_ids", [] {
        py::list out;
        for (const auto& cs : regulator_cases()) out.append(cs.id);
        return out;
    });
    mod.def(
        "regulator",
        [](const std::string& id, double eps, long prec) {
            const CaseData& cs = regulator_case_by_id(id);
            RegulatorReport rep = regulator_case(cs, BigReal(eps, prec), prec);
            py::dict d;
            d["id"] = rep.id;
            d["R"] = rep.R.to_double();
            d["R_target"] = rep.R_target.to_double();
            d["residual"] = rep.residual.to_double();
            d["Lf"] = to_std(rep.Lf);
            d["Lg"] = to_std(rep.Lg);
            d["m_plus"] = rep.m_plus.to_double();
            d["m_minus"] = rep.m_minus.to_double();
            d["multipliers"] = py::make_tuple(rep.mult_a, rep.mult_b);
            return d;
        },
        py::arg("case_id"), py::arg("eps") = 1e-12, py::arg("prec") = 256,
        "Beilinson regulator determinant and its L-value target for one curve case");
}
