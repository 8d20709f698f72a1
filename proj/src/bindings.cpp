#include "tcheeger/geometry.hpp"
#include "tcheeger/math_core.hpp"
#include "tcheeger/optimize.hpp"
#include "tcheeger/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tcheeger;

namespace {

// The python surface trades the strong Dim/Exponent types for plain (n, q)
// arguments; the same validation runs inside and surfaces as ValueError.
Exponent make_exponent(int n, double q) { return Exponent(q, Dim(n)); }

const char* kind_name(StationaryKind k) {
    switch (k) {
        case StationaryKind::minimum: return "minimum";
        case StationaryKind::maximum: return "maximum";
        default: return "degenerate";
    }
}

}  // namespace

PYBIND11_MODULE(_tcheeger, m) {
    m.doc() =
        "Constrained (twisted) Cheeger optimisation for two-ball "
        "configurations";

    py::register_exception<solver_error>(m, "SolverError", PyExc_RuntimeError);

    m.def(
        "critical_exponent", [](int n) { return Dim(n).critical_exponent(); },
        py::arg("n"), "Right endpoint n/(n-1) of the admissible q-window.");
    m.def(
        "f",
        [](int n, double q, double x) { return f(Dim(n), make_exponent(n, q), x); },
        py::arg("n"), py::arg("q"), py::arg("x"),
        "Profile f_n(x, q) of the normalised two-ball quotient.");
    m.def(
        "dfdx",
        [](int n, double q, double x) {
            return dfdx(Dim(n), make_exponent(n, q), x);
        },
        py::arg("n"), py::arg("q"), py::arg("x"));
    m.def(
        "dlogf_dq",
        [](int n, double q, double x) {
            return dlogf_dq(Dim(n), make_exponent(n, q), x);
        },
        py::arg("n"), py::arg("q"), py::arg("x"));
    m.def(
        "f_star", [](int n, double x) { return f_star(Dim(n), x); },
        py::arg("n"), py::arg("x"), "Pointwise limit of f as q -> n/(n-1).");
    m.def(
        "unit_ball_volume", [](int n) { return unit_ball_volume(Dim(n)); },
        py::arg("n"));
    m.def(
        "quotient_Q",
        [](int n, double q, double m1, double p1, double m2, double p2) {
            return quotient_Q(ShapePair{{m1, p1}, {m2, p2}},
                              make_exponent(n, q));
        },
        py::arg("n"), py::arg("q"), py::arg("m1"), py::arg("p1"),
        py::arg("m2"), py::arg("p2"),
        "Twisted quotient of a pair of sets given measures and perimeters.");
    m.def(
        "x_to_radii",
        [](int n, double x) {
            const BallPairConfig cfg = x_to_radii(Dim(n), x);
            return py::make_tuple(cfg.r1, cfg.r2);
        },
        py::arg("n"), py::arg("x"));
    m.def(
        "global_min",
        [](int n, double q, double tol_x, double tie_tol) {
            const MinimizationResult r =
                global_min(Dim(n), make_exponent(n, q), tol_x, tie_tol);
            py::dict d;
            d["x_star"] = r.x_star;
            d["f_star"] = r.f_star;
            d["tie"] = r.tie ? py::object(py::float_(*r.tie))
                             : py::object(py::none());
            py::list pts;
            for (const StationaryPoint& p : r.stationary) {
                py::dict e;
                e["x"] = p.x;
                e["f"] = p.f_value;
                e["kind"] = kind_name(p.kind);
                pts.append(e);
            }
            d["stationary"] = pts;
            return d;
        },
        py::arg("n"), py::arg("q"), py::arg("tol_x") = kDefaultTolX,
        py::arg("tie_tol") = kDefaultTieTol,
        "Global minimum of f(., q) over x >= 0 with the stationary structure.");
    m.def(
        "threshold",
        [](int n, double tol_q, double tie_tol) {
            const ThresholdResult t = threshold(Dim(n), tol_q, tie_tol);
            py::dict d;
            d["q_tilde"] = t.q_tilde;
            d["q_lo"] = t.q_lo;
            d["q_hi"] = t.q_hi;
            d["iterations"] = t.iterations;
            d["minimizers"] = t.minimizers;
            return d;
        },
        py::arg("n"), py::arg("tol_q") = kDefaultTolQ,
        py::arg("tie_tol") = kDefaultTieTol,
        "Symmetry-breaking threshold q~(n).");
    m.def("claim_registry", [] { return claim_registry(); });
    m.def(
        "check_claim",
        [](const std::string& id, std::uint64_t seed) {
            ClaimParams params;
            params.seed = seed;
            const ClaimReport r = check_claim(id, params);
            py::dict d;
            d["claim_id"] = r.claim_id;
            d["params"] = r.params;
            d["passed"] = r.passed;
            d["details"] = r.details;
            d["counterexamples"] = r.counterexamples;
            return d;
        },
        py::arg("id"), py::arg("seed") = 20240817,
        "Re-check one registered claim; returns the report as a dict.");
}
