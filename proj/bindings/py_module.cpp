// Python bindings for the main operations. Everything crosses the boundary
// as canonical text so exactness survives the trip.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phasestar/parser.hpp"
#include "phasestar/scenario.hpp"

namespace py = pybind11;
using namespace phasestar;

namespace {

SeriesContext make_context(int dim, int hbar_order, int t_order) {
    return SeriesContext(dim, {{"h", hbar_order}, {"t", t_order}});
}

Scenario make_scenario(const std::string& builtin, const std::string& hamiltonian, int dim,
                       const std::string& omega, const std::string& m1, const std::string& m2,
                       const std::string& k, int hbar_order, int t_order) {
    Scenario sc;
    if (!builtin.empty()) {
        auto b = builtin_from_name(builtin);
        if (!b) throw Error("unknown builtin '" + builtin + "'");
        sc.builtin = *b;
        sc.dim = builtin_dim(*b);
    } else {
        sc.hamiltonian_text = hamiltonian;
        sc.dim = dim;
    }
    sc.constants.omega = parse_rational(omega);
    sc.constants.m1 = parse_rational(m1);
    sc.constants.m2 = parse_rational(m2);
    sc.constants.k = parse_rational(k);
    sc.hbar_order = hbar_order;
    sc.t_order = t_order;
    return sc;
}

std::string py_normalize(const std::string& text, int dim, int hbar_order, int t_order) {
    return to_string(parse_series(text, make_context(dim, hbar_order, t_order)));
}

std::string py_star(const std::string& f, const std::string& g, int dim, int hbar_order,
                    int t_order) {
    SeriesContext ctx = make_context(dim, hbar_order, t_order);
    return to_string(star(StarProductSpec::moyal(), parse_series(f, ctx), parse_series(g, ctx)));
}

std::string py_bracket(const std::string& f, const std::string& g, int dim, int hbar_order,
                       int t_order) {
    SeriesContext ctx = make_context(dim, hbar_order, t_order);
    return to_string(
        moyal_bracket(StarProductSpec::moyal(), parse_series(f, ctx), parse_series(g, ctx)));
}

std::string py_poisson(const std::string& f, const std::string& g, int dim, int hbar_order,
                       int t_order) {
    SeriesContext ctx = make_context(dim, hbar_order, t_order);
    return to_string(poisson_bracket(parse_series(f, ctx), parse_series(g, ctx)));
}

std::string py_evolve(const std::string& observable, const std::string& builtin,
                      const std::string& hamiltonian, int dim, const std::string& omega,
                      const std::string& m1, const std::string& m2, const std::string& k,
                      int hbar_order, int t_order) {
    Scenario sc =
        make_scenario(builtin, hamiltonian, dim, omega, m1, m2, k, hbar_order, t_order);
    HamiltonianSystem sys = sc.system();
    DeformedFn a = parse_series(observable, sys.context());
    return to_string(evolve_observable(sys, a));
}

py::dict py_flow(const std::string& builtin, const std::string& hamiltonian, int dim,
                 const std::string& omega, const std::string& m1, const std::string& m2,
                 const std::string& k, int hbar_order, int t_order, bool classical) {
    Scenario sc =
        make_scenario(builtin, hamiltonian, dim, omega, m1, m2, k, hbar_order, t_order);
    HamiltonianSystem sys = sc.system();
    QuantumFlow f = classical ? classical_flow(sys) : quantum_flow(sys);
    py::dict out;
    for (int i = 0; i < sys.dim(); ++i) {
        std::string qn = sys.dim() == 1 ? "Q" : "Q" + std::to_string(i + 1);
        std::string pn = sys.dim() == 1 ? "P" : "P" + std::to_string(i + 1);
        out[py::str(qn)] = to_string(f.position(i));
        out[py::str(pn)] = to_string(f.momentum(i));
    }
    return out;
}

std::string py_solve_intertwiner(const std::string& builtin, const std::string& hamiltonian,
                                 int dim, const std::string& omega, const std::string& m1,
                                 const std::string& m2, const std::string& k, int hbar_order,
                                 int t_order, int max_derivative_order, int max_coeff_degree,
                                 int spanning_degree) {
    Scenario sc =
        make_scenario(builtin, hamiltonian, dim, omega, m1, m2, k, hbar_order, t_order);
    SolveOptions opts;
    opts.hbar_order = hbar_order;
    opts.max_derivative_order = max_derivative_order;
    opts.max_coeff_degree = max_coeff_degree;
    opts.spanning_degree = spanning_degree;
    SolveResult r = solve_intertwiner(quantum_flow(sc.system()).map, opts);
    if (!r.found()) throw Error("no intertwiner within the ansatz: " + r.detail);
    return to_string(*r.op);
}

std::string py_run_scenario_text(const std::string& text) {
    Scenario sc = text.find_first_not_of(" \t\r\n") != std::string::npos &&
                          text[text.find_first_not_of(" \t\r\n")] == '{'
                      ? Scenario::from_json_text(text)
                      : Scenario::from_text(text);
    return run_scenario(sc).to_json_text();
}

std::string py_run_scenario_file(const std::string& path) {
    return run_scenario(Scenario::from_file(path)).to_json_text();
}

} // namespace

PYBIND11_MODULE(_phasestar, m) {
    m.doc() = "Exact Moyal star products, quantum flows and intertwiners";

    py::register_exception<Error>(m, "PhasestarError");

    m.def("normalize", &py_normalize, py::arg("text"), py::arg("dim") = 1,
          py::arg("hbar_order") = 4, py::arg("t_order") = 8,
          "Parse a polynomial/series literal and return its canonical form.");

    m.def("star", &py_star, py::arg("f"), py::arg("g"), py::arg("dim") = 1,
          py::arg("hbar_order") = 4, py::arg("t_order") = 8,
          "Moyal star product of two literals, canonical text.");

    m.def("moyal_bracket", &py_bracket, py::arg("f"), py::arg("g"), py::arg("dim") = 1,
          py::arg("hbar_order") = 4, py::arg("t_order") = 8,
          "Deformed Poisson bracket [[f,g]] = (f*g - g*f)/(i h).");

    m.def("poisson_bracket", &py_poisson, py::arg("f"), py::arg("g"), py::arg("dim") = 1,
          py::arg("hbar_order") = 4, py::arg("t_order") = 8, "Classical Poisson bracket.");

    m.def("evolve", &py_evolve, py::arg("observable"), py::arg("builtin") = "",
          py::arg("hamiltonian") = "", py::arg("dim") = 1, py::arg("omega") = "1",
          py::arg("m1") = "1", py::arg("m2") = "1", py::arg("k") = "1",
          py::arg("hbar_order") = 4, py::arg("t_order") = 8,
          "Heisenberg evolution A(t) of an observable literal.");

    m.def("flow", &py_flow, py::arg("builtin") = "", py::arg("hamiltonian") = "",
          py::arg("dim") = 1, py::arg("omega") = "1", py::arg("m1") = "1", py::arg("m2") = "1",
          py::arg("k") = "1", py::arg("hbar_order") = 4, py::arg("t_order") = 8,
          py::arg("classical") = false,
          "Flow components {Q.., P..} of a system as canonical text.");

    m.def("solve_intertwiner", &py_solve_intertwiner, py::arg("builtin") = "",
          py::arg("hamiltonian") = "", py::arg("dim") = 1, py::arg("omega") = "1",
          py::arg("m1") = "1", py::arg("m2") = "1", py::arg("k") = "1",
          py::arg("hbar_order") = 2, py::arg("t_order") = 6,
          py::arg("max_derivative_order") = 4, py::arg("max_coeff_degree") = 6,
          py::arg("spanning_degree") = 4,
          "Solve for the intertwiner of a flow; canonical operator text.");

    m.def("run_scenario_text", &py_run_scenario_text, py::arg("text"),
          "Run a scenario given as key = value text or JSON; returns the JSON report.");

    m.def("run_scenario_file", &py_run_scenario_file, py::arg("path"),
          "Run a scenario file; returns the JSON report.");
}
