// Command-line front end: ad-hoc star products and evolutions, plus full
// scenario runs with text or JSON reports.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "phasestar/parser.hpp"
#include "phasestar/scenario.hpp"

namespace {

using namespace phasestar;

struct GlobalOptions {
    int hbar_order = 4;
    int t_order = 8;
    std::string out;
    std::string format = "text";
    bool timings = false;
};

struct SystemOptions {
    std::string builtin;
    std::string hamiltonian;
    int dim = 1;
    std::string omega = "1", m1 = "1", m2 = "1", k = "1";
};

void add_system_flags(CLI::App* cmd, SystemOptions& sys) {
    cmd->add_option("--builtin", sys.builtin, "builtin system: harmonic | coupled2 | x2p2");
    cmd->add_option("--hamiltonian", sys.hamiltonian, "Hamiltonian polynomial literal");
    cmd->add_option("--dim", sys.dim, "phase-space dimension N for a custom Hamiltonian");
    cmd->add_option("--omega", sys.omega, "harmonic frequency (exact rational)");
    cmd->add_option("--m1", sys.m1, "first mass (exact rational)");
    cmd->add_option("--m2", sys.m2, "second mass (exact rational)");
    cmd->add_option("--k", sys.k, "coupling constant (exact rational)");
}

Scenario scenario_from_flags(const GlobalOptions& global, const SystemOptions& sys) {
    Scenario sc;
    sc.hbar_order = global.hbar_order;
    sc.t_order = global.t_order;
    if (!sys.builtin.empty()) {
        auto b = builtin_from_name(sys.builtin);
        if (!b) throw Error("unknown builtin '" + sys.builtin + "'");
        sc.builtin = *b;
        sc.dim = builtin_dim(*b);
        sc.name = sys.builtin;
    } else {
        sc.hamiltonian_text = sys.hamiltonian;
        sc.dim = sys.dim;
        sc.name = "adhoc";
    }
    sc.constants.omega = parse_rational(sys.omega);
    sc.constants.m1 = parse_rational(sys.m1);
    sc.constants.m2 = parse_rational(sys.m2);
    sc.constants.k = parse_rational(sys.k);
    return sc;
}

int emit(const Report& report, const GlobalOptions& global) {
    const std::string body = global.format == "json" ? report.to_json_text(global.timings)
                                                     : report.to_text(global.timings);
    if (!global.out.empty()) {
        std::ofstream out(global.out);
        if (!out) throw Error("cannot write " + global.out);
        out << body;
        std::cout << (report.pass ? "PASS" : "FAIL") << " -> " << global.out << "\n";
    } else {
        std::cout << body;
    }
    return report.pass ? 0 : 1;
}

int emit_series(const std::string& label, const DeformedFn& value,
                const GlobalOptions& global) {
    std::string body;
    if (global.format == "json") {
        body = "{\n  \"" + label + "\": \"" + to_string(value) + "\"\n}\n";
    } else {
        body = to_string(value) + "\n";
    }
    if (!global.out.empty()) {
        std::ofstream out(global.out);
        if (!out) throw Error("cannot write " + global.out);
        out << body;
    } else {
        std::cout << body;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Moyal star products, quantum flows and intertwiners"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--hbar-order", global.hbar_order, "hbar truncation order K");
    app.add_option("--t-order", global.t_order, "time truncation order L");
    app.add_option("--out", global.out, "write the result to a file");
    app.add_option("--format", global.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timings", global.timings, "include wall-clock timings in reports");

    // star <f> <g>
    auto* star_cmd = app.add_subcommand("star", "Moyal star product of two literals");
    std::string star_f, star_g;
    int star_dim = 1;
    star_cmd->add_option("f", star_f, "left factor")->required();
    star_cmd->add_option("g", star_g, "right factor")->required();
    star_cmd->add_option("--dim", star_dim, "phase-space dimension N");

    // evolve
    auto* evolve_cmd = app.add_subcommand("evolve", "Heisenberg evolution of an observable");
    SystemOptions evolve_sys;
    add_system_flags(evolve_cmd, evolve_sys);
    std::string observable = "x";
    evolve_cmd->add_option("--observable", observable, "observable literal");

    // flow
    auto* flow_cmd = app.add_subcommand("flow", "quantum and classical flow of a system");
    SystemOptions flow_sys;
    add_system_flags(flow_cmd, flow_sys);

    // check
    auto* check_cmd = app.add_subcommand("check", "quantum/classical canonicity of the flow");
    SystemOptions check_sys;
    add_system_flags(check_cmd, check_sys);

    // verify-s
    auto* verify_cmd = app.add_subcommand("verify-s", "verify an intertwiner against the flow");
    SystemOptions verify_sys;
    add_system_flags(verify_cmd, verify_sys);
    std::string s_operator = "builtin";
    int monomial_degree = 4;
    verify_cmd->add_option("--s-operator", s_operator,
                           "builtin | identity | operator literal");
    verify_cmd->add_option("--monomial-degree", monomial_degree,
                           "spanning family degree for the product relation");

    // solve-s
    auto* solve_cmd = app.add_subcommand("solve-s", "solve for the intertwiner of the flow");
    SystemOptions solve_sys;
    add_system_flags(solve_cmd, solve_sys);
    int solve_do = 4, solve_cd = 6, solve_span = 4, solve_monomial_degree = 4;
    solve_cmd->add_option("--max-derivative-order", solve_do, "ansatz derivative order bound");
    solve_cmd->add_option("--max-coeff-degree", solve_cd, "ansatz coefficient degree bound");
    solve_cmd->add_option("--spanning-degree", solve_span, "interpolation monomial degree");
    solve_cmd->add_option("--monomial-degree", solve_monomial_degree,
                          "verification family degree");

    // compose
    auto* compose_cmd = app.add_subcommand("compose", "quantum composition law at (t1, t2)");
    SystemOptions compose_sys;
    add_system_flags(compose_cmd, compose_sys);
    int t1_order = 3, t2_order = 3;
    bool full_group_law = false;
    compose_cmd->add_option("--t1-order", t1_order, "t1 truncation order");
    compose_cmd->add_option("--t2-order", t2_order, "t2 truncation order");
    compose_cmd->add_flag("--group-law", full_group_law,
                          "also check the pull-back composition identity");

    // run <scenario>
    auto* run_cmd = app.add_subcommand("run", "run a scenario file");
    std::string scenario_path;
    run_cmd->add_option("scenario", scenario_path, "path to a .scn or .json scenario")
        ->required();

    // Global flags remain valid after a subcommand name.
    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (star_cmd->parsed()) {
            SeriesContext ctx(star_dim, {{"h", global.hbar_order}, {"t", global.t_order}});
            DeformedFn f = parse_series(star_f, ctx);
            DeformedFn g = parse_series(star_g, ctx);
            return emit_series("star", star(StarProductSpec::moyal(), f, g), global);
        }

        Scenario sc;
        if (evolve_cmd->parsed()) {
            sc = scenario_from_flags(global, evolve_sys);
            sc.tasks = {Task::Evolve};
            sc.observables = {observable};
        } else if (flow_cmd->parsed()) {
            sc = scenario_from_flags(global, flow_sys);
            sc.tasks = {Task::Flow};
        } else if (check_cmd->parsed()) {
            sc = scenario_from_flags(global, check_sys);
            sc.tasks = {Task::Canonicity};
        } else if (verify_cmd->parsed()) {
            sc = scenario_from_flags(global, verify_sys);
            sc.tasks = {Task::VerifyS};
            sc.s_operator = s_operator;
            sc.monomial_test_degree = monomial_degree;
        } else if (solve_cmd->parsed()) {
            sc = scenario_from_flags(global, solve_sys);
            sc.tasks = {Task::SolveS};
            sc.solve_max_derivative_order = solve_do;
            sc.solve_max_coeff_degree = solve_cd;
            sc.solve_spanning_degree = solve_span;
            sc.monomial_test_degree = solve_monomial_degree;
        } else if (compose_cmd->parsed()) {
            sc = scenario_from_flags(global, compose_sys);
            sc.tasks = {full_group_law ? Task::GroupLaw : Task::Compose};
            sc.t1_order = t1_order;
            sc.t2_order = t2_order;
        } else if (run_cmd->parsed()) {
            sc = Scenario::from_file(scenario_path);
        }
        return emit(run_scenario(sc), global);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
