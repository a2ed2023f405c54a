#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phasestar/builtins.hpp"
#include "phasestar/intertwiner.hpp"

namespace phasestar {

/// The executable checks a scenario can request, in dependency order.
enum class Task { Flow, Evolve, Canonicity, Transform, VerifyS, SolveS, Compose, GroupLaw };

std::string task_name(Task t);
std::optional<Task> task_from_name(const std::string& name);

/// One scenario: a system, truncation orders, and tasks. Parsed from a flat
/// key = value text file or the equivalent JSON object.
struct Scenario {
    std::string name = "scenario";
    std::optional<Builtin> builtin;
    std::string hamiltonian_text; // custom Hamiltonian literal when no builtin
    int dim = 1;
    BuiltinConstants constants;
    int hbar_order = 4;
    int t_order = 8;
    int monomial_test_degree = 4;
    std::vector<Task> tasks;
    /// "builtin", "identity", or an operator literal.
    std::string s_operator = "builtin";
    std::vector<std::string> observables; // evolve task; defaults to coordinates
    int t1_order = 3;
    int t2_order = 3;
    int solve_max_derivative_order = 4;
    int solve_max_coeff_degree = 6;
    int solve_spanning_degree = 4;

    static Scenario from_file(const std::string& path);
    static Scenario from_text(const std::string& text);
    static Scenario from_json_text(const std::string& text);

    /// Canonical JSON rendering (rationals as strings).
    std::string to_json_text() const;

    /// Throws Error on inconsistent settings (e.g. verify-s on x2p2 with
    /// hbar_order < 2, or t1_order + t2_order > t_order for compose).
    void validate() const;

    HamiltonianSystem system() const;
    SolveOptions solve_options() const;
};

/// One checked value inside a task.
struct ReportItem {
    std::string label;
    std::string computed;       // canonical series/operator text ("" when n/a)
    std::string expected;       // pinned expectation ("" when none)
    std::string residual;       // required-zero series ("" when n/a)
    bool asserted = true;       // informational entries don't gate the verdict
    bool pass = true;
};

struct TaskReport {
    Task task;
    std::vector<ReportItem> items;
    int hbar_order_checked = 0;
    bool pass = true;
    long long wall_ms = 0;

    void add(ReportItem item);
};

/// Full scenario outcome: deterministic content, optional timings.
struct Report {
    Scenario scenario;
    std::vector<TaskReport> tasks;
    bool pass = true;

    std::string to_text(bool timings = false) const;
    std::string to_json_text(bool timings = false) const;
};

/// Executes every requested task in dependency order. Check failures land in
/// the report; only malformed scenarios throw.
Report run_scenario(const Scenario& scenario);

} // namespace phasestar
