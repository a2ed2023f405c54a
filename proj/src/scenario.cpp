#include "phasestar/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "phasestar/parser.hpp"

namespace phasestar {

namespace {

using nlohmann::json;

const std::vector<Task> kTaskOrder = {Task::Flow,    Task::Evolve, Task::Canonicity,
                                      Task::Transform, Task::VerifyS, Task::SolveS,
                                      Task::Compose, Task::GroupLaw};

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!strip(cur).empty()) out.push_back(strip(cur));
    return out;
}

int parse_int(const std::string& value, std::size_t line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + value + "'", line);
    }
}

} // namespace

std::string task_name(Task t) {
    switch (t) {
        case Task::Flow: return "flow";
        case Task::Evolve: return "evolve";
        case Task::Canonicity: return "canonicity";
        case Task::Transform: return "transform";
        case Task::VerifyS: return "verify-s";
        case Task::SolveS: return "solve-s";
        case Task::Compose: return "compose";
        case Task::GroupLaw: return "group-law";
    }
    return {};
}

std::optional<Task> task_from_name(const std::string& name) {
    for (Task t : kTaskOrder)
        if (task_name(t) == name) return t;
    return std::nullopt;
}

Scenario Scenario::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open scenario file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return from_json_text(text);
    return from_text(text);
}

namespace {

void apply_key(Scenario& s, const std::string& key, const std::string& value,
               std::size_t line) {
    auto rational = [&](const std::string& v) {
        try {
            return parse_rational(v);
        } catch (const ParseError&) {
            throw ParseError("expected a rational for '" + key + "'", line);
        }
    };
    if (key == "name") {
        s.name = value;
    } else if (key == "builtin") {
        auto b = builtin_from_name(value);
        if (!b) throw ParseError("unknown builtin '" + value + "'", line);
        s.builtin = *b;
        s.dim = builtin_dim(*b);
    } else if (key == "hamiltonian") {
        s.hamiltonian_text = value;
    } else if (key == "dim") {
        s.dim = parse_int(value, line);
    } else if (key == "omega") {
        s.constants.omega = rational(value);
    } else if (key == "m1") {
        s.constants.m1 = rational(value);
    } else if (key == "m2") {
        s.constants.m2 = rational(value);
    } else if (key == "k") {
        s.constants.k = rational(value);
    } else if (key == "hbar_order") {
        s.hbar_order = parse_int(value, line);
    } else if (key == "t_order") {
        s.t_order = parse_int(value, line);
    } else if (key == "monomial_test_degree") {
        s.monomial_test_degree = parse_int(value, line);
    } else if (key == "tasks") {
        s.tasks.clear();
        for (const std::string& item : split_list(value)) {
            auto t = task_from_name(item);
            if (!t) throw ParseError("unknown task '" + item + "'", line);
            s.tasks.push_back(*t);
        }
    } else if (key == "s_operator") {
        s.s_operator = value;
    } else if (key == "observables") {
        s.observables = split_list(value);
    } else if (key == "t1_order") {
        s.t1_order = parse_int(value, line);
    } else if (key == "t2_order") {
        s.t2_order = parse_int(value, line);
    } else if (key == "solve_max_derivative_order") {
        s.solve_max_derivative_order = parse_int(value, line);
    } else if (key == "solve_max_coeff_degree") {
        s.solve_max_coeff_degree = parse_int(value, line);
    } else if (key == "solve_spanning_degree") {
        s.solve_spanning_degree = parse_int(value, line);
    } else {
        throw ParseError("unknown scenario key '" + key + "'", line);
    }
}

} // namespace

Scenario Scenario::from_text(const std::string& text) {
    Scenario s;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string content = strip(raw);
        if (auto hash = content.find('#'); hash != std::string::npos)
            content = strip(content.substr(0, hash));
        if (content.empty()) continue;
        auto eq = content.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
        apply_key(s, strip(content.substr(0, eq)), strip(content.substr(eq + 1)), line);
    }
    return s;
}

Scenario Scenario::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("bad scenario JSON: ") + e.what(),
                         static_cast<std::size_t>(e.byte));
    }
    if (!j.is_object()) throw ParseError("scenario JSON must be an object", 0);
    Scenario s;
    for (const auto& [key, value] : j.items()) {
        std::string text_value;
        if (value.is_string()) {
            text_value = value.get<std::string>();
        } else if (value.is_number_integer()) {
            text_value = std::to_string(value.get<long long>());
        } else if (value.is_array()) {
            std::string joined;
            for (const auto& item : value) {
                if (!joined.empty()) joined += ", ";
                joined += item.get<std::string>();
            }
            text_value = joined;
        } else {
            throw ParseError("unsupported JSON value for key '" + key + "'", 0);
        }
        apply_key(s, key, text_value, 0);
    }
    return s;
}

std::string Scenario::to_json_text() const {
    json j;
    j["name"] = name;
    if (builtin) j["builtin"] = builtin_name(*builtin);
    if (!hamiltonian_text.empty()) j["hamiltonian"] = hamiltonian_text;
    j["dim"] = dim;
    j["omega"] = rational_to_string(constants.omega);
    j["m1"] = rational_to_string(constants.m1);
    j["m2"] = rational_to_string(constants.m2);
    j["k"] = rational_to_string(constants.k);
    j["hbar_order"] = hbar_order;
    j["t_order"] = t_order;
    j["monomial_test_degree"] = monomial_test_degree;
    json task_list = json::array();
    for (Task t : tasks) task_list.push_back(task_name(t));
    j["tasks"] = task_list;
    j["s_operator"] = s_operator;
    if (!observables.empty()) j["observables"] = observables;
    j["t1_order"] = t1_order;
    j["t2_order"] = t2_order;
    j["solve_max_derivative_order"] = solve_max_derivative_order;
    j["solve_max_coeff_degree"] = solve_max_coeff_degree;
    j["solve_spanning_degree"] = solve_spanning_degree;
    return j.dump(2);
}

void Scenario::validate() const {
    if (builtin && !hamiltonian_text.empty())
        throw Error("scenario sets both 'builtin' and 'hamiltonian'");
    if (!builtin && hamiltonian_text.empty())
        throw Error("scenario needs either 'builtin' or 'hamiltonian'");
    if (builtin && dim != builtin_dim(*builtin))
        throw Error("dim does not match the builtin system");
    if (dim < 1) throw Error("dim must be positive");
    if (hbar_order < 0 || t_order < 0 || t1_order < 0 || t2_order < 0)
        throw Error("truncation orders must be non-negative");
    if (monomial_test_degree < 1) throw Error("monomial_test_degree must be positive");
    if (tasks.empty()) throw Error("scenario requests no tasks");

    auto wants = [&](Task t) {
        return std::find(tasks.begin(), tasks.end(), t) != tasks.end();
    };
    if ((wants(Task::VerifyS) || wants(Task::SolveS)) && builtin &&
        *builtin == Builtin::X2P2 && hbar_order < 2)
        throw Error("verify-s / solve-s on the x2p2 system needs hbar_order >= 2");
    if (wants(Task::VerifyS) && s_operator == "builtin" && !builtin)
        throw Error("s_operator = builtin needs a builtin scenario");

    system(); // throws on a malformed Hamiltonian
    const SeriesContext ctx = system().context();
    for (const std::string& text : observables) parse_series(text, ctx);
}

HamiltonianSystem Scenario::system() const {
    if (builtin) return builtin_system(*builtin, constants, hbar_order, t_order);
    PhasePoly h = parse_poly(hamiltonian_text, dim);
    return HamiltonianSystem(dim, h, hbar_order, t_order);
}

SolveOptions Scenario::solve_options() const {
    SolveOptions o;
    o.hbar_order = hbar_order;
    o.max_derivative_order = solve_max_derivative_order;
    o.max_coeff_degree = solve_max_coeff_degree;
    o.spanning_degree = solve_spanning_degree;
    return o;
}

void TaskReport::add(ReportItem item) {
    if (item.asserted) pass = pass && item.pass;
    items.push_back(std::move(item));
}

namespace {

std::string coord_label(int v, int dim) {
    if (v < dim) return dim == 1 ? "Q" : "Q" + std::to_string(v + 1);
    return dim == 1 ? "P" : "P" + std::to_string(v - dim + 1);
}

ReportItem value_item(std::string label, std::string computed) {
    return {std::move(label), std::move(computed), "", "", false, true};
}

ReportItem residual_item(std::string label, const DeformedFn& residual) {
    const bool ok = residual.is_zero();
    return {std::move(label), "", "0", to_string(residual), true, ok};
}

/// Residual of the Heisenberg equation for one evolved observable, valid
/// through (K, L-1): the bracket side comes from a one-order-higher run.
DeformedFn evolution_residual(const HamiltonianSystem& system, const DeformedFn& a) {
    const HamiltonianSystem lifted = system.with_orders(system.hbar_order() + 1, -1);
    DeformedFn at = evolve_observable(lifted, a.lifted_exact(lifted.context()));
    DeformedFn h_fn = DeformedFn::from_poly(lifted.context(), system.hamiltonian());
    return at.param_derivative("t") - moyal_bracket(StarProductSpec::moyal(), at, h_fn);
}

class ScenarioRunner {
public:
    explicit ScenarioRunner(const Scenario& scenario)
        : sc_(scenario), sys_(scenario.system()), ctx_(sys_.context()) {}

    Report run() {
        Report report;
        report.scenario = sc_;
        std::vector<Task> ordered;
        for (Task t : kTaskOrder)
            if (std::find(sc_.tasks.begin(), sc_.tasks.end(), t) != sc_.tasks.end())
                ordered.push_back(t);
        for (Task t : ordered) {
            auto start = std::chrono::steady_clock::now();
            TaskReport tr;
            tr.task = t;
            tr.hbar_order_checked = sys_.hbar_order();
            switch (t) {
                case Task::Flow: run_flow(tr); break;
                case Task::Evolve: run_evolve(tr); break;
                case Task::Canonicity: run_canonicity(tr); break;
                case Task::Transform: run_transform(tr); break;
                case Task::VerifyS: run_verify_s(tr); break;
                case Task::SolveS: run_solve_s(tr); break;
                case Task::Compose: run_group(tr, false); break;
                case Task::GroupLaw: run_group(tr, true); break;
            }
            tr.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
            report.pass = report.pass && tr.pass;
            report.tasks.push_back(std::move(tr));
        }
        return report;
    }

private:
    const QuantumFlow& flow() {
        if (!flow_) flow_ = quantum_flow(sys_);
        return *flow_;
    }

    DiffOperator resolve_s() const {
        if (sc_.s_operator == "identity") return DiffOperator::identity(ctx_);
        if (sc_.s_operator == "builtin") {
            if (!sc_.builtin) throw Error("s_operator = builtin needs a builtin scenario");
            return builtin_s_operator(*sc_.builtin, sc_.constants, ctx_);
        }
        return parse_diff_operator(sc_.s_operator, ctx_);
    }

    /// Order through which closed-form S knowledge is valid: the x2p2
    /// operator is the paper's second-order expansion.
    int builtin_s_order() const {
        if (sc_.builtin && *sc_.builtin == Builtin::X2P2) return 2;
        return sys_.hbar_order();
    }

    void run_flow(TaskReport& tr) {
        const QuantumFlow& qf = flow();
        const QuantumFlow cf = classical_flow(sys_);
        for (int v = 0; v < 2 * sys_.dim(); ++v)
            tr.add(value_item(coord_label(v, sys_.dim()),
                              to_string(qf.map.component(v))));
        for (int v = 0; v < 2 * sys_.dim(); ++v)
            tr.add(value_item("classical " + coord_label(v, sys_.dim()),
                              to_string(cf.map.component(v))));

        ReportItem init{"flow initial condition (t = 0)", "", "identity", "", true,
                        qf.map.is_flow_like()};
        tr.add(init);
        for (int v = 0; v < 2 * sys_.dim(); ++v) {
            const std::string label = coord_label(v, sys_.dim());
            tr.add(residual_item("d/dt " + label + " - [[" + label + ",H]]",
                                 evolution_residual(sys_, DeformedFn::variable(ctx_, v))));
            ReportItem limit{"classical limit of " + label, "", "", "", true,
                             qf.map.component(v).at_param_zero("h") ==
                                 cf.map.component(v).at_param_zero("h")};
            tr.add(limit);
        }
    }

    void run_evolve(TaskReport& tr) {
        std::vector<std::string> observables = sc_.observables;
        if (observables.empty())
            for (int v = 0; v < 2 * sys_.dim(); ++v)
                observables.push_back(variable_name(v, sys_.dim()));
        for (const std::string& text : observables) {
            DeformedFn a = parse_series(text, ctx_);
            tr.add(value_item("A = " + text, to_string(evolve_observable(sys_, a))));
            tr.add(residual_item("d/dt A - [[A,H]] for A = " + text,
                                 evolution_residual(sys_, a)));
        }
    }

    void run_canonicity(TaskReport& tr) {
        // One extra hbar order so the deformed brackets are valid through K.
        QuantumFlow lifted = quantum_flow(sys_.with_orders(sys_.hbar_order() + 1, -1));
        CanonicityReport qr = check_quantum_canonicity(lifted);
        tr.hbar_order_checked = qr.hbar_order_checked;
        for (const auto& e : qr.entries) {
            DeformedFn bracket = e.bracket.truncated_param("h", sys_.hbar_order());
            DeformedFn deviation = e.deviation.truncated_param("h", sys_.hbar_order());
            ReportItem item{e.label, to_string(bracket), to_string(bracket - deviation),
                            to_string(deviation), true, deviation.is_zero()};
            tr.add(item);
        }
        CanonicityReport cr = check_classical_canonicity(flow());
        for (const auto& e : cr.entries) {
            ReportItem item{"classical " + e.label, to_string(e.bracket),
                            to_string(e.bracket - e.deviation), to_string(e.deviation),
                            false, e.deviation.is_zero()};
            tr.add(item);
        }
    }

    void run_transform(TaskReport& tr) {
        const PhaseMap& map = flow().map;
        auto ds = induced_derivations(map);
        for (int v = 0; v < 2 * sys_.dim(); ++v) {
            DiffOperator as_op(ctx_);
            for (int j = 0; j < 2 * sys_.dim(); ++j) {
                Exponents alpha(static_cast<std::size_t>(2 * sys_.dim()), 0);
                alpha[static_cast<std::size_t>(j)] = 1;
                as_op.add_term(alpha, ds[static_cast<std::size_t>(v)].coefficients()
                                          [static_cast<std::size_t>(j)]);
            }
            tr.add(value_item("D_" + variable_name(v, sys_.dim()), to_string(as_op)));
        }
        for (int i = 0; i < sys_.dim(); ++i) {
            for (int j = 0; j < sys_.dim(); ++j) {
                DeformedFn f = DeformedFn::variable(ctx_, i);
                DeformedFn g = DeformedFn::variable(ctx_, sys_.dim() + j);
                TransformReport r = verify_transform_identity(map, f, g);
                tr.add(residual_item("transform identity on (" +
                                         variable_name(i, sys_.dim()) + ", " +
                                         variable_name(sys_.dim() + j, sys_.dim()) + ")",
                                     r.checks.front().residual));
            }
        }
        DeformedFn f = parse_series(sys_.dim() == 1 ? "x^2" : "x1^2", ctx_);
        DeformedFn g = parse_series(sys_.dim() == 1 ? "x*p" : "x1*p2", ctx_);
        TransformReport r = verify_transform_identity(map, f, g);
        tr.add(residual_item("transform identity on (" + to_string(f) + ", " + to_string(g) + ")",
                             r.checks.front().residual));
    }

    void run_verify_s(TaskReport& tr) {
        DiffOperator s = resolve_s();
        const int order = std::min(sys_.hbar_order(),
                                   sc_.s_operator == "builtin" ? builtin_s_order()
                                                               : sys_.hbar_order());
        IntertwinerReport r = verify_intertwiner(s, flow().map, order, sc_.monomial_test_degree);
        tr.hbar_order_checked = r.hbar_order_checked;
        tr.add(value_item("S operator", to_string(s)));
        for (const auto& c : r.checks)
            tr.add(residual_item(c.label, c.residual));
    }

    void run_solve_s(TaskReport& tr) {
        SolveResult r = solve_intertwiner(flow().map, sc_.solve_options());
        if (!r.found()) {
            ReportItem item{"solve within ansatz", "", "a solution within the ansatz bounds",
                            r.detail, true, false};
            tr.add(item);
            tr.add(value_item("note", "no solution within the ansatz; this does not decide "
                                      "whether a larger ansatz contains one"));
            return;
        }
        tr.add(value_item("solved S", to_string(*r.op)));
        if (!r.unique_within_ansatz)
            tr.add(value_item("note", "derivative orders above the spanning degree are "
                                      "unconstrained; solution is not unique within the ansatz"));
        IntertwinerReport v =
            verify_intertwiner(*r.op, flow().map, sc_.solve_options().hbar_order,
                               sc_.monomial_test_degree);
        tr.hbar_order_checked = v.hbar_order_checked;
        ReportItem passes{"solved S passes the intertwiner relations", "", "", "", true, v.pass};
        tr.add(passes);

        if (sc_.builtin) {
            const int order = std::min(sys_.hbar_order(), builtin_s_order());
            DiffOperator paper = builtin_s_operator(*sc_.builtin, sc_.constants, ctx_);
            bool agree = true;
            std::function<void(Exponents&, int, int)> rec = [&](Exponents& e, int v, int left) {
                if (!agree) return;
                if (v == 2 * sys_.dim()) {
                    PhasePoly m = PhasePoly::monomial(sys_.dim(), e);
                    agree = r.op->apply(m).truncated_param("h", order) ==
                            paper.apply(m).truncated_param("h", order);
                    return;
                }
                for (int d = 0; d <= left; ++d) {
                    e[static_cast<std::size_t>(v)] = d;
                    rec(e, v + 1, left - d);
                    e[static_cast<std::size_t>(v)] = 0;
                }
            };
            Exponents e(static_cast<std::size_t>(2 * sys_.dim()), 0);
            rec(e, 0, sc_.monomial_test_degree);
            ReportItem item{"solved S matches the closed-form operator on monomials of degree <= " +
                                std::to_string(sc_.monomial_test_degree) + " through h^" +
                                std::to_string(order),
                            "", "", "", true, agree};
            tr.add(item);
        }
    }

    void run_group(TaskReport& tr, bool with_pullback) {
        GroupLawOptions opts;
        opts.t1_order = sc_.t1_order;
        opts.t2_order = sc_.t2_order;
        opts.hbar_order = sys_.hbar_order();
        opts.monomial_degree = with_pullback ? std::min(sc_.monomial_test_degree, 3) : 0;
        opts.solve = sc_.solve_options();
        IntertwinerReport r = check_group_law(sys_, opts);
        tr.hbar_order_checked = r.hbar_order_checked;
        for (const auto& c : r.checks) tr.add(residual_item(c.label, c.residual));
    }

    const Scenario& sc_;
    HamiltonianSystem sys_;
    SeriesContext ctx_;
    std::optional<QuantumFlow> flow_;
};

} // namespace

Report run_scenario(const Scenario& scenario) {
    scenario.validate();
    return ScenarioRunner(scenario).run();
}

std::string Report::to_text(bool timings) const {
    std::ostringstream os;
    os << "scenario " << scenario.name;
    if (scenario.builtin)
        os << " (builtin " << builtin_name(*scenario.builtin) << ", N=" << scenario.dim << ")";
    else
        os << " (H = " << scenario.hamiltonian_text << ", N=" << scenario.dim << ")";
    os << "\n";
    os << "constants: omega=" << rational_to_string(scenario.constants.omega)
       << " m1=" << rational_to_string(scenario.constants.m1)
       << " m2=" << rational_to_string(scenario.constants.m2)
       << " k=" << rational_to_string(scenario.constants.k) << "\n";
    os << "truncation: h^<=" << scenario.hbar_order << ", t^<=" << scenario.t_order << "\n";
    for (const auto& t : tasks) {
        os << "task " << task_name(t.task) << ": " << (t.pass ? "PASS" : "FAIL")
           << " (checked through h^" << t.hbar_order_checked << ")";
        if (timings) os << " [" << t.wall_ms << " ms]";
        os << "\n";
        for (const auto& item : t.items) {
            const char* tag =
                item.asserted ? (item.pass ? "  [ok]   " : "  [FAIL] ") : "  [info] ";
            os << tag << item.label << "\n";
            if (!item.computed.empty()) os << "         value: " << item.computed << "\n";
            if (!item.expected.empty()) os << "         expected: " << item.expected << "\n";
            if (!item.residual.empty()) os << "         residual: " << item.residual << "\n";
        }
    }
    os << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string Report::to_json_text(bool timings) const {
    json j;
    j["scenario"] = json::parse(scenario.to_json_text());
    j["pass"] = pass;
    json task_list = json::array();
    for (const auto& t : tasks) {
        json tj;
        tj["task"] = task_name(t.task);
        tj["pass"] = t.pass;
        tj["hbar_order_checked"] = t.hbar_order_checked;
        if (timings) tj["wall_ms"] = t.wall_ms;
        json items = json::array();
        for (const auto& item : t.items) {
            json ij;
            ij["label"] = item.label;
            if (!item.computed.empty()) ij["computed"] = item.computed;
            if (!item.expected.empty()) ij["expected"] = item.expected;
            if (!item.residual.empty()) ij["residual"] = item.residual;
            ij["asserted"] = item.asserted;
            ij["pass"] = item.pass;
            items.push_back(ij);
        }
        tj["items"] = items;
        task_list.push_back(tj);
    }
    j["tasks"] = task_list;
    return j.dump(2) + "\n";
}

} // namespace phasestar
