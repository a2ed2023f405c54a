#include "phasestar/flow.hpp"

namespace phasestar {

HamiltonianSystem::HamiltonianSystem(int dim, PhasePoly hamiltonian, int hbar_order, int t_order)
    : dim_(dim), h_(std::move(hamiltonian)), hbar_order_(hbar_order), t_order_(t_order) {
    if (h_.dim() != dim_) throw IncompatibleContext("Hamiltonian dimension mismatch");
    if (!h_.is_real()) throw Error("Hamiltonian must have real coefficients");
    if (hbar_order_ < 0 || t_order_ < 0) throw Error("negative truncation order");
}

HamiltonianSystem HamiltonianSystem::with_orders(int hbar_order, int t_order) const {
    return HamiltonianSystem(dim_, h_, hbar_order < 0 ? hbar_order_ : hbar_order,
                             t_order < 0 ? t_order_ : t_order);
}

SeriesContext HamiltonianSystem::context(const std::string& time) const {
    return SeriesContext(dim_, {{"h", hbar_order_}, {time, t_order_}});
}

namespace {

enum class BracketKind { Deformed, Poisson };

DeformedFn evolve_impl(const HamiltonianSystem& system, const DeformedFn& a,
                       const std::string& time, BracketKind kind) {
    const int K = system.hbar_order();
    const int L = system.t_order();
    const SeriesContext out_ctx = system.context(time);

    if (a.dim() != system.dim()) throw IncompatibleContext("observable dimension mismatch");
    for (const auto& spec : a.context().params()) {
        if (spec.name == time && a.max_param_degree(time) > 0)
            throw IncompatibleContext("observable must not depend on the time parameter");
        if (spec.name != time && spec.name != "h")
            throw IncompatibleContext("observable carries a foreign parameter: " + spec.name);
    }

    // Each deformed bracket consumes one hbar order, so run the nested
    // brackets K+L high and deliver the (K, L) truncation.
    const SeriesContext lift_ctx =
        kind == BracketKind::Deformed ? out_ctx.with_order("h", K + L) : out_ctx;
    const DeformedFn h_fn = DeformedFn::from_poly(lift_ctx, system.hamiltonian());
    const StarProductSpec moyal = StarProductSpec::moyal();

    DeformedFn nested = a.lifted_exact(lift_ctx);
    DeformedFn result = nested;
    GaussianRational coeff(1);
    for (int k = 1; k <= L; ++k) {
        nested = kind == BracketKind::Deformed ? moyal_bracket(moyal, h_fn, nested)
                                               : poisson_bracket(h_fn, nested);
        if (nested.is_zero()) break;
        coeff /= GaussianRational(-k); // (-1)^k / k!
        result = result + nested.shifted(time, k) * coeff;
    }
    return result.embedded(SeriesContext::meet(result.context(), out_ctx))
        .lifted_exact(out_ctx);
}

QuantumFlow flow_impl(const HamiltonianSystem& system, const std::string& time, BracketKind kind) {
    const SeriesContext ctx = system.context(time);
    std::vector<DeformedFn> comps;
    comps.reserve(static_cast<std::size_t>(2 * system.dim()));
    for (int v = 0; v < 2 * system.dim(); ++v) {
        PhasePoly coord = PhasePoly::variable(system.dim(), v);
        comps.push_back(evolve_impl(system, DeformedFn::from_poly(ctx, coord), time, kind));
    }
    return QuantumFlow{system, time, PhaseMap(ctx, std::move(comps))};
}

CanonicityReport canonicity_impl(const QuantumFlow& flow, bool quantum) {
    const int dim = flow.map.dim();
    const StarProductSpec moyal = StarProductSpec::moyal();
    CanonicityReport report;
    report.quantum = quantum;
    report.hbar_order_checked =
        quantum ? std::max(0, flow.system.hbar_order() - 1) : flow.system.hbar_order();

    auto bracket = [&](const DeformedFn& f, const DeformedFn& g) {
        return quantum ? moyal_bracket(moyal, f, g) : poisson_bracket(f, g);
    };
    auto add = [&](const std::string& label, const DeformedFn& value, int expected) {
        DeformedFn deviation =
            value - DeformedFn::constant(value.context(), GaussianRational(expected));
        report.entries.push_back({label, value, deviation, deviation.is_zero()});
        report.pass = report.pass && report.entries.back().pass;
    };

    const char* open = quantum ? "[[" : "{";
    const char* close = quantum ? "]]" : "}";
    auto name = [&](const std::string& a, const std::string& b) {
        return open + a + "," + b + close;
    };
    auto qn = [&](int i) { return "Q" + (dim == 1 ? std::string() : std::to_string(i + 1)); };
    auto pn = [&](int j) { return "P" + (dim == 1 ? std::string() : std::to_string(j + 1)); };

    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            add(name(qn(i), qn(j)), bracket(flow.position(i), flow.position(j)), 0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            add(name(qn(i), pn(j)), bracket(flow.position(i), flow.momentum(j)), i == j ? 1 : 0);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            add(name(pn(i), pn(j)), bracket(flow.momentum(i), flow.momentum(j)), 0);
    return report;
}

} // namespace

DeformedFn evolve_observable(const HamiltonianSystem& system, const DeformedFn& a,
                             const std::string& time) {
    return evolve_impl(system, a, time, BracketKind::Deformed);
}

DeformedFn evolve_observable(const HamiltonianSystem& system, const PhasePoly& a,
                             const std::string& time) {
    return evolve_impl(system, DeformedFn::from_poly(system.context(time), a), time,
                       BracketKind::Deformed);
}

DeformedFn evolve_observable_classical(const HamiltonianSystem& system, const PhasePoly& a,
                                       const std::string& time) {
    return evolve_impl(system, DeformedFn::from_poly(system.context(time), a), time,
                       BracketKind::Poisson);
}

QuantumFlow quantum_flow(const HamiltonianSystem& system, const std::string& time) {
    return flow_impl(system, time, BracketKind::Deformed);
}

QuantumFlow classical_flow(const HamiltonianSystem& system, const std::string& time) {
    return flow_impl(system, time, BracketKind::Poisson);
}

CanonicityReport check_quantum_canonicity(const QuantumFlow& flow) {
    return canonicity_impl(flow, true);
}

CanonicityReport check_classical_canonicity(const QuantumFlow& flow) {
    return canonicity_impl(flow, false);
}

} // namespace phasestar
