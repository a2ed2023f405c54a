#pragma once

#include <vector>

#include "phasestar/deformed_fn.hpp"

namespace phasestar {

/// A 2N-tuple of series (Q^1..Q^N, P_1..P_N): a transformation or flow of
/// phase space. Components share one context.
class PhaseMap {
public:
    PhaseMap(SeriesContext ctx, std::vector<DeformedFn> components);

    static PhaseMap identity(const SeriesContext& ctx);

    const SeriesContext& context() const { return ctx_; }
    int dim() const { return ctx_.dim(); }
    const std::vector<DeformedFn>& components() const { return comps_; }
    const DeformedFn& component(int v) const { return comps_.at(static_cast<std::size_t>(v)); }

    /// Identity at zero parameter values (the flow initial condition).
    bool is_flow_like() const;

    PhaseMap embedded(const SeriesContext& target) const;

    bool operator==(const PhaseMap&) const = default;

private:
    SeriesContext ctx_;
    std::vector<DeformedFn> comps_;
};

/// f with x^i -> Q^i, p_j -> P_j, truncating throughout. The result context
/// is the join of f's and the map's.
DeformedFn substitute(const PhasePoly& f, const PhaseMap& map);
DeformedFn substitute(const DeformedFn& f, const PhaseMap& map);

/// Series inverse of a flow-like map: returns Psi with Psi o Phi = Phi o Psi
/// = identity up to truncation, by fixed-point reversion.
PhaseMap invert_map(const PhaseMap& map);

} // namespace phasestar
