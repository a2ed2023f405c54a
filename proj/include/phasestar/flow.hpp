#pragma once

#include <string>
#include <vector>

#include "phasestar/phase_map.hpp"
#include "phasestar/star_product.hpp"

namespace phasestar {

/// A Hamiltonian system together with the truncation orders every series
/// computation for it uses: hbar to K, time to L.
class HamiltonianSystem {
public:
    HamiltonianSystem(int dim, PhasePoly hamiltonian, int hbar_order, int t_order);

    int dim() const { return dim_; }
    const PhasePoly& hamiltonian() const { return h_; }
    int hbar_order() const { return hbar_order_; }
    int t_order() const { return t_order_; }

    /// Copy with different truncation orders (negative keeps the current one).
    HamiltonianSystem with_orders(int hbar_order, int t_order) const;

    /// The (h, time) series ring of this system's flows.
    SeriesContext context(const std::string& time = "t") const;

private:
    int dim_;
    PhasePoly h_;
    int hbar_order_;
    int t_order_;
};

/// A flow map solving the quantum (or classical) Hamiltonian equations as a
/// truncated (h, t) series.
struct QuantumFlow {
    HamiltonianSystem system;
    std::string time;
    PhaseMap map;

    const DeformedFn& position(int i) const { return map.component(i); }
    const DeformedFn& momentum(int j) const { return map.component(map.dim() + j); }
};

/// Heisenberg evolution A(t) = sum_k ((-t)^k / k!) [[H, .. [[H, A]] .. ]],
/// so that dA/dt = [[A(t), H]]. The observable is polynomial data: it may
/// carry exact hbar terms but must not depend on the time parameter.
DeformedFn evolve_observable(const HamiltonianSystem& system, const DeformedFn& a,
                             const std::string& time = "t");
DeformedFn evolve_observable(const HamiltonianSystem& system, const PhasePoly& a,
                             const std::string& time = "t");

/// The classical limit: nested Poisson brackets instead of deformed ones.
DeformedFn evolve_observable_classical(const HamiltonianSystem& system, const PhasePoly& a,
                                       const std::string& time = "t");

/// Evolves every coordinate function and assembles the flow map.
QuantumFlow quantum_flow(const HamiltonianSystem& system, const std::string& time = "t");
QuantumFlow classical_flow(const HamiltonianSystem& system, const std::string& time = "t");

/// One bracket of the canonicity matrix with its required canonical value.
struct CanonicityEntry {
    std::string label;
    DeformedFn bracket;
    DeformedFn deviation; // bracket minus delta_ij; must be the zero series
    bool pass;
};

struct CanonicityReport {
    bool quantum = true;
    int hbar_order_checked = 0;
    std::vector<CanonicityEntry> entries;
    bool pass = true;
};

/// All deformed brackets [[Q^i,Q^j]], [[Q^i,P_j]], [[P_i,P_j]] of the flow,
/// checked against the canonical values. The deformed bracket consumes one
/// hbar order, so the verdict covers orders <= K-1 of the flow's K.
CanonicityReport check_quantum_canonicity(const QuantumFlow& flow);

/// Classical Poisson brackets of the flow components; a quantum flow may
/// legitimately fail this one.
CanonicityReport check_classical_canonicity(const QuantumFlow& flow);

} // namespace phasestar
