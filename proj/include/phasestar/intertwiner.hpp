#pragma once

#include <optional>

#include "phasestar/diff_operator.hpp"
#include "phasestar/flow.hpp"
#include "phasestar/transform.hpp"

namespace phasestar {

/// Outcome of one verification batch: residuals are required-zero series.
struct IntertwinerReport {
    int hbar_order_checked = 0;
    int monomial_degree = 0;
    int pairs_checked = 0;
    std::vector<IdentityCheck> checks;
    bool pass = true;

    void add(std::string label, DeformedFn residual) {
        const bool ok = residual.is_zero();
        checks.push_back({std::move(label), std::move(residual), ok});
        pass = pass && ok;
    }
};

/// Checks the three intertwiner relations for S against the product
/// transformed by the map, through hbar order hbar_order (must not exceed
/// what the operands carry):
///   (a) S(f*g) = Sf *_t Sg on all monomial pairs with
///       deg f + deg g <= monomial_degree,
///   (b) S fixes every coordinate function,
///   (c) S commutes with complex conjugation (sampled).
IntertwinerReport verify_intertwiner(const DiffOperator& s, const PhaseMap& map,
                                     int hbar_order, int monomial_degree);

struct SolveOptions {
    int hbar_order = 2;
    int max_derivative_order = 4;
    int max_coeff_degree = 6;
    /// The interpolation acts on all monomials of total degree <= this.
    int spanning_degree = 4;
};

struct SolveResult {
    enum class Status { Found, ExceedsAnsatz };
    Status status = Status::Found;
    std::optional<DiffOperator> op;
    /// Which bound failed, when status is ExceedsAnsatz.
    std::string detail;
    /// False when derivative orders above the spanning degree are admissible
    /// but unconstrained, so other solutions would fit the ansatz too.
    bool unique_within_ansatz = true;

    bool found() const { return status == Status::Found; }
};

/// Builds the intertwiner for a flow-like map order by order: the relations
/// force S's action on the star-monomial basis (S of a star monomial is the
/// same monomial under the transformed product), and a differential operator
/// is interpolated from that action on all monomials up to the spanning
/// degree. A result outside the ansatz bounds is reported, not returned.
SolveResult solve_intertwiner(const PhaseMap& map, const SolveOptions& options);

/// Quantum pull-back (S A) o Phi. The caller is responsible for S actually
/// verifying against the map.
DeformedFn quantum_pullback(const PhaseMap& map, const DiffOperator& s, const DeformedFn& a);

/// Group multiplication of flows at distinct formal times:
/// (S_2 Phi_1) o Phi_2, with S_2 the intertwiner at Phi_2's time. The two
/// maps must not share a time parameter name.
PhaseMap quantum_compose(const PhaseMap& phi1, const PhaseMap& phi2, const DiffOperator& s2);

struct GroupLawOptions {
    int t1_order = 3;
    int t2_order = 3;
    /// hbar order the equalities are asserted through.
    int hbar_order = 2;
    /// Monomial family degree for the pull-back composition identity.
    int monomial_degree = 3;
    SolveOptions solve;
};

/// Checks (i) the composed flow equals the flow at t1+t2 and (ii) the
/// pull-back of the composition is the composition of pull-backs, both up to
/// the configured orders. Intertwiners are solved from the flows themselves.
IntertwinerReport check_group_law(const HamiltonianSystem& system, const GroupLawOptions& options);

} // namespace phasestar
