#pragma once

#include "phasestar/phase_map.hpp"
#include "phasestar/star_product.hpp"

namespace phasestar {

/// The 2N derivations D_v induced by a flow-like map:
/// D_v = sum_j [(d_v Phi^j) o Phi^{-1}] d_j, which satisfy the defining
/// identity (d_v f) o Phi^{-1} = D_v (f o Phi^{-1}) up to truncation.
std::vector<Derivation> induced_derivations(const PhaseMap& map);

/// The star product transformed by the map: the Moyal bidifferential
/// exponential with the induced derivations in place of the coordinate
/// derivatives.
StarProductSpec transformed_star(const PhaseMap& map);

/// One checked identity with its required-zero residual.
struct IdentityCheck {
    std::string label;
    DeformedFn residual;
    bool pass;
};

struct TransformReport {
    std::vector<IdentityCheck> checks;
    bool pass = true;

    void add(std::string label, DeformedFn residual) {
        const bool ok = residual.is_zero();
        checks.push_back({std::move(label), std::move(residual), ok});
        pass = pass && ok;
    }
};

/// Both sides of (f*g) o Phi^{-1} = (f o Phi^{-1}) *_t (g o Phi^{-1}),
/// reported as a required-zero difference.
TransformReport verify_transform_identity(const PhaseMap& map, const DeformedFn& f,
                                          const DeformedFn& g);

} // namespace phasestar
