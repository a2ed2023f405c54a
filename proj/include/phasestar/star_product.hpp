#pragma once

#include <optional>
#include <vector>

#include "phasestar/derivation.hpp"

namespace phasestar {

/// Which bidifferential pairing a star product uses: coordinate derivatives
/// (Moyal) or the 2N derivations induced by a flow (a transformed product).
class StarProductSpec {
public:
    static StarProductSpec moyal() { return StarProductSpec(); }
    static StarProductSpec transformed(std::vector<Derivation> derivations);

    bool is_moyal() const { return derivations_.empty(); }
    const std::vector<Derivation>& derivations() const { return derivations_; }

    /// Applies the v-th pairing operator (d_v or D_v) to f.
    DeformedFn derive(int v, const DeformedFn& f) const;

private:
    StarProductSpec() = default;
    std::vector<Derivation> derivations_; // empty for Moyal
};

/// The star product f * g as the bidifferential exponential series, summed to
/// the hbar truncation order of the operands (higher terms are dead). The
/// context must carry the parameter "h".
DeformedFn star(const StarProductSpec& spec, const DeformedFn& f, const DeformedFn& g);

/// f*g - g*f.
DeformedFn star_commutator(const StarProductSpec& spec, const DeformedFn& f, const DeformedFn& g);

/// (f*g - g*f)/(i*hbar). The hbar truncation of the result drops by one; no
/// padding with unknown top-order terms.
DeformedFn moyal_bracket(const StarProductSpec& spec, const DeformedFn& f, const DeformedFn& g);

/// Classical Poisson bracket sum_i (d_x f d_p g - d_p f d_x g).
DeformedFn poisson_bracket(const DeformedFn& f, const DeformedFn& g);
PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g);

/// The left-associated product x1*..*x1*..*xN*p1*..*pN with the given
/// multiplicities, all x factors before all p factors, components in index
/// order. Exponent vector length 2N.
DeformedFn star_monomial(const StarProductSpec& spec, const SeriesContext& ctx,
                         const Exponents& exponents);

} // namespace phasestar
