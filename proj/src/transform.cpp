#include "phasestar/transform.hpp"

namespace phasestar {

std::vector<Derivation> induced_derivations(const PhaseMap& map) {
    const SeriesContext& ctx = map.context();
    const int nv = 2 * ctx.dim();
    const PhaseMap inverse = invert_map(map);

    std::vector<Derivation> out;
    out.reserve(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
        std::vector<DeformedFn> coeffs;
        coeffs.reserve(static_cast<std::size_t>(nv));
        for (int j = 0; j < nv; ++j)
            coeffs.push_back(substitute(map.component(j).partial(v), inverse));
        out.emplace_back(ctx, std::move(coeffs));
    }
    return out;
}

StarProductSpec transformed_star(const PhaseMap& map) {
    return StarProductSpec::transformed(induced_derivations(map));
}

TransformReport verify_transform_identity(const PhaseMap& map, const DeformedFn& f,
                                          const DeformedFn& g) {
    const PhaseMap inverse = invert_map(map);
    const StarProductSpec star_t = transformed_star(map);
    const StarProductSpec moyal = StarProductSpec::moyal();

    DeformedFn lhs = substitute(star(moyal, f, g), inverse);
    DeformedFn rhs = star(star_t, substitute(f, inverse), substitute(g, inverse));

    TransformReport report;
    report.add("(f*g) o Phi^-1 - (f o Phi^-1) *_t (g o Phi^-1)", lhs - rhs);
    return report;
}

} // namespace phasestar
