#include "phasestar/phase_map.hpp"

namespace phasestar {

PhaseMap::PhaseMap(SeriesContext ctx, std::vector<DeformedFn> components)
    : ctx_(std::move(ctx)), comps_(std::move(components)) {
    if (comps_.size() != static_cast<std::size_t>(2 * ctx_.dim()))
        throw IncompatibleContext("a phase map needs 2N components");
    for (auto& c : comps_)
        if (!(c.context() == ctx_)) c = c.embedded(ctx_);
}

PhaseMap PhaseMap::identity(const SeriesContext& ctx) {
    std::vector<DeformedFn> comps;
    comps.reserve(static_cast<std::size_t>(2 * ctx.dim()));
    for (int v = 0; v < 2 * ctx.dim(); ++v) comps.push_back(DeformedFn::variable(ctx, v));
    return PhaseMap(ctx, std::move(comps));
}

bool PhaseMap::is_flow_like() const {
    const Exponents zero(ctx_.nparams(), 0);
    for (int v = 0; v < 2 * ctx_.dim(); ++v)
        if (!(comps_[static_cast<std::size_t>(v)].coefficient(zero) ==
              PhasePoly::variable(ctx_.dim(), v)))
            return false;
    return true;
}

PhaseMap PhaseMap::embedded(const SeriesContext& target) const {
    std::vector<DeformedFn> comps;
    comps.reserve(comps_.size());
    for (const auto& c : comps_) comps.push_back(c.embedded(target));
    return PhaseMap(target, std::move(comps));
}

DeformedFn substitute(const PhasePoly& f, const PhaseMap& map) {
    const SeriesContext& ctx = map.context();
    if (f.dim() != ctx.dim()) throw IncompatibleContext("dimension mismatch in substitution");

    // Cache powers of each component up to the largest exponent used.
    const int nv = 2 * ctx.dim();
    std::vector<std::vector<DeformedFn>> powers(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
        powers[static_cast<std::size_t>(v)].push_back(DeformedFn::constant(ctx, GaussianRational(1)));
    auto power = [&](int v, int e) -> const DeformedFn& {
        auto& cache = powers[static_cast<std::size_t>(v)];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * map.component(v));
        return cache[static_cast<std::size_t>(e)];
    };

    DeformedFn r = DeformedFn::zero(ctx);
    for (const auto& [e, c] : f.terms()) {
        DeformedFn term = DeformedFn::constant(ctx, c);
        for (int v = 0; v < nv; ++v)
            if (e[static_cast<std::size_t>(v)] > 0) term = term * power(v, e[static_cast<std::size_t>(v)]);
        r = r + term;
    }
    return r;
}

DeformedFn substitute(const DeformedFn& f, const PhaseMap& map) {
    SeriesContext joint = SeriesContext::join(f.context(), map.context());
    const PhaseMap m = map.embedded(joint);
    DeformedFn r = DeformedFn::zero(joint);
    for (const auto& [d, p] : f.coeffs()) {
        DeformedFn term = substitute(p, m);
        // Re-attach the parameter monomial of this coefficient.
        for (std::size_t k = 0; k < d.size(); ++k)
            if (d[k] > 0) term = term.shifted(f.context().params()[k].name, d[k]);
        r = r + term;
    }
    return r;
}

PhaseMap invert_map(const PhaseMap& map) {
    if (!map.is_flow_like())
        throw NotInvertible("map is not identity at zero parameter values");
    const SeriesContext& ctx = map.context();
    const int nv = 2 * ctx.dim();

    // Phi = id + R with R of positive parameter degree; iterate Psi = id - R o Psi.
    std::vector<DeformedFn> higher;
    higher.reserve(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
        higher.push_back(map.component(v) - DeformedFn::variable(ctx, v));

    int bound = 2;
    for (const auto& spec : ctx.params()) bound += spec.order;

    PhaseMap psi = PhaseMap::identity(ctx);
    for (int iter = 0; iter < bound; ++iter) {
        std::vector<DeformedFn> next;
        next.reserve(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v)
            next.push_back(DeformedFn::variable(ctx, v) - substitute(higher[static_cast<std::size_t>(v)], psi));
        PhaseMap candidate(ctx, std::move(next));
        if (candidate == psi) break;
        psi = std::move(candidate);
    }

    for (int v = 0; v < nv; ++v)
        if (!(substitute(psi.component(v), map) == DeformedFn::variable(ctx, v)))
            throw NotInvertible("series reversion did not converge");
    return psi;
}

} // namespace phasestar
