#include "phasestar/star_product.hpp"

namespace phasestar {

Derivation::Derivation(SeriesContext ctx, std::vector<DeformedFn> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(2 * ctx_.dim()))
        throw IncompatibleContext("a derivation needs 2N coefficients");
    for (auto& c : coeffs_)
        if (!(c.context() == ctx_)) c = c.embedded(ctx_);
}

Derivation Derivation::coordinate(const SeriesContext& ctx, int v) {
    std::vector<DeformedFn> coeffs;
    for (int j = 0; j < 2 * ctx.dim(); ++j)
        coeffs.push_back(j == v ? DeformedFn::constant(ctx, GaussianRational(1))
                                : DeformedFn::zero(ctx));
    return Derivation(ctx, std::move(coeffs));
}

DeformedFn Derivation::apply(const DeformedFn& f) const {
    DeformedFn r = DeformedFn::zero(SeriesContext::join(ctx_, f.context()));
    for (int j = 0; j < 2 * ctx_.dim(); ++j) {
        const DeformedFn& a = coeffs_[static_cast<std::size_t>(j)];
        if (a.is_zero()) continue;
        DeformedFn d = f.partial(j);
        if (d.is_zero()) continue;
        r = r + a.embedded(r.context()) * d.embedded(r.context());
    }
    return r;
}

StarProductSpec StarProductSpec::transformed(std::vector<Derivation> derivations) {
    if (derivations.empty())
        throw IncompatibleContext("a transformed product needs 2N derivations");
    const int dim = derivations.front().context().dim();
    if (derivations.size() != static_cast<std::size_t>(2 * dim))
        throw IncompatibleContext("a transformed product needs 2N derivations");
    for (const auto& d : derivations)
        if (d.context().dim() != dim)
            throw IncompatibleContext("derivations of a transformed product must share one dim");
    StarProductSpec spec;
    spec.derivations_ = std::move(derivations);
    return spec;
}

DeformedFn StarProductSpec::derive(int v, const DeformedFn& f) const {
    if (is_moyal()) return f.partial(v);
    return derivations_[static_cast<std::size_t>(v)].apply(f);
}

namespace {

/// Accumulates the k-th exponential term of the pairing operator
/// P = sum_i (D_{x^i} (x) D_{p_i} - D_{p_i} (x) D_{x^i}) applied to f (x) g,
/// expanded over ordered operator sequences so nothing assumes the
/// derivations commute.
struct StarAccumulator {
    const StarProductSpec& spec;
    const SeriesContext& ctx;
    const int dim;
    const int max_k;
    std::vector<GaussianRational> factor; // (1/k!)(i/2)^k, hbar power applied via shift
    DeformedFn acc;

    StarAccumulator(const StarProductSpec& s, const SeriesContext& c, int K)
        : spec(s), ctx(c), dim(c.dim()), max_k(K), acc(DeformedFn::zero(c)) {
        GaussianRational f(1);
        const GaussianRational half_i(Rational(0), Rational(1) / 2);
        factor.push_back(f);
        for (int k = 1; k <= max_k; ++k) {
            f *= half_i;
            f /= GaussianRational(k);
            factor.push_back(f);
        }
    }

    void expand(int k, const DeformedFn& fpart, const DeformedFn& gpart, int sign) {
        DeformedFn term = fpart * gpart;
        if (!term.is_zero()) {
            GaussianRational c = factor[static_cast<std::size_t>(k)];
            if (sign < 0) c = -c;
            acc = acc + term.shifted("h", k) * c;
        }
        if (k == max_k) return;
        for (int i = 0; i < dim; ++i) {
            const int xv = i;
            const int pv = dim + i;
            {
                DeformedFn fx = spec.derive(xv, fpart);
                if (!fx.is_zero()) {
                    DeformedFn gp = spec.derive(pv, gpart);
                    if (!gp.is_zero()) expand(k + 1, fx, gp, sign);
                }
            }
            {
                DeformedFn fp = spec.derive(pv, fpart);
                if (!fp.is_zero()) {
                    DeformedFn gx = spec.derive(xv, gpart);
                    if (!gx.is_zero()) expand(k + 1, fp, gx, -sign);
                }
            }
        }
    }
};

} // namespace

DeformedFn star(const StarProductSpec& spec, const DeformedFn& f, const DeformedFn& g) {
    SeriesContext ctx = SeriesContext::join(f.context(), g.context());
    if (!spec.is_moyal())
        for (const auto& d : spec.derivations()) ctx = SeriesContext::join(ctx, d.context());
    if (!ctx.has_param("h"))
        throw UnknownParameter("star product needs the parameter h in the context");

    StarAccumulator acc(spec, ctx, ctx.order_of("h"));
    acc.expand(0, f.embedded(ctx), g.embedded(ctx), +1);
    return std::move(acc.acc);
}

DeformedFn star_commutator(const StarProductSpec& spec, const DeformedFn& f, const DeformedFn& g) {
    return star(spec, f, g) - star(spec, g, f);
}

DeformedFn moyal_bracket(const StarProductSpec& spec, const DeformedFn& f, const DeformedFn& g) {
    DeformedFn c = star_commutator(spec, f, g);
    const SeriesContext& ctx = c.context();
    const int K = ctx.order_of("h");
    DeformedFn r(ctx.with_order("h", K > 0 ? K - 1 : 0));
    const int hidx = ctx.index_of("h");
    const GaussianRational inv_i(Rational(0), Rational(-1)); // 1/i = -i
    for (const auto& [d, p] : c.coeffs()) {
        if (d[static_cast<std::size_t>(hidx)] == 0)
            throw Error("commutator with a nonzero h^0 part cannot be divided by i*h");
        Exponents nd = d;
        --nd[static_cast<std::size_t>(hidx)];
        r.add_term(nd, p * inv_i);
    }
    return r;
}

DeformedFn poisson_bracket(const DeformedFn& f, const DeformedFn& g) {
    DeformedFn::require_compatible(f, g);
    const SeriesContext ctx = SeriesContext::meet(f.context(), g.context());
    DeformedFn r = DeformedFn::zero(ctx);
    const int dim = ctx.dim();
    for (int i = 0; i < dim; ++i) {
        r = r + f.partial(i) * g.partial(dim + i) - f.partial(dim + i) * g.partial(i);
    }
    return r;
}

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g) {
    PhasePoly r(f.dim());
    for (int i = 0; i < f.dim(); ++i)
        r += f.partial(i) * g.partial(f.dim() + i) - f.partial(f.dim() + i) * g.partial(i);
    return r;
}

DeformedFn star_monomial(const StarProductSpec& spec, const SeriesContext& ctx,
                         const Exponents& exponents) {
    if (exponents.size() != static_cast<std::size_t>(2 * ctx.dim()))
        throw IncompatibleContext("exponent vector length must be 2N");
    DeformedFn r = DeformedFn::constant(ctx, GaussianRational(1));
    for (int v = 0; v < 2 * ctx.dim(); ++v)
        for (int j = 0; j < exponents[static_cast<std::size_t>(v)]; ++j)
            r = star(spec, r, DeformedFn::variable(ctx, v));
    return r;
}

} // namespace phasestar
