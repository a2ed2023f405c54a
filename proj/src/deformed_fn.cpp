#include "phasestar/deformed_fn.hpp"

#include <climits>

namespace phasestar {

namespace {

Exponents zero_degree(const SeriesContext& ctx) {
    return Exponents(ctx.nparams(), 0);
}

bool within_bounds(const Exponents& degree, const SeriesContext& ctx) {
    for (std::size_t k = 0; k < degree.size(); ++k)
        if (degree[k] > ctx.params()[k].order) return false;
    return true;
}

Integer binomial(int n, int k) {
    Integer r = 1;
    for (int j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

} // namespace

DeformedFn DeformedFn::constant(const SeriesContext& ctx, GaussianRational c) {
    return from_poly(ctx, PhasePoly::constant(ctx.dim(), std::move(c)));
}

DeformedFn DeformedFn::from_poly(const SeriesContext& ctx, const PhasePoly& p) {
    if (p.dim() != ctx.dim()) throw IncompatibleContext("polynomial dimension does not match context");
    DeformedFn f(ctx);
    if (!p.is_zero()) f.coeffs_.emplace(zero_degree(ctx), p);
    return f;
}

DeformedFn DeformedFn::variable(const SeriesContext& ctx, int v) {
    return from_poly(ctx, PhasePoly::variable(ctx.dim(), v));
}

DeformedFn DeformedFn::param(const SeriesContext& ctx, const std::string& name, int exp) {
    int k = ctx.index_of(name);
    if (k < 0) throw UnknownParameter("unknown parameter: " + name);
    if (exp < 0) throw Error("negative parameter exponent");
    DeformedFn f(ctx);
    if (exp <= ctx.params()[static_cast<std::size_t>(k)].order) {
        Exponents d = zero_degree(ctx);
        d[static_cast<std::size_t>(k)] = exp;
        f.coeffs_.emplace(std::move(d), PhasePoly::constant(ctx.dim(), GaussianRational(1)));
    }
    return f;
}

PhasePoly DeformedFn::coefficient(const Exponents& degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? PhasePoly::zero(ctx_.dim()) : it->second;
}

PhasePoly DeformedFn::leading_part() const {
    return coefficient(zero_degree(ctx_));
}

int DeformedFn::min_param_degree(const std::string& name) const {
    int k = ctx_.index_of(name);
    if (k < 0) throw UnknownParameter("unknown parameter: " + name);
    int m = INT_MAX;
    for (const auto& [d, p] : coeffs_) m = std::min(m, d[static_cast<std::size_t>(k)]);
    return m;
}

int DeformedFn::max_param_degree(const std::string& name) const {
    int k = ctx_.index_of(name);
    if (k < 0) throw UnknownParameter("unknown parameter: " + name);
    int m = 0;
    for (const auto& [d, p] : coeffs_) m = std::max(m, d[static_cast<std::size_t>(k)]);
    return m;
}

void DeformedFn::add_term(const Exponents& degree, const PhasePoly& p) {
    if (p.is_zero() || !within_bounds(degree, ctx_)) return;
    auto [it, inserted] = coeffs_.emplace(degree, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void DeformedFn::require_compatible(const DeformedFn& a, const DeformedFn& b) {
    if (!a.ctx_.compatible_with(b.ctx_))
        throw IncompatibleContext("series contexts do not match");
}

DeformedFn DeformedFn::operator-() const {
    DeformedFn r(ctx_);
    for (const auto& [d, p] : coeffs_) r.coeffs_.emplace(d, -p);
    return r;
}

DeformedFn operator+(const DeformedFn& a, const DeformedFn& b) {
    DeformedFn::require_compatible(a, b);
    DeformedFn r(SeriesContext::meet(a.ctx_, b.ctx_));
    for (const auto& [d, p] : a.coeffs_) r.add_term(d, p);
    for (const auto& [d, p] : b.coeffs_) r.add_term(d, p);
    return r;
}

DeformedFn operator-(const DeformedFn& a, const DeformedFn& b) {
    DeformedFn::require_compatible(a, b);
    DeformedFn r(SeriesContext::meet(a.ctx_, b.ctx_));
    for (const auto& [d, p] : a.coeffs_) r.add_term(d, p);
    for (const auto& [d, p] : b.coeffs_) r.add_term(d, -p);
    return r;
}

DeformedFn operator*(const DeformedFn& a, const DeformedFn& b) {
    DeformedFn::require_compatible(a, b);
    DeformedFn r(SeriesContext::meet(a.ctx_, b.ctx_));
    Exponents d(r.ctx_.nparams());
    for (const auto& [da, pa] : a.coeffs_) {
        for (const auto& [db, pb] : b.coeffs_) {
            bool ok = true;
            for (std::size_t k = 0; k < d.size(); ++k) {
                d[k] = da[k] + db[k];
                if (d[k] > r.ctx_.params()[k].order) {
                    ok = false;
                    break;
                }
            }
            if (ok) r.add_term(d, pa * pb);
        }
    }
    return r;
}

DeformedFn operator*(const DeformedFn& a, const GaussianRational& c) {
    DeformedFn r(a.ctx_);
    if (c.is_zero()) return r;
    for (const auto& [d, p] : a.coeffs_) r.coeffs_.emplace(d, p * c);
    return r;
}

DeformedFn DeformedFn::shifted(const std::string& name, int k) const {
    int idx = ctx_.index_of(name);
    if (idx < 0) throw UnknownParameter("unknown parameter: " + name);
    if (k < 0) throw Error("negative parameter shift");
    DeformedFn r(ctx_);
    for (const auto& [d, p] : coeffs_) {
        Exponents nd = d;
        nd[static_cast<std::size_t>(idx)] += k;
        r.add_term(nd, p);
    }
    return r;
}

DeformedFn DeformedFn::partial(int v) const {
    DeformedFn r(ctx_);
    for (const auto& [d, p] : coeffs_) r.add_term(d, p.partial(v));
    return r;
}

DeformedFn DeformedFn::param_derivative(const std::string& name) const {
    int idx = ctx_.index_of(name);
    if (idx < 0) throw UnknownParameter("unknown parameter: " + name);
    const int order = ctx_.params()[static_cast<std::size_t>(idx)].order;
    DeformedFn r(ctx_.with_order(name, order > 0 ? order - 1 : 0));
    for (const auto& [d, p] : coeffs_) {
        const int k = d[static_cast<std::size_t>(idx)];
        if (k == 0) continue;
        Exponents nd = d;
        --nd[static_cast<std::size_t>(idx)];
        r.add_term(nd, p * GaussianRational(k));
    }
    return r;
}

DeformedFn DeformedFn::embedded(const SeriesContext& target) const {
    if (target.dim() != ctx_.dim()) throw IncompatibleContext("phase-space dimension mismatch");
    std::vector<int> where(ctx_.nparams());
    for (std::size_t k = 0; k < ctx_.nparams(); ++k) {
        const auto& spec = ctx_.params()[k];
        int t = target.index_of(spec.name);
        if (t < 0) throw IncompatibleContext("target context lacks parameter " + spec.name);
        const int target_order = target.params()[static_cast<std::size_t>(t)].order;
        if (target_order > spec.order && max_param_degree(spec.name) > 0)
            throw IncompatibleContext("cannot raise truncation of parameter " + spec.name +
                                      " (value depends on it)");
        where[k] = t;
    }
    DeformedFn r(target);
    Exponents nd(target.nparams(), 0);
    for (const auto& [d, p] : coeffs_) {
        std::fill(nd.begin(), nd.end(), 0);
        for (std::size_t k = 0; k < d.size(); ++k) nd[static_cast<std::size_t>(where[k])] = d[k];
        r.add_term(nd, p);
    }
    return r;
}

DeformedFn DeformedFn::lifted_exact(const SeriesContext& target) const {
    if (target.dim() != ctx_.dim()) throw IncompatibleContext("phase-space dimension mismatch");
    std::vector<int> where(ctx_.nparams());
    for (std::size_t k = 0; k < ctx_.nparams(); ++k) {
        int t = target.index_of(ctx_.params()[k].name);
        if (t < 0) throw IncompatibleContext("target context lacks parameter " + ctx_.params()[k].name);
        where[k] = t;
    }
    DeformedFn r(target);
    Exponents nd(target.nparams(), 0);
    for (const auto& [d, p] : coeffs_) {
        std::fill(nd.begin(), nd.end(), 0);
        for (std::size_t k = 0; k < d.size(); ++k) nd[static_cast<std::size_t>(where[k])] = d[k];
        r.add_term(nd, p);
    }
    return r;
}

DeformedFn DeformedFn::truncated_param(const std::string& name, int order) const {
    return embedded(ctx_.with_order(name, std::min(order, ctx_.order_of(name))));
}

DeformedFn DeformedFn::at_param_zero(const std::string& name) const {
    int idx = ctx_.index_of(name);
    if (idx < 0) throw UnknownParameter("unknown parameter: " + name);
    DeformedFn r(ctx_.without_param(name));
    for (const auto& [d, p] : coeffs_) {
        if (d[static_cast<std::size_t>(idx)] != 0) continue;
        Exponents nd;
        nd.reserve(d.size() - 1);
        for (std::size_t k = 0; k < d.size(); ++k)
            if (k != static_cast<std::size_t>(idx)) nd.push_back(d[k]);
        r.add_term(nd, p);
    }
    return r;
}

DeformedFn DeformedFn::scaled_param(const std::string& name, const Rational& c) const {
    int idx = ctx_.index_of(name);
    if (idx < 0) throw UnknownParameter("unknown parameter: " + name);
    DeformedFn r(ctx_);
    for (const auto& [d, p] : coeffs_) {
        const int k = d[static_cast<std::size_t>(idx)];
        GaussianRational factor(1);
        for (int j = 0; j < k; ++j) factor *= GaussianRational(c);
        r.add_term(d, p * factor);
    }
    return r;
}

DeformedFn DeformedFn::param_to_sum(const std::string& param, const std::string& a,
                                    const std::string& b, int order_a, int order_b) const {
    int idx = ctx_.index_of(param);
    if (idx < 0) throw UnknownParameter("unknown parameter: " + param);
    if (a == b) throw IncompatibleContext("parameter names in a sum substitution must differ");
    if (order_a + order_b > ctx_.order_of(param))
        throw IncompatibleContext("sum substitution needs order(" + a + ") + order(" + b +
                                  ") <= order(" + param + ")");
    std::vector<ParamSpec> ps;
    for (const auto& spec : ctx_.params())
        if (spec.name != param) ps.push_back(spec);
    ps.push_back({a, order_a});
    ps.push_back({b, order_b});
    SeriesContext target(ctx_.dim(), std::move(ps));

    const int ia = target.index_of(a);
    const int ib = target.index_of(b);
    DeformedFn r(target);
    for (const auto& [d, p] : coeffs_) {
        const int k = d[static_cast<std::size_t>(idx)];
        Exponents base(target.nparams(), 0);
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (j == static_cast<std::size_t>(idx)) continue;
            base[static_cast<std::size_t>(target.index_of(ctx_.params()[j].name))] = d[j];
        }
        for (int ja = std::max(0, k - order_b); ja <= std::min(k, order_a); ++ja) {
            Exponents nd = base;
            nd[static_cast<std::size_t>(ia)] += ja;
            nd[static_cast<std::size_t>(ib)] += k - ja;
            r.add_term(nd, p * GaussianRational(Rational(binomial(k, ja))));
        }
    }
    return r;
}

DeformedFn DeformedFn::conjugate() const {
    DeformedFn r(ctx_);
    for (const auto& [d, p] : coeffs_) r.coeffs_.emplace(d, p.conjugate());
    return r;
}

bool DeformedFn::is_real() const {
    for (const auto& [d, p] : coeffs_)
        if (!p.is_real()) return false;
    return true;
}

} // namespace phasestar
