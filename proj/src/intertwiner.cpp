#include "phasestar/intertwiner.hpp"

#include <functional>

namespace phasestar {

namespace {

/// All monomial exponent vectors of total degree <= degree, graded-lex
/// ascending (the canonical processing order everywhere below).
std::vector<Exponents> monomials_up_to(int nvars, int degree) {
    std::vector<Exponents> out;
    Exponents cur(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<std::size_t>(v)] = e;
            rec(v + 1, left - e);
            cur[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(0, degree);
    std::sort(out.begin(), out.end(), GradedLexLess());
    return out;
}

Rational factorial_of(const Exponents& e) {
    Rational r(1);
    for (int v : e)
        for (int j = 2; j <= v; ++j) r *= j;
    return r;
}

/// The forced action of the intertwiner on every plain monomial up to the
/// spanning degree: expand the monomial in the star-monomial basis of the
/// Moyal product, then replace each star monomial by its transformed-product
/// counterpart. Triangular because the star corrections lower the degree.
std::map<Exponents, DeformedFn, GradedLexLess> forced_action(
    const StarProductSpec& star_t, const SeriesContext& ctx, int spanning_degree) {
    const StarProductSpec moyal = StarProductSpec::moyal();
    std::map<Exponents, DeformedFn, GradedLexLess> action;
    for (const Exponents& e : monomials_up_to(2 * ctx.dim(), spanning_degree)) {
        DeformedFn value = star_monomial(star_t, ctx, e).embedded(ctx);
        // Corrections: star_monomial(moyal, e) minus the plain monomial, a
        // combination of strictly lower monomials with series coefficients.
        DeformedFn corr = star_monomial(moyal, ctx, e) -
                          DeformedFn::from_poly(ctx, PhasePoly::monomial(ctx.dim(), e));
        for (const auto& [pd, poly] : corr.coeffs()) {
            for (const auto& [me, c] : poly.terms()) {
                DeformedFn contrib = action.at(me) * c;
                for (std::size_t k = 0; k < pd.size(); ++k)
                    if (pd[k] > 0) contrib = contrib.shifted(ctx.params()[k].name, pd[k]);
                value = value - contrib;
            }
        }
        action.emplace(e, value.embedded(ctx));
    }
    return action;
}

} // namespace

SolveResult solve_intertwiner(const PhaseMap& map, const SolveOptions& options) {
    SeriesContext ctx = map.context();
    if (!ctx.has_param("h"))
        throw UnknownParameter("intertwiner solve needs the parameter h in the context");
    if (ctx.order_of("h") > options.hbar_order)
        ctx = ctx.with_order("h", options.hbar_order);
    const PhaseMap m = map.embedded(ctx);
    const StarProductSpec star_t = transformed_star(m);

    const auto action = forced_action(star_t, ctx, options.spanning_degree);

    // Interpolate the operator: processing test monomials in ascending graded
    // order makes the system triangular, with d^eps(x^eps) = eps! on the
    // diagonal.
    DiffOperator op(ctx);
    for (const auto& [eps, value] : action) {
        DeformedFn residual = value;
        for (const auto& [alpha, coeff] : op.terms()) {
            bool divides = true;
            for (std::size_t v = 0; v < alpha.size(); ++v)
                if (alpha[v] > eps[v]) {
                    divides = false;
                    break;
                }
            if (!divides) continue;
            Exponents rest(eps.size());
            Rational falling(1);
            for (std::size_t v = 0; v < eps.size(); ++v) {
                rest[v] = eps[v] - alpha[v];
                for (int j = 0; j < alpha[v]; ++j) falling *= eps[v] - j;
            }
            residual = residual -
                       coeff * DeformedFn::from_poly(
                                   ctx, PhasePoly::monomial(ctx.dim(), rest,
                                                            GaussianRational(falling)));
        }
        if (residual.is_zero()) continue;
        op.add_term(eps, residual * GaussianRational(Rational(1) / factorial_of(eps)));
    }

    SolveResult result;
    result.unique_within_ansatz = options.max_derivative_order <= options.spanning_degree;
    if (op.order() > options.max_derivative_order) {
        result.status = SolveResult::Status::ExceedsAnsatz;
        result.detail = "derivative order " + std::to_string(op.order()) +
                        " exceeds the ansatz bound " +
                        std::to_string(options.max_derivative_order);
        return result;
    }
    if (op.coefficient_degree() > options.max_coeff_degree) {
        result.status = SolveResult::Status::ExceedsAnsatz;
        result.detail = "coefficient degree " + std::to_string(op.coefficient_degree()) +
                        " exceeds the ansatz bound " + std::to_string(options.max_coeff_degree);
        return result;
    }
    result.op = std::move(op);
    return result;
}

IntertwinerReport verify_intertwiner(const DiffOperator& s, const PhaseMap& map,
                                     int hbar_order, int monomial_degree) {
    SeriesContext ctx = SeriesContext::join(s.context(), map.context());
    if (ctx.order_of("h") > hbar_order) ctx = ctx.with_order("h", hbar_order);
    const PhaseMap m = map.embedded(ctx);
    const StarProductSpec star_t = transformed_star(m);
    const StarProductSpec moyal = StarProductSpec::moyal();

    IntertwinerReport report;
    report.hbar_order_checked = ctx.order_of("h");
    report.monomial_degree = monomial_degree;

    if (!s.is_identity_at_hbar_zero())
        report.add("S has the intertwiner shape (identity at h^0)",
                   DeformedFn::constant(ctx, GaussianRational(1)));

    // (b) S fixes the coordinates.
    for (int v = 0; v < 2 * ctx.dim(); ++v) {
        DeformedFn coord = DeformedFn::variable(ctx, v);
        report.add("S " + variable_name(v, ctx.dim()) + " = " + variable_name(v, ctx.dim()),
                   s.apply(coord).embedded(ctx) - coord);
    }

    // (a) The product relation on the spanning family of monomial pairs.
    const auto monos = monomials_up_to(2 * ctx.dim(), monomial_degree);
    DeformedFn first_failure = DeformedFn::zero(ctx);
    int pairs = 0;
    std::string failure_label;
    std::vector<DeformedFn> s_of;
    s_of.reserve(monos.size());
    for (const auto& e : monos)
        s_of.push_back(s.apply(DeformedFn::from_poly(ctx, PhasePoly::monomial(ctx.dim(), e)))
                           .embedded(ctx));
    for (std::size_t a = 0; a < monos.size(); ++a) {
        for (std::size_t b = 0; b < monos.size(); ++b) {
            if (total_degree(monos[a]) + total_degree(monos[b]) > monomial_degree) continue;
            ++pairs;
            DeformedFn fg = star(moyal, DeformedFn::from_poly(ctx, PhasePoly::monomial(ctx.dim(), monos[a])),
                                 DeformedFn::from_poly(ctx, PhasePoly::monomial(ctx.dim(), monos[b])));
            DeformedFn lhs = s.apply(fg).embedded(ctx);
            DeformedFn rhs = star(star_t, s_of[a], s_of[b]).embedded(ctx);
            DeformedFn residual = lhs - rhs;
            if (!residual.is_zero() && failure_label.empty()) {
                first_failure = residual;
                failure_label = " (first failure at " +
                                to_string(PhasePoly::monomial(ctx.dim(), monos[a])) + " , " +
                                to_string(PhasePoly::monomial(ctx.dim(), monos[b])) + ")";
            }
        }
    }
    report.pairs_checked = pairs;
    report.add("S(f*g) = Sf *_t Sg on " + std::to_string(pairs) + " monomial pairs" +
                   failure_label,
               first_failure);

    // (c) Conjugation equivariance on a fixed deterministic sample.
    int sample = 0;
    for (const auto& e : monos) {
        if (total_degree(e) == 0 || total_degree(e) > monomial_degree - 1) continue;
        if (++sample > 4) break;
        DeformedFn f = DeformedFn::from_poly(
            ctx, PhasePoly::monomial(ctx.dim(), e, GaussianRational(Rational(1), Rational(1))));
        report.add("S(conj f) = conj(S f) at f = " + to_string(f),
                   s.apply(f.conjugate()).embedded(ctx) - s.apply(f).embedded(ctx).conjugate());
    }
    return report;
}

DeformedFn quantum_pullback(const PhaseMap& map, const DiffOperator& s, const DeformedFn& a) {
    return substitute(s.apply(a), map);
}

PhaseMap quantum_compose(const PhaseMap& phi1, const PhaseMap& phi2, const DiffOperator& s2) {
    for (const auto& p1 : phi1.context().params()) {
        if (p1.name == "h") continue;
        if (phi2.context().has_param(p1.name))
            throw IncompatibleContext("flows to compose share the time parameter " + p1.name);
    }
    std::vector<DeformedFn> comps;
    comps.reserve(phi1.components().size());
    for (const auto& c : phi1.components()) comps.push_back(substitute(s2.apply(c), phi2));
    SeriesContext joint = comps.front().context();
    return PhaseMap(joint, std::move(comps));
}

IntertwinerReport check_group_law(const HamiltonianSystem& system,
                                  const GroupLawOptions& options) {
    const int K = system.hbar_order();
    IntertwinerReport report;
    report.hbar_order_checked = std::min(K, options.hbar_order);
    report.monomial_degree = options.monomial_degree;

    // Flows at the two formal times and the reference flow at t1 + t2.
    const HamiltonianSystem sys1 = system.with_orders(-1, options.t1_order);
    const HamiltonianSystem sys2 = system.with_orders(-1, options.t2_order);
    const HamiltonianSystem sys_sum =
        system.with_orders(-1, options.t1_order + options.t2_order);
    const PhaseMap phi1 = quantum_flow(sys1, "t1").map;
    const PhaseMap phi2 = quantum_flow(sys2, "t2").map;
    const PhaseMap flow_sum = quantum_flow(sys_sum, "t").map;

    SolveOptions solve_opts = options.solve;
    solve_opts.hbar_order = report.hbar_order_checked;
    SolveResult s1 = solve_intertwiner(phi1, solve_opts);
    SolveResult s2 = solve_intertwiner(phi2, solve_opts);
    if (!s1.found() || !s2.found()) {
        report.add("intertwiner solve within ansatz (" +
                       (s1.found() ? s2.detail : s1.detail) + ")",
                   DeformedFn::constant(system.context(), GaussianRational(1)));
        return report;
    }

    auto cut = [&](const DeformedFn& f) {
        return f.truncated_param("h", report.hbar_order_checked);
    };

    // (i) (S_{t2} Phi_{t1}) o Phi_{t2} = Phi_{t1+t2}.
    const PhaseMap composed = quantum_compose(phi1, phi2, *s2.op);
    for (int v = 0; v < 2 * system.dim(); ++v) {
        DeformedFn expected = flow_sum.component(v).param_to_sum(
            "t", "t1", "t2", options.t1_order, options.t2_order);
        std::string what = v < system.dim() ? "Q" + std::to_string(v + 1)
                                            : "P" + std::to_string(v - system.dim() + 1);
        report.add("composition law for " + what,
                   cut(composed.component(v)) - cut(expected));
    }

    // (ii) (Phi_{t1} Phi_{t2})^* = Phi_{t2}^* o Phi_{t1}^* on monomials.
    for (const Exponents& e : monomials_up_to(2 * system.dim(), options.monomial_degree)) {
        if (total_degree(e) == 0) continue;
        PhasePoly mono = PhasePoly::monomial(system.dim(), e);
        DeformedFn inner = quantum_pullback(phi1, *s1.op, DeformedFn::from_poly(phi1.context(), mono));
        DeformedFn lhs = quantum_pullback(phi2, *s2.op, inner);
        DeformedFn rhs = evolve_observable(sys_sum, mono).param_to_sum(
            "t", "t1", "t2", options.t1_order, options.t2_order);
        report.add("pull-back composition on " + to_string(mono), cut(lhs) - cut(rhs));
    }
    return report;
}

} // namespace phasestar
