// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit code 0 only when every criterion holds.

#include <functional>
#include <iostream>
#include <vector>

#include "phasestar/builtins.hpp"
#include "phasestar/intertwiner.hpp"
#include "phasestar/parser.hpp"
#include "support/generators.hpp"
#include "support/qseries.hpp"

using namespace phasestar;
using namespace phasestar::testing;

namespace {

const StarProductSpec kMoyal = StarProductSpec::moyal();
int g_failed_checks = 0;

bool expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failed_checks;
        std::cout << "    check failed: " << what << "\n";
    }
    return ok;
}

DeformedFn evolution_residual(const HamiltonianSystem& system, const PhasePoly& a) {
    const HamiltonianSystem lifted = system.with_orders(system.hbar_order() + 1, -1);
    DeformedFn at = evolve_observable(lifted, a);
    DeformedFn h_fn = DeformedFn::from_poly(lifted.context(), system.hamiltonian());
    return at.param_derivative("t") - moyal_bracket(kMoyal, at, h_fn);
}

// ---------------------------------------------------------------------------

bool criterion1_moyal_kernel() {
    bool ok = true;
    SeriesContext ctx(1, {{"h", 4}});
    DeformedFn x = parse_series("x", ctx);
    DeformedFn p = parse_series("p", ctx);
    ok &= expect(star(kMoyal, x, p) == parse_series("x*p + 1/2*i*h", ctx),
                 "x*p kernel value");
    ok &= expect(moyal_bracket(kMoyal, x, p) ==
                     DeformedFn::constant(ctx.with_order("h", 3), GaussianRational(1)),
                 "[[x,p]] = 1");

    Gen gen(2024);
    for (int it = 0; it < 200; ++it) {
        const int dim = it < 100 ? 1 : 2;
        SeriesContext c(dim, {{"h", 4}});
        DeformedFn f = DeformedFn::from_poly(c, gen.poly(dim, 4));
        DeformedFn g = DeformedFn::from_poly(c, gen.poly(dim, 4));
        DeformedFn w = DeformedFn::from_poly(c, gen.poly(dim, 4));
        if (!(star(kMoyal, star(kMoyal, f, g), w) == star(kMoyal, f, star(kMoyal, g, w)))) {
            ok = expect(false, "associativity on triple " + std::to_string(it));
            break;
        }
    }
    return ok;
}

bool criterion2_evolution_oracle() {
    bool ok = true;
    Gen gen(501);
    struct Sys {
        const char* name;
        HamiltonianSystem system;
    };
    std::vector<Sys> systems = {
        {"harmonic", builtin_system(Builtin::Harmonic, {}, 4, 8)},
        {"coupled2", builtin_system(Builtin::Coupled2, {}, 2, 6)},
        {"x2p2", builtin_system(Builtin::X2P2, {}, 2, 6)},
    };
    for (const auto& [name, system] : systems) {
        std::vector<PhasePoly> observables;
        for (int v = 0; v < 2 * system.dim(); ++v)
            observables.push_back(PhasePoly::variable(system.dim(), v));
        observables.push_back(system.hamiltonian());
        for (int it = 0; it < 3; ++it) observables.push_back(gen.poly(system.dim(), 3));
        for (const PhasePoly& a : observables)
            ok &= expect(evolution_residual(system, a).is_zero(),
                         std::string(name) + ": residual for A = " + to_string(a));
    }
    return ok;
}

bool criterion3_harmonic() {
    bool ok = true;
    for (const Rational& omega : {Rational(1), Rational(3) / 2}) {
        BuiltinConstants c;
        c.omega = omega;
        HamiltonianSystem sys = builtin_system(Builtin::Harmonic, c, 4, 8);
        const SeriesContext ctx = sys.context();
        QuantumFlow qf = quantum_flow(sys);
        ok &= expect(qf.map == classical_flow(sys).map, "quantum flow = classical flow");

        DeformedFn cos_wt = series_in_param(qcos(8), ctx, "t", omega);
        DeformedFn sin_wt = series_in_param(qsin(8), ctx, "t", omega);
        DeformedFn x = parse_series("x", ctx);
        DeformedFn p = parse_series("p", ctx);
        GaussianRational w{omega};
        ok &= expect(qf.position(0) == x * cos_wt + p * sin_wt * (GaussianRational(1) / w),
                     "Q Taylor coefficients");
        ok &= expect(qf.momentum(0) == p * cos_wt - x * sin_wt * w, "P Taylor coefficients");

        IntertwinerReport r =
            verify_intertwiner(DiffOperator::identity(ctx), qf.map, 4, 4);
        ok &= expect(r.pass, "S = 1 verifies");
    }
    return ok;
}

bool criterion4_coupled() {
    bool ok = true;
    struct Consts {
        Rational m1, m2, k;
    };
    for (const auto& cc : {Consts{1, 1, 1}, Consts{2, 3, Rational(5) / 7}}) {
        BuiltinConstants c;
        c.m1 = cc.m1;
        c.m2 = cc.m2;
        c.k = cc.k;
        HamiltonianSystem sys = builtin_system(Builtin::Coupled2, c, 3, 6);
        const SeriesContext ctx = sys.context();
        QuantumFlow qf = quantum_flow(sys);

        auto r = [](const Rational& v) { return GaussianRational(v); };
        auto fn = [&](const std::string& s) { return parse_series(s, ctx); };

        DeformedFn q1 = fn("x1") + fn("p1*t") * r(1 / c.m1) -
                        fn("p2^2*t^2") * r(c.k / (2 * c.m1));
        DeformedFn p1 = fn("p1") - fn("p2^2*t") * r(c.k);
        DeformedFn q2 = fn("x2") + fn("p2*t") * r(1 / c.m2) + fn("x1*p2*t") * r(2 * c.k) +
                        fn("p1*p2*t^2") * r(c.k / c.m1) -
                        fn("p2^3*t^3") * r(c.k * c.k / (3 * c.m1));
        ok &= expect(qf.position(0) == q1 && qf.momentum(0) == p1 && qf.position(1) == q2 &&
                         qf.momentum(1) == fn("p2"),
                     "trajectories match the closed forms");

        auto ds = induced_derivations(qf.map);
        const DeformedFn zero = DeformedFn::zero(ctx);
        const DeformedFn one = fn("1");
        DeformedFn dp2_x2 = fn("t") * r(1 / c.m2) + fn("t*x1") * r(2 * c.k) -
                            fn("t^2*p1") * r(c.k / c.m1) - fn("t^3*p2^2") * r(c.k * c.k / c.m1);
        bool dmatch = ds[0] == Derivation(ctx, {one, fn("t*p2") * r(2 * c.k), zero, zero}) &&
                      ds[1] == Derivation(ctx, {zero, one, zero, zero}) &&
                      ds[2] == Derivation(ctx, {fn("t") * r(1 / c.m1),
                                                fn("t^2*p2") * r(c.k / c.m1), one, zero}) &&
                      ds[3] == Derivation(ctx, {fn("t^2*p2") * r(-c.k / c.m1), dp2_x2,
                                                fn("t*p2") * r(-2 * c.k), one});
        ok &= expect(dmatch, "induced derivations match the four listed formulas");

        DiffOperator s = builtin_s_operator(Builtin::Coupled2, c, ctx);
        ok &= expect(verify_intertwiner(s, qf.map, 3, 4).pass,
                     "exponential-form S passes the intertwiner relations");

        DeformedFn a = fn("x1*x2^2");
        ok &= expect(s.apply(a) == a + fn("h^2*t^2") * r(c.k / (4 * c.m1)),
                     "S action on x1 x2^2");
        DeformedFn pulled = quantum_pullback(qf.map, s, a);
        ok &= expect(pulled == evolve_observable(sys, a),
                     "pull-back of x1 x2^2 solves the evolution equation");

        GroupLawOptions gopts;
        gopts.t1_order = 3;
        gopts.t2_order = 3;
        gopts.hbar_order = 3;
        gopts.monomial_degree = 2;
        ok &= expect(check_group_law(sys, gopts).pass, "group law exact");
    }
    return ok;
}

bool criterion5_x2p2() {
    bool ok = true;
    const int L = 6;
    HamiltonianSystem sys = builtin_system(Builtin::X2P2, {}, 2, L);
    const SeriesContext ctx = sys.context();
    QuantumFlow qf = quantum_flow(sys);

    DeformedFn qc = parse_series("x", ctx) * exp_series(parse_series("2*t*x*p", ctx));
    DeformedFn pc = parse_series("p", ctx) * exp_series(parse_series("-2*t*x*p", ctx));
    ok &= expect(qf.position(0) == qc * parse_series("1 + h^2*t^2 + 2/3*h^2*t^3*x*p", ctx),
                 "Q matches Q_C (1 + h^2(t^2 + 2/3 t^3 xp))");
    ok &= expect(qf.momentum(0) == pc * parse_series("1 + h^2*t^2 - 2/3*h^2*t^3*x*p", ctx),
                 "P matches P_C (1 + h^2(t^2 - 2/3 t^3 xp))");

    // Deformed bracket through h^2 needs the flow one order higher.
    QuantumFlow lifted = quantum_flow(sys.with_orders(3, -1));
    DeformedFn qb = moyal_bracket(kMoyal, lifted.position(0), lifted.momentum(0));
    ok &= expect(qb == DeformedFn::constant(qb.context(), GaussianRational(1)),
                 "[[Q,P]] = 1 through h^2");

    DeformedFn cb = poisson_bracket(qf.position(0), qf.momentum(0));
    ok &= expect(cb == parse_series("1 + 2*h^2*t^2", ctx), "{Q,P} = 1 + 2 h^2 t^2");
    ok &= expect(cb == series_in_ht(qmul(qsec2(L + 2), qsec2(L + 2)), ctx),
                 "{Q,P} equals the sec^4 series");

    DiffOperator s = builtin_s_operator(Builtin::X2P2, {}, ctx);
    ok &= expect(verify_intertwiner(s, qf.map, 2, 4).pass,
                 "explicit operator passes the relations through h^2");

    GroupLawOptions gopts;
    gopts.t1_order = 3;
    gopts.t2_order = 3;
    gopts.hbar_order = 2;
    gopts.monomial_degree = 0; // composition equality only
    HamiltonianSystem wide = sys.with_orders(-1, 6);
    ok &= expect(check_group_law(wide, gopts).pass,
                 "composition law through h^2 at (t1,t2) orders 3");
    return ok;
}

bool criterion6_solver() {
    bool ok = true;
    SolveOptions opts;
    opts.hbar_order = 2;
    opts.max_derivative_order = 4;
    opts.max_coeff_degree = 6;
    opts.spanning_degree = 4;

    {
        HamiltonianSystem sys = builtin_system(Builtin::Harmonic, {}, 2, 6);
        SolveResult r = solve_intertwiner(quantum_flow(sys).map, opts);
        ok &= expect(r.found() && *r.op == DiffOperator::identity(r.op->context()),
                     "harmonic solve returns the identity");
    }

    auto monomials_match = [&](Builtin b) {
        BuiltinConstants c;
        HamiltonianSystem sys = builtin_system(b, c, 2, 6);
        SolveResult r = solve_intertwiner(quantum_flow(sys).map, opts);
        if (!expect(r.found(), builtin_name(b) + " solve finds an operator")) return false;
        DiffOperator paper = builtin_s_operator(b, c, r.op->context());
        const int nv = 2 * sys.dim();
        std::function<bool(Exponents&, int, int)> rec = [&](Exponents& e, int v,
                                                            int left) -> bool {
            if (v == nv) {
                PhasePoly m = PhasePoly::monomial(sys.dim(), e);
                return r.op->apply(m) == paper.apply(m);
            }
            for (int d = 0; d <= left; ++d) {
                e[static_cast<std::size_t>(v)] = d;
                bool good = rec(e, v + 1, left - d);
                e[static_cast<std::size_t>(v)] = 0;
                if (!good) return false;
            }
            return true;
        };
        Exponents e(static_cast<std::size_t>(nv), 0);
        return expect(rec(e, 0, 4),
                      builtin_name(b) + " solve action matches the closed form on degree <= 4");
    };
    ok &= monomials_match(Builtin::Coupled2);
    ok &= monomials_match(Builtin::X2P2);
    return ok;
}

bool criterion7_properties() {
    bool ok = true;
    Gen gen(321);

    // Classical limit for random polynomial Hamiltonians.
    for (int it = 0; it < 5; ++it) {
        const int dim = gen.uniform(1, 2);
        HamiltonianSystem system(dim, gen.real_poly(dim, 3), 2, 4);
        QuantumFlow qf = quantum_flow(system);
        QuantumFlow cf = classical_flow(system);
        for (int v = 0; v < 2 * dim; ++v)
            ok &= expect(qf.map.component(v).at_param_zero("h") ==
                             cf.map.component(v).at_param_zero("h"),
                         "classical limit of random Hamiltonian flow " + std::to_string(it));
    }

    // Pull-back is a star-automorphism, and equals the bracket exponential on
    // monomials of degree <= 4.
    for (Builtin b : {Builtin::Harmonic, Builtin::Coupled2, Builtin::X2P2}) {
        BuiltinConstants c;
        HamiltonianSystem sys = builtin_system(b, c, 2, 4);
        const SeriesContext ctx = sys.context();
        QuantumFlow flow = quantum_flow(sys);
        DiffOperator s = builtin_s_operator(b, c, ctx);

        for (int it = 0; it < 3; ++it) {
            DeformedFn f = DeformedFn::from_poly(ctx, gen.poly(sys.dim(), 2));
            DeformedFn g = DeformedFn::from_poly(ctx, gen.poly(sys.dim(), 2));
            ok &= expect(quantum_pullback(flow.map, s, star(kMoyal, f, g)) ==
                             star(kMoyal, quantum_pullback(flow.map, s, f),
                                  quantum_pullback(flow.map, s, g)),
                         builtin_name(b) + ": pull-back star-automorphism");
        }

        const int nv = 2 * sys.dim();
        std::function<void(Exponents&, int, int)> rec = [&](Exponents& e, int v, int left) {
            if (v == nv) {
                PhasePoly m = PhasePoly::monomial(sys.dim(), e);
                ok &= expect(quantum_pullback(flow.map, s, DeformedFn::from_poly(ctx, m)) ==
                                 evolve_observable(sys, m),
                             builtin_name(b) + ": pull-back = bracket exponential on " +
                                 to_string(m));
                return;
            }
            for (int d = 0; d <= left; ++d) {
                e[static_cast<std::size_t>(v)] = d;
                rec(e, v + 1, left - d);
                e[static_cast<std::size_t>(v)] = 0;
            }
        };
        Exponents e(static_cast<std::size_t>(nv), 0);
        rec(e, 0, 4);
    }
    return ok;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Moyal kernel values and associativity on 200 random triples", criterion1_moyal_kernel},
        {2, "evolution-equation residual vanishes for every builtin system", criterion2_evolution_oracle},
        {3, "harmonic oscillator: classical trajectory, Taylor match, S = 1", criterion3_harmonic},
        {4, "coupled system: exact trajectories, derivations, S_t, pull-back, group law", criterion4_coupled},
        {5, "x^2 p^2 system: h^2 deformation, canonicity contrast, composition law", criterion5_x2p2},
        {6, "solver reproduces the closed-form intertwiners", criterion6_solver},
        {7, "classical limits, star-automorphism, bracket-exponential cross-check", criterion7_properties},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const bool ok = c.run();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title
                  << "\n";
        if (!ok) ++failed;
    }
    if (failed == 0) {
        std::cout << "acceptance: all " << criteria.size() << " criteria hold\n";
        return 0;
    }
    std::cout << "acceptance: " << failed << " criteria failed (" << g_failed_checks
              << " checks)\n";
    return 1;
}
