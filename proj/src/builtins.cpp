#include "phasestar/builtins.hpp"

#include "phasestar/parser.hpp"

namespace phasestar {

std::optional<Builtin> builtin_from_name(const std::string& name) {
    if (name == "harmonic") return Builtin::Harmonic;
    if (name == "coupled2") return Builtin::Coupled2;
    if (name == "x2p2") return Builtin::X2P2;
    return std::nullopt;
}

std::string builtin_name(Builtin b) {
    switch (b) {
        case Builtin::Harmonic: return "harmonic";
        case Builtin::Coupled2: return "coupled2";
        case Builtin::X2P2: return "x2p2";
    }
    return {};
}

int builtin_dim(Builtin b) {
    return b == Builtin::Coupled2 ? 2 : 1;
}

PhasePoly builtin_hamiltonian(Builtin b, const BuiltinConstants& c) {
    switch (b) {
        case Builtin::Harmonic: {
            PhasePoly h = parse_poly("1/2*p^2", 1);
            h += parse_poly("x^2", 1) * GaussianRational(c.omega * c.omega / 2);
            return h;
        }
        case Builtin::Coupled2: {
            if (c.m1 == 0 || c.m2 == 0) throw Error("masses must be nonzero");
            PhasePoly h = parse_poly("p1^2", 2) * GaussianRational(Rational(1) / (2 * c.m1));
            h += parse_poly("p2^2", 2) * GaussianRational(Rational(1) / (2 * c.m2));
            h += parse_poly("x1*p2^2", 2) * GaussianRational(c.k);
            return h;
        }
        case Builtin::X2P2: return parse_poly("x^2*p^2", 1);
    }
    throw Error("unknown builtin");
}

HamiltonianSystem builtin_system(Builtin b, const BuiltinConstants& c, int hbar_order,
                                 int t_order) {
    return HamiltonianSystem(builtin_dim(b), builtin_hamiltonian(b, c), hbar_order, t_order);
}

DiffOperator builtin_s_operator(Builtin b, const BuiltinConstants& c, const SeriesContext& ctx,
                                const std::string& time) {
    auto term = [&](const std::string& coeff_text, const Rational& scale,
                    const std::string& dmono, DiffOperator& op) {
        DeformedFn coeff = parse_series(coeff_text, ctx) * GaussianRational(scale);
        // Reinterpret "t" as the requested time parameter when it differs.
        op.add_term(parse_diff_operator("(1)*" + dmono, ctx).terms().begin()->first, coeff);
    };

    switch (b) {
        case Builtin::Harmonic:
            return DiffOperator::identity(ctx);
        case Builtin::Coupled2: {
            // S_t = exp( 1/8 h^2 (k/m1) t^2 dx1 dx2^2 + 1/4 h^2 k t dp1 dx2^2
            //            + 1/12 h^2 (k^2/m1) t^3 p2 dx2^3 ).
            DiffOperator gen(ctx);
            term("h^2*" + time + "^2", c.k / (8 * c.m1), "dx1*dx2^2", gen);
            term("h^2*" + time, c.k / 4, "dp1*dx2^2", gen);
            term("h^2*" + time + "^3*p2", c.k * c.k / (12 * c.m1), "dx2^3", gen);
            return operator_exp(gen);
        }
        case Builtin::X2P2: {
            // S_t = 1 + h^2 ( (1/6)(3t^2 x^3 + 4t^3 x^4 p) dx^3
            //   + (1/6)(3t^2 p^3 - 4t^3 x p^4) dp^3
            //   + (1/2)(-t p - t^2 x p^2 + 4t^3 x^2 p^3) dx dp^2
            //   + (1/2)(t x - t^2 x^2 p - 4t^3 x^3 p^2) dx^2 dp
            //   + (2t^2 x^2 + 2t^3 x^3 p) dx^2 + (2t^2 p^2 - 2t^3 x p^3) dp^2
            //   + (-2t^2 x p) dx dp ), valid through h^2.
            const std::string t1 = time, t2 = time + "^2", t3 = time + "^3";
            DiffOperator op = DiffOperator::identity(ctx);
            term("h^2*(1/2*" + t2 + "*x^3 + 2/3*" + t3 + "*x^4*p)", 1, "dx^3", op);
            term("h^2*(1/2*" + t2 + "*p^3 - 2/3*" + t3 + "*x*p^4)", 1, "dp^3", op);
            term("h^2*(-1/2*" + t1 + "*p - 1/2*" + t2 + "*x*p^2 + 2*" + t3 + "*x^2*p^3)", 1,
                 "dx*dp^2", op);
            term("h^2*(1/2*" + t1 + "*x - 1/2*" + t2 + "*x^2*p - 2*" + t3 + "*x^3*p^2)", 1,
                 "dx^2*dp", op);
            term("h^2*(2*" + t2 + "*x^2 + 2*" + t3 + "*x^3*p)", 1, "dx^2", op);
            term("h^2*(2*" + t2 + "*p^2 - 2*" + t3 + "*x*p^3)", 1, "dp^2", op);
            term("h^2*(-2*" + t2 + "*x*p)", 1, "dx*dp", op);
            return op;
        }
    }
    throw Error("unknown builtin");
}

} // namespace phasestar
