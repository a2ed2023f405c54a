#pragma once

#include <optional>
#include <string>

#include "phasestar/diff_operator.hpp"
#include "phasestar/flow.hpp"

namespace phasestar {

/// Exact rational constants of the builtin systems; unused ones are ignored.
struct BuiltinConstants {
    Rational omega = 1; // harmonic frequency
    Rational m1 = 1;    // particle masses
    Rational m2 = 1;
    Rational k = 1;     // coupling constant
};

/// The three builtin scenarios: the harmonic oscillator
/// H = (p^2 + w^2 x^2)/2, the coupled two-particle system
/// H = p1^2/2m1 + p2^2/2m2 + k x1 p2^2, and H = x^2 p^2.
enum class Builtin { Harmonic, Coupled2, X2P2 };

std::optional<Builtin> builtin_from_name(const std::string& name);
std::string builtin_name(Builtin b);
int builtin_dim(Builtin b);

PhasePoly builtin_hamiltonian(Builtin b, const BuiltinConstants& c);
HamiltonianSystem builtin_system(Builtin b, const BuiltinConstants& c, int hbar_order,
                                 int t_order);

/// The closed-form intertwiner that goes with each builtin flow: identity for
/// the harmonic oscillator, the exponential form for the coupled system, and
/// the explicit second-order operator for x^2 p^2 (valid through h^2, with
/// vanishing odd orders). The context supplies the time parameter name and
/// truncations.
DiffOperator builtin_s_operator(Builtin b, const BuiltinConstants& c, const SeriesContext& ctx,
                                const std::string& time = "t");

} // namespace phasestar
