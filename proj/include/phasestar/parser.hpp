#pragma once

#include <string>

#include "phasestar/deformed_fn.hpp"

namespace phasestar {

/// Parses a polynomial/series literal in the canonical grammar:
///
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*        '/' needs a constant divisor
///   factor  := primary ['^' integer]
///   primary := integer | 'i' | variable | parameter | '(' expr ')'
///
/// Variables are x1..xN, p1..pN (plain x/p allowed when N = 1); parameter
/// names come from the context. Round-trips the canonical printed form.
DeformedFn parse_series(const std::string& text, const SeriesContext& ctx);

/// Same grammar restricted to parameter-free input.
PhasePoly parse_poly(const std::string& text, int dim);

/// Exact rational literal: "-3/4", "12".
Rational parse_rational(const std::string& text);

} // namespace phasestar
