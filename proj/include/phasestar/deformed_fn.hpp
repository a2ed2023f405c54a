#pragma once

#include <map>
#include <string>

#include "phasestar/context.hpp"
#include "phasestar/phase_poly.hpp"

namespace phasestar {

/// Truncated formal power series in the context's parameters with PhasePoly
/// coefficients: the working element of C^inf(M)[[hbar]] restricted to
/// polynomial coefficients, with explicit per-parameter truncation.
///
/// Every stored multi-degree is within the truncation bounds and no stored
/// coefficient polynomial is zero, so equality is structural. Values are
/// immutable once built by the public operations.
class DeformedFn {
public:
    using CoeffMap = std::map<Exponents, PhasePoly, GradedLexLess>;

    explicit DeformedFn(SeriesContext ctx) : ctx_(std::move(ctx)) {}

    static DeformedFn zero(const SeriesContext& ctx) { return DeformedFn(ctx); }
    static DeformedFn constant(const SeriesContext& ctx, GaussianRational c);
    static DeformedFn from_poly(const SeriesContext& ctx, const PhasePoly& p);
    static DeformedFn variable(const SeriesContext& ctx, int v);
    /// The monomial param^exp (exp within truncation, else the zero series).
    static DeformedFn param(const SeriesContext& ctx, const std::string& name, int exp = 1);

    const SeriesContext& context() const { return ctx_; }
    int dim() const { return ctx_.dim(); }
    bool is_zero() const { return coeffs_.empty(); }
    const CoeffMap& coeffs() const { return coeffs_; }

    /// Coefficient polynomial at a parameter multi-degree (zero if absent).
    PhasePoly coefficient(const Exponents& degree) const;
    /// The multi-degree-zero coefficient (classical, t = 0 part).
    PhasePoly leading_part() const;

    /// Smallest stored degree of one parameter; INT_MAX for the zero series.
    int min_param_degree(const std::string& name) const;
    /// Largest stored degree of one parameter; 0 for the zero series.
    int max_param_degree(const std::string& name) const;

    DeformedFn operator-() const;
    friend DeformedFn operator+(const DeformedFn& a, const DeformedFn& b);
    friend DeformedFn operator-(const DeformedFn& a, const DeformedFn& b);
    friend DeformedFn operator*(const DeformedFn& a, const DeformedFn& b);
    friend DeformedFn operator*(const DeformedFn& a, const GaussianRational& c);
    friend DeformedFn operator*(const GaussianRational& c, const DeformedFn& a) { return a * c; }

    /// Multiply by param^k, dropping terms pushed past the truncation bound.
    DeformedFn shifted(const std::string& name, int k) const;

    /// Exact formal partial derivative with respect to phase-space variable v.
    DeformedFn partial(int v) const;

    /// Formal d/dparam. Consumes the top order: the result truncation in that
    /// parameter drops by one.
    DeformedFn param_derivative(const std::string& name) const;

    /// Restriction/embedding into another context. Parameter names must be a
    /// superset of this value's; shared truncation orders must not exceed the
    /// current ones (a series cannot gain precision), except that parameters
    /// this value does not depend on may appear with any order.
    DeformedFn embedded(const SeriesContext& target) const;

    /// Same parameters, truncated to the target orders (each <= current).
    DeformedFn truncated(const SeriesContext& target) const { return embedded(target); }

    /// Embedding that may also raise truncation orders, asserting that the
    /// value is exactly known (all coefficients beyond the current bounds are
    /// genuinely zero). Callers own that claim; evolution uses it to lift
    /// polynomial data before order-consuming brackets.
    DeformedFn lifted_exact(const SeriesContext& target) const;
    /// Drop all terms of degree > order in one parameter.
    DeformedFn truncated_param(const std::string& name, int order) const;

    /// Set one parameter to zero; the parameter leaves the context.
    DeformedFn at_param_zero(const std::string& name) const;

    /// param -> c*param (exact rescaling; c = -1 gives time reversal).
    DeformedFn scaled_param(const std::string& name, const Rational& c) const;

    /// param -> a + b for two parameters of the target context. Requires
    /// order(a) + order(b) <= order(param): the binomial re-expansion is only
    /// faithful when the source series carries the combined order.
    DeformedFn param_to_sum(const std::string& param, const std::string& a,
                            const std::string& b, int order_a, int order_b) const;

    DeformedFn conjugate() const;
    bool is_real() const;

    bool operator==(const DeformedFn&) const = default;

    /// Accumulates p at the given multi-degree, keeping the invariants: terms
    /// past the truncation bounds are dropped, zero coefficients are erased.
    void add_term(const Exponents& degree, const PhasePoly& p);

    static void require_compatible(const DeformedFn& a, const DeformedFn& b);

private:
    SeriesContext ctx_;
    CoeffMap coeffs_;
};

/// Canonical text form shared with PhasePoly; see format.cpp.
std::string to_string(const DeformedFn& f);

} // namespace phasestar
