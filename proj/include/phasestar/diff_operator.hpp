#pragma once

#include <map>
#include <string>

#include "phasestar/deformed_fn.hpp"

namespace phasestar {

/// Finite-order linear differential operator sum_alpha a_alpha d^alpha with
/// series coefficients. alpha runs over derivative multi-indices of length 2N;
/// alpha = 0 is the multiplication part (identity when its coefficient is 1).
class DiffOperator {
public:
    using TermMap = std::map<Exponents, DeformedFn, GradedLexLess>;

    explicit DiffOperator(SeriesContext ctx) : ctx_(std::move(ctx)) {}

    static DiffOperator identity(const SeriesContext& ctx);

    const SeriesContext& context() const { return ctx_; }
    int dim() const { return ctx_.dim(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Largest |alpha| with a nonzero coefficient; -1 when zero.
    int order() const;
    /// Largest phase-space degree of any coefficient polynomial; -1 when zero.
    int coefficient_degree() const;

    /// Accumulates coeff * d^alpha (invariant-preserving).
    void add_term(const Exponents& alpha, const DeformedFn& coeff);
    DeformedFn coefficient(const Exponents& alpha) const;

    /// Coefficients restricted to hbar degree zero equal the identity
    /// operator: the defining shape of an intertwiner.
    bool is_identity_at_hbar_zero() const;

    DeformedFn apply(const DeformedFn& f) const;
    DeformedFn apply(const PhasePoly& f) const;

    DiffOperator operator-() const;
    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator*(const DiffOperator& a, const GaussianRational& c);

    /// Operator composition a o b (Leibniz expansion of a's derivatives over
    /// b's coefficients).
    friend DiffOperator compose(const DiffOperator& a, const DiffOperator& b);

    bool operator==(const DiffOperator&) const = default;

private:
    SeriesContext ctx_;
    TermMap terms_;
};

/// exp(G) expanded as a finite series: every coefficient of G must have a
/// strictly positive minimum hbar degree, so the expansion terminates at the
/// hbar truncation. Throws NonNilpotentGenerator otherwise.
DiffOperator operator_exp(const DiffOperator& generator);

/// Canonical text: terms sorted by derivative multi-index, "1" for the
/// identity part, "(series)*dx^2*dp" for the rest. Round-trips exactly.
std::string to_string(const DiffOperator& op);
DiffOperator parse_diff_operator(const std::string& text, const SeriesContext& ctx);

} // namespace phasestar
