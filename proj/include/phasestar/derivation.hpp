#pragma once

#include <vector>

#include "phasestar/deformed_fn.hpp"

namespace phasestar {

/// First-order differential operator sum_j a_j d_j with series coefficients.
class Derivation {
public:
    Derivation(SeriesContext ctx, std::vector<DeformedFn> coeffs);

    /// The coordinate derivative d_v.
    static Derivation coordinate(const SeriesContext& ctx, int v);

    const SeriesContext& context() const { return ctx_; }
    const std::vector<DeformedFn>& coefficients() const { return coeffs_; }

    DeformedFn apply(const DeformedFn& f) const;

    bool operator==(const Derivation&) const = default;

private:
    SeriesContext ctx_;
    std::vector<DeformedFn> coeffs_;
};

} // namespace phasestar
