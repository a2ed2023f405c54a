#pragma once

#include <string>
#include <vector>

#include "phasestar/errors.hpp"

namespace phasestar {

/// One formal deformation parameter with its maximum retained degree.
struct ParamSpec {
    std::string name;
    int order = 0;

    bool operator==(const ParamSpec&) const = default;
};

/// The ring a DeformedFn lives in: phase-space dimension plus the ordered
/// list of formal parameters and their truncation orders. Parameters are
/// kept sorted by name so contexts compare structurally.
class SeriesContext {
public:
    SeriesContext(int dim, std::vector<ParamSpec> params);

    int dim() const { return dim_; }
    std::size_t nparams() const { return params_.size(); }
    const std::vector<ParamSpec>& params() const { return params_; }

    /// Index of a parameter, or -1 when absent.
    int index_of(const std::string& name) const;
    bool has_param(const std::string& name) const { return index_of(name) >= 0; }

    /// Truncation order of a parameter; throws UnknownParameter when absent.
    int order_of(const std::string& name) const;

    /// True when both contexts have the same dim and the same parameter
    /// names (orders may differ; binary operations take the minimum).
    bool compatible_with(const SeriesContext& o) const;

    /// Componentwise-minimum truncation over identical parameter names.
    static SeriesContext meet(const SeriesContext& a, const SeriesContext& b);

    /// Union of parameter names with minimum order on shared names.
    /// A value embedded into the joined context is constant (hence exact)
    /// in any parameter it did not previously carry.
    static SeriesContext join(const SeriesContext& a, const SeriesContext& b);

    /// Same parameters with one order changed; throws when absent.
    SeriesContext with_order(const std::string& name, int order) const;
    /// Context without the named parameter; throws when absent.
    SeriesContext without_param(const std::string& name) const;

    bool operator==(const SeriesContext&) const = default;

private:
    int dim_;
    std::vector<ParamSpec> params_;
};

} // namespace phasestar
