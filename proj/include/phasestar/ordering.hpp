#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace phasestar {

/// Exponent vector over the 2N phase-space variables (x^1..x^N, p_1..p_N),
/// or a parameter multi-degree when used for series coefficients.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded lexicographic order, fixed globally so every serialized form is
/// deterministic. Lower total degree sorts first; ties break lexicographically.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int ta = total_degree(a);
        const int tb = total_degree(b);
        if (ta != tb) return ta < tb;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

} // namespace phasestar
