#include <sstream>

#include "phasestar/deformed_fn.hpp"
#include "phasestar/phase_poly.hpp"

namespace phasestar {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

namespace {

/// "i", "3*i", "2/5*i" for a positive imaginary magnitude.
std::string imag_to_string(const Rational& b) {
    if (b == 1) return "i";
    return rational_to_string(b) + "*i";
}

/// Sign used to join terms: the real part decides unless it vanishes.
bool is_negative(const GaussianRational& c) {
    if (c.re != 0) return c.re < 0;
    return c.im < 0;
}

/// One flattened term. `c` must be nonzero and sign-extracted by the caller.
/// Factors: [coefficient] * [variable powers] * [parameter powers].
std::string term_body(const GaussianRational& c, const Exponents& vars, int dim,
                      const Exponents& params, const std::vector<ParamSpec>& specs) {
    std::vector<std::string> pieces;
    std::string coeff;
    if (c.re != 0 && c.im != 0) {
        coeff = "(" + rational_to_string(c.re) + (c.im > 0 ? " + " : " - ") +
                imag_to_string(abs(c.im)) + ")";
    } else if (c.im != 0) {
        coeff = imag_to_string(c.im);
    } else if (c.re != 1) {
        coeff = rational_to_string(c.re);
    }
    if (!coeff.empty()) pieces.push_back(coeff);
    for (std::size_t v = 0; v < vars.size(); ++v) {
        if (vars[v] == 0) continue;
        std::string f = variable_name(static_cast<int>(v), dim);
        if (vars[v] > 1) f += "^" + std::to_string(vars[v]);
        pieces.push_back(std::move(f));
    }
    for (std::size_t k = 0; k < params.size(); ++k) {
        if (params[k] == 0) continue;
        std::string f = specs[k].name;
        if (params[k] > 1) f += "^" + std::to_string(params[k]);
        pieces.push_back(std::move(f));
    }
    if (pieces.empty()) return "1";
    std::string out = pieces.front();
    for (std::size_t k = 1; k < pieces.size(); ++k) out += "*" + pieces[k];
    return out;
}

struct TermJoiner {
    std::string out;
    bool first = true;

    void add(const GaussianRational& c, const Exponents& vars, int dim,
             const Exponents& params, const std::vector<ParamSpec>& specs) {
        const bool neg = is_negative(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_body(neg ? -c : c, vars, dim, params, specs);
    }

    std::string finish() { return first ? "0" : out; }
};

const std::vector<ParamSpec> kNoParams;

} // namespace

std::string to_string(const GaussianRational& c) {
    if (c.is_zero()) return "0";
    TermJoiner j;
    j.add(c, Exponents(), 1, Exponents(), kNoParams);
    return j.finish();
}

std::string to_string(const PhasePoly& p) {
    TermJoiner j;
    const Exponents none;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        j.add(it->second, it->first, p.dim(), none, kNoParams);
    return j.finish();
}

std::string to_string(const DeformedFn& f) {
    TermJoiner j;
    const auto& specs = f.context().params();
    for (const auto& [degree, poly] : f.coeffs())
        for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it)
            j.add(it->second, it->first, f.dim(), degree, specs);
    return j.finish();
}

} // namespace phasestar
