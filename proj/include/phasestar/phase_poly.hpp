#pragma once

#include <map>
#include <string>

#include "phasestar/errors.hpp"
#include "phasestar/ordering.hpp"
#include "phasestar/rational.hpp"

namespace phasestar {

/// Printable name of variable index v in an N-dimensional phase space:
/// "x"/"p" for N = 1, "x1".."pN" otherwise. Indices 0..N-1 are positions,
/// N..2N-1 momenta.
std::string variable_name(int v, int dim);

/// Exact multivariate polynomial in x^1..x^N, p_1..p_N over Q(i).
///
/// Terms are kept in a canonical graded-lex map with no zero coefficients,
/// so operator== is structural equality of values.
class PhasePoly {
public:
    using TermMap = std::map<Exponents, GaussianRational, GradedLexLess>;

    explicit PhasePoly(int dim) : dim_(check_dim(dim)) {}

    static PhasePoly zero(int dim) { return PhasePoly(dim); }
    static PhasePoly constant(int dim, GaussianRational c);
    static PhasePoly variable(int dim, int v);
    static PhasePoly monomial(int dim, Exponents exps, GaussianRational c = GaussianRational(1));

    int dim() const { return dim_; }
    int nvars() const { return 2 * dim_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the given monomial (zero if absent).
    GaussianRational coefficient(const Exponents& exps) const;
    GaussianRational constant_term() const;

    /// Max total degree of any term; -1 for the zero polynomial.
    int degree() const;

    PhasePoly operator-() const;
    PhasePoly& operator+=(const PhasePoly& o);
    PhasePoly& operator-=(const PhasePoly& o);
    friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
    friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
    friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);
    friend PhasePoly operator*(const PhasePoly& a, const GaussianRational& c);
    friend PhasePoly operator*(const GaussianRational& c, const PhasePoly& a) { return a * c; }

    /// Exact formal partial derivative with respect to variable v.
    PhasePoly partial(int v) const;

    PhasePoly conjugate() const;
    bool is_real() const;

    /// Adds c to the coefficient of exps, erasing it if the sum vanishes.
    void add_term(const Exponents& exps, const GaussianRational& c);

    bool operator==(const PhasePoly&) const = default;

private:
    static int check_dim(int dim) {
        if (dim < 1) throw Error("phase-space dimension N must be positive");
        return dim;
    }
    void check_same_dim(const PhasePoly& o) const {
        if (dim_ != o.dim_) throw IncompatibleContext("polynomial dimension mismatch");
    }

    int dim_;
    TermMap terms_;
};

/// Canonical text form; see format.cpp for the grammar. "0" for zero.
std::string to_string(const PhasePoly& p);

} // namespace phasestar
