#include "phasestar/phase_poly.hpp"

namespace phasestar {

std::string variable_name(int v, int dim) {
    if (v < 0 || v >= 2 * dim) throw BadVariable("variable index out of range");
    if (dim == 1) return v == 0 ? "x" : "p";
    if (v < dim) return "x" + std::to_string(v + 1);
    return "p" + std::to_string(v - dim + 1);
}

PhasePoly PhasePoly::constant(int dim, GaussianRational c) {
    PhasePoly p(dim);
    if (!c.is_zero()) p.terms_.emplace(Exponents(static_cast<std::size_t>(2 * dim), 0), std::move(c));
    return p;
}

PhasePoly PhasePoly::variable(int dim, int v) {
    if (v < 0 || v >= 2 * dim) throw BadVariable("variable index out of range");
    Exponents e(static_cast<std::size_t>(2 * dim), 0);
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(dim, std::move(e));
}

PhasePoly PhasePoly::monomial(int dim, Exponents exps, GaussianRational c) {
    PhasePoly p(dim);
    if (exps.size() != static_cast<std::size_t>(2 * dim))
        throw IncompatibleContext("exponent vector length must be 2N");
    for (int e : exps)
        if (e < 0) throw Error("negative exponent in monomial");
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), std::move(c));
    return p;
}

bool PhasePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

GaussianRational PhasePoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational PhasePoly::constant_term() const {
    return coefficient(Exponents(static_cast<std::size_t>(2 * dim_), 0));
}

int PhasePoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

void PhasePoly::add_term(const Exponents& exps, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PhasePoly PhasePoly::operator-() const {
    PhasePoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
    check_same_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
    check_same_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
    a.check_same_dim(b);
    PhasePoly r(a.dim_);
    Exponents e(static_cast<std::size_t>(2 * a.dim_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

PhasePoly operator*(const PhasePoly& a, const GaussianRational& c) {
    PhasePoly r(a.dim_);
    if (c.is_zero()) return r;
    for (const auto& [e, ca] : a.terms_) r.terms_.emplace(e, ca * c);
    return r;
}

PhasePoly PhasePoly::partial(int v) const {
    if (v < 0 || v >= 2 * dim_) throw BadVariable("variable index out of range");
    PhasePoly r(dim_);
    const auto vi = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_) {
        if (e[vi] == 0) continue;
        Exponents d = e;
        --d[vi];
        r.terms_.emplace(std::move(d), c * GaussianRational(e[vi]));
    }
    return r;
}

PhasePoly PhasePoly::conjugate() const {
    PhasePoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
    return r;
}

bool PhasePoly::is_real() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_real()) return false;
    return true;
}

} // namespace phasestar
