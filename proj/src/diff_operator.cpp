#include "phasestar/diff_operator.hpp"

#include "phasestar/parser.hpp"

namespace phasestar {

namespace {

DeformedFn derive(const DeformedFn& f, const Exponents& alpha) {
    DeformedFn r = f;
    for (std::size_t v = 0; v < alpha.size(); ++v)
        for (int j = 0; j < alpha[v]; ++j) {
            if (r.is_zero()) return r;
            r = r.partial(static_cast<int>(v));
        }
    return r;
}

} // namespace

DiffOperator DiffOperator::identity(const SeriesContext& ctx) {
    DiffOperator op(ctx);
    op.add_term(Exponents(static_cast<std::size_t>(2 * ctx.dim()), 0),
                DeformedFn::constant(ctx, GaussianRational(1)));
    return op;
}

int DiffOperator::order() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

int DiffOperator::coefficient_degree() const {
    int d = -1;
    for (const auto& [alpha, coeff] : terms_)
        for (const auto& [pd, poly] : coeff.coeffs()) d = std::max(d, poly.degree());
    return d;
}

void DiffOperator::add_term(const Exponents& alpha, const DeformedFn& coeff) {
    if (alpha.size() != static_cast<std::size_t>(2 * ctx_.dim()))
        throw IncompatibleContext("derivative multi-index length must be 2N");
    DeformedFn c = coeff.context() == ctx_ ? coeff : coeff.embedded(ctx_);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        DeformedFn sum = it->second + c;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = sum.embedded(ctx_);
    }
}

DeformedFn DiffOperator::coefficient(const Exponents& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? DeformedFn::zero(ctx_) : it->second;
}

bool DiffOperator::is_identity_at_hbar_zero() const {
    if (!ctx_.has_param("h")) return false;
    const Exponents zero_alpha(static_cast<std::size_t>(2 * ctx_.dim()), 0);
    SeriesContext classical = ctx_.without_param("h");
    for (const auto& [alpha, coeff] : terms_) {
        DeformedFn head = coeff.at_param_zero("h");
        if (alpha == zero_alpha) {
            if (!(head == DeformedFn::constant(classical, GaussianRational(1)))) return false;
        } else if (!head.is_zero()) {
            return false;
        }
    }
    return terms_.contains(zero_alpha);
}

DeformedFn DiffOperator::apply(const DeformedFn& f) const {
    SeriesContext ctx = SeriesContext::join(ctx_, f.context());
    DeformedFn r = DeformedFn::zero(ctx);
    for (const auto& [alpha, coeff] : terms_) {
        DeformedFn d = derive(f, alpha);
        if (d.is_zero()) continue;
        r = r + coeff.embedded(ctx) * d.embedded(ctx);
    }
    return r;
}

DeformedFn DiffOperator::apply(const PhasePoly& f) const {
    return apply(DeformedFn::from_poly(ctx_, f));
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r(ctx_);
    for (const auto& [alpha, coeff] : terms_) r.terms_.emplace(alpha, -coeff);
    return r;
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator r(SeriesContext::join(a.ctx_, b.ctx_));
    for (const auto& [alpha, coeff] : a.terms_) r.add_term(alpha, coeff.embedded(r.ctx_));
    for (const auto& [alpha, coeff] : b.terms_) r.add_term(alpha, coeff.embedded(r.ctx_));
    return r;
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
    return a + (-b);
}

DiffOperator operator*(const DiffOperator& a, const GaussianRational& c) {
    DiffOperator r(a.ctx_);
    if (c.is_zero()) return r;
    for (const auto& [alpha, coeff] : a.terms_) r.terms_.emplace(alpha, coeff * c);
    return r;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
    const SeriesContext ctx = SeriesContext::join(a.ctx_, b.ctx_);
    const std::size_t nv = static_cast<std::size_t>(2 * ctx.dim());
    DiffOperator r(ctx);

    // (a_alpha d^alpha)(b_beta d^beta) = a_alpha sum_{gamma <= alpha}
    //   C(alpha,gamma) d^gamma(b_beta) d^{alpha-gamma+beta}.
    for (const auto& [alpha, ac] : a.terms_) {
        // Enumerate gamma <= alpha componentwise.
        Exponents gamma(nv, 0);
        for (;;) {
            Rational multinomial = 1;
            for (std::size_t v = 0; v < nv; ++v)
                for (int j = 0; j < gamma[v]; ++j)
                    multinomial = multinomial * (alpha[v] - j) / (j + 1);
            for (const auto& [beta, bc] : b.terms_) {
                DeformedFn db = derive(bc.embedded(ctx), gamma);
                if (db.is_zero()) continue;
                Exponents idx(nv);
                for (std::size_t v = 0; v < nv; ++v) idx[v] = alpha[v] - gamma[v] + beta[v];
                r.add_term(idx, ac.embedded(ctx) * db * GaussianRational(multinomial));
            }
            // Next gamma in the box [0, alpha].
            std::size_t v = 0;
            while (v < nv && gamma[v] == alpha[v]) gamma[v++] = 0;
            if (v == nv) break;
            ++gamma[v];
        }
    }
    return r;
}

DiffOperator operator_exp(const DiffOperator& generator) {
    const SeriesContext& ctx = generator.context();
    if (!ctx.has_param("h"))
        throw UnknownParameter("operator exponential needs the parameter h in the context");
    for (const auto& [alpha, coeff] : generator.terms())
        if (coeff.min_param_degree("h") < 1)
            throw NonNilpotentGenerator("generator must have a strictly positive hbar degree");

    const int K = ctx.order_of("h");
    DiffOperator sum = DiffOperator::identity(ctx);
    DiffOperator term = DiffOperator::identity(ctx);
    for (int j = 1; j <= K; ++j) {
        term = compose(term, generator) * GaussianRational(Rational(1) / j);
        if (term.is_zero()) break;
        sum = sum + term;
    }
    return sum;
}

std::string to_string(const DiffOperator& op) {
    if (op.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, coeff] : op.terms()) {
        if (!first) out += " + ";
        first = false;
        std::string ctext = to_string(coeff);
        const bool needs_parens = ctext.find(' ') != std::string::npos;
        if (total_degree(alpha) == 0) {
            out += needs_parens ? "(" + ctext + ")" : ctext;
            continue;
        }
        std::string dmono;
        for (std::size_t v = 0; v < alpha.size(); ++v) {
            if (alpha[v] == 0) continue;
            if (!dmono.empty()) dmono += "*";
            dmono += "d" + variable_name(static_cast<int>(v), op.dim());
            if (alpha[v] > 1) dmono += "^" + std::to_string(alpha[v]);
        }
        if (ctext == "1")
            out += dmono;
        else
            out += "(" + ctext + ")*" + dmono;
    }
    return out;
}

namespace {

/// Splits on a separator at parenthesis depth zero.
std::vector<std::string> split_depth0(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

} // namespace

DiffOperator parse_diff_operator(const std::string& text, const SeriesContext& ctx) {
    DiffOperator op(ctx);
    const std::string body = strip(text);
    if (body == "0") return op;
    for (const std::string& raw : split_depth0(body, '+')) {
        std::string chunk = strip(raw);
        if (chunk.empty()) throw ParseError("empty operator term", 0);
        std::string coeff_text = "1";
        Exponents alpha(static_cast<std::size_t>(2 * ctx.dim()), 0);
        std::vector<std::string> dfactors;
        for (const std::string& raw_factor : split_depth0(chunk, '*')) {
            std::string factor = strip(raw_factor);
            if (factor.size() > 1 && factor[0] == 'd' &&
                (factor[1] == 'x' || factor[1] == 'p')) {
                dfactors.push_back(factor);
            } else if (dfactors.empty()) {
                coeff_text = coeff_text == "1" ? factor : coeff_text + "*" + factor;
            } else {
                throw ParseError("coefficient factors must precede derivative factors", 0);
            }
        }
        for (const std::string& factor : dfactors) {
            std::string name = factor.substr(1);
            int power = 1;
            if (auto caret = name.find('^'); caret != std::string::npos) {
                power = std::stoi(name.substr(caret + 1));
                name = name.substr(0, caret);
            }
            // Reuse the series parser to resolve the variable name.
            DeformedFn v = parse_series(name, ctx);
            bool matched = false;
            for (int idx = 0; idx < 2 * ctx.dim(); ++idx) {
                if (v == DeformedFn::variable(ctx, idx)) {
                    alpha[static_cast<std::size_t>(idx)] += power;
                    matched = true;
                    break;
                }
            }
            if (!matched) throw ParseError("bad derivative factor: " + factor, 0);
        }
        op.add_term(alpha, parse_series(coeff_text, ctx));
    }
    return op;
}

} // namespace phasestar
