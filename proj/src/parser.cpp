#include "phasestar/parser.hpp"

#include <cctype>
#include <optional>

namespace phasestar {

namespace {

enum class Tok { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < s.size()) {
        const char c = s[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = k;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            out.push_back({Tok::Integer, s.substr(start, k - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = k;
            while (k < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_'))
                ++k;
            out.push_back({Tok::Ident, s.substr(start, k - start), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", k);
        }
        out.push_back({kind, std::string(1, c), k});
        ++k;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class SeriesParser {
public:
    SeriesParser(const std::string& text, const SeriesContext& ctx)
        : tokens_(tokenize(text)), ctx_(ctx) {}

    DeformedFn parse() {
        DeformedFn r = expr();
        expect(Tok::End, "trailing input");
        return r;
    }

private:
    const Token& cur() const { return tokens_[pos_]; }
    void advance() { ++pos_; }
    bool accept(Tok k) {
        if (cur().kind != k) return false;
        advance();
        return true;
    }
    void expect(Tok k, const std::string& what) {
        if (cur().kind != k) throw ParseError("expected " + what, cur().pos);
        advance();
    }

    DeformedFn expr() {
        bool neg = false;
        if (accept(Tok::Minus))
            neg = true;
        else
            accept(Tok::Plus);
        DeformedFn r = term();
        if (neg) r = -r;
        while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
            const bool sub = cur().kind == Tok::Minus;
            advance();
            DeformedFn t = term();
            r = sub ? r - t : r + t;
        }
        return r;
    }

    DeformedFn term() {
        DeformedFn r = factor();
        while (cur().kind == Tok::Star || cur().kind == Tok::Slash) {
            const bool div = cur().kind == Tok::Slash;
            const std::size_t at = cur().pos;
            advance();
            DeformedFn f = factor();
            if (div) {
                // Divisors must be exact nonzero constants.
                GaussianRational c = constant_of(f, at);
                r = r * (GaussianRational(1) / c);
            } else {
                r = r * f;
            }
        }
        return r;
    }

    GaussianRational constant_of(const DeformedFn& f, std::size_t at) const {
        if (f.is_zero()) throw ParseError("division by zero", at);
        if (f.coeffs().size() != 1) throw ParseError("divisor must be a constant", at);
        const auto& [degree, poly] = *f.coeffs().begin();
        if (total_degree(degree) != 0 || !poly.is_constant())
            throw ParseError("divisor must be a constant", at);
        return poly.constant_term();
    }

    DeformedFn factor() {
        DeformedFn base = primary();
        if (accept(Tok::Caret)) {
            if (cur().kind != Tok::Integer) throw ParseError("expected integer exponent", cur().pos);
            const int e = std::stoi(cur().text);
            advance();
            DeformedFn r = DeformedFn::constant(ctx_, GaussianRational(1));
            for (int k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    DeformedFn primary() {
        const Token t = cur();
        switch (t.kind) {
            case Tok::Integer: {
                advance();
                return DeformedFn::constant(ctx_, GaussianRational(Rational(Integer(t.text))));
            }
            case Tok::Ident: {
                advance();
                return symbol(t);
            }
            case Tok::LParen: {
                advance();
                DeformedFn r = expr();
                expect(Tok::RParen, "')'");
                return r;
            }
            default:
                throw ParseError("expected a number, symbol or '('", t.pos);
        }
    }

    DeformedFn symbol(const Token& t) {
        const std::string& name = t.text;
        if (name == "i") return DeformedFn::constant(ctx_, GaussianRational::i());
        if (auto v = variable_index(name)) return DeformedFn::variable(ctx_, *v);
        if (ctx_.has_param(name)) return DeformedFn::param(ctx_, name);
        throw ParseError("unknown symbol '" + name + "'", t.pos);
    }

    std::optional<int> variable_index(const std::string& name) const {
        if (name.empty() || (name[0] != 'x' && name[0] != 'p')) return std::nullopt;
        const int base = name[0] == 'x' ? 0 : ctx_.dim();
        if (name.size() == 1) return ctx_.dim() == 1 ? std::optional<int>(base) : std::nullopt;
        int k = 0;
        for (std::size_t j = 1; j < name.size(); ++j) {
            if (!std::isdigit(static_cast<unsigned char>(name[j]))) return std::nullopt;
            k = k * 10 + (name[j] - '0');
            if (k > ctx_.dim()) return std::nullopt;
        }
        if (k < 1) return std::nullopt;
        return base + k - 1;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const SeriesContext& ctx_;
};

} // namespace

DeformedFn parse_series(const std::string& text, const SeriesContext& ctx) {
    return SeriesParser(text, ctx).parse();
}

PhasePoly parse_poly(const std::string& text, int dim) {
    SeriesContext bare(dim, {});
    return parse_series(text, bare).leading_part();
}

Rational parse_rational(const std::string& text) {
    SeriesContext bare(1, {});
    DeformedFn f = parse_series(text, bare);
    PhasePoly p = f.leading_part();
    if (!f.is_zero() && !p.is_constant()) throw ParseError("expected a rational literal", 0);
    GaussianRational c = p.constant_term();
    if (!c.is_real()) throw ParseError("expected a real rational literal", 0);
    return c.re;
}

} // namespace phasestar
