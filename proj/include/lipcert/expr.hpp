#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lipcert/polynomial.hpp"

namespace lipcert {

/// Controls for the polynomial expression parser. Positions in errors are
/// reported relative to (line, col_base) so expressions embedded in larger
/// documents point at the right spot.
struct ExprOptions {
    size_t line = 1;
    size_t col_base = 1;
    // `2t` as shorthand for `2*t` (curve specs); everywhere else explicit
    // `*` is required.
    bool juxtaposed_coefficient = false;
};

namespace detail {

enum class Tok { End, Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen };

struct Token {
    Tok kind;
    size_t offset;      // 0-based offset in the source text
    std::string text;   // Number / Ident payload
};

class ExprParser {
public:
    ExprParser(const std::string& text, const VarContext& ctx, const ExprOptions& opts)
        : ctx_(ctx), opts_(opts) {
        lex(text);
    }

    Polynomial parse() {
        Polynomial p = expr();
        if (peek().kind != Tok::End) fail(peek(), "unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const Token& at, const std::string& msg) const {
        throw ParseError(opts_.line, opts_.col_base + at.offset, msg);
    }

    void lex(const std::string& s) {
        size_t i = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c == ' ' || c == '\t') { ++i; continue; }
            size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                tokens_.push_back({Tok::Number, start, s.substr(start, i - start)});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                                        s[i] == '_'))
                    ++i;
                if (i < s.size() && s[i] == '\'') ++i;  // primed (doubled) names
                tokens_.push_back({Tok::Ident, start, s.substr(start, i - start)});
                continue;
            }
            Tok k;
            switch (c) {
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '*': k = Tok::Star; break;
                case '/': k = Tok::Slash; break;
                case '^': k = Tok::Caret; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                default:
                    throw ParseError(opts_.line, opts_.col_base + start,
                                     std::string("unexpected character '") + c + "'");
            }
            tokens_.push_back({k, start, std::string(1, c)});
            ++i;
        }
        tokens_.push_back({Tok::End, s.size(), ""});
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    Polynomial expr() {
        bool negate = false;
        if (peek().kind == Tok::Plus) {
            take();
        } else if (peek().kind == Tok::Minus) {
            take();
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool sub = take().kind == Tok::Minus;
            Polynomial t = term();
            if (sub) acc -= t; else acc += t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            if (peek().kind == Tok::Star) {
                take();
                acc = acc * factor();
                continue;
            }
            if (peek().kind == Tok::Slash) {
                Token slash = take();
                Polynomial d = factor();
                if (!d.is_constant()) fail(slash, "division by a non-constant");
                if (d.is_zero()) fail(slash, "division by zero");
                acc = acc * (Rational(1) / d.constant_term());
                continue;
            }
            // `2t` shorthand: a value directly followed by a variable or a
            // parenthesized group is an implicit product.
            if (opts_.juxtaposed_coefficient &&
                (peek().kind == Tok::Ident || peek().kind == Tok::LParen)) {
                acc = acc * factor();
                continue;
            }
            return acc;
        }
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (peek().kind != Tok::Caret) return base;
        Token caret = take();
        if (peek().kind != Tok::Number) fail(caret, "expected integer exponent after '^'");
        Token num = take();
        unsigned long exp = 0;
        try {
            exp = std::stoul(num.text);
        } catch (...) {
            fail(num, "exponent out of range");
        }
        if (exp > 100000) fail(num, "exponent out of range");
        if (peek().kind == Tok::Caret)
            fail(peek(), "chained '^' is ambiguous; use parentheses");
        return base.pow(static_cast<unsigned>(exp));
    }

    Polynomial atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                Token n = take();
                return Polynomial::constant(ctx_, Rational(Integer(n.text)));
            }
            case Tok::Ident: {
                Token id = take();
                if (!ctx_.contains(id.text)) fail(id, "unknown variable '" + id.text + "'");
                return Polynomial::variable(ctx_, id.text);
            }
            case Tok::LParen: {
                take();
                Polynomial inner = expr();
                if (peek().kind != Tok::RParen) fail(peek(), "expected ')'");
                take();
                return inner;
            }
            case Tok::End: fail(t, "unexpected end of expression");
            default: fail(t, "expected a number, variable, or '('");
        }
    }

    VarContext ctx_;
    ExprOptions opts_;
    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

}  // namespace detail

/// Parses `+ - * / ^ ( )` expressions with integer/rational coefficients over
/// the given variables. Throws ParseError with 1-based line/column positions.
inline Polynomial parse_polynomial(const std::string& text, const VarContext& ctx,
                                   const ExprOptions& opts = {}) {
    return detail::ExprParser(text, ctx, opts).parse();
}

}  // namespace lipcert
