#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lipcert/expr.hpp"
#include "lipcert/lipschitz.hpp"
#include "lipcert/unfolding.hpp"

namespace lipcert {

struct ProblemOptions {
    OrderKind order = OrderKind::Grevlex;
    unsigned max_exponent = 2;
    std::vector<Rational> coefficients = {Rational(0), Rational(1), Rational(-1), Rational(2),
                                          Rational(-2)};
    bool include_param_double = true;
    std::optional<uint64_t> max_curves;

    MonomialOrder monomial_order() const {
        return order == OrderKind::Lex ? MonomialOrder::lex() : MonomialOrder::grevlex();
    }

    SearchBudget budget() const {
        SearchBudget b;
        b.max_exponent = max_exponent;
        b.coefficients = coefficients;
        b.max_curves = max_curves;
        return b;
    }

    friend bool operator==(const ProblemOptions& a, const ProblemOptions& b) {
        return a.order == b.order && a.max_exponent == b.max_exponent &&
               a.coefficients == b.coefficients &&
               a.include_param_double == b.include_param_double && a.max_curves == b.max_curves;
    }
};

/// Parsed problem statement: variable list, unfolding parameter, the matrix,
/// the deformation direction, and analysis options.
struct ProblemFile {
    std::vector<std::string> variables;
    std::string parameter;
    MatrixGerm F;
    MatrixGerm theta;
    ProblemOptions options;

    friend bool operator==(const ProblemFile& a, const ProblemFile& b) {
        return a.variables == b.variables && a.parameter == b.parameter && a.F == b.F &&
               a.theta == b.theta && a.options == b.options;
    }
};

namespace detail {

inline std::string trim(const std::string& s, size_t* lead = nullptr) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        if (lead) *lead = s.size();
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r");
    if (lead) *lead = b;
    return s.substr(b, e - b + 1);
}

inline bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

struct Piece {
    std::string text;
    size_t col;  // 1-based column of the first non-space character
};

/// Comma-split with column tracking; commas cannot occur inside entries.
inline std::vector<Piece> split_commas(const std::string& line) {
    std::vector<Piece> out;
    size_t start = 0;
    for (size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            std::string raw = line.substr(start, i - start);
            size_t lead = 0;
            std::string t = trim(raw, &lead);
            out.push_back(Piece{t, start + lead + 1});
            start = i + 1;
        }
    }
    return out;
}

struct RawSection {
    size_t line = 0;            // line number of the header
    std::string inline_payload;  // text after the closing ']'
    size_t payload_col = 0;     // 1-based column where the payload starts
    std::vector<std::pair<size_t, std::string>> body;  // (line number, text)
    bool seen = false;
};

}  // namespace detail

/// Parses the line-oriented problem format:
///   [vars] x, y, z, w        -- ordered variable list
///   [param] u                -- unfolding parameter
///   [F] / [theta]            -- one matrix row per line, comma-separated
///   [options]                -- key = value lines (optional)
/// `#` starts a comment anywhere; positions in errors are 1-based.
inline ProblemFile parse_problem(const std::string& text) {
    using detail::RawSection;

    std::map<std::string, RawSection> sections;
    for (const char* name : {"vars", "param", "F", "theta", "options"})
        sections.emplace(name, RawSection{});

    // Pass 1: carve the text into sections, keeping positions.
    RawSection* current = nullptr;
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t lead = 0;
        std::string t = detail::trim(line, &lead);
        if (t.empty()) continue;
        if (t[0] == '[') {
            size_t close = t.find(']');
            if (close == std::string::npos)
                throw ParseError(lineno, lead + 1, "unterminated section header");
            std::string name = t.substr(1, close - 1);
            auto it = sections.find(name);
            if (it == sections.end())
                throw ParseError(lineno, lead + 1, "unknown section '[" + name + "]'");
            if (it->second.seen)
                throw ParseError(lineno, lead + 1, "duplicate section '[" + name + "]'");
            it->second.seen = true;
            it->second.line = lineno;
            size_t pl = 0;
            it->second.inline_payload = detail::trim(t.substr(close + 1), &pl);
            it->second.payload_col = lead + close + 2 + pl;
            current = &it->second;
            continue;
        }
        if (!current) throw ParseError(lineno, lead + 1, "content before any section header");
        current->body.emplace_back(lineno, line);
    }

    // Pass 2: interpret sections in semantic order.
    ProblemFile pf;

    const RawSection& vs = sections["vars"];
    if (!vs.seen) throw ParseError(1, 1, "vars block required");
    {
        if (vs.inline_payload.empty())
            throw ParseError(vs.line, vs.payload_col, "expected variable list after [vars]");
        size_t col = vs.payload_col;
        for (const auto& p : detail::split_commas(vs.inline_payload)) {
            size_t at = col + p.col - 1;
            if (!detail::is_identifier(p.text))
                throw ParseError(vs.line, at, "invalid variable name '" + p.text + "'");
            if (p.text == "t")
                throw ParseError(vs.line, at, "variable name 't' is reserved for curves");
            for (const auto& v : pf.variables)
                if (v == p.text)
                    throw ParseError(vs.line, at, "duplicate variable '" + p.text + "'");
            pf.variables.push_back(p.text);
        }
    }

    const RawSection& ps = sections["param"];
    if (!ps.seen) throw ParseError(1, 1, "param block required");
    {
        if (!detail::is_identifier(ps.inline_payload))
            throw ParseError(ps.line, ps.payload_col, "expected parameter name after [param]");
        if (ps.inline_payload == "t")
            throw ParseError(ps.line, ps.payload_col, "parameter name 't' is reserved for curves");
        for (const auto& v : pf.variables)
            if (v == ps.inline_payload)
                throw ParseError(ps.line, ps.payload_col,
                                 "parameter '" + ps.inline_payload + "' shadows a variable");
        pf.parameter = ps.inline_payload;
    }

    VarContext ctx(pf.variables);
    auto parse_matrix = [&](const char* name) -> MatrixGerm {
        const RawSection& sec = sections[name];
        if (!sec.seen)
            throw ParseError(1, 1, std::string(name) + " block required");
        if (!sec.inline_payload.empty())
            throw ParseError(sec.line, sec.payload_col,
                             std::string("matrix rows of [") + name + "] belong on their own lines");
        if (sec.body.empty())
            throw ParseError(sec.line, 1, std::string("[") + name + "] has no rows");
        std::vector<Polynomial> entries;
        size_t cols = 0;
        for (const auto& [ln, body] : sec.body) {
            auto pieces = detail::split_commas(body);
            if (cols == 0) {
                cols = pieces.size();
            } else if (pieces.size() != cols) {
                throw ParseError(ln, 1,
                                 std::string("row of [") + name + "] has " +
                                     std::to_string(pieces.size()) + " entries, expected " +
                                     std::to_string(cols));
            }
            for (const auto& p : pieces) {
                if (p.text.empty())
                    throw ParseError(ln, p.col, std::string("empty entry in [") + name + "]");
                ExprOptions opts;
                opts.line = ln;
                opts.col_base = p.col;
                entries.push_back(parse_polynomial(p.text, ctx, opts));
            }
        }
        return MatrixGerm::make(sec.body.size(), cols, std::move(entries));
    };

    pf.F = parse_matrix("F");
    pf.theta = parse_matrix("theta");
    if (!pf.F.same_shape(pf.theta))
        throw ParseError(sections["theta"].line, 1, "shape mismatch between F and theta");

    const RawSection& os = sections["options"];
    if (os.seen) {
        if (!os.inline_payload.empty())
            throw ParseError(os.line, os.payload_col, "options belong on their own lines");
        for (const auto& [ln, body] : os.body) {
            size_t eq = body.find('=');
            if (eq == std::string::npos)
                throw ParseError(ln, 1, "expected 'key = value' in [options]");
            size_t klead = 0, vlead = 0;
            std::string key = detail::trim(body.substr(0, eq), &klead);
            std::string val = detail::trim(body.substr(eq + 1), &vlead);
            size_t vcol = eq + 2 + vlead;
            if (key == "order") {
                if (val == "grevlex") pf.options.order = OrderKind::Grevlex;
                else if (val == "lex") pf.options.order = OrderKind::Lex;
                else throw ParseError(ln, vcol, "order must be 'grevlex' or 'lex'");
            } else if (key == "max_exponent") {
                try {
                    unsigned long v = std::stoul(val);
                    if (v < 1 || v > 1000000) throw std::out_of_range("");
                    pf.options.max_exponent = static_cast<unsigned>(v);
                } catch (...) {
                    throw ParseError(ln, vcol, "max_exponent must be a positive integer");
                }
            } else if (key == "coefficients") {
                std::vector<Rational> cs;
                for (const auto& p : detail::split_commas(val)) {
                    try {
                        cs.push_back(Rational::parse(p.text));
                    } catch (const Error&) {
                        throw ParseError(ln, vcol + p.col - 1,
                                         "invalid coefficient '" + p.text + "'");
                    }
                }
                bool has_zero = false, has_nonzero = false;
                for (const auto& c : cs) (c.is_zero() ? has_zero : has_nonzero) = true;
                if (!has_zero || !has_nonzero)
                    throw ParseError(ln, vcol, "coefficients must contain 0 and a nonzero value");
                pf.options.coefficients = std::move(cs);
            } else if (key == "include_param_double") {
                if (val == "true") pf.options.include_param_double = true;
                else if (val == "false") pf.options.include_param_double = false;
                else throw ParseError(ln, vcol, "include_param_double must be true or false");
            } else if (key == "max_curves") {
                try {
                    unsigned long long v = std::stoull(val);
                    if (v < 1) throw std::out_of_range("");
                    pf.options.max_curves = v;
                } catch (...) {
                    throw ParseError(ln, vcol, "max_curves must be a positive integer");
                }
            } else {
                throw ParseError(ln, klead + 1, "unknown option '" + key + "'");
            }
        }
    }

    return pf;
}

/// Canonical serialization; parse_problem(serialize_problem(pf)) == pf.
inline std::string serialize_problem(const ProblemFile& pf) {
    std::ostringstream out;
    out << "[vars] ";
    for (size_t i = 0; i < pf.variables.size(); ++i)
        out << (i ? ", " : "") << pf.variables[i];
    out << "\n[param] " << pf.parameter << "\n";
    auto emit_matrix = [&](const char* name, const MatrixGerm& m) {
        out << "[" << name << "]\n";
        for (size_t r = 0; r < m.rows; ++r) {
            for (size_t c = 0; c < m.cols; ++c)
                out << (c ? ", " : "") << m.at(r, c).str();
            out << "\n";
        }
    };
    emit_matrix("F", pf.F);
    emit_matrix("theta", pf.theta);
    out << "[options]\n";
    out << "order = " << order_name(pf.options.monomial_order()) << "\n";
    out << "max_exponent = " << pf.options.max_exponent << "\n";
    out << "coefficients = ";
    for (size_t i = 0; i < pf.options.coefficients.size(); ++i)
        out << (i ? ", " : "") << pf.options.coefficients[i].str();
    out << "\n";
    out << "include_param_double = " << (pf.options.include_param_double ? "true" : "false")
        << "\n";
    if (pf.options.max_curves) out << "max_curves = " << *pf.options.max_curves << "\n";
    return out.str();
}

inline Unfolding problem_unfolding(const ProblemFile& pf) {
    return build_unfolding(pf.F, pf.theta, pf.parameter);
}

/// Parses `w = 2t, w' = t` curve specs over the doubled ambient context;
/// unassigned variables are zero. Accepts juxtaposed coefficients (`2t`).
inline Curve parse_curve_spec(const std::string& spec, const VarContext& space) {
    VarContext tc = Curve::t_context();
    std::vector<Polynomial> comps(space.size(), Polynomial::zero(tc));
    std::vector<bool> assigned(space.size(), false);
    for (const auto& p : detail::split_commas(spec)) {
        if (p.text.empty()) throw ParseError(1, p.col, "empty curve assignment");
        size_t eq = p.text.find('=');
        if (eq == std::string::npos)
            throw ParseError(1, p.col, "expected 'variable = expression'");
        size_t nlead = 0, vlead = 0;
        std::string name = detail::trim(p.text.substr(0, eq), &nlead);
        std::string val = detail::trim(p.text.substr(eq + 1), &vlead);
        if (!space.contains(name))
            throw ParseError(1, p.col + nlead, "unknown variable '" + name + "'");
        size_t idx = *space.index_of(name);
        if (assigned[idx])
            throw ParseError(1, p.col + nlead, "variable '" + name + "' assigned twice");
        ExprOptions opts;
        opts.col_base = p.col + eq + 1 + vlead;
        opts.juxtaposed_coefficient = true;
        comps[idx] = parse_polynomial(val, tc, opts);
        assigned[idx] = true;
    }
    return Curve::make(space, std::move(comps));
}

}  // namespace lipcert
