#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lipcert/context.hpp"
#include "lipcert/monomial.hpp"
#include "lipcert/rational.hpp"

namespace lipcert {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical: no zero coefficients are stored, so map equality is value
/// equality. Immutable in spirit; all operations return new values.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialStorageLess>;

    explicit Polynomial(VarContext ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(const VarContext& ctx) { return Polynomial(ctx); }

    static Polynomial constant(const VarContext& ctx, const Rational& c) {
        Polynomial p(ctx);
        if (!c.is_zero()) p.terms_.emplace(Monomial::one(ctx.size()), c);
        return p;
    }

    static Polynomial variable(const VarContext& ctx, size_t index) {
        if (index >= ctx.size()) throw Error("variable index out of range");
        Monomial m = Monomial::one(ctx.size());
        m.e[index] = 1;
        return from_term(ctx, m, Rational(1));
    }

    static Polynomial variable(const VarContext& ctx, const std::string& name) {
        auto idx = ctx.index_of(name);
        if (!idx) throw Error("unknown variable '" + name + "'");
        return variable(ctx, *idx);
    }

    static Polynomial from_term(const VarContext& ctx, const Monomial& m, const Rational& c) {
        if (m.nvars() != ctx.size()) throw ContextMismatchError("term of wrong context size");
        Polynomial p(ctx);
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    const VarContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    /// Coefficient of the constant monomial.
    Rational constant_term() const { return coefficient(Monomial::one(ctx_.size())); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    uint64_t total_degree() const {  // degree of the zero polynomial is 0 by convention
        uint64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    bool uses_variable(size_t index) const {
        for (const auto& [m, c] : terms_)
            if (m.e[index] != 0) return true;
        return false;
    }

    Polynomial operator-() const {
        Polynomial r(ctx_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_context(ctx_, o.ctx_, "add");
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_context(ctx_, o.ctx_, "sub");
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_context(a.ctx_, b.ctx_, "mul");
        Polynomial r(a.ctx_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.mul(mb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return p.scaled(c); }

    Polynomial scaled(const Rational& c) const {
        Polynomial r(ctx_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    /// Multiplication by a single term, used heavily in reduction.
    Polynomial term_multiple(const Monomial& m, const Rational& c) const {
        Polynomial r(ctx_);
        if (c.is_zero()) return r;
        for (const auto& [mm, k] : terms_) r.terms_.emplace(mm.mul(m), k * c);
        return r;
    }

    Polynomial pow(unsigned k) const {
        Polynomial r = constant(ctx_, Rational(1));
        Polynomial b = *this;
        unsigned n = k;
        while (n > 0) {
            if (n & 1u) r = r * b;
            n >>= 1u;
            if (n > 0) b = b * b;
        }
        return r;
    }

    /// Largest monomial under the given order, or nullopt for zero.
    std::optional<Monomial> leading_monomial(MonomialOrder order) const {
        if (terms_.empty()) return std::nullopt;
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (compare(it->first, best->first, order) > 0) best = it;
        return best->first;
    }

    Rational leading_coefficient(MonomialOrder order) const {
        auto lm = leading_monomial(order);
        return lm ? coefficient(*lm) : Rational(0);
    }

    /// Ring-homomorphism image of this polynomial under variable -> polynomial
    /// over the target context. Every variable occurring here must be assigned.
    Polynomial substitute(const std::map<std::string, Polynomial>& assignment,
                          const VarContext& target) const {
        std::vector<const Polynomial*> images(ctx_.size(), nullptr);
        for (const auto& [name, img] : assignment) {
            require_same_context(img.context(), target, "substitute");
            auto idx = ctx_.index_of(name);
            if (idx) images[*idx] = &img;
        }
        // Cache powers of each assigned image.
        std::vector<uint32_t> max_exp(ctx_.size(), 0);
        for (const auto& [m, c] : terms_)
            for (size_t i = 0; i < m.e.size(); ++i) max_exp[i] = std::max(max_exp[i], m.e[i]);
        std::vector<std::vector<Polynomial>> powers(ctx_.size());
        for (size_t i = 0; i < ctx_.size(); ++i) {
            if (max_exp[i] == 0) continue;
            if (!images[i]) throw Error("substitute: unassigned variable '" + ctx_.name(i) + "'");
            powers[i].reserve(max_exp[i] + 1);
            powers[i].push_back(Polynomial::constant(target, Rational(1)));
            for (uint32_t k = 1; k <= max_exp[i]; ++k)
                powers[i].push_back(powers[i].back() * (*images[i]));
        }
        Polynomial out(target);
        for (const auto& [m, c] : terms_) {
            Polynomial t = Polynomial::constant(target, c);
            for (size_t i = 0; i < m.e.size(); ++i)
                if (m.e[i] != 0) t = t * powers[i][m.e[i]];
            out += t;
        }
        return out;
    }

    /// Re-expresses this polynomial over a larger context containing all of
    /// its variables, matching variables by name.
    Polynomial extend_to(const VarContext& target) const {
        if (ctx_ == target) return *this;
        std::vector<size_t> where(ctx_.size());
        for (size_t i = 0; i < ctx_.size(); ++i) {
            auto idx = target.index_of(ctx_.name(i));
            if (!idx) {
                if (uses_variable(i))
                    throw ContextMismatchError("extend_to: target lacks variable '" + ctx_.name(i) + "'");
                where[i] = 0;
            } else {
                where[i] = *idx;
            }
        }
        Polynomial out(target);
        for (const auto& [m, c] : terms_) {
            Monomial mm = Monomial::one(target.size());
            for (size_t i = 0; i < m.e.size(); ++i)
                if (m.e[i] != 0) mm.e[where[i]] += m.e[i];
            out.terms_.emplace(std::move(mm), c);
        }
        return out;
    }

    /// Formal partial derivative.
    Polynomial derivative(size_t var_index) const {
        if (var_index >= ctx_.size()) throw Error("derivative: variable index out of range");
        Polynomial r(ctx_);
        for (const auto& [m, c] : terms_) {
            if (m.e[var_index] == 0) continue;
            Monomial mm = m;
            uint32_t k = mm.e[var_index];
            mm.e[var_index] -= 1;
            r.add_term(mm, c * Rational(static_cast<long>(k)));
        }
        return r;
    }

    /// Coefficients of the degree-1 monomials, indexed by variable.
    std::vector<Rational> linear_coefficients() const {
        std::vector<Rational> row(ctx_.size(), Rational(0));
        for (const auto& [m, c] : terms_) {
            if (m.total_degree() != 1) continue;
            for (size_t i = 0; i < m.e.size(); ++i)
                if (m.e[i] == 1) row[i] = c;
        }
        return row;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Renders in the text syntax the frontend parses back: terms descending
    /// under grevlex, explicit '*', '^' for exponents >= 2.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Monomial, Rational>*> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
            return compare(a->first, b->first, MonomialOrder::grevlex()) > 0;
        });
        std::ostringstream os;
        bool first = true;
        for (auto* t : ts) {
            const Monomial& m = t->first;
            Rational c = t->second;
            bool neg = c.sign() < 0;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            Rational a = neg ? -c : c;
            if (m.is_one()) {
                os << a.str();
            } else {
                bool printed = false;
                if (!a.is_one()) {
                    os << a.str();
                    printed = true;
                }
                for (size_t i = 0; i < m.e.size(); ++i) {
                    if (m.e[i] == 0) continue;
                    if (printed) os << "*";
                    os << ctx_.name(i);
                    if (m.e[i] >= 2) os << "^" << m.e[i];
                    printed = true;
                }
            }
        }
        return os.str();
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    VarContext ctx_;
    TermMap terms_;
};

}  // namespace lipcert
