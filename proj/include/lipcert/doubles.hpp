#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lipcert/groebner.hpp"
#include "lipcert/polynomial.hpp"

namespace lipcert {

/// A base context of size N together with its doubled companion of size 2N:
/// the base names followed by their primed partners, paired positionally
/// (index i with index N+i). The partner of x is serialized as x'.
class DoubledContext {
public:
    static DoubledContext of(const VarContext& base) {
        std::vector<std::string> names = base.names();
        names.reserve(2 * base.size());
        for (const auto& n : base.names()) names.push_back(n + "'");
        return DoubledContext(base, VarContext(std::move(names)));
    }

    const VarContext& base() const { return base_; }
    const VarContext& doubled() const { return doubled_; }
    size_t base_size() const { return base_.size(); }

    size_t partner(size_t i) const {
        const size_t n = base_.size();
        if (i >= 2 * n) throw Error("partner: index out of range");
        return i < n ? i + n : i - n;
    }

    bool is_primed(size_t i) const { return i >= base_.size(); }

    /// Image of a base-context polynomial in the unprimed block.
    Polynomial embed_unprimed(const Polynomial& h) const {
        require_same_context(h.context(), base_, "embed_unprimed");
        return h.extend_to(doubled_);
    }

    /// Image of a base-context polynomial in the primed block.
    Polynomial embed_primed(const Polynomial& h) const {
        require_same_context(h.context(), base_, "embed_primed");
        const size_t n = base_.size();
        Polynomial out(doubled_);
        for (const auto& [m, c] : h.terms()) {
            Monomial mm = Monomial::one(2 * n);
            for (size_t i = 0; i < n; ++i) mm.e[n + i] = m.e[i];
            out += Polynomial::from_term(doubled_, mm, c);
        }
        return out;
    }

private:
    DoubledContext(VarContext base, VarContext doubled)
        : base_(std::move(base)), doubled_(std::move(doubled)) {}

    VarContext base_;
    VarContext doubled_;
};

/// The double of h: h(z) - h(z'), a polynomial over the doubled context.
/// Vanishes identically under the substitution z' -> z.
inline Polynomial double_of(const DoubledContext& dc, const Polynomial& h) {
    return dc.embed_unprimed(h) - dc.embed_primed(h);
}

/// Ideal generated by the doubles of the given map components
/// (zero doubles dropped).
inline Ideal doubles_ideal(const DoubledContext& dc, const std::vector<Polynomial>& components) {
    std::vector<Polynomial> gens;
    gens.reserve(components.size());
    for (const auto& h : components) gens.push_back(double_of(dc, h));
    return Ideal::make(dc.doubled(), std::move(gens));
}

/// Ideal of the diagonal: generated by v - v' for every base variable v.
inline Ideal diagonal_ideal(const DoubledContext& dc) {
    const size_t n = dc.base_size();
    std::vector<Polynomial> gens;
    gens.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        gens.push_back(Polynomial::variable(dc.doubled(), i) -
                       Polynomial::variable(dc.doubled(), n + i));
    }
    return Ideal::make(dc.doubled(), std::move(gens));
}

/// Substitution map sending every primed variable to its base partner;
/// composing with it restricts to the diagonal.
inline Polynomial restrict_to_diagonal(const DoubledContext& dc, const Polynomial& p) {
    require_same_context(p.context(), dc.doubled(), "restrict_to_diagonal");
    std::map<std::string, Polynomial> assign;
    const size_t n = dc.base_size();
    for (size_t i = 0; i < n; ++i) {
        Polynomial v = Polynomial::variable(dc.doubled(), i);
        assign.emplace(dc.doubled().name(i), v);
        assign.emplace(dc.doubled().name(n + i), v);
    }
    return p.substitute(assign, dc.doubled());
}

}  // namespace lipcert
