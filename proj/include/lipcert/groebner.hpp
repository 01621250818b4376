#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lipcert/polynomial.hpp"

namespace lipcert {

/// Finitely generated ideal. Zero generators are dropped at construction;
/// an empty generator list is the zero ideal.
struct Ideal {
    VarContext context;
    std::vector<Polynomial> generators;

    static Ideal make(const VarContext& ctx, std::vector<Polynomial> gens) {
        Ideal I;
        I.context = ctx;
        for (auto& g : gens) {
            require_same_context(g.context(), ctx, "ideal");
            if (!g.is_zero()) I.generators.push_back(std::move(g));
        }
        return I;
    }

    bool is_zero() const { return generators.empty(); }
};

/// Remainder and quotients of a full multivariate division:
/// dividend = sum_i quotients[i] * divisor_i + remainder.
struct ReductionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;

    explicit ReductionResult(const VarContext& ctx, size_t ndivisors)
        : remainder(ctx), quotients(ndivisors, Polynomial(ctx)) {}
};

/// Full division of p by the given divisors: the remainder has no term
/// divisible by any divisor's leading monomial. The divisor chosen at each
/// step is the first (in list order) whose leading monomial divides the
/// current lead, which makes the result deterministic.
inline ReductionResult reduce_full(const Polynomial& p, const std::vector<Polynomial>& divisors,
                                   const std::vector<Monomial>& leads,
                                   const std::vector<Rational>& lead_coeffs, MonomialOrder order) {
    ReductionResult res(p.context(), divisors.size());
    Polynomial work = p;
    while (!work.is_zero()) {
        Monomial lm = *work.leading_monomial(order);
        Rational lc = work.coefficient(lm);
        bool reduced = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (!leads[i].divides(lm)) continue;
            Monomial q = lm.divide(leads[i]);
            Rational f = lc / lead_coeffs[i];
            work -= divisors[i].term_multiple(q, f);
            res.quotients[i] += Polynomial::from_term(p.context(), q, f);
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial t = Polynomial::from_term(p.context(), lm, lc);
            res.remainder += t;
            work -= t;
        }
    }
    return res;
}

/// Groebner basis of an ideal: monic, interreduced, sorted by ascending
/// leading monomial. `representations[i]` expresses basis[i] as a combination
/// of the source generators, which is what membership certificates are made of.
class GroebnerBasis {
public:
    MonomialOrder order;
    Ideal source;
    std::vector<Polynomial> basis;
    std::vector<Monomial> leading;  // leading[i] = LM(basis[i])
    std::vector<std::vector<Polynomial>> representations;

    bool empty() const { return basis.empty(); }

    /// basis[i] == sum_j representations[i][j] * source.generators[j]
    bool representation_valid(size_t i) const {
        Polynomial acc(source.context);
        for (size_t j = 0; j < source.generators.size(); ++j)
            acc += representations[i][j] * source.generators[j];
        return acc == basis[i];
    }
};

namespace detail {

struct SPair {
    uint64_t lcm_degree;
    Monomial lcm;
    size_t i, j;  // i < j
    MonomialOrder order;

    bool operator<(const SPair& o) const {
        if (lcm_degree != o.lcm_degree) return lcm_degree < o.lcm_degree;
        int c = compare(lcm, o.lcm, order);
        if (c != 0) return c < 0;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

}  // namespace detail

/// Buchberger's algorithm with the coprime-lead and chain criteria, normal
/// pair selection (minimal lcm degree first). Deterministic for fixed input.
inline GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order) {
    if (ideal.context.size() == 0) throw Error("buchberger: empty variable context");
    const VarContext& ctx = ideal.context;
    const size_t nsrc = ideal.generators.size();

    std::vector<Polynomial> G;
    std::vector<Monomial> lm;
    std::vector<Rational> lc;  // all 1 (kept for reduce_full's interface)
    std::vector<std::vector<Polynomial>> rep;

    auto push_monic = [&](Polynomial g, std::vector<Polynomial> r) {
        Rational c = g.leading_coefficient(order);
        Rational inv = Rational(1) / c;
        g = g.scaled(inv);
        for (auto& x : r) x = x.scaled(inv);
        lm.push_back(*g.leading_monomial(order));
        lc.push_back(Rational(1));
        G.push_back(std::move(g));
        rep.push_back(std::move(r));
    };

    for (size_t j = 0; j < nsrc; ++j) {
        std::vector<Polynomial> r(nsrc, Polynomial(ctx));
        r[j] = Polynomial::constant(ctx, Rational(1));
        push_monic(ideal.generators[j], std::move(r));
    }

    std::set<detail::SPair> pending;
    auto add_pairs_for = [&](size_t t) {
        for (size_t i = 0; i < t; ++i) {
            Monomial l = lm[i].lcm(lm[t]);
            pending.insert(detail::SPair{l.total_degree(), l, i, t, order});
        }
    };
    for (size_t t = 1; t < G.size(); ++t) add_pairs_for(t);

    auto pair_pending = [&](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        Monomial l = lm[a].lcm(lm[b]);
        return pending.count(detail::SPair{l.total_degree(), l, a, b, order}) > 0;
    };

    while (!pending.empty()) {
        detail::SPair pr = *pending.begin();
        pending.erase(pending.begin());
        const size_t i = pr.i, j = pr.j;

        if (lm[i].coprime(lm[j])) continue;  // product criterion

        // Chain criterion: some k with LM(k) | lcm(i,j) whose pairs with i and
        // j are both already handled.
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (lm[k].divides(pr.lcm) && !pair_pending(i, k) && !pair_pending(j, k)) skip = true;
        }
        if (skip) continue;

        Monomial qi = pr.lcm.divide(lm[i]);
        Monomial qj = pr.lcm.divide(lm[j]);
        Polynomial s = G[i].term_multiple(qi, Rational(1)) - G[j].term_multiple(qj, Rational(1));
        ReductionResult red = reduce_full(s, G, lm, lc, order);
        if (red.remainder.is_zero()) continue;

        std::vector<Polynomial> r(nsrc, Polynomial(ctx));
        for (size_t j2 = 0; j2 < nsrc; ++j2) {
            r[j2] = rep[i][j2].term_multiple(qi, Rational(1)) - rep[j][j2].term_multiple(qj, Rational(1));
            for (size_t k = 0; k < G.size(); ++k)
                if (!red.quotients[k].is_zero()) r[j2] -= red.quotients[k] * rep[k][j2];
        }
        push_monic(red.remainder, std::move(r));
        add_pairs_for(G.size() - 1);
    }

    // Minimal basis: keep, in ascending leading-monomial order, elements whose
    // lead no kept element's lead divides.
    std::vector<size_t> idx(G.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int c = compare(lm[a], lm[b], order);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<size_t> kept;
    for (size_t a : idx) {
        bool redundant = false;
        for (size_t b : kept)
            if (lm[b].divides(lm[a])) { redundant = true; break; }
        if (!redundant) kept.push_back(a);
    }

    GroebnerBasis gb;
    gb.order = order;
    gb.source = ideal;
    for (size_t a : kept) {
        gb.basis.push_back(G[a]);
        gb.leading.push_back(lm[a]);
        gb.representations.push_back(rep[a]);
    }

    // Interreduce to the canonical reduced basis. Leads are pairwise
    // indivisible, so only tails change; iterate to a fixpoint.
    std::vector<Rational> ones(gb.basis.size(), Rational(1));
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < gb.basis.size(); ++i) {
            std::vector<Polynomial> others;
            std::vector<Monomial> olm;
            std::vector<Rational> olc;
            std::vector<size_t> omap;
            for (size_t k = 0; k < gb.basis.size(); ++k) {
                if (k == i) continue;
                others.push_back(gb.basis[k]);
                olm.push_back(gb.leading[k]);
                olc.push_back(Rational(1));
                omap.push_back(k);
            }
            ReductionResult red = reduce_full(gb.basis[i], others, olm, olc, order);
            if (red.remainder == gb.basis[i]) continue;
            changed = true;
            for (size_t j2 = 0; j2 < nsrc; ++j2) {
                Polynomial adj(ctx);
                for (size_t k = 0; k < others.size(); ++k)
                    if (!red.quotients[k].is_zero())
                        adj += red.quotients[k] * gb.representations[omap[k]][j2];
                gb.representations[i][j2] -= adj;
            }
            gb.basis[i] = red.remainder;
        }
    }
    return gb;
}

/// Remainder of p modulo the basis: no term of the result is divisible by any
/// basis leading monomial; p - result lies in the ideal; idempotent.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    require_same_context(p.context(), gb.source.context, "normal_form");
    std::vector<Rational> ones(gb.basis.size(), Rational(1));
    return reduce_full(p, gb.basis, gb.leading, ones, gb.order).remainder;
}

/// Like normal_form but also returns the quotients over the basis elements.
inline ReductionResult normal_form_extended(const Polynomial& p, const GroebnerBasis& gb) {
    require_same_context(p.context(), gb.source.context, "normal_form");
    std::vector<Rational> ones(gb.basis.size(), Rational(1));
    return reduce_full(p, gb.basis, gb.leading, ones, gb.order);
}

/// If p lies in the ideal, returns cofactors over the *source generators*:
/// p == sum_j cof[j] * source.generators[j]. Otherwise nullopt.
inline std::optional<std::vector<Polynomial>> membership_cofactors(const Polynomial& p,
                                                                   const GroebnerBasis& gb) {
    ReductionResult red = normal_form_extended(p, gb);
    if (!red.remainder.is_zero()) return std::nullopt;
    const size_t nsrc = gb.source.generators.size();
    std::vector<Polynomial> cof(nsrc, Polynomial(gb.source.context));
    for (size_t i = 0; i < gb.basis.size(); ++i) {
        if (red.quotients[i].is_zero()) continue;
        for (size_t j = 0; j < nsrc; ++j)
            cof[j] += red.quotients[i] * gb.representations[i][j];
    }
    return cof;
}

inline bool ideal_member(const Polynomial& p, const Ideal& ideal, MonomialOrder order) {
    require_same_context(p.context(), ideal.context, "ideal_member");
    if (ideal.is_zero()) return p.is_zero();
    return normal_form(p, buchberger(ideal, order)).is_zero();
}

/// inner subseteq outer, decided with one Groebner basis of the outer ideal.
inline bool ideal_contains(const Ideal& outer, const Ideal& inner, MonomialOrder order) {
    require_same_context(outer.context, inner.context, "ideal_contains");
    if (inner.is_zero()) return true;
    if (outer.is_zero()) return false;
    GroebnerBasis gb = buchberger(outer, order);
    for (const auto& g : inner.generators)
        if (!normal_form(g, gb).is_zero()) return false;
    return true;
}

/// Leading-monomial pure-power criterion: the quotient ring is finite-
/// dimensional iff every variable carries a pure power among the leads.
/// The unit ideal (empty variety) counts as zero-dimensional.
inline bool zero_dimensional(const Ideal& ideal) {
    if (ideal.is_zero()) throw Error("zero_dimensional: zero ideal rejected");
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex());
    for (const auto& m : gb.leading)
        if (m.is_one()) return true;
    for (size_t v = 0; v < ideal.context.size(); ++v) {
        bool found = false;
        for (const auto& m : gb.leading) {
            bool pure = m.e[v] > 0;
            for (size_t i = 0; pure && i < m.e.size(); ++i)
                if (i != v && m.e[i] != 0) pure = false;
            if (pure) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace lipcert
