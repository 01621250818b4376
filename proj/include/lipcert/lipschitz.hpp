#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lipcert/doubles.hpp"
#include "lipcert/groebner.hpp"
#include "lipcert/unfolding.hpp"

namespace lipcert {

/// Order of vanishing at t = 0, a natural number or infinity (zero series).
struct TOrder {
    std::optional<uint64_t> value;  // nullopt = infinity

    static TOrder infinity() { return TOrder{std::nullopt}; }
    static TOrder finite(uint64_t k) { return TOrder{k}; }

    bool is_infinite() const { return !value.has_value(); }

    friend bool operator==(const TOrder& a, const TOrder& b) { return a.value == b.value; }
    friend bool operator!=(const TOrder& a, const TOrder& b) { return a.value != b.value; }
    friend bool operator<(const TOrder& a, const TOrder& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return *a.value < *b.value;
    }
    friend bool operator<=(const TOrder& a, const TOrder& b) { return a < b || a == b; }

    std::string str() const { return is_infinite() ? "inf" : std::to_string(*value); }
};

inline TOrder min(const TOrder& a, const TOrder& b) { return a < b ? a : b; }

/// Lowest exponent with nonzero coefficient; infinity for the zero polynomial.
inline TOrder t_order(const Polynomial& f) {
    if (f.context().size() != 1) throw Error("t_order: polynomial is not univariate");
    if (f.is_zero()) return TOrder::infinity();
    uint64_t best = UINT64_MAX;
    for (const auto& [m, c] : f.terms()) best = std::min<uint64_t>(best, m.e[0]);
    return TOrder::finite(best);
}

/// Polynomial path germ through the origin of the given space: one univariate
/// component in t per space variable, all vanishing at t = 0, not all zero.
class Curve {
public:
    static VarContext t_context() { return VarContext({"t"}); }

    static Curve make(const VarContext& space, std::vector<Polynomial> components) {
        if (components.size() != space.size())
            throw Error("curve: expected one component per space variable");
        bool any_nonzero = false;
        for (size_t i = 0; i < components.size(); ++i) {
            const Polynomial& c = components[i];
            if (c.context().size() != 1 || c.context().name(0) != "t")
                throw Error("curve: components must be univariate in t");
            if (!c.constant_term().is_zero())
                throw Error("curve: component for '" + space.name(i) +
                            "' has a nonzero constant term");
            if (!c.is_zero()) any_nonzero = true;
        }
        if (!any_nonzero) throw Error("curve: all components are zero");
        return Curve(space, std::move(components));
    }

    /// Monomial curve: coefficient/exponent per variable, coefficient 0 for a
    /// variable that is identically zero.
    static Curve monomial(const VarContext& space, const std::vector<Rational>& coeffs,
                          const std::vector<uint32_t>& exps) {
        VarContext tc = t_context();
        std::vector<Polynomial> comps;
        comps.reserve(space.size());
        for (size_t i = 0; i < space.size(); ++i) {
            if (coeffs[i].is_zero()) {
                comps.push_back(Polynomial::zero(tc));
            } else {
                Monomial m = Monomial::one(1);
                m.e[0] = exps[i];
                comps.push_back(Polynomial::from_term(tc, m, coeffs[i]));
            }
        }
        return make(space, std::move(comps));
    }

    const VarContext& space() const { return space_; }
    const VarContext& domain() const { return components_.at(0).context(); }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& component(size_t i) const { return components_.at(i); }

    /// phi^*(g): substitution of the components into g.
    Polynomial pullback(const Polynomial& g) const {
        require_same_context(g.context(), space_, "pullback");
        std::map<std::string, Polynomial> assign;
        for (size_t i = 0; i < space_.size(); ++i) assign.emplace(space_.name(i), components_[i]);
        return g.substitute(assign, domain());
    }

    friend bool operator==(const Curve& a, const Curve& b) {
        return a.space_ == b.space_ && a.components_ == b.components_;
    }

private:
    Curve(VarContext space, std::vector<Polynomial> components)
        : space_(std::move(space)), components_(std::move(components)) {}

    VarContext space_;
    std::vector<Polynomial> components_;
};

/// t-orders of the pulled-back generators of an ideal, and their minimum m:
/// in the discrete valuation ring at t = 0 the pullback ideal is (t^m).
struct ValuationReport {
    std::vector<std::pair<size_t, TOrder>> generator_orders;
    TOrder ideal_order = TOrder::infinity();
};

inline ValuationReport pullback_ideal_order(const Ideal& ideal, const Curve& curve) {
    require_same_context(ideal.context, curve.space(), "pullback_ideal_order");
    ValuationReport rep;
    for (size_t i = 0; i < ideal.generators.size(); ++i) {
        TOrder o = t_order(curve.pullback(ideal.generators[i]));
        rep.generator_orders.emplace_back(i, o);
        rep.ideal_order = min(rep.ideal_order, o);
    }
    return rep;
}

/// Certificate data for a failed inclusion: a curve along which some
/// generator of I_D(theta) vanishes to strictly lower order than the whole
/// pulled-back unfolding ideal.
struct RefutationWitness {
    Curve curve;
    size_t generator_index;  // into the theta-doubles generator list
    Polynomial generator;
    TOrder generator_order;
    TOrder ideal_order;  // m for the unfolding doubles ideal
    ValuationReport theta_valuations;
    ValuationReport unfolding_valuations;
};

/// Grid for the monomial-curve search. `coefficients` must contain 0 and at
/// least one nonzero value; `max_curves` optionally caps the enumeration
/// (unset = run the grid to exhaustion).
struct SearchBudget {
    unsigned max_exponent = 2;
    std::vector<Rational> coefficients = {Rational(0), Rational(1), Rational(-1), Rational(2),
                                          Rational(-2)};
    std::optional<uint64_t> max_curves;

    void validate() const {
        if (max_exponent < 1) throw Error("search budget: max exponent must be >= 1");
        bool has_zero = false, has_nonzero = false;
        for (const auto& c : coefficients) (c.is_zero() ? has_zero : has_nonzero) = true;
        if (!has_zero || !has_nonzero)
            throw Error("search budget: coefficient set must contain 0 and a nonzero value");
    }

    std::vector<Rational> nonzero_coefficients() const {
        std::vector<Rational> out;
        for (const auto& c : coefficients)
            if (!c.is_zero() && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        return out;
    }

    friend bool operator==(const SearchBudget& a, const SearchBudget& b) {
        return a.max_exponent == b.max_exponent && a.coefficients == b.coefficients &&
               a.max_curves == b.max_curves;
    }
};

/// Enumerates the budget's monomial curves in a fixed deterministic order:
/// nonzero-variable patterns by size then lexicographically, then exponent
/// vectors (1..E per slot), then coefficient vectors (C \ {0} in given order).
class CurveEnumerator {
public:
    CurveEnumerator(VarContext space, const SearchBudget& budget)
        : space_(std::move(space)), max_exp_(budget.max_exponent),
          coeffs_(budget.nonzero_coefficients()) {
        budget.validate();
        pattern_size_ = 1;
        init_pattern_of_size();
    }

    /// Next curve's (coeffs, exps) vectors over the full space, or false when
    /// the grid is exhausted.
    bool next(std::vector<Rational>& coeffs, std::vector<uint32_t>& exps) {
        if (done_) return false;
        const size_t n = space_.size();
        coeffs.assign(n, Rational(0));
        exps.assign(n, 0);
        for (size_t s = 0; s < pattern_.size(); ++s) {
            coeffs[pattern_[s]] = coeffs_[coeff_idx_[s]];
            exps[pattern_[s]] = exp_val_[s];
        }
        ++emitted_;
        advance();
        return true;
    }

    uint64_t emitted() const { return emitted_; }

private:
    void init_pattern_of_size() {
        const size_t n = space_.size();
        if (pattern_size_ > n) { done_ = true; return; }
        pattern_.resize(pattern_size_);
        for (size_t i = 0; i < pattern_size_; ++i) pattern_[i] = i;
        exp_val_.assign(pattern_size_, 1);
        coeff_idx_.assign(pattern_size_, 0);
    }

    void advance() {
        // coefficients fastest, then exponents, then the pattern
        if (odometer(coeff_idx_, coeffs_.size())) return;
        std::vector<size_t> exp_odo(exp_val_.begin(), exp_val_.end());
        for (auto& e : exp_odo) --e;  // to 0-based
        if (odometer(exp_odo, max_exp_)) {
            for (size_t i = 0; i < exp_val_.size(); ++i) exp_val_[i] = uint32_t(exp_odo[i] + 1);
            return;
        }
        exp_val_.assign(pattern_size_, 1);
        if (next_combination()) return;
        ++pattern_size_;
        init_pattern_of_size();
    }

    // Increments a base-`radix` odometer (last digit fastest); false on wrap.
    static bool odometer(std::vector<size_t>& digits, size_t radix) {
        for (size_t i = digits.size(); i-- > 0;) {
            if (digits[i] + 1 < radix) {
                ++digits[i];
                for (size_t k = i + 1; k < digits.size(); ++k) digits[k] = 0;
                return true;
            }
        }
        std::fill(digits.begin(), digits.end(), 0);
        return false;
    }

    bool next_combination() {
        const size_t n = space_.size();
        size_t k = pattern_.size();
        for (size_t i = k; i-- > 0;) {
            if (pattern_[i] + 1 <= n - (k - i)) {
                ++pattern_[i];
                for (size_t j = i + 1; j < k; ++j) pattern_[j] = pattern_[j - 1] + 1;
                coeff_idx_.assign(k, 0);
                return true;
            }
        }
        return false;
    }

    VarContext space_;
    unsigned max_exp_;
    std::vector<Rational> coeffs_;
    size_t pattern_size_ = 1;
    std::vector<size_t> pattern_;
    std::vector<uint32_t> exp_val_;
    std::vector<size_t> coeff_idx_;
    bool done_ = false;
    uint64_t emitted_ = 0;
};

namespace detail {

/// t-order of a generator pulled back along a monomial curve, computed
/// directly on exponent arithmetic (no polynomial substitution).
inline TOrder monomial_pullback_order(const Polynomial& g, const std::vector<Rational>& coeffs,
                                      const std::vector<uint32_t>& exps) {
    std::map<uint64_t, Rational> series;
    for (const auto& [m, c] : g.terms()) {
        Rational acc = c;
        uint64_t deg = 0;
        bool zero = false;
        for (size_t i = 0; i < m.e.size() && !zero; ++i) {
            if (m.e[i] == 0) continue;
            if (coeffs[i].is_zero()) { zero = true; break; }
            acc *= coeffs[i].pow(m.e[i]);
            deg += uint64_t(m.e[i]) * exps[i];
        }
        if (zero) continue;
        auto [it, inserted] = series.emplace(deg, acc);
        if (!inserted) it->second += acc;
    }
    for (const auto& [deg, c] : series)
        if (!c.is_zero()) return TOrder::finite(deg);
    return TOrder::infinity();
}

struct PullbackOrders {
    std::vector<TOrder> theta;
    TOrder min_theta = TOrder::infinity();
    TOrder m = TOrder::infinity();
    bool refutes = false;
};

/// Evaluates the refutation condition along a monomial curve with an early
/// exit once the unfolding orders sink to the best theta order.
inline PullbackOrders evaluate_monomial_curve(const Ideal& theta, const Ideal& unfolding,
                                              const std::vector<Rational>& coeffs,
                                              const std::vector<uint32_t>& exps) {
    PullbackOrders out;
    out.theta.reserve(theta.generators.size());
    for (const auto& g : theta.generators) {
        TOrder o = monomial_pullback_order(g, coeffs, exps);
        out.theta.push_back(o);
        out.min_theta = min(out.min_theta, o);
    }
    if (out.min_theta.is_infinite()) return out;  // nothing can vanish slower than everything
    for (const auto& g : unfolding.generators) {
        out.m = min(out.m, monomial_pullback_order(g, coeffs, exps));
        if (out.m <= out.min_theta) return out;
    }
    out.refutes = out.min_theta < out.m;
    return out;
}

/// Witness generator selection: minimal t-order, then minimal total degree,
/// then lowest index.
inline size_t select_witness_generator(const Ideal& theta, const std::vector<TOrder>& orders,
                                       const TOrder& m) {
    std::optional<size_t> best;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (!(orders[i] < m)) continue;
        if (!best) { best = i; continue; }
        if (orders[i] < orders[*best]) { best = i; continue; }
        if (orders[i] == orders[*best] &&
            theta.generators[i].total_degree() < theta.generators[*best].total_degree())
            best = i;
    }
    if (!best) throw Error("internal: no offending generator");
    return *best;
}

}  // namespace detail

/// Builds the full witness for a refuting curve, re-running the pullbacks
/// through generic substitution (independently of the fast search path).
inline std::optional<RefutationWitness> curve_refutes(const Ideal& theta, const Ideal& unfolding,
                                                      const Curve& curve) {
    ValuationReport tv = pullback_ideal_order(theta, curve);
    ValuationReport uv = pullback_ideal_order(unfolding, curve);
    const TOrder m = uv.ideal_order;
    std::vector<TOrder> orders;
    orders.reserve(tv.generator_orders.size());
    bool any = false;
    for (const auto& [idx, o] : tv.generator_orders) {
        orders.push_back(o);
        if (o < m) any = true;
    }
    if (!any) return std::nullopt;
    size_t gi = detail::select_witness_generator(theta, orders, m);
    return RefutationWitness{curve,  gi, theta.generators[gi], orders[gi], m, std::move(tv),
                             std::move(uv)};
}

/// Curve criterion check for an unfolding: does this single curve refute the
/// inclusion I_D(theta) in the integral closure of I_D(unfolding)?
inline std::optional<RefutationWitness> curve_refutes(const Unfolding& u, const Curve& curve,
                                                      bool include_param_double = true) {
    return curve_refutes(theta_doubles(u), unfolding_doubles(u, include_param_double), curve);
}

struct SearchOutcome {
    std::optional<RefutationWitness> witness;
    uint64_t curves_tried = 0;
    bool exhausted = false;  // true when the whole grid was enumerated
};

/// Deterministic monomial-curve search; returns the first witness in
/// enumeration order, or the exhaustion/cap record.
inline SearchOutcome search_refuting_curve(const Unfolding& u, const SearchBudget& budget,
                                           bool include_param_double = true) {
    budget.validate();
    Ideal theta = theta_doubles(u);
    Ideal unfolding = unfolding_doubles(u, include_param_double);
    SearchOutcome out;
    if (theta.is_zero()) {
        out.exhausted = true;  // nothing to refute
        return out;
    }
    CurveEnumerator en(u.doubled.doubled(), budget);
    std::vector<Rational> coeffs;
    std::vector<uint32_t> exps;
    while (en.next(coeffs, exps)) {
        ++out.curves_tried;
        detail::PullbackOrders ev = detail::evaluate_monomial_curve(theta, unfolding, coeffs, exps);
        if (ev.refutes) {
            Curve curve = Curve::monomial(u.doubled.doubled(), coeffs, exps);
            auto witness = curve_refutes(theta, unfolding, curve);
            if (!witness || !(witness->generator_order < witness->ideal_order))
                throw Error("internal: witness failed independent re-check");
            out.witness = std::move(witness);
            return out;
        }
        if (budget.max_curves && out.curves_tried >= *budget.max_curves) return out;
    }
    out.exhausted = true;
    return out;
}

enum class Verdict { CertifiedLipschitz, CertifiedNotLipschitz, Inconclusive };

enum class LipschitzPath { ThetaDoublesZero, DiagonalFastPath, IdealInclusion };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CertifiedLipschitz: return "CERTIFIED_LIPSCHITZ";
        case Verdict::CertifiedNotLipschitz: return "CERTIFIED_NOT_LIPSCHITZ";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

inline const char* path_name(LipschitzPath p) {
    switch (p) {
        case LipschitzPath::ThetaDoublesZero: return "theta-doubles-zero";
        case LipschitzPath::DiagonalFastPath: return "diagonal-fast-path";
        case LipschitzPath::IdealInclusion: return "ideal-inclusion";
    }
    return "?";
}

/// One ideal membership with its arithmetic evidence:
/// member == sum_j cofactors[j] * (stated generator list)[j].
struct InclusionEvidence {
    Polynomial member;
    std::vector<Polynomial> cofactors;
};

/// Three-valued verdict with a machine-checkable witness.
struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    MonomialOrder order;
    bool include_param_double = true;

    // CERTIFIED_LIPSCHITZ
    std::optional<LipschitzPath> path;
    std::optional<GroebnerBasis> basis;  // GB of the unfolding doubles (inclusion paths)
    // ideal-inclusion: theta doubles over the unfolding-doubles generators.
    // diagonal-fast-path: theta doubles over the diagonal generators instead.
    std::vector<InclusionEvidence> theta_memberships;
    // diagonal-fast-path only: v - v' over the unfolding-doubles generators.
    std::vector<InclusionEvidence> diagonal_memberships;

    // CERTIFIED_NOT_LIPSCHITZ
    std::optional<RefutationWitness> refutation;

    // INCONCLUSIVE record (budget echoed for all verdicts)
    SearchBudget budget;
    uint64_t curves_tried = 0;
    bool search_exhausted = false;

    // the ideals as constructed
    Ideal theta_ideal;
    Ideal unfolding_ideal;
};

struct VerdictTimings {
    double groebner_ms = 0;
    double search_ms = 0;
};

/// Decision pipeline: constant-theta short-circuit, diagonal fast path,
/// inclusion certificate, curve search, honest INCONCLUSIVE.
inline Certificate lipschitz_verdict(const Unfolding& u, const SearchBudget& budget = {},
                                     MonomialOrder order = MonomialOrder::grevlex(),
                                     bool include_param_double = true,
                                     VerdictTimings* timings = nullptr) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    budget.validate();
    Certificate cert;
    cert.order = order;
    cert.include_param_double = include_param_double;
    cert.budget = budget;
    cert.theta_ideal = theta_doubles(u);
    cert.unfolding_ideal = unfolding_doubles(u, include_param_double);

    // (1) constant theta: all doubles vanish, inclusion is trivial.
    if (cert.theta_ideal.is_zero()) {
        cert.verdict = Verdict::CertifiedLipschitz;
        cert.path = LipschitzPath::ThetaDoublesZero;
        return cert;
    }

    auto t0 = clock::now();
    GroebnerBasis gb = buchberger(cert.unfolding_ideal, order);

    // (2) fast path: the whole diagonal ideal sits inside I_D of the
    // unfolding, hence so does I_D(theta) which always lies in the diagonal.
    Ideal diag = diagonal_ideal(u.doubled);
    std::vector<InclusionEvidence> diag_ev;
    bool diag_inside = true;
    for (const auto& d : diag.generators) {
        auto cof = membership_cofactors(d, gb);
        if (!cof) { diag_inside = false; break; }
        diag_ev.push_back(InclusionEvidence{d, std::move(*cof)});
    }
    if (diag_inside) {
        GroebnerBasis diag_gb = buchberger(diag, order);
        std::vector<InclusionEvidence> theta_ev;
        for (const auto& g : cert.theta_ideal.generators) {
            auto cof = membership_cofactors(g, diag_gb);
            if (!cof) throw Error("internal: theta double outside the diagonal ideal");
            theta_ev.push_back(InclusionEvidence{g, std::move(*cof)});
        }
        if (timings) timings->groebner_ms = ms_since(t0);
        cert.verdict = Verdict::CertifiedLipschitz;
        cert.path = LipschitzPath::DiagonalFastPath;
        cert.basis = std::move(gb);
        cert.diagonal_memberships = std::move(diag_ev);
        cert.theta_memberships = std::move(theta_ev);
        return cert;
    }

    // (3) plain inclusion: every theta double reduces to zero.
    std::vector<InclusionEvidence> theta_ev;
    bool included = true;
    for (const auto& g : cert.theta_ideal.generators) {
        auto cof = membership_cofactors(g, gb);
        if (!cof) { included = false; break; }
        theta_ev.push_back(InclusionEvidence{g, std::move(*cof)});
    }
    if (timings) timings->groebner_ms = ms_since(t0);
    if (included) {
        cert.verdict = Verdict::CertifiedLipschitz;
        cert.path = LipschitzPath::IdealInclusion;
        cert.basis = std::move(gb);
        cert.theta_memberships = std::move(theta_ev);
        return cert;
    }

    // (4) curve search for a refutation.
    auto t1 = clock::now();
    SearchOutcome search = search_refuting_curve(u, budget, include_param_double);
    if (timings) timings->search_ms = ms_since(t1);
    cert.curves_tried = search.curves_tried;
    cert.search_exhausted = search.exhausted;
    if (search.witness) {
        cert.verdict = Verdict::CertifiedNotLipschitz;
        cert.refutation = std::move(search.witness);
        return cert;
    }

    // (5) neither certificate within budget.
    cert.verdict = Verdict::Inconclusive;
    return cert;
}

}  // namespace lipcert
