#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lipcert/classify.hpp"
#include "lipcert/problem.hpp"
#include "lipcert/version.hpp"

namespace lipcert {

using ordered_json = nlohmann::ordered_json;

/// Jet classification scope: on the two catalog families the classification
/// is backed by the catalog results; elsewhere it is informational only.
struct JetBlock {
    JetType type;
    std::optional<std::string> catalog;  // e.g. "e1(l=2, k=2)"
};

struct AnalysisReport {
    ProblemFile input;
    Certificate certificate;
    JetBlock jet;
    double total_ms = 0;
    double groebner_ms = 0;
    double search_ms = 0;
    double jet_ms = 0;
};

struct CurveReport {
    ProblemFile input;
    Curve curve;
    ValuationReport theta_valuations;
    ValuationReport unfolding_valuations;
    std::optional<RefutationWitness> witness;  // set exactly when the curve refutes
    Ideal theta_ideal;
    Ideal unfolding_ideal;
    JetBlock jet;

    bool refutes() const { return witness.has_value(); }
};

namespace detail {

inline Polynomial renamed(const Polynomial& p, const VarContext& to) {
    const VarContext& from = p.context();
    std::map<std::string, Polynomial> m;
    for (size_t i = 0; i < from.size(); ++i)
        m.emplace(from.name(i), Polynomial::variable(to, i));
    return p.substitute(m, to);
}

inline bool matches_family(const ProblemFile& pf, const Family& fam) {
    const VarContext& to = fam.F.context();
    if (pf.F.rows != fam.F.rows || pf.F.cols != fam.F.cols) return false;
    if (pf.variables.size() != to.size()) return false;
    for (size_t i = 0; i < pf.F.entries.size(); ++i) {
        if (!(renamed(pf.F.entries[i], to) == fam.F.entries[i])) return false;
        if (!(renamed(pf.theta.entries[i], to) == fam.theta.entries[i])) return false;
    }
    return true;
}

}  // namespace detail

/// Structural match against the two built-in families, up to renaming the
/// variables positionally. The exponents are read off the distinguished
/// entries and then the whole (F, theta) pair is compared.
inline std::optional<std::string> identify_catalog(const ProblemFile& pf) {
    if (pf.F.rows != 2 || pf.F.cols != 3 || pf.variables.size() != 4) return std::nullopt;
    {
        size_t l = pf.F.at(0, 0).total_degree();
        size_t k = pf.F.at(1, 2).total_degree();
        if (l >= 2 && k >= 2 &&
            detail::matches_family(pf, family_e1(unsigned(l), unsigned(k))))
            return "e1(l=" + std::to_string(l) + ", k=" + std::to_string(k) + ")";
    }
    {
        size_t k = pf.F.at(1, 0).total_degree();
        if (k >= 2 && detail::matches_family(pf, family_e2(unsigned(k))))
            return "e2(k=" + std::to_string(k) + ")";
    }
    return std::nullopt;
}

inline JetBlock classify_input(const ProblemFile& pf) {
    return JetBlock{jet_type(pf.F), identify_catalog(pf)};
}

/// Full pipeline: verdict with certificate, plus the jet classification.
inline AnalysisReport run_analysis(const ProblemFile& pf) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };
    auto t0 = clock::now();

    AnalysisReport rep;
    rep.input = pf;
    Unfolding u = problem_unfolding(pf);
    VerdictTimings timings;
    rep.certificate = lipschitz_verdict(u, pf.options.budget(), pf.options.monomial_order(),
                                        pf.options.include_param_double, &timings);
    rep.groebner_ms = timings.groebner_ms;
    rep.search_ms = timings.search_ms;

    auto t1 = clock::now();
    rep.jet = classify_input(pf);
    rep.jet_ms = ms_since(t1);
    rep.total_ms = ms_since(t0);
    return rep;
}

/// Curve criterion applied to one user-supplied curve.
inline CurveReport run_check_curve(const ProblemFile& pf, const std::string& curve_spec) {
    Unfolding u = problem_unfolding(pf);
    CurveReport rep{pf,
                    parse_curve_spec(curve_spec, u.doubled.doubled()),
                    {},
                    {},
                    std::nullopt,
                    theta_doubles(u),
                    unfolding_doubles(u, pf.options.include_param_double),
                    classify_input(pf)};
    rep.theta_valuations = pullback_ideal_order(rep.theta_ideal, rep.curve);
    rep.unfolding_valuations = pullback_ideal_order(rep.unfolding_ideal, rep.curve);
    rep.witness = curve_refutes(rep.theta_ideal, rep.unfolding_ideal, rep.curve);
    return rep;
}

inline Verdict curve_report_verdict(const CurveReport& rep) {
    return rep.refutes() ? Verdict::CertifiedNotLipschitz : Verdict::Inconclusive;
}

inline int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::CertifiedLipschitz: return 0;
        case Verdict::CertifiedNotLipschitz: return 1;
        case Verdict::Inconclusive: return 2;
    }
    return 2;
}

// ---------------------------------------------------------------------------
// JSON emission
// ---------------------------------------------------------------------------

namespace detail {

inline ordered_json order_json(const TOrder& o) {
    if (o.is_infinite()) return nullptr;
    return *o.value;
}

inline ordered_json matrix_json(const MatrixGerm& m) {
    ordered_json rows = ordered_json::array();
    for (size_t r = 0; r < m.rows; ++r) {
        ordered_json row = ordered_json::array();
        for (size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ordered_json input_json(const ProblemFile& pf) {
    ordered_json in;
    in["variables"] = pf.variables;
    in["parameter"] = pf.parameter;
    in["F"] = matrix_json(pf.F);
    in["theta"] = matrix_json(pf.theta);
    ordered_json opts;
    opts["order"] = order_name(pf.options.monomial_order());
    opts["max_exponent"] = pf.options.max_exponent;
    ordered_json cs = ordered_json::array();
    for (const auto& c : pf.options.coefficients) cs.push_back(c.str());
    opts["coefficients"] = std::move(cs);
    opts["include_param_double"] = pf.options.include_param_double;
    opts["max_curves"] = pf.options.max_curves ? ordered_json(*pf.options.max_curves)
                                               : ordered_json(nullptr);
    in["options"] = std::move(opts);
    return in;
}

inline ordered_json generators_json(const Ideal& ideal) {
    ordered_json out = ordered_json::array();
    for (const auto& g : ideal.generators) out.push_back(g.str());
    return out;
}

inline ordered_json memberships_json(const std::vector<InclusionEvidence>& ev, const char* key) {
    ordered_json out = ordered_json::array();
    for (const auto& e : ev) {
        ordered_json m;
        m[key] = e.member.str();
        ordered_json cs = ordered_json::array();
        for (const auto& c : e.cofactors) cs.push_back(c.str());
        m["cofactors"] = std::move(cs);
        out.push_back(std::move(m));
    }
    return out;
}

inline ordered_json curve_components_json(const Curve& curve) {
    ordered_json c;
    for (size_t i = 0; i < curve.space().size(); ++i)
        if (!curve.component(i).is_zero()) c[curve.space().name(i)] = curve.component(i).str();
    return c;
}

inline ordered_json valuations_json(const Ideal& ideal, const ValuationReport& v) {
    ordered_json out = ordered_json::array();
    for (const auto& [idx, o] : v.generator_orders) {
        ordered_json row;
        row["generator"] = ideal.generators[idx].str();
        row["order"] = order_json(o);
        out.push_back(std::move(row));
    }
    return out;
}

inline ordered_json refutation_json(const RefutationWitness& w, const Ideal& theta,
                                    const Ideal& unfolding) {
    ordered_json j;
    j["kind"] = "refuting-curve";
    j["curve"] = curve_components_json(w.curve);
    ordered_json tg;
    tg["index"] = w.generator_index;
    tg["polynomial"] = w.generator.str();
    tg["order"] = order_json(w.generator_order);
    j["theta_generator"] = std::move(tg);
    j["unfolding_ideal_order"] = order_json(w.ideal_order);
    j["theta_orders"] = valuations_json(theta, w.theta_valuations);
    j["unfolding_orders"] = valuations_json(unfolding, w.unfolding_valuations);
    return j;
}

inline ordered_json witness_json(const Certificate& cert, const VarContext& doubled) {
    ordered_json j;
    switch (cert.verdict) {
        case Verdict::CertifiedLipschitz: {
            j["kind"] = path_name(*cert.path);
            if (*cert.path == LipschitzPath::ThetaDoublesZero) break;
            j["order"] = order_name(cert.order);
            j["doubled_variables"] = doubled.names();
            j["unfolding_doubles"] = generators_json(cert.unfolding_ideal);
            ordered_json gb = ordered_json::array();
            for (const auto& b : cert.basis->basis) gb.push_back(b.str());
            j["groebner_basis"] = std::move(gb);
            if (*cert.path == LipschitzPath::DiagonalFastPath) {
                j["diagonal_memberships"] =
                    memberships_json(cert.diagonal_memberships, "difference");
                j["theta_over_diagonal"] = memberships_json(cert.theta_memberships, "theta_double");
            } else {
                j["memberships"] = memberships_json(cert.theta_memberships, "theta_double");
            }
            break;
        }
        case Verdict::CertifiedNotLipschitz:
            j = refutation_json(*cert.refutation, cert.theta_ideal, cert.unfolding_ideal);
            break;
        case Verdict::Inconclusive:
            j["kind"] = "budget-exhausted";
            j["curves_tried"] = cert.curves_tried;
            j["exhausted"] = cert.search_exhausted;
            break;
    }
    return j;
}

inline ordered_json jet_json(const JetBlock& jet) {
    ordered_json j;
    j["kind"] = jet_kind_name(jet.type.kind);
    j["linear_rank"] = jet.type.linear_rank;
    j["ambient_dimension"] = jet.type.ambient_dimension;
    j["scope"] = jet.catalog ? "catalog" : "heuristic";
    if (jet.catalog) {
        j["catalog_family"] = *jet.catalog;
        j["note"] = "classification backed by the built-in family results";
    } else {
        j["note"] = "classifier applied outside the built-in families; informational only";
    }
    return j;
}

inline ordered_json budget_json(const Certificate& cert) {
    ordered_json b;
    b["max_exponent"] = cert.budget.max_exponent;
    ordered_json cs = ordered_json::array();
    for (const auto& c : cert.budget.coefficients) cs.push_back(c.str());
    b["coefficients"] = std::move(cs);
    b["max_curves"] =
        cert.budget.max_curves ? ordered_json(*cert.budget.max_curves) : ordered_json(nullptr);
    b["curves_tried"] = cert.curves_tried;
    b["search_exhausted"] = cert.search_exhausted;
    return b;
}

inline ordered_json assumptions_json() {
    return ordered_json::array(
        {"the unfolding is assumed to be a homeomorphism onto its image (not checked)",
         "theta is assumed to define a first-order deformation (not checked)"});
}

}  // namespace detail

inline ordered_json analysis_json(const AnalysisReport& rep) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["mode"] = "analyze";
    j["input"] = detail::input_json(rep.input);
    j["verdict"] = verdict_name(rep.certificate.verdict);
    j["include_param_double"] = rep.certificate.include_param_double;
    Unfolding u = problem_unfolding(rep.input);
    j["witness"] = detail::witness_json(rep.certificate, u.doubled.doubled());
    j["jet_type"] = detail::jet_json(rep.jet);
    j["budget"] = detail::budget_json(rep.certificate);
    j["assumptions"] = detail::assumptions_json();
    ordered_json d;
    d["total"] = rep.total_ms;
    d["groebner"] = rep.groebner_ms;
    d["search"] = rep.search_ms;
    d["jet"] = rep.jet_ms;
    j["durations_ms"] = std::move(d);
    return j;
}

inline ordered_json curve_json(const CurveReport& rep) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["mode"] = "check-curve";
    j["input"] = detail::input_json(rep.input);
    j["verdict"] = verdict_name(curve_report_verdict(rep));
    j["include_param_double"] = rep.input.options.include_param_double;
    j["curve"] = detail::curve_components_json(rep.curve);
    if (rep.witness) {
        j["witness"] = detail::refutation_json(*rep.witness, rep.theta_ideal, rep.unfolding_ideal);
    } else {
        ordered_json w;
        w["kind"] = "curve-not-refuting";
        w["curve"] = detail::curve_components_json(rep.curve);
        w["theta_ideal_order"] = detail::order_json(rep.theta_valuations.ideal_order);
        w["unfolding_ideal_order"] = detail::order_json(rep.unfolding_valuations.ideal_order);
        w["theta_orders"] = detail::valuations_json(rep.theta_ideal, rep.theta_valuations);
        w["unfolding_orders"] =
            detail::valuations_json(rep.unfolding_ideal, rep.unfolding_valuations);
        j["witness"] = std::move(w);
    }
    j["jet_type"] = detail::jet_json(rep.jet);
    return j;
}

// ---------------------------------------------------------------------------
// Text rendering (a human rendering of the same data as the JSON)
// ---------------------------------------------------------------------------

namespace detail {

inline std::string order_str(const TOrder& o) { return o.str(); }

inline void render_valuations(std::ostringstream& out, const char* label, const Ideal& ideal,
                              const ValuationReport& v) {
    out << label << " (ideal order " << order_str(v.ideal_order) << "):\n";
    for (const auto& [idx, o] : v.generator_orders)
        out << "    ord_t = " << order_str(o) << "  for  " << ideal.generators[idx].str() << "\n";
}

inline void render_refutation(std::ostringstream& out, const RefutationWitness& w,
                              const Ideal& theta, const Ideal& unfolding) {
    out << "refuting curve:\n";
    for (size_t i = 0; i < w.curve.space().size(); ++i)
        if (!w.curve.component(i).is_zero())
            out << "    " << w.curve.space().name(i) << " = " << w.curve.component(i).str()
                << "\n";
    out << "offending generator #" << w.generator_index << ": " << w.generator.str() << "\n";
    out << "order along curve: " << order_str(w.generator_order)
        << "  <  unfolding ideal order: " << order_str(w.ideal_order) << "\n";
    render_valuations(out, "theta doubles pullbacks", theta, w.theta_valuations);
    render_valuations(out, "unfolding doubles pullbacks", unfolding, w.unfolding_valuations);
}

inline void render_jet(std::ostringstream& out, const JetBlock& jet) {
    out << "jet type: " << jet_kind_name(jet.type.kind) << " (linear rank " << jet.type.linear_rank
        << " of " << jet.type.ambient_dimension << ")";
    if (jet.catalog)
        out << "  [catalog family " << *jet.catalog << "]";
    else
        out << "  [outside the built-in families; informational only]";
    out << "\n";
}

}  // namespace detail

inline std::string render_text(const AnalysisReport& rep) {
    std::ostringstream out;
    const Certificate& c = rep.certificate;
    out << kToolName << " " << kToolVersion << "\n";
    out << "variables: ";
    for (size_t i = 0; i < rep.input.variables.size(); ++i)
        out << (i ? ", " : "") << rep.input.variables[i];
    out << "; parameter: " << rep.input.parameter << "; matrix " << rep.input.F.rows << "x"
        << rep.input.F.cols << "\n";
    out << "order: " << order_name(c.order) << "; parameter double: "
        << (c.include_param_double ? "included" : "excluded") << "\n";
    out << "verdict: " << verdict_name(c.verdict) << "\n";
    switch (c.verdict) {
        case Verdict::CertifiedLipschitz:
            out << "path: " << path_name(*c.path) << "\n";
            if (*c.path == LipschitzPath::ThetaDoublesZero) {
                out << "theta is constant: every double vanishes and the inclusion is trivial\n";
            } else if (*c.path == LipschitzPath::DiagonalFastPath) {
                out << "the whole diagonal ideal lies in the unfolding doubles ideal ("
                    << c.diagonal_memberships.size() << " differences certified); theta doubles ("
                    << c.theta_memberships.size() << ") lie in the diagonal ideal\n";
            } else {
                out << "all " << c.theta_memberships.size()
                    << " theta doubles certified inside the unfolding doubles ideal ("
                    << c.basis->basis.size() << " basis elements)\n";
            }
            break;
        case Verdict::CertifiedNotLipschitz:
            detail::render_refutation(out, *c.refutation, c.theta_ideal, c.unfolding_ideal);
            break;
        case Verdict::Inconclusive:
            out << "no inclusion certificate and no refuting curve within budget ("
                << c.curves_tried << " curves tried, "
                << (c.search_exhausted ? "grid exhausted" : "stopped at cap") << ")\n";
            break;
    }
    detail::render_jet(out, rep.jet);
    return out.str();
}

inline std::string render_curve_text(const CurveReport& rep) {
    std::ostringstream out;
    out << kToolName << " " << kToolVersion << "\n";
    out << "curve check: verdict " << verdict_name(curve_report_verdict(rep)) << "\n";
    if (rep.witness) {
        detail::render_refutation(out, *rep.witness, rep.theta_ideal, rep.unfolding_ideal);
    } else {
        out << "the curve does not refute the inclusion\n";
        detail::render_valuations(out, "theta doubles pullbacks", rep.theta_ideal,
                                  rep.theta_valuations);
        detail::render_valuations(out, "unfolding doubles pullbacks", rep.unfolding_ideal,
                                  rep.unfolding_valuations);
    }
    detail::render_jet(out, rep.jet);
    return out.str();
}

// ---------------------------------------------------------------------------
// Independent witness verification: every check below is plain arithmetic on
// re-parsed data; no conclusions of the original run are trusted.
// ---------------------------------------------------------------------------

struct VerifyResult {
    bool ok = true;
    std::string detail = "witness verified";
};

namespace detail {

inline VerifyResult fail_verify(const std::string& why) { return VerifyResult{false, why}; }

inline ProblemFile problem_from_echo(const ordered_json& in) {
    ProblemFile pf;
    pf.variables = in.at("variables").get<std::vector<std::string>>();
    pf.parameter = in.at("parameter").get<std::string>();
    VarContext ctx(pf.variables);
    auto read_matrix = [&](const ordered_json& rows) {
        std::vector<Polynomial> entries;
        size_t cols = 0;
        for (const auto& row : rows) {
            if (cols == 0) cols = row.size();
            if (row.size() != cols) throw Error("verify: jagged matrix in input echo");
            for (const auto& cell : row)
                entries.push_back(parse_polynomial(cell.get<std::string>(), ctx));
        }
        return MatrixGerm::make(rows.size(), cols, std::move(entries));
    };
    pf.F = read_matrix(in.at("F"));
    pf.theta = read_matrix(in.at("theta"));
    const ordered_json& opts = in.at("options");
    pf.options.order =
        opts.at("order").get<std::string>() == "lex" ? OrderKind::Lex : OrderKind::Grevlex;
    pf.options.max_exponent = opts.at("max_exponent").get<unsigned>();
    pf.options.coefficients.clear();
    for (const auto& c : opts.at("coefficients"))
        pf.options.coefficients.push_back(Rational::parse(c.get<std::string>()));
    pf.options.include_param_double = opts.at("include_param_double").get<bool>();
    if (opts.contains("max_curves") && !opts.at("max_curves").is_null())
        pf.options.max_curves = opts.at("max_curves").get<uint64_t>();
    return pf;
}

inline TOrder order_from_json(const ordered_json& j) {
    if (j.is_null()) return TOrder::infinity();
    return TOrder::finite(j.get<uint64_t>());
}

inline std::optional<std::string> check_memberships(const ordered_json& list, const char* key,
                                                    const Ideal& members, const Ideal& gens,
                                                    const VarContext& ctx) {
    if (list.size() != members.generators.size())
        return std::string(key) + " list does not cover every generator";
    for (size_t i = 0; i < list.size(); ++i) {
        const ordered_json& m = list.at(i);
        Polynomial stated = parse_polynomial(m.at(key).get<std::string>(), ctx);
        if (!(stated == members.generators[i]))
            return std::string(key) + " #" + std::to_string(i) +
                   " does not match the recomputed generator";
        const ordered_json& cs = m.at("cofactors");
        if (cs.size() != gens.generators.size())
            return "cofactor count mismatch at " + std::string(key) + " #" + std::to_string(i);
        Polynomial sum = Polynomial::zero(ctx);
        for (size_t jx = 0; jx < cs.size(); ++jx)
            sum += parse_polynomial(cs.at(jx).get<std::string>(), ctx) * gens.generators[jx];
        if (!(sum == stated))
            return "cofactor identity fails at " + std::string(key) + " #" + std::to_string(i);
    }
    return std::nullopt;
}

inline std::optional<std::string> check_generator_echo(const ordered_json& list,
                                                       const Ideal& ideal,
                                                       const VarContext& ctx) {
    if (list.size() != ideal.generators.size()) return std::string("stated generator list size");
    for (size_t i = 0; i < list.size(); ++i) {
        Polynomial stated = parse_polynomial(list.at(i).get<std::string>(), ctx);
        if (!(stated == ideal.generators[i]))
            return "stated generator #" + std::to_string(i) + " differs from recomputation";
    }
    return std::nullopt;
}

inline Curve curve_from_json(const ordered_json& j, const VarContext& space) {
    VarContext tc = Curve::t_context();
    std::vector<Polynomial> comps(space.size(), Polynomial::zero(tc));
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!space.contains(it.key())) throw Error("verify: unknown curve variable " + it.key());
        ExprOptions opts;
        opts.juxtaposed_coefficient = true;
        comps[*space.index_of(it.key())] =
            parse_polynomial(it.value().get<std::string>(), tc, opts);
    }
    return Curve::make(space, std::move(comps));
}

inline std::optional<std::string> check_valuations(const ordered_json& list, const Ideal& ideal,
                                                   const ValuationReport& recomputed,
                                                   const VarContext& ctx) {
    if (list.size() != recomputed.generator_orders.size())
        return std::string("valuation table size mismatch");
    for (size_t i = 0; i < list.size(); ++i) {
        const ordered_json& row = list.at(i);
        Polynomial stated = parse_polynomial(row.at("generator").get<std::string>(), ctx);
        if (!(stated == ideal.generators[i]))
            return "valuation row #" + std::to_string(i) + " names a different generator";
        if (order_from_json(row.at("order")) != recomputed.generator_orders[i].second)
            return "valuation row #" + std::to_string(i) + " order differs from recomputation";
    }
    return std::nullopt;
}

inline VerifyResult verify_refutation(const ordered_json& w, const Ideal& theta,
                                      const Ideal& unfolding, const VarContext& doubled) {
    Curve curve = curve_from_json(w.at("curve"), doubled);
    ValuationReport tv = pullback_ideal_order(theta, curve);
    ValuationReport uv = pullback_ideal_order(unfolding, curve);
    const ordered_json& tg = w.at("theta_generator");
    size_t idx = tg.at("index").get<size_t>();
    if (idx >= theta.generators.size()) return fail_verify("theta generator index out of range");
    Polynomial stated = parse_polynomial(tg.at("polynomial").get<std::string>(), doubled);
    if (!(stated == theta.generators[idx]))
        return fail_verify("stated theta generator differs from recomputation");
    TOrder gen_order = order_from_json(tg.at("order"));
    if (gen_order != tv.generator_orders[idx].second)
        return fail_verify("stated theta generator order differs from recomputation");
    TOrder ideal_order = order_from_json(w.at("unfolding_ideal_order"));
    if (ideal_order != uv.ideal_order)
        return fail_verify("stated unfolding ideal order differs from recomputation");
    if (auto bad = check_valuations(w.at("theta_orders"), theta, tv, doubled))
        return fail_verify(*bad);
    if (auto bad = check_valuations(w.at("unfolding_orders"), unfolding, uv, doubled))
        return fail_verify(*bad);
    if (!(gen_order < ideal_order))
        return fail_verify("refutation inequality is not strict on recomputation");
    return VerifyResult{};
}

}  // namespace detail

/// Re-checks a serialized report from scratch: the unfolding and both ideals
/// are rebuilt from the input echo, and the witness is validated by direct
/// arithmetic (cofactor identities, pullback orders). Returns ok=false with a
/// reason on the first discrepancy.
inline VerifyResult verify_report(const ordered_json& j) {
    try {
        if (!j.contains("schema") || j.at("schema").get<int>() != kSchemaVersion)
            return detail::fail_verify("unsupported or missing schema version");
        ProblemFile pf = detail::problem_from_echo(j.at("input"));
        Unfolding u = problem_unfolding(pf);
        const VarContext& doubled = u.doubled.doubled();
        Ideal theta = theta_doubles(u);
        Ideal unfolding = unfolding_doubles(u, pf.options.include_param_double);
        std::string verdict = j.at("verdict").get<std::string>();
        const ordered_json& w = j.at("witness");
        std::string kind = w.at("kind").get<std::string>();

        if (verdict == "CERTIFIED_LIPSCHITZ") {
            if (kind == "theta-doubles-zero") {
                if (!theta.is_zero())
                    return detail::fail_verify("theta doubles ideal is not zero on recomputation");
                return VerifyResult{};
            }
            if (kind == "ideal-inclusion") {
                if (auto bad =
                        detail::check_generator_echo(w.at("unfolding_doubles"), unfolding, doubled))
                    return detail::fail_verify(*bad);
                if (auto bad = detail::check_memberships(w.at("memberships"), "theta_double",
                                                         theta, unfolding, doubled))
                    return detail::fail_verify(*bad);
                return VerifyResult{};
            }
            if (kind == "diagonal-fast-path") {
                if (auto bad =
                        detail::check_generator_echo(w.at("unfolding_doubles"), unfolding, doubled))
                    return detail::fail_verify(*bad);
                Ideal diag = diagonal_ideal(u.doubled);
                if (auto bad = detail::check_memberships(w.at("diagonal_memberships"),
                                                         "difference", diag, unfolding, doubled))
                    return detail::fail_verify(*bad);
                if (auto bad = detail::check_memberships(w.at("theta_over_diagonal"),
                                                         "theta_double", theta, diag, doubled))
                    return detail::fail_verify(*bad);
                return VerifyResult{};
            }
            return detail::fail_verify("unknown LIPSCHITZ witness kind '" + kind + "'");
        }
        if (verdict == "CERTIFIED_NOT_LIPSCHITZ") {
            if (kind != "refuting-curve")
                return detail::fail_verify("NOT verdict requires a refuting-curve witness");
            return detail::verify_refutation(w, theta, unfolding, doubled);
        }
        if (verdict == "INCONCLUSIVE") {
            if (kind == "budget-exhausted") return VerifyResult{true, "nothing to verify"};
            if (kind == "curve-not-refuting") {
                Curve curve = detail::curve_from_json(w.at("curve"), doubled);
                ValuationReport tv = pullback_ideal_order(theta, curve);
                ValuationReport uv = pullback_ideal_order(unfolding, curve);
                if (detail::order_from_json(w.at("theta_ideal_order")) != tv.ideal_order)
                    return detail::fail_verify("stated theta ideal order differs");
                if (detail::order_from_json(w.at("unfolding_ideal_order")) != uv.ideal_order)
                    return detail::fail_verify("stated unfolding ideal order differs");
                if (tv.ideal_order < uv.ideal_order)
                    return detail::fail_verify("curve actually refutes; verdict is wrong");
                return VerifyResult{};
            }
            return detail::fail_verify("unknown INCONCLUSIVE witness kind '" + kind + "'");
        }
        return detail::fail_verify("unknown verdict '" + verdict + "'");
    } catch (const std::exception& e) {
        return detail::fail_verify(std::string("verification error: ") + e.what());
    }
}

}  // namespace lipcert
