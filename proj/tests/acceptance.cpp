// Acceptance suite: one line per criterion, "[ACCEPTANCE] C<n> PASS" or
// "[ACCEPTANCE] C<n> FAIL (reason)". Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "lipcert/report.hpp"
#include "testutil.hpp"

using namespace lipcert;

namespace {

struct Outcome {
    bool pass = true;
    std::string reason;

    void fail(const std::string& why) {
        if (pass) reason = why;
        pass = false;
    }

    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ProblemFile catalog_problem(const Family& fam) {
    ProblemFile pf;
    pf.variables = {"x", "y", "z", "w"};
    pf.parameter = "u";
    pf.F = fam.F;
    pf.theta = fam.theta;
    return pf;
}

// Shared across criteria: every emitted certificate is re-verified in C8, and
// every analyzed unfolding joins the mutual-exclusivity sweep.
std::vector<ordered_json> emitted_reports;
std::vector<ProblemFile> analyzed_inputs;
std::vector<Verdict> first_family_verdicts;   // (2,2),(2,3),(3,2),(3,3)
std::vector<Verdict> second_family_verdicts;  // k = 2, 3

// C1: the Lipschitz family certifies through an inclusion path, quickly.
Outcome criterion1() {
    Outcome out;
    for (unsigned l : {2u, 3u})
        for (unsigned k : {2u, 3u}) {
            auto t0 = std::chrono::steady_clock::now();
            ProblemFile pf = catalog_problem(family_e1(l, k));
            AnalysisReport rep = run_analysis(pf);
            double secs = seconds_since(t0);
            std::string tag = "e1(" + std::to_string(l) + "," + std::to_string(k) + ")";
            out.expect(rep.certificate.verdict == Verdict::CertifiedLipschitz,
                       tag + " verdict is not CERTIFIED_LIPSCHITZ");
            out.expect(rep.certificate.path.has_value() &&
                           (*rep.certificate.path == LipschitzPath::DiagonalFastPath ||
                            *rep.certificate.path == LipschitzPath::IdealInclusion),
                       tag + " did not certify through an inclusion path");
            out.expect(secs < 10.0, tag + " took " + std::to_string(secs) + "s (budget 10s)");
            emitted_reports.push_back(analysis_json(rep));
            analyzed_inputs.push_back(pf);
            first_family_verdicts.push_back(rep.certificate.verdict);
        }
    return out;
}

// C2: the non-Lipschitz family is refuted under the default budget, the
// published curve lies in the E=1, C={0,1,2} grid, and checking that curve
// reproduces the published valuations (1 vs 2).
Outcome criterion2() {
    Outcome out;
    for (unsigned k : {2u, 3u}) {
        auto t0 = std::chrono::steady_clock::now();
        ProblemFile pf = catalog_problem(family_e2(k));
        std::string tag = "e2(" + std::to_string(k) + ")";

        AnalysisReport rep = run_analysis(pf);
        out.expect(rep.certificate.verdict == Verdict::CertifiedNotLipschitz,
                   tag + " verdict is not CERTIFIED_NOT_LIPSCHITZ");
        emitted_reports.push_back(analysis_json(rep));
        analyzed_inputs.push_back(pf);
        second_family_verdicts.push_back(rep.certificate.verdict);

        // grid containment of (w -> 2t, w' -> t)
        Unfolding u = problem_unfolding(pf);
        const VarContext& d = u.doubled.doubled();
        SearchBudget grid;
        grid.max_exponent = 1;
        grid.coefficients = {Rational(0), Rational(1), Rational(2)};
        CurveEnumerator en(d, grid);
        std::vector<Rational> coeffs;
        std::vector<uint32_t> exps;
        size_t iw = *d.index_of("w"), iwp = *d.index_of("w'");
        bool contains = false;
        while (!contains && en.next(coeffs, exps)) {
            bool match = coeffs[iw] == Rational(2) && coeffs[iwp] == Rational(1) &&
                         exps[iw] == 1 && exps[iwp] == 1;
            for (size_t i = 0; match && i < coeffs.size(); ++i)
                if (i != iw && i != iwp) match = coeffs[i].is_zero();
            contains = match;
        }
        out.expect(contains, tag + " search grid misses the published curve");

        // the published curve reproduces the published valuations
        CurveReport cc = run_check_curve(pf, "w = 2t, w' = t");
        out.expect(cc.refutes(), tag + " published curve does not refute");
        out.expect(cc.theta_valuations.ideal_order == TOrder::finite(1),
                   tag + " theta pullback order is not 1");
        out.expect(cc.unfolding_valuations.ideal_order == TOrder::finite(2),
                   tag + " unfolding pullback order is not 2");
        emitted_reports.push_back(curve_json(cc));

        double secs = seconds_since(t0);
        out.expect(secs < 30.0, tag + " took " + std::to_string(secs) + "s (budget 30s)");
    }
    return out;
}

// C3: jet classification agrees with the ideal-based verdict on the catalog.
Outcome criterion3() {
    Outcome out;
    size_t i = 0;
    for (unsigned l : {2u, 3u})
        for (unsigned k : {2u, 3u}) {
            JetType j = jet_type(family_e1(l, k).F);
            out.expect(j.kind == JetKind::ReducedPoint, "e1 jet is not REDUCED_POINT");
            out.expect(first_family_verdicts.size() > i &&
                           first_family_verdicts[i] == Verdict::CertifiedLipschitz,
                       "REDUCED jet disagrees with the verdict");
            ++i;
        }
    for (unsigned k : {2u, 3u}) {
        JetType j = jet_type(family_e2(k).F);
        out.expect(j.kind == JetKind::FatPoint, "e2 jet is not FAT_POINT");
        out.expect(second_family_verdicts.size() > (k - 2u) &&
                       second_family_verdicts[k - 2u] == Verdict::CertifiedNotLipschitz,
                   "FAT jet disagrees with the verdict");
    }
    return out;
}

// C4: a constant deformation direction always certifies immediately.
Outcome criterion4() {
    Outcome out;
    auto g = testutil::rng(424242);
    std::uniform_int_distribution<size_t> nvars(1, 4);
    std::uniform_int_distribution<size_t> rows_d(1, 2), cols_d(1, 3);
    std::uniform_int_distribution<int> cval(-3, 3);
    const std::vector<std::string> pool = {"x", "y", "z", "w"};
    for (int trial = 0; trial < 25; ++trial) {
        size_t n = nvars(g);
        VarContext ctx(std::vector<std::string>(pool.begin(), pool.begin() + n));
        size_t rows = rows_d(g), cols = cols_d(g);
        std::vector<Polynomial> fent, tent;
        for (size_t e = 0; e < rows * cols; ++e) {
            fent.push_back(testutil::random_vanishing(g, ctx, 3, 4));
            tent.push_back(Polynomial::constant(ctx, Rational(cval(g))));
        }
        ProblemFile pf;
        pf.variables = ctx.names();
        pf.parameter = "u";
        pf.F = MatrixGerm::make(rows, cols, fent);
        pf.theta = MatrixGerm::make(rows, cols, tent);
        AnalysisReport rep = run_analysis(pf);
        out.expect(rep.certificate.verdict == Verdict::CertifiedLipschitz,
                   "constant theta did not certify (trial " + std::to_string(trial) + ")");
        out.expect(rep.certificate.path.has_value() &&
                       *rep.certificate.path == LipschitzPath::ThetaDoublesZero,
                   "constant theta certified through the wrong path");
        emitted_reports.push_back(analysis_json(rep));
        analyzed_inputs.push_back(pf);
    }
    return out;
}

// C5: doubles algebra (diagonal vanishing, linearity, Leibniz) and
// I_D(theta) within the diagonal ideal, certified by basis computation.
Outcome criterion5() {
    Outcome out;
    auto g = testutil::rng(515151);
    VarContext base({"x", "y", "z"});
    DoubledContext dc = DoubledContext::of(base);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial f = testutil::random_polynomial(g, base, 3, 4);
        Polynomial h = testutil::random_polynomial(g, base, 3, 4);
        Rational a = testutil::random_coeff(g, true), b = testutil::random_coeff(g, true);
        out.expect(restrict_to_diagonal(dc, double_of(dc, f)).is_zero(),
                   "double does not vanish on the diagonal");
        out.expect(double_of(dc, f.scaled(a) + h.scaled(b)) ==
                       double_of(dc, f).scaled(a) + double_of(dc, h).scaled(b),
                   "doubling is not linear");
        out.expect(double_of(dc, f * h) == dc.embed_unprimed(f) * double_of(dc, h) +
                                               dc.embed_primed(h) * double_of(dc, f),
                   "Leibniz identity fails");
    }
    Ideal diag = diagonal_ideal(dc);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Polynomial> comps;
        for (int e = 0; e < 3; ++e) comps.push_back(testutil::random_polynomial(g, base, 3, 3));
        Ideal dbl = doubles_ideal(dc, comps);
        out.expect(ideal_contains(diag, dbl, MonomialOrder::grevlex()),
                   "doubles ideal escapes the diagonal ideal");
    }
    return out;
}

// C6: basis-backed membership agrees with the divisibility oracle on every
// monomial ideal with up to 3 generators of degree <= 3 in 3 variables.
Outcome criterion6() {
    Outcome out;
    VarContext ctx({"x", "y", "z"});
    std::vector<Monomial> gens_pool, probes;
    for (uint32_t a = 0; a <= 4; ++a)
        for (uint32_t b = 0; a + b <= 4; ++b)
            for (uint32_t c = 0; a + b + c <= 4; ++c) {
                Monomial m = Monomial::one(3);
                m.e = {a, b, c};
                if (a + b + c <= 3) gens_pool.push_back(m);
                probes.push_back(m);
            }
    uint64_t ideals = 0, checks = 0;
    auto run_set = [&](const std::vector<size_t>& sel) {
        std::vector<Polynomial> gens;
        for (size_t i : sel) gens.push_back(Polynomial::from_term(ctx, gens_pool[i], Rational(1)));
        Ideal ideal = Ideal::make(ctx, gens);
        ++ideals;
        for (const Monomial& m : probes) {
            Polynomial p = Polynomial::from_term(ctx, m, Rational(1));
            bool oracle = false;
            for (size_t i : sel) oracle = oracle || gens_pool[i].divides(m);
            bool member = ideal_member(p, ideal, MonomialOrder::grevlex());
            ++checks;
            if (member != oracle) {
                out.fail("membership disagrees with divisibility at " + p.str());
                return;
            }
        }
    };
    const size_t n = gens_pool.size();
    for (size_t i = 0; i < n && out.pass; ++i) {
        run_set({i});
        for (size_t j = i + 1; j < n && out.pass; ++j) {
            run_set({i, j});
            for (size_t k = j + 1; k < n && out.pass; ++k) run_set({i, j, k});
        }
    }
    out.expect(ideals == 1350, "unexpected ideal count: " + std::to_string(ideals));
    (void)checks;
    return out;
}

// C7: valuation laws for the order of vanishing.
Outcome criterion7() {
    Outcome out;
    auto g = testutil::rng(717171);
    VarContext tc = Curve::t_context();
    for (int trial = 0; trial < 500; ++trial) {
        Polynomial f = testutil::random_polynomial(g, tc, 6, 3);
        Polynomial h = testutil::random_polynomial(g, tc, 6, 3);
        TOrder of = t_order(f), oh = t_order(h), prod = t_order(f * h);
        if (of.is_infinite() || oh.is_infinite()) {
            out.expect(prod.is_infinite(), "product order finite with an infinite factor");
        } else {
            out.expect(prod == TOrder::finite(*of.value + *oh.value),
                       "product order is not the sum");
        }
        TOrder sum = t_order(f + h), lo = min(of, oh);
        out.expect(!(sum < lo), "sum order sinks below the minimum");
        if (of != oh) out.expect(sum == lo, "sum order misses the strict minimum");
    }
    return out;
}

// C8: every certificate emitted above re-verifies from scratch, and no input
// ever yields both an inclusion certificate and a refutation, under either
// doubles convention.
Outcome criterion8() {
    Outcome out;
    out.expect(!emitted_reports.empty(), "no reports were collected");
    for (size_t i = 0; i < emitted_reports.size(); ++i) {
        VerifyResult r = verify_report(emitted_reports[i]);
        if (!r.ok) {
            out.fail("report #" + std::to_string(i) + " failed re-verification: " + r.detail);
            break;
        }
    }
    SearchBudget small;
    small.max_exponent = 1;
    small.coefficients = {Rational(0), Rational(1)};
    for (const ProblemFile& pf : analyzed_inputs) {
        Unfolding u = problem_unfolding(pf);
        Ideal theta = theta_doubles(u);
        for (bool conv : {true, false}) {
            Ideal unf = unfolding_doubles(u, conv);
            bool inclusion =
                theta.is_zero() || ideal_contains(unf, theta, MonomialOrder::grevlex());
            SearchOutcome so = search_refuting_curve(u, small, conv);
            if (inclusion && so.witness.has_value()) {
                out.fail("inclusion certificate and refutation coexist on one input");
                return out;
            }
        }
    }
    return out;
}

}  // namespace

int main() {
    struct Entry {
        int number;
        Outcome (*run)();
    };
    const Entry entries[] = {{1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
                             {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
    bool all = true;
    for (const Entry& e : entries) {
        Outcome out;
        try {
            out = e.run();
        } catch (const std::exception& ex) {
            out.fail(std::string("exception: ") + ex.what());
        }
        if (out.pass)
            std::printf("[ACCEPTANCE] C%d PASS\n", e.number);
        else
            std::printf("[ACCEPTANCE] C%d FAIL (%s)\n", e.number, out.reason.c_str());
        all = all && out.pass;
    }
    return all ? 0 : 1;
}
