// lipcert: certified Lipschitz analysis for 1-parameter unfoldings of
// matrix germs. Exit codes: 0 CERTIFIED_LIPSCHITZ, 1 CERTIFIED_NOT_LIPSCHITZ,
// 2 INCONCLUSIVE, 64 usage errors, 65 input/data errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "lipcert/report.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lipcert::Error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct BudgetFlags {
    unsigned max_exponent = 0;       // 0 = not given
    std::string coefficients;        // empty = not given
    std::string order;               // empty = not given
    uint64_t max_curves = 0;         // 0 = not given
};

void apply_overrides(lipcert::ProblemFile& pf, const BudgetFlags& flags) {
    if (flags.max_exponent > 0) pf.options.max_exponent = flags.max_exponent;
    if (!flags.coefficients.empty()) {
        std::vector<lipcert::Rational> cs;
        for (const auto& piece : lipcert::detail::split_commas(flags.coefficients))
            cs.push_back(lipcert::Rational::parse(piece.text));
        bool has_zero = false, has_nonzero = false;
        for (const auto& c : cs) (c.is_zero() ? has_zero : has_nonzero) = true;
        if (!has_zero || !has_nonzero)
            throw lipcert::Error("--budget-coeffs must contain 0 and a nonzero value");
        pf.options.coefficients = std::move(cs);
    }
    if (!flags.order.empty())
        pf.options.order =
            flags.order == "lex" ? lipcert::OrderKind::Lex : lipcert::OrderKind::Grevlex;
    if (flags.max_curves > 0) pf.options.max_curves = flags.max_curves;
}

int run_analyze(const lipcert::ProblemFile& pf, bool json) {
    lipcert::AnalysisReport rep = lipcert::run_analysis(pf);
    if (json)
        std::cout << lipcert::analysis_json(rep).dump(2) << "\n";
    else
        std::cout << lipcert::render_text(rep);
    return lipcert::verdict_exit_code(rep.certificate.verdict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified Lipschitz analysis of canonical vector fields of unfoldings"};
    app.require_subcommand(1);

    // analyze
    std::string analyze_file;
    bool analyze_json = false;
    BudgetFlags analyze_flags;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze a problem file");
    analyze->add_option("file", analyze_file, "problem file")->required();
    analyze->add_flag("--json", analyze_json, "emit the JSON report");
    analyze->add_option("--budget-exp", analyze_flags.max_exponent,
                        "curve search: maximum exponent (overrides the file)");
    analyze->add_option("--budget-coeffs", analyze_flags.coefficients,
                        "curve search: coefficient list, e.g. 0,1,-1 (overrides the file)");
    analyze->add_option("--order", analyze_flags.order, "monomial order (overrides the file)")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    analyze->add_option("--budget-curves", analyze_flags.max_curves,
                        "curve search: stop after this many curves (overrides the file)");

    // check-curve
    std::string curve_file;
    std::string curve_spec;
    bool curve_json = false;
    CLI::App* check = app.add_subcommand("check-curve", "test one curve against a problem file");
    check->add_option("file", curve_file, "problem file")->required();
    check->add_option("--curve", curve_spec, "curve spec, e.g. \"w=2t, w'=t\"")->required();
    check->add_flag("--json", curve_json, "emit the JSON report");

    // catalog
    std::string cat_family;
    unsigned cat_l = 2, cat_k = 2;
    bool cat_emit = false, cat_json = false;
    CLI::App* catalog = app.add_subcommand("catalog", "analyze or print a built-in family");
    catalog->add_option("family", cat_family, "family name")
        ->required()
        ->check(CLI::IsMember({"e1", "e2"}));
    CLI::Option* opt_l = catalog->add_option("--l", cat_l, "first exponent (e1 only, >= 2)");
    catalog->add_option("--k", cat_k, "second exponent (>= 2)");
    catalog->add_flag("--emit-file", cat_emit, "print the problem file instead of analyzing");
    catalog->add_flag("--json", cat_json, "emit the JSON report");

    // verify-witness
    std::string verify_file;
    CLI::App* verify = app.add_subcommand("verify-witness", "re-check a serialized JSON report");
    verify->add_option("report", verify_file, "report.json produced by analyze/check-curve")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze) {
            lipcert::ProblemFile pf = lipcert::parse_problem(read_file(analyze_file));
            apply_overrides(pf, analyze_flags);
            return run_analyze(pf, analyze_json);
        }

        if (*check) {
            lipcert::ProblemFile pf = lipcert::parse_problem(read_file(curve_file));
            lipcert::CurveReport rep = lipcert::run_check_curve(pf, curve_spec);
            if (curve_json)
                std::cout << lipcert::curve_json(rep).dump(2) << "\n";
            else
                std::cout << lipcert::render_curve_text(rep);
            return lipcert::verdict_exit_code(lipcert::curve_report_verdict(rep));
        }

        if (*catalog) {
            if (cat_family == "e2" && opt_l->count() > 0) {
                std::cerr << "error: --l applies only to family e1\n";
                return kExitUsage;
            }
            lipcert::Family fam =
                cat_family == "e1" ? lipcert::family_e1(cat_l, cat_k) : lipcert::family_e2(cat_k);
            lipcert::ProblemFile pf;
            pf.variables = {"x", "y", "z", "w"};
            pf.parameter = "u";
            pf.F = fam.F;
            pf.theta = fam.theta;
            if (cat_emit) {
                std::cout << lipcert::serialize_problem(pf);
                return 0;
            }
            return run_analyze(pf, cat_json);
        }

        if (*verify) {
            lipcert::ordered_json j;
            try {
                j = lipcert::ordered_json::parse(read_file(verify_file));
            } catch (const nlohmann::json::parse_error& e) {
                std::cerr << "error: " << verify_file << ": " << e.what() << "\n";
                return kExitData;
            }
            lipcert::VerifyResult res = lipcert::verify_report(j);
            if (res.ok) {
                std::cout << "OK: " << res.detail << "\n";
                return 0;
            }
            std::cout << "INVALID: " << res.detail << "\n";
            return 1;
        }
    } catch (const lipcert::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const lipcert::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
