#pragma once

#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lipcert/polynomial.hpp"
#include "lipcert/unfolding.hpp"

namespace testutil {

using lipcert::Monomial;
using lipcert::Polynomial;
using lipcert::Rational;
using lipcert::VarContext;

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline Rational random_coeff(std::mt19937_64& g, bool allow_zero = false) {
    std::uniform_int_distribution<int> num(-4, 4);
    int n = num(g);
    if (!allow_zero)
        while (n == 0) n = num(g);
    return Rational(n);
}

inline Monomial random_monomial(std::mt19937_64& g, size_t nvars, unsigned max_deg) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<size_t> var(0, nvars - 1);
    Monomial m = Monomial::one(nvars);
    unsigned d = deg(g);
    for (unsigned i = 0; i < d; ++i) ++m.e[var(g)];
    return m;
}

inline Polynomial random_polynomial(std::mt19937_64& g, const VarContext& ctx, unsigned max_deg,
                                    unsigned max_terms) {
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    Polynomial p = Polynomial::zero(ctx);
    unsigned n = nterms(g);
    for (unsigned i = 0; i < n; ++i)
        p += Polynomial::from_term(ctx, random_monomial(g, ctx.size(), max_deg), random_coeff(g));
    return p;
}

/// Random germ vanishing at the origin (no constant term).
inline Polynomial random_vanishing(std::mt19937_64& g, const VarContext& ctx, unsigned max_deg,
                                   unsigned max_terms) {
    Polynomial p = random_polynomial(g, ctx, max_deg, max_terms);
    return p - Polynomial::constant(ctx, p.constant_term());
}

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

/// Runs the CLI binary named by the LIPCERT_CLI environment variable.
inline CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("LIPCERT_CLI");
    if (!bin) throw std::runtime_error("LIPCERT_CLI not set");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("popen failed");
    CliResult res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) res.output.append(buf, n);
    int status = pclose(p);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace testutil
