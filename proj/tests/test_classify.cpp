#include <catch2/catch_amalgamated.hpp>

#include "lipcert/classify.hpp"
#include "lipcert/expr.hpp"
#include "testutil.hpp"

using namespace lipcert;

namespace {

Polynomial P(const std::string& s, const VarContext& ctx) { return parse_polynomial(s, ctx); }

/// Strips all terms of total degree < 2.
Polynomial higher_order(const Polynomial& p) {
    Polynomial out = Polynomial::zero(p.context());
    for (const auto& [m, c] : p.terms())
        if (m.total_degree() >= 2) out += Polynomial::from_term(p.context(), m, c);
    return out;
}

}  // namespace

TEST_CASE("linear part rank") {
    CHECK(linear_part_rank(family_e1(2, 2).F.entries) == 4);  // parts {0, y, x, z, w, 0}
    CHECK(linear_part_rank(family_e2(2).F.entries) == 3);     // parts {z, y, 0, 0, x, y}

    VarContext ctx({"x", "y"});
    CHECK(linear_part_rank({Polynomial::zero(ctx), Polynomial::zero(ctx)}) == 0);
    CHECK(linear_part_rank({P("x + y", ctx), P("2*x + 2*y", ctx)}) == 1);
    CHECK(linear_part_rank({P("x^2 + y^2", ctx)}) == 0);
    CHECK_THROWS_AS(linear_part_rank({P("x + 1", ctx)}), Error);
    CHECK(linear_part_rank({}) == 0);
}

TEST_CASE("jet classification") {
    {
        JetType j = jet_type(family_e1(2, 2).F);
        CHECK(j.kind == JetKind::ReducedPoint);
        CHECK(j.linear_rank == 4);
        CHECK(j.ambient_dimension == 4);
        CHECK(std::string(jet_kind_name(j.kind)) == "REDUCED_POINT");
    }
    {
        JetType j = jet_type(family_e2(2).F);
        CHECK(j.kind == JetKind::FatPoint);
        CHECK(j.linear_rank == 3);
        CHECK(std::string(jet_kind_name(j.kind)) == "FAT_POINT");
    }
    {
        // z never occurs: entries ideal <x, y> is a curve, not a point
        VarContext ctx({"x", "y", "z"});
        MatrixGerm F = MatrixGerm::make(2, 2,
                                        {P("x", ctx), P("y", ctx), P("y", ctx), P("x", ctx)});
        JetType j = jet_type(F);
        CHECK(j.kind == JetKind::NotIsolated);
        CHECK(j.linear_rank == 2);
        CHECK(std::string(jet_kind_name(j.kind)) == "NOT_ISOLATED");
    }
    {
        VarContext ctx({"x"});
        MatrixGerm F = MatrixGerm::make(1, 1, {Polynomial::zero(ctx)});
        CHECK(jet_type(F).kind == JetKind::NotIsolated);
    }
}

TEST_CASE("catalog families") {
    Family a = family_e1(2, 2);
    VarContext ctx = a.F.context();
    CHECK(ctx == VarContext({"x", "y", "z", "w"}));
    CHECK(a.F.at(0, 0) == P("w^2", ctx));
    CHECK(a.F.at(1, 2) == P("y^2", ctx));
    CHECK(a.theta.at(0, 0) == P("1 + w", ctx));
    CHECK(a.theta.at(0, 1).is_zero());
    CHECK(a.theta.at(1, 2) == P("1 + y", ctx));

    CHECK(family_e1(3, 2).theta.at(0, 0) == P("1 + w + w^2", ctx));
    CHECK(family_e1(3, 2).F.at(0, 0) == P("w^3", ctx));
    CHECK(family_e1(2, 3).theta.at(1, 2) == P("1 + y + y^2", ctx));

    Family b = family_e2(2);
    CHECK(b.F.at(1, 0) == P("w^2", ctx));
    CHECK(b.F.at(0, 1) == P("y + w^2", ctx));
    CHECK(b.theta.at(0, 2) == P("x*w + w", ctx));
    CHECK(b.theta.at(0, 0).is_zero());
    CHECK(b.theta.at(0, 1) == Polynomial::constant(ctx, Rational(1)));
    CHECK(family_e2(3).theta.at(1, 0) == P("1 + w + w^2", ctx));
    CHECK(family_e2(3).F.at(1, 0) == P("w^3", ctx));

    CHECK_THROWS_AS(family_e1(1, 2), Error);
    CHECK_THROWS_AS(family_e1(2, 1), Error);
    CHECK_THROWS_AS(family_e2(1), Error);
}

TEST_CASE("reduced point implies zero-dimensional entries ideal") {
    for (unsigned l : {2u, 3u})
        for (unsigned k : {2u, 3u}) {
            MatrixGerm F = family_e1(l, k).F;
            REQUIRE(jet_type(F).kind == JetKind::ReducedPoint);
            CHECK(zero_dimensional(Ideal::make(F.context(), F.entries)));
        }

    // randomized full-rank linear parts plus degree >= 2 noise
    auto g = testutil::rng(90210);
    VarContext ctx({"x", "y", "z", "w"});
    int reduced_seen = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> entries;
        for (size_t i = 0; i < ctx.size(); ++i)
            entries.push_back(Polynomial::variable(ctx, i) +
                              higher_order(testutil::random_polynomial(g, ctx, 3, 3)));
        entries.push_back(higher_order(testutil::random_polynomial(g, ctx, 3, 3)));
        entries.push_back(higher_order(testutil::random_polynomial(g, ctx, 3, 3)));
        MatrixGerm F = MatrixGerm::make(2, 3, entries);
        JetType j = jet_type(F);
        REQUIRE(j.kind == JetKind::ReducedPoint);
        ++reduced_seen;
        CHECK(zero_dimensional(Ideal::make(ctx, F.entries)));
    }
    CHECK(reduced_seen == 20);
}
