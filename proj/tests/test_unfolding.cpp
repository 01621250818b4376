#include <catch2/catch_amalgamated.hpp>

#include "lipcert/classify.hpp"
#include "lipcert/expr.hpp"
#include "lipcert/unfolding.hpp"
#include "testutil.hpp"

using namespace lipcert;

namespace {

Polynomial P(const std::string& s, const VarContext& ctx) { return parse_polynomial(s, ctx); }

bool same_ideal(const Ideal& a, const Ideal& b) {
    return ideal_contains(a, b, MonomialOrder::grevlex()) &&
           ideal_contains(b, a, MonomialOrder::grevlex());
}

}  // namespace

TEST_CASE("matrix germ validation") {
    VarContext ctx({"x", "y"});
    CHECK_THROWS_AS(MatrixGerm::make(2, 2, {P("x", ctx)}), Error);  // wrong entry count
    CHECK_THROWS_AS(MatrixGerm::make(0, 1, {}), Error);
    VarContext other({"x", "z"});
    CHECK_THROWS_AS(MatrixGerm::make(1, 2, {P("x", ctx), P("x", other)}), ContextMismatchError);
    MatrixGerm m = MatrixGerm::make(1, 2, {P("x", ctx), P("y^2", ctx)});
    CHECK(m.at(0, 1) == P("y^2", ctx));
}

TEST_CASE("unfolding components, first catalog family") {
    Family fam = family_e1(2, 2);
    Unfolding u = build_unfolding(fam.F, fam.theta, "u");
    CHECK(u.ambient.size() == 5);
    CHECK(u.ambient.name(0) == "u");
    CHECK(u.components[0] == P("u", u.ambient));
    const char* expect[] = {"w^2 + u*(1 + w)", "y", "x", "z", "w", "y^2 + u*(1 + y)"};
    REQUIRE(u.matrix_component_count() == 6);
    for (size_t i = 0; i < 6; ++i)
        CHECK(u.components[i + 1] == P(expect[i], u.ambient));
    CHECK(u.matrix_component(0, 0) == P("w^2 + u + u*w", u.ambient));
    CHECK(u.matrix_component(1, 2) == P("y^2 + u + u*y", u.ambient));
}

TEST_CASE("unfolding components, second catalog family") {
    Family fam = family_e2(2);
    Unfolding u = build_unfolding(fam.F, fam.theta, "u");
    CHECK(u.matrix_component(0, 2) == P("x^2 + u*(x*w + w)", u.ambient));
    CHECK(u.matrix_component(0, 1) == P("y + w^2 + u", u.ambient));
    CHECK(u.matrix_component(1, 0) == P("w^2 + u*(1 + w)", u.ambient));
}

TEST_CASE("zero theta leaves the matrix entries unperturbed") {
    VarContext ctx({"x"});
    MatrixGerm F = MatrixGerm::make(1, 1, {P("x", ctx)});
    MatrixGerm theta = MatrixGerm::make(1, 1, {Polynomial::zero(ctx)});
    Unfolding u = build_unfolding(F, theta, "u");
    CHECK(u.matrix_component(0, 0) == P("x", u.ambient));

    Ideal d = unfolding_doubles(u);
    REQUIRE(d.generators.size() == 2);
    CHECK(d.generators[0] == P("u - u'", u.doubled.doubled()));
    CHECK(d.generators[1] == P("x - x'", u.doubled.doubled()));
}

TEST_CASE("construction errors") {
    VarContext ctx({"x", "y"});
    MatrixGerm F = MatrixGerm::make(1, 2, {P("x", ctx), P("y", ctx)});
    MatrixGerm badshape = MatrixGerm::make(2, 1, {P("x", ctx), P("y", ctx)});
    CHECK_THROWS_AS(build_unfolding(F, badshape, "u"), Error);
    MatrixGerm theta = MatrixGerm::make(1, 2, {P("1", ctx), P("0", ctx)});
    CHECK_THROWS_AS(build_unfolding(F, theta, "x"), Error);  // parameter collides
    CHECK_NOTHROW(build_unfolding(F, theta, "u"));
}

TEST_CASE("unfolding doubles of the second family match the published generators") {
    Family fam = family_e2(2);
    Unfolding u = build_unfolding(fam.F, fam.theta, "u");
    const VarContext& d = u.doubled.doubled();

    Ideal mine = unfolding_doubles(u);
    REQUIRE(mine.generators.size() == 7);
    // the raw double of the (0,1) component keeps its parameter part
    CHECK(mine.generators[2] == P("(y - y') + (w^2 - w'^2) + (u - u')", d));

    // published display (u - u' stated once, dropped inside the second double)
    std::vector<Polynomial> display = {
        P("u - u'", d),
        P("z - z'", d),
        P("(y - y') + w^2 - w'^2", d),
        P("x^2 - x'^2 + u*(x*w + w) - u'*(x'*w' + w')", d),
        P("w^2 - w'^2 + u*(1 + w) - u'*(1 + w')", d),
        P("x + u*w - x' - u'*w'", d),
        P("y + u*w - y' - u'*w'", d)};
    CHECK(same_ideal(mine, Ideal::make(d, display)));
}

TEST_CASE("first family doubles contain the coordinate differences as literal generators") {
    Family fam = family_e1(2, 2);
    Unfolding u = build_unfolding(fam.F, fam.theta, "u");
    const VarContext& d = u.doubled.doubled();
    Ideal ideal = unfolding_doubles(u);
    for (const char* s : {"x - x'", "y - y'", "z - z'", "w - w'", "u - u'"}) {
        Polynomial g = P(s, d);
        bool literal = false;
        for (const auto& gen : ideal.generators) literal = literal || gen == g;
        CHECK(literal);
    }
}

TEST_CASE("parameter double convention switch") {
    Family fam = family_e2(2);
    Unfolding u = build_unfolding(fam.F, fam.theta, "u");
    Ideal with = unfolding_doubles(u, true);
    Ideal without = unfolding_doubles(u, false);
    CHECK(with.generators.size() == without.generators.size() + 1);
    CHECK(with.generators[0] == P("u - u'", u.doubled.doubled()));
    for (size_t i = 0; i < without.generators.size(); ++i)
        CHECK(without.generators[i] == with.generators[i + 1]);
}

TEST_CASE("theta doubles") {
    const VarContext& base = family_e2(2).F.context();
    {
        Family fam = family_e2(2);
        Unfolding u = build_unfolding(fam.F, fam.theta, "u");
        const VarContext& d = u.doubled.doubled();
        Ideal td = theta_doubles(u);
        REQUIRE(td.generators.size() == 4);  // raw doubles; three coincide
        CHECK(td.generators[0] == P("x*w + w - x'*w' - w'", d));
        CHECK(td.generators[1] == P("w - w'", d));
        CHECK(td.generators[2] == P("w - w'", d));
        CHECK(td.generators[3] == P("w - w'", d));
        Ideal display = Ideal::make(
            d, {P("w - w'", d), P("w*(x + 1) - w'*(x' + 1)", d)});
        CHECK(same_ideal(td, display));
    }
    {
        Family fam = family_e1(2, 2);
        Unfolding u = build_unfolding(fam.F, fam.theta, "u");
        const VarContext& d = u.doubled.doubled();
        Ideal td = theta_doubles(u);
        REQUIRE(td.generators.size() == 2);
        CHECK(td.generators[0] == P("w - w'", d));
        CHECK(td.generators[1] == P("y - y'", d));
    }
    {
        Family fam = family_e1(3, 2);
        Unfolding u = build_unfolding(fam.F, fam.theta, "u");
        const VarContext& d = u.doubled.doubled();
        Ideal td = theta_doubles(u);
        REQUIRE(td.generators.size() == 2);
        CHECK(td.generators[0] == P("(w - w') + (w^2 - w'^2)", d));
    }
    {
        // constant theta gives the zero ideal
        VarContext ctx({"x"});
        MatrixGerm F = MatrixGerm::make(1, 1, {P("x^2", ctx)});
        MatrixGerm theta = MatrixGerm::make(1, 1, {P("7", ctx)});
        Unfolding u = build_unfolding(F, theta, "u");
        CHECK(theta_doubles(u).is_zero());
    }
    {
        // single entry x
        VarContext ctx({"x"});
        MatrixGerm F = MatrixGerm::make(1, 1, {P("x^2", ctx)});
        MatrixGerm theta = MatrixGerm::make(1, 1, {P("x", ctx)});
        Unfolding u = build_unfolding(F, theta, "u");
        Ideal td = theta_doubles(u);
        REQUIRE(td.generators.size() == 1);
        CHECK(td.generators[0] == P("x - x'", u.doubled.doubled()));
    }
    (void)base;
}

TEST_CASE("derivative with respect to the parameter recovers theta") {
    auto check_family = [](const Family& fam) {
        Unfolding u = build_unfolding(fam.F, fam.theta, "u");
        for (size_t r = 0; r < fam.F.rows; ++r)
            for (size_t c = 0; c < fam.F.cols; ++c) {
                Polynomial dfdu = u.matrix_component(r, c).derivative(0);  // param is index 0
                CHECK(dfdu == fam.theta.at(r, c).extend_to(u.ambient));
            }
    };
    check_family(family_e1(2, 2));
    check_family(family_e1(3, 3));
    check_family(family_e2(2));
    check_family(family_e2(3));

    // randomized unfoldings: theta entries of degree <= 1 in the parameter
    auto g = testutil::rng(616);
    VarContext ctx({"x", "y"});
    for (int i = 0; i < 20; ++i) {
        MatrixGerm F = MatrixGerm::make(1, 2, {testutil::random_polynomial(g, ctx, 3, 3),
                                               testutil::random_polynomial(g, ctx, 3, 3)});
        MatrixGerm theta = MatrixGerm::make(1, 2, {testutil::random_polynomial(g, ctx, 2, 2),
                                                   testutil::random_polynomial(g, ctx, 2, 2)});
        Unfolding u = build_unfolding(F, theta, "u");
        for (size_t c = 0; c < 2; ++c)
            CHECK(u.matrix_component(0, c).derivative(0) == theta.at(0, c).extend_to(u.ambient));
    }
}

TEST_CASE("theta doubles always land in the diagonal ideal") {
    auto g = testutil::rng(717);
    VarContext ctx({"x", "y"});
    for (int i = 0; i < 10; ++i) {
        MatrixGerm F = MatrixGerm::make(1, 2, {testutil::random_polynomial(g, ctx, 2, 3),
                                               testutil::random_polynomial(g, ctx, 2, 3)});
        MatrixGerm theta = MatrixGerm::make(1, 2, {testutil::random_polynomial(g, ctx, 2, 3),
                                                   testutil::random_polynomial(g, ctx, 2, 3)});
        Unfolding u = build_unfolding(F, theta, "u");
        CHECK(ideal_contains(diagonal_ideal(u.doubled), theta_doubles(u),
                             MonomialOrder::grevlex()));
    }
}
