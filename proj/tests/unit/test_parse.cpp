#include <doctest.h>

#include "affcert/parse.hpp"

using namespace affcert;

TEST_CASE("generator syntax") {
    SimpleLie g(6);
    CHECK(parse_generator(g, "e[1,2]") == g.e(1, 2));
    CHECK(parse_generator(g, "f[1,6]") == g.f(1, 6));
    CHECK(parse_generator(g, "h[5]") == g.h(5));
    CHECK(parse_generator(g, " h[2] ") == g.h(2));
    CHECK_THROWS_AS(parse_generator(g, "e[2,2]"), ParseError);
    CHECK_THROWS_AS(parse_generator(g, "e[1,7]"), ParseError);
    CHECK_THROWS_AS(parse_generator(g, "g[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_generator(g, "h[0]"), ParseError);
}

TEST_CASE("weight syntax") {
    Weight w = parse_weight("0,1,0,1,0", 5);
    CHECK(w.coords[1] == Rational(1));
    CHECK(w.coords[4] == Rational(0));
    CHECK(parse_weight("-7/2,3", 2).coords[0] == Rational(-7, 2));
    CHECK_THROWS_AS(parse_weight("1,2", 3), ParseError);
    CHECK_THROWS_AS(parse_weight("1,,2", 3), ParseError);
    CHECK(render_weight(w) == "0,1,0,1,0");
}

TEST_CASE("uea element round-trip") {
    SimpleLie g(6);
    Uea uea(g);
    UeaElement u = parse_uea_element(uea, "2 f[1,2] e[1,3] - 1/3 h[1] h[2] + e[5,6]");
    CHECK(!u.empty());
    CHECK(parse_uea_element(uea, render_uea_element(uea, u)) == u);

    // inputs are PBW-normalized
    UeaElement ef = parse_uea_element(uea, "e[1,2] f[1,2]");
    UeaElement fe_h = parse_uea_element(uea, "f[1,2] e[1,2] + h[1]");
    CHECK(ef == fe_h);

    CHECK(parse_uea_element(uea, "e[1,2] - e[1,2]").empty());
    CHECK_THROWS_AS(parse_uea_element(uea, "2 *"), ParseError);
}

TEST_CASE("vacuum element round-trip") {
    SimpleLie g(6);
    Vacuum vac(g, Rational(-7, 2));
    VacuumElement v =
        parse_vacuum_element(vac, "e[1,5](-3) e[2,6](-1) |0> + 5/2 e[1,5](-2) e[2,6](-2) |0>");
    CHECK(v.size() == 2);
    CHECK(parse_vacuum_element(vac, render_vacuum_element(vac, v)) == v);

    // |0> is optional and letters are normal-ordered on input
    VacuumElement a = parse_vacuum_element(vac, "e[1,2](-1) f[1,2](-1)");
    VacuumElement b =
        parse_vacuum_element(vac, "f[1,2](-1) e[1,2](-1) |0> + h[1](-2) |0>");
    CHECK(a == b);

    CHECK_THROWS_AS(parse_vacuum_element(vac, "e[1,2](0) |0>"), ParseError);
    CHECK_THROWS_AS(parse_vacuum_element(vac, "e[1,2](-1"), ParseError);
}

TEST_CASE("families file") {
    auto fams = parse_families("# comment\n0,0,1,0,0 | 1,0,0,0,0\n\n1,0,0,0,1 | 0,0,0,0,0\n", 5);
    REQUIRE(fams.size() == 2);
    CHECK(fams[0].base.coords[2] == Rational(1));
    CHECK(fams[0].direction.coords[0] == Rational(1));
    CHECK(fams[1].direction.coords[4] == Rational(0));
    CHECK_THROWS_AS(parse_families("1,0,0,0,0\n", 5), ParseError);
}

TEST_CASE("chains file") {
    SimpleLie g(6);
    auto chains = parse_chains(g, "1/30 : f[1,2] e[1,3] - 2 h[1]\n1/15 : e[2,3]\n");
    REQUIRE(chains.size() == 2);
    CHECK(chains[0].scale == Rational(1, 30));
    REQUIRE(chains[0].terms.size() == 2);
    CHECK(chains[0].terms[0].coeff == Rational(1));
    CHECK(chains[0].terms[0].gens == std::vector<int>{g.f(1, 2), g.e(1, 3)});
    CHECK(chains[0].terms[1].coeff == Rational(-2));
    CHECK(chains[0].terms[1].gens == std::vector<int>{g.h(1)});
    CHECK(chains[1].terms[0].gens == std::vector<int>{g.e(2, 3)});
}

TEST_CASE("cartan polynomial expressions") {
    auto ps = parse_cartan_polys("h1 h3 (6 + 2 h1)\n-1/2 h2^2 + h1 - 3\n", 5);
    REQUIRE(ps.size() == 2);

    CartanPoly want0(5);
    want0.add_term({1, 0, 1, 0, 0}, Rational(6));
    want0.add_term({2, 0, 1, 0, 0}, Rational(2));
    CHECK(ps[0] == want0);

    CartanPoly want1(5);
    want1.add_term({0, 2, 0, 0, 0}, Rational(-1, 2));
    want1.add_term({1, 0, 0, 0, 0}, Rational(1));
    want1.add_term({0, 0, 0, 0, 0}, Rational(-3));
    CHECK(ps[1] == want1);

    CHECK_THROWS_AS(parse_cartan_polys("h6\n", 5), ParseError);
    CHECK_THROWS_AS(parse_cartan_polys("h1 (2 + \n", 5), ParseError);
}

TEST_CASE("parse errors carry 1-based locations") {
    try {
        parse_families("0,0 | 0,0\n1,x | 0,0\n", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col >= 1);
    }
}
