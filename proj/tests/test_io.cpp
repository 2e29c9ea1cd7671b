#include <catch2/catch_amalgamated.hpp>

#include "montype/ideal_io.hpp"
#include "support/corpus.hpp"

using namespace montype;

TEST_CASE("parse a monomial ideal file with named variables") {
    IdealFile file = parse_ideal_string("ring n=2 vars=x,y\n# comment\nx^2*y\nx*y^2\n");
    CHECK(file.n == 2);
    CHECK(file.var_names == std::vector<std::string>{"x", "y"});
    CHECK(file.all_monomial());
    CHECK(file.monomial_ideal() == MonomialIdeal(2, {{2, 1}, {1, 2}}));
}

TEST_CASE("default variable names are x1..xn") {
    IdealFile file = parse_ideal_string("ring n=3\nx1*x3^2\nx2\n");
    CHECK(file.var_names == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(file.monomial_ideal() == MonomialIdeal(3, {{1, 0, 2}, {0, 1, 0}}));
}

TEST_CASE("polynomial generators with rational coefficients") {
    IdealFile file = parse_ideal_string("ring n=2 vars=z1,z2\nz1^3 + z1*z2^2\n1/2*z2\n");
    CHECK_FALSE(file.all_monomial());
    PolynomialIdeal ideal = file.polynomial_ideal();
    REQUIRE(ideal.generators().size() == 2);
    const auto& terms = ideal.generators()[0].terms();
    REQUIRE(terms.size() == 2);
    CHECK(terms.at({3, 0}) == 1);
    CHECK(terms.at({1, 2}) == 1);
    CHECK(ideal.generators()[1].terms().at({0, 1}) == Rat(1, 2));
    CHECK_THROWS_AS(file.monomial_ideal(), PreconditionError);
}

TEST_CASE("signs and like-term collection") {
    IdealFile file = parse_ideal_string("ring n=2\n-x1 + 2*x2 + x1 + x2\n");
    const auto& terms = file.generators[0].terms();
    REQUIRE(terms.size() == 1);
    CHECK(terms.at({0, 1}) == 3);
}

TEST_CASE("parse errors carry line information") {
    CHECK_THROWS_AS(parse_ideal_string(""), ParseError);
    CHECK_THROWS_AS(parse_ideal_string("ring n=2\n"), ParseError);          // no generators
    CHECK_THROWS_AS(parse_ideal_string("x1\nring n=2\n"), ParseError);      // header not first
    CHECK_THROWS_AS(parse_ideal_string("ring n=2\ny^2\n"), ParseError);     // unknown variable
    CHECK_THROWS_AS(parse_ideal_string("ring n=2\nx1^\n"), ParseError);     // missing exponent
    CHECK_THROWS_AS(parse_ideal_string("ring n=2\nx1 - x1\n"), ParseError); // zero polynomial
    CHECK_THROWS_AS(parse_ideal_string("ring n=2 vars=x\nx\n"), ParseError);// wrong name count
    CHECK_THROWS_AS(parse_ideal_string("ring n=2\nx1 @ x2\n"), ParseError); // stray character
}

TEST_CASE("serialize-parse round trip on the corpus") {
    auto cfg = tests::load_test_config();
    auto corpus = tests::generate_corpus({60, cfg.corpus.seed + 41, 4, 6, 8});
    for (const auto& I : corpus) {
        IdealFile file = parse_ideal_string(serialize_ideal(I));
        CHECK(file.monomial_ideal() == I);
    }
}

TEST_CASE("serialization uses the declared names and omits unit exponents") {
    MonomialIdeal I(2, {{2, 0}, {1, 1}});
    std::string text = serialize_ideal(I, {"x", "y"});
    CHECK(text == "ring n=2 vars=x,y\nx*y\nx^2\n");
}
