#include <catch2/catch_amalgamated.hpp>

#include "montype/nss.hpp"
#include "support/corpus.hpp"

using namespace montype;

TEST_CASE("Nullstellensatz exponent ceil(n * ttype)") {
    CHECK(nss_exponent(MonomialIdeal(2, {{2, 1}, {1, 2}})) == 3);
    CHECK(nss_exponent(MonomialIdeal::maximal(2)) == 2);
    CHECK(nss_exponent(MonomialIdeal(2, {{2, 0}, {1, 1}})) == 4);
}

TEST_CASE("ceiling is exact when n * ttype is integral") {
    // ttype = 3/2 in n = 2: exponent exactly 3, no rounding slack.
    MonomialIdeal I(2, {{2, 1}, {1, 2}});
    Rat product = Rat(2) * ttype(I).value;
    CHECK(denominator(product) == 1);
    CHECK(nss_exponent(I) == numerator(product));
}

TEST_CASE("radical power inclusion with certificates") {
    MonomialIdeal I(2, {{2, 1}, {1, 2}});
    InclusionResult res = verify_nss_inclusion(I);
    REQUIRE(res.holds);
    REQUIRE(res.certificates.size() == 1);
    // rad^3 = (x^3 y^3) factors through a generator: x^3 y^3 = (x y^2)(x^2 y)
    // up to the order the generators are stored in.
    const auto& cert = res.certificates[0];
    CHECK(cert.monomial == ExponentVector{3, 3});
    bool forward = cert.divisor == ExponentVector{2, 1} && cert.cofactor == ExponentVector{1, 2};
    bool reverse = cert.divisor == ExponentVector{1, 2} && cert.cofactor == ExponentVector{2, 1};
    CHECK((forward || reverse));

    CHECK(verify_nss_inclusion(MonomialIdeal::maximal(2)).holds);

    InclusionResult res2 = verify_nss_inclusion(MonomialIdeal(2, {{2, 0}, {1, 1}}));
    REQUIRE(res2.holds);
    REQUIRE(res2.certificates.size() == 1);
    CHECK(res2.certificates[0].monomial == ExponentVector{4, 0});
    CHECK(res2.certificates[0].divisor == ExponentVector{2, 0});
}

TEST_CASE("smallest exponent with radical power inside the ideal") {
    // rad((x^2 y, x y^2)) = (xy) and (xy)^2 = x^2 y^2 = y * x^2 y already
    // lies in the ideal, so sigma is 2 while the theorem bound is 3.
    CHECK(sigma_min(MonomialIdeal(2, {{2, 1}, {1, 2}})) == 2);
    CHECK(sigma_min(MonomialIdeal(2, {{2, 0}, {1, 1}})) == 2);
    CHECK(sigma_min(MonomialIdeal::maximal(2)) == 1);
    // A tight instance of the bound: (x^2, y^2) has ttype 2, exponent 4
    // in n = 2... sigma: m^2 = (x^2, xy, y^2), xy not in I; m^3 contains
    // x^2 y, x y^2 both divisible; check by direct search.
    CHECK(sigma_min(MonomialIdeal(2, {{2, 0}, {0, 2}})) == 3);
}

TEST_CASE("sigma_min never exceeds the Nullstellensatz exponent") {
    auto corpus = tests::generate_corpus({50, 5550123, 4, 6, 8});
    for (const auto& I : corpus) CHECK(sigma_min(I) <= nss_exponent(I));
}

TEST_CASE("sigma_min is antitone in the ideal for a fixed radical") {
    // I <= J with equal radicals forces sigma_min(I) >= sigma_min(J).
    auto corpus = tests::generate_corpus({30, 31337, 3, 4, 5});
    for (const auto& J : corpus) {
        MonomialIdeal I = product(J, radical(J));  // smaller ideal, same radical
        REQUIRE(radical(I) == radical(J));
        REQUIRE(contains(J, I));
        CHECK(sigma_min(I) >= sigma_min(J));
    }
}

TEST_CASE("Briancon-Skoda inclusion closure(I^n) <= I") {
    CHECK(verify_briancon_skoda(MonomialIdeal(2, {{2, 0}, {0, 2}})).holds);
    CHECK(verify_briancon_skoda(MonomialIdeal(2, {{1, 1}})).holds);
    CHECK(verify_briancon_skoda(MonomialIdeal::maximal(2)).holds);
}

TEST_CASE("geometric degree bound ttype <= d^n") {
    GeometricBoundResult a = verify_geometric_bound(MonomialIdeal(2, {{2, 1}, {1, 2}}));
    CHECK(a.holds);
    CHECK(a.max_degree == 3);
    CHECK(a.bound == 9);
    CHECK(a.ttype_value == Rat(3, 2));

    GeometricBoundResult b = verify_geometric_bound(MonomialIdeal(2, {{2, 0}, {0, 3}}));
    CHECK(b.holds);
    CHECK(b.bound == 9);

    // d = 1 is the equality boundary: ttype(m) = 1 = 1^n.
    GeometricBoundResult c = verify_geometric_bound(MonomialIdeal::maximal(2));
    CHECK(c.holds);
    CHECK(c.bound == 1);
    CHECK(c.ttype_value == 1);
}

TEST_CASE("full report bundles the values consistently") {
    NssReport r = nss_report(MonomialIdeal(2, {{2, 1}, {1, 2}}));
    CHECK(r.ttype_value == Rat(3, 2));
    CHECK(r.exponent_n == 3);
    CHECK(r.inclusion_holds);
    CHECK(r.sigma_min == 2);
    CHECK(r.bs_holds);
    CHECK(r.geometric_ok);
    CHECK(r.sigma_min <= r.exponent_n);
}
