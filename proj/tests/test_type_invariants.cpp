#include <catch2/catch_amalgamated.hpp>

#include "montype/nss.hpp"
#include "montype/oracle.hpp"
#include "montype/type_invariants.hpp"
#include "support/corpus.hpp"

using namespace montype;

namespace {
std::vector<Int> weights(std::vector<int> w) {
    std::vector<Int> out;
    for (int x : w) out.push_back(Int(x));
    return out;
}
}  // namespace

TEST_CASE("T on m-primary ideals") {
    CHECK(type_m_primary(MonomialIdeal::maximal(2)).value == 1);

    TypeReport r = type_m_primary(MonomialIdeal(2, {{2, 0}, {0, 3}}));
    CHECK(r.value == 3);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].weight.primitive() == weights({3, 2}));
    CHECK(r.witnesses[0].r == 6);
    CHECK(r.witnesses[0].m == 2);

    TypeReport s = type_m_primary(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(s.value == 2);
    REQUIRE_FALSE(s.witnesses.empty());
    CHECK(s.witnesses[0].weight.primitive() == weights({1, 1}));
}

TEST_CASE("T values are confirmed by brute-force weight enumeration") {
    for (const auto& I : {MonomialIdeal(2, {{2, 0}, {0, 3}}),
                          MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}),
                          MonomialIdeal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}})}) {
        TypeReport r = type_m_primary(I);
        auto brute = brute_type(I, MonomialIdeal::maximal(I.ambient_dim()), 12);
        CHECK(r.value == brute.value);
    }
}

TEST_CASE("type rejects non-m-primary input and points to ttype") {
    try {
        type_m_primary(MonomialIdeal(2, {{2, 1}, {1, 2}}));
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("ttype") != std::string::npos);
    }
}

TEST_CASE("ttype on the worked examples") {
    TypeReport a = ttype(MonomialIdeal(2, {{2, 1}, {1, 2}}));
    CHECK(a.value == Rat(3, 2));
    REQUIRE(a.witnesses.size() == 1);
    CHECK(a.witnesses[0].weight.primitive() == weights({1, 1}));
    CHECK(a.witnesses[0].r == 3);
    CHECK(a.witnesses[0].m == 2);
    CHECK(a.witnesses[0].center_dim == 0);

    TypeReport b = ttype(MonomialIdeal(2, {{2, 0}, {1, 1}}));
    CHECK(b.value == 2);
    REQUIRE_FALSE(b.witnesses.empty());
    CHECK(b.witnesses[0].weight.primitive() == weights({1, 1}));
    CHECK(b.witnesses[0].r == 2);
    CHECK(b.witnesses[0].m == 1);

    CHECK(ttype(MonomialIdeal::maximal(2)).value == 1);
}

TEST_CASE("ttype equals T on m-primary ideals") {
    for (const auto& I : {MonomialIdeal(2, {{2, 0}, {0, 3}}), MonomialIdeal(2, {{3, 0}, {1, 1}, {0, 2}}),
                          MonomialIdeal(3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})}) {
        CHECK(ttype(I).value == type_m_primary(I).value);
    }
}

TEST_CASE("ttype of squarefree ideals is 1") {
    CHECK(ttype(MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}})).value == 1);
    CHECK(ttype(MonomialIdeal(2, {{1, 1}})).value == 1);
}

TEST_CASE("ttype >= 1 and witness ratios attain the value") {
    auto cfg = tests::load_test_config();
    auto corpus = tests::generate_corpus({60, cfg.corpus.seed + 17, 4, 6, 8});
    for (const auto& I : corpus) {
        TypeReport r = ttype(I);
        CHECK(r.value >= 1);
        REQUIRE_FALSE(r.witnesses.empty());
        int dz = dim_zero_locus(I);
        for (const auto& w : r.witnesses) {
            CHECK(w.ratio == r.value);
            CHECK(w.ratio * w.m == w.r);
            CHECK(w.m > 0);
            CHECK(w.center_dim >= 0);
            CHECK(w.center_dim <= dz);
        }
    }
}

TEST_CASE("scaling a weight leaves the ratio unchanged") {
    MonomialIdeal I(2, {{2, 1}, {1, 2}});
    MonomialIdeal rad = radical(I);
    SplitMix64 rng(515);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rat> w{Rat(Int(1 + rng.below(8)), Int(1 + rng.below(3))),
                           Rat(Int(rng.below(8)), Int(1 + rng.below(3)))};
        Rat lambda(Int(1 + rng.below(9)), Int(1 + rng.below(5)));
        std::vector<Rat> scaled{lambda * w[0], lambda * w[1]};
        Rat m = support_value(w, rad);
        if (m == 0) continue;
        CHECK(support_value(w, I) / m ==
              support_value(scaled, I) / support_value(scaled, rad));
    }
}

TEST_CASE("ttype only depends on the integral closure") {
    auto corpus = tests::generate_corpus({40, 112358, 4, 6, 8});
    for (const auto& I : corpus)
        CHECK(ttype(I).value == ttype(closure_generators(I, 1)).value);
}

TEST_CASE("brute-force enumeration certifies ttype on a corpus") {
    auto cfg = tests::load_test_config();
    auto corpus = tests::generate_corpus({40, cfg.corpus.seed + 23, 4, 6, 8});
    for (const auto& I : corpus) {
        TypeReport r = ttype(I);
        auto brute = brute_type(I, radical(I), cfg.oracle.weight_bound);
        CHECK(brute.value <= r.value);
        Int max_entry = 0;
        for (const auto& w : r.witnesses)
            for (const Int& e : w.weight.primitive()) max_entry = std::max(max_entry, e);
        if (max_entry <= cfg.oracle.weight_bound) CHECK(brute.value == r.value);
    }
}

TEST_CASE("boundary type doubles T") {
    CHECK(boundary_type(MonomialIdeal::maximal(2)) == 2);
    CHECK(boundary_type(MonomialIdeal(2, {{2, 0}, {0, 3}})) == 6);
    CHECK(boundary_type(MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}})) == 4);
}

TEST_CASE("witness curves reproduce (r, m) under jet evaluation") {
    struct Case {
        MonomialIdeal ideal;
        bool primary;
        int r;
        int m;
    };
    std::vector<Case> cases = {
        {MonomialIdeal(2, {{2, 1}, {1, 2}}), false, 3, 2},
        {MonomialIdeal(2, {{2, 0}, {0, 3}}), true, 6, 2},
        {MonomialIdeal(2, {{2, 0}, {1, 1}}), false, 2, 1},
    };
    for (const auto& c : cases) {
        TypeReport report = c.primary ? type_m_primary(c.ideal) : ttype(c.ideal);
        auto arcs = witness_curves(report, 12345);
        REQUIRE(arcs.size() == report.witnesses.size());
        auto num_gens = PolynomialIdeal::from_monomial(c.ideal).generators();
        auto den_gens = PolynomialIdeal::from_monomial(report.denominator_ideal).generators();
        CHECK(ideal_pullback_order(arcs[0], num_gens) == OrderResult::exactly(c.r));
        CHECK(ideal_pullback_order(arcs[0], den_gens) == OrderResult::exactly(c.m));
    }
}

TEST_CASE("witness curves on a corpus, including arcs centered off the origin") {
    auto corpus = tests::generate_corpus({30, 424243, 4, 6, 8});
    for (const auto& I : corpus) {
        TypeReport report = ttype(I);
        auto arcs = witness_curves(report, 999);
        REQUIRE(arcs.size() == report.witnesses.size());
        auto num_gens = PolynomialIdeal::from_monomial(I).generators();
        auto den_gens = PolynomialIdeal::from_monomial(report.denominator_ideal).generators();
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const Witness& w = report.witnesses[i];
            CHECK(ideal_pullback_order(arcs[i], num_gens) ==
                  OrderResult::exactly(static_cast<int>(numerator(w.r))));
            CHECK(ideal_pullback_order(arcs[i], den_gens) ==
                  OrderResult::exactly(static_cast<int>(numerator(w.m))));
            CHECK(arcs[i].centered_off_origin() == (w.center_dim > 0));
        }
    }
}

TEST_CASE("asymptotic inclusion: radical^ceil(k ttype) lands in the closure of I^k") {
    auto corpus = tests::generate_corpus({12, 777, 3, 5, 6});
    for (const auto& I : corpus) {
        Rat tval = ttype(I).value;
        MonomialIdeal rad = radical(I);
        NewtonPolyhedron np(I);
        for (int k = 1; k <= 4; ++k) {
            Int e = ceil_rat(Rat(k) * tval);
            MonomialIdeal raised = power(rad, static_cast<int>(e));
            for (const auto& u : raised.generators()) CHECK(np.contains_scaled(u, k));
        }
        // Minimality: any t' < ttype with the same denominator fails for
        // some k <= 2q; k = q is the guaranteed witness scale.
        if (tval > 1) {
            Int q = denominator(tval);
            Rat tprime = tval - Rat(1, q);
            bool failed = false;
            for (Int k = 1; k <= 2 * q && !failed; ++k) {
                Int e = ceil_rat(Rat(k) * tprime);
                if (e < 1) continue;
                MonomialIdeal raised = power(rad, static_cast<int>(e));
                for (const auto& u : raised.generators())
                    if (!np.contains_scaled(u, static_cast<int>(k))) failed = true;
            }
            CHECK(failed);
        }
    }
}

TEST_CASE("weight vector validation") {
    CHECK_THROWS_AS(WeightVector(std::vector<Rat>{Rat(0), Rat(0)}), PreconditionError);
    CHECK_THROWS_AS(WeightVector(std::vector<Rat>{Rat(-1), Rat(2)}), PreconditionError);
    WeightVector w(std::vector<Rat>{Rat(3, 2), Rat(1)});
    CHECK(w.primitive() == weights({3, 2}));
    CHECK(w.positive_count() == 2);
}

TEST_CASE("type operations reject zero and unit ideals") {
    CHECK_THROWS_AS(ttype(MonomialIdeal::zero(2)), PreconditionError);
    CHECK_THROWS_AS(ttype(MonomialIdeal(2, {{0, 0}})), PreconditionError);
    CHECK_THROWS_AS(type_m_primary(MonomialIdeal::zero(2)), PreconditionError);
}
