#include <catch2/catch.hpp>

#include "aglab/census.hpp"
#include "aglab/inflation.hpp"
#include "aglab/morphisms.hpp"
#include "helpers.hpp"

using namespace aglab;
using testutil::load_fixture;
using testutil::mod_add;
using testutil::mod_sub;

TEST_CASE("theorem 10 on the inflated semilattice", "[inflation]") {
    const Theorem10Result r = theorem10_check(load_fixture("infl3.tbl"));
    REQUIRE(r.medial);
    REQUIRE(r.s2_good);
    REQUIRE(r.witness.has_value());
    REQUIRE(r.witness->base_elements == ElementSet(3, {0, 1}));
    REQUIRE(r.witness->retraction == std::vector<int>{0, 1, 1});  // r(p) = (1*1)*p = 1
    REQUIRE(r.witness->fibers.at(0) == ElementSet(3, {0}));
    REQUIRE(r.witness->fibers.at(1) == ElementSet(3, {1, 2}));
}

TEST_CASE("theorem 10 on a groupoid that is already completely inverse", "[inflation]") {
    const Theorem10Result r = theorem10_check(mod_sub(5));
    REQUIRE(r.witness.has_value());
    for (int x = 0; x < 5; ++x) {
        REQUIRE(r.witness->retraction[x] == x);  // identity retraction, singleton fibers
    }
}

TEST_CASE("theorem 10 negative verdicts", "[inflation]") {
    const Theorem10Result lz2 = theorem10_check(load_fixture("lz2.tbl"));
    REQUIRE(lz2.medial);
    REQUIRE(!lz2.s2_good);  // S^2 is the left-zero groupoid again, which is not AG
    REQUIRE(!lz2.witness.has_value());

    const Theorem10Result rz3 = theorem10_check(testutil::right_zero(3));
    REQUIRE(rz3.medial);
    REQUIRE(!rz3.s2_good);
    REQUIRE(!rz3.witness.has_value());
}

TEST_CASE("inflate", "[inflation]") {
    REQUIRE(inflate(load_fixture("sl2.tbl"), {1, 2}) == load_fixture("infl3.tbl"));

    for (const char* name : {"ex2.tbl", "sl2.tbl", "lz2.tbl"}) {
        const FiniteGroupoid g = load_fixture(name);
        REQUIRE(inflate(g, std::vector<int>(g.order(), 1)) == g);
    }

    const FiniteGroupoid inflated = inflate(mod_add(3), {2, 1, 1});
    REQUIRE(inflated.order() == 4);
    const Theorem10Result r = theorem10_check(inflated);
    REQUIRE(r.witness.has_value());
    REQUIRE(square_subgroupoid(inflated).induced == mod_add(3));

    REQUIRE_THROWS_AS(inflate(mod_add(5), {4, 4, 4, 4, 4}), SizeError);
    REQUIRE_THROWS_AS(inflate(mod_add(3), {1, 0, 1}), InputError);
    REQUIRE_THROWS_AS(inflate(mod_add(3), {1, 1}), InputError);
}

TEST_CASE("direct inflation checks", "[inflation]") {
    const FiniteGroupoid infl3 = load_fixture("infl3.tbl");
    const std::optional<InflationWitness> good = is_inflation_of(infl3, ElementSet(3, {0, 1}));
    REQUIRE(good.has_value());
    REQUIRE(good->retraction == std::vector<int>{0, 1, 1});

    // {0, p} is not even closed: p*p = 1.
    REQUIRE(!is_inflation_of(infl3, ElementSet(3, {0, 2})).has_value());

    // The whole carrier always works, with singleton fibers.
    const std::optional<InflationWitness> full = is_inflation_of(infl3, ElementSet::full(3));
    REQUIRE(full.has_value());
    for (const auto& [u, fiber] : full->fibers) {
        REQUIRE(fiber == ElementSet(3, {u}));
    }
}

TEST_CASE("retraction is a homomorphism onto the base", "[inflation][property]") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int base_order = 1 + static_cast<int>(rng() % 3);
        const CensusResult census =
            enumerate_class(base_order, CensusClass::completely_inverse_agss);
        const FiniteGroupoid base =
            census.canonical_tables[rng() % census.canonical_tables.size()];
        std::vector<int> sizes(base.order(), 1);
        for (int extra = static_cast<int>(rng() % 4); extra > 0; --extra) {
            ++sizes[rng() % sizes.size()];
        }
        const FiniteGroupoid g = inflate(base, sizes);
        const Theorem10Result r = theorem10_check(g);
        REQUIRE(r.witness.has_value());
        const std::vector<int>& retraction = r.witness->retraction;
        for (int x = 0; x < g.order(); ++x) {
            for (int y = 0; y < g.order(); ++y) {
                REQUIRE(retraction[g.at(x, y)] == g.at(retraction[x], retraction[y]));
            }
        }
        // Deflation recovers a base isomorphic to the one inflated.
        REQUIRE(are_isomorphic(square_subgroupoid(g).induced, base).has_value());
    }
}

TEST_CASE("proof identity ab = (a^2 b^2)(ab)^-1", "[inflation][property]") {
    std::vector<FiniteGroupoid> subjects;
    for (const char* name :
         {"ex2.tbl", "sub5.tbl", "add5.tbl", "add4.tbl", "add3.tbl", "add2.tbl", "sl2.tbl"}) {
        subjects.push_back(load_fixture(name));
    }
    for (int n = 1; n <= 4; ++n) {
        for (const FiniteGroupoid& g :
             enumerate_class(n, CensusClass::completely_inverse_agss).canonical_tables) {
            subjects.push_back(g);
        }
    }
    for (const FiniteGroupoid& g : subjects) {
        REQUIRE(is_completely_inverse_agss(g));
        const std::vector<int> inv = *inverse_data(g).inverse_map;
        for (int a = 0; a < g.order(); ++a) {
            for (int b = 0; b < g.order(); ++b) {
                const int ab = g.at(a, b);
                const int squares = g.at(g.at(a, a), g.at(b, b));
                REQUIRE(ab == g.at(squares, inv[ab]));
            }
        }
    }
}
