#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "scc/catalog.hpp"
#include "scc/homology.hpp"

using namespace scc;

namespace {

bool zero(const std::vector<int>& v) {
    for (int x : v)
        if (x) return false;
    return true;
}

// Compares the cell-complex oracle with the coloring test on every subset
// pair of singletons and on sums of two curves.
void agree(const CurveSystem& s) {
    HomologyOracle h = homology_oracle_gf2(s);
    REQUIRE(h.rank == 2 * ambient_genus(s));
    const int C = s.num_curves();
    for (int a = 0; a < C; ++a) {
        CHECK(zero(h.class_of({a})) == is_separating(s, a));
        CHECK(zero(h.class_of({a})) == mod2_class_equal(s, {a}, {}));
        for (int b = a + 1; b < C; ++b) {
            CHECK((h.class_of({a}) == h.class_of({b})) == mod2_class_equal(s, {a}, {b}));
            CHECK(zero(h.class_of({a, b})) == mod2_class_equal(s, {a, b}, {}));
        }
    }
}

}  // namespace

TEST_CASE("bit vectors") {
    BitVec v(130);
    CHECK_FALSE(v.any());
    CHECK(v.lowest() == -1);
    v.set(129);
    v.set(3);
    CHECK(v.lowest() == 3);
    CHECK(v.bits() == std::vector<int>{3, 129});
    BitVec w(130);
    w.set(3);
    v ^= w;
    CHECK(v.bits() == std::vector<int>{129});
}

TEST_CASE("echelon rank") {
    Echelon e(3, 1);
    auto row = [](std::vector<int> bits) {
        BitVec v(3);
        for (int b : bits) v.set(b);
        return v;
    };
    BitVec tag(1);
    CHECK(e.insert(row({0, 1}), tag));
    CHECK(e.insert(row({1, 2}), tag));
    CHECK_FALSE(e.insert(row({0, 2}), tag));
    CHECK(e.rank() == 2);
}

TEST_CASE("small surfaces") {
    CHECK(homology_oracle_gf2(fixtures::torus_one_curve()).rank == 2);
    CHECK(homology_oracle_gf2(fixtures::separating_curve(0, 1)).rank == 2);
    CHECK(homology_oracle_gf2(fixtures::bounding_pair(2, 1)).rank == 8);
    agree(fixtures::torus_one_curve(2));
    agree(fixtures::separating_curve(1, 1));
    agree(fixtures::crossing_once());
    agree(fixtures::bounding_pair(1, 1));
}

TEST_CASE("oracle agrees on every catalog entry") {
    Catalog cat = build_catalog({}, false);
    REQUIRE(!cat.entries.empty());
    for (const auto& e : cat.entries) {
        CAPTURE(type_name(e.type));
        CAPTURE(e.index);
        agree(e.sys);
        // the triple is mod-2 homologous by construction
        HomologyOracle h = homology_oracle_gf2(e.sys);
        CHECK(h.class_of({0}) == h.class_of({1}));
        CHECK(h.class_of({1}) == h.class_of({2}));
    }
}

TEST_CASE("oracle agrees on random systems") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 1000; ++k) agree(random_system(rng, 12));
}
