#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "scc/canonical.hpp"
#include "scc/polygon.hpp"
#include "scc/strands.hpp"
#include "scc/util.hpp"

using namespace scc;

namespace {

// Corner orbits computed directly: gluing side i to side j reversed sends
// corner i to corner j+1 and corner i+1 to corner j.
int orbit_count(const std::vector<int>& pairing) {
    const int n = static_cast<int>(pairing.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
        uf.unite(i, (pairing[i] + 1) % n);
        uf.unite((i + 1) % n, pairing[i]);
    }
    int k;
    uf.labels(&k);
    return k;
}

int genus_oracle(const std::vector<int>& pairing) {
    const int n = static_cast<int>(pairing.size());
    return (2 - (orbit_count(pairing) - n / 2 + 1)) / 2;
}

PolygonSurface random_pairing(std::mt19937_64& rng, int n) {
    std::vector<int> sides(n);
    std::iota(sides.begin(), sides.end(), 0);
    std::shuffle(sides.begin(), sides.end(), rng);
    PolygonSurface p;
    p.n = n;
    p.pairing.assign(n, -1);
    for (int i = 0; i < n; i += 2) {
        p.pairing[sides[i]] = sides[i + 1];
        p.pairing[sides[i + 1]] = sides[i];
    }
    return p;
}

}  // namespace

TEST_CASE("genus of opposite pairings") {
    CHECK(quotient_genus(opposite_pairing(4)) == 1);
    CHECK(quotient_genus(opposite_pairing(8)) == 2);
    CHECK(quotient_genus(opposite_pairing(10)) == 2);
    CHECK(quotient_genus(opposite_pairing(2)) == 0);
    for (int n = 2; n <= 20; n += 2) CHECK(quotient_genus(opposite_pairing(n)) == genus_oracle(opposite_pairing(n).pairing));
}

TEST_CASE("genus agrees with the chord system") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        PolygonSurface p = random_pairing(rng, 2 + 2 * static_cast<int>(rng() % 6));
        CHECK(corner_orbits(p) == orbit_count(p.pairing));
        CHECK(quotient_genus(p) == genus_oracle(p.pairing));
        ChordSystem cs = chord_system(p, {0});
        CHECK(ambient_genus(cs.sys) == quotient_genus(p));
    }
}

TEST_CASE("pairing parser") {
    PolygonSurface p = parse_pairing(6, "0-3,1-4,2-5");
    CHECK(p.pairing == opposite_pairing(6).pairing);
    CHECK(parse_pairing(6, "opposite").pairing == p.pairing);
    CHECK_THROWS_AS(parse_pairing(6, "0-3,1-4"), Error);
    CHECK_THROWS_AS(parse_pairing(6, "0-3,1-3,2-5"), Error);
    CHECK_THROWS_AS(parse_pairing(6, "0:3,1-4,2-5"), Error);
    CHECK_THROWS_AS(parse_pairing(5, "opposite"), Error);
    try {
        parse_pairing(4, "0~2,1-3");
        FAIL("accepted a non-orientable gluing");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("non-orientable") != std::string::npos);
    }
}

TEST_CASE("rotation orders") {
    PolygonSurface deca = opposite_pairing(10);
    CHECK(rotation_order(deca, 1) == 10);
    CHECK(rotation_order(deca, 5) == 2);
    CHECK(rotation_order(opposite_pairing(8), 2) == 4);
    PolygonSurface adj = parse_pairing(4, "0-1,2-3");
    CHECK_FALSE(is_equivariant(adj, 1));
    CHECK(is_equivariant(adj, 2));
    CHECK_THROWS_AS(rotation_order(adj, 1), Error);
}

TEST_CASE("equivariant rotations are homeomorphisms of the chord system") {
    std::mt19937_64 rng(17);
    IsoPolicy any;
    for (int t = 0; t < 300; ++t) {
        PolygonSurface p = random_pairing(rng, 2 + 2 * static_cast<int>(rng() % 5));
        for (int k = 1; k < p.n; ++k) {
            bool eq = true;
            for (int i = 0; i < p.n; ++i) eq &= p.pairing[(i + k) % p.n] == (p.pairing[i] + k) % p.n;
            CHECK(is_equivariant(p, k) == eq);
            if (!eq) continue;
            CurveSystem a = chord_system(p, {0}).sys;
            CurveSystem b = chord_system(p, {k}).sys;
            CHECK(isomorphic(a, b, any));
        }
    }
}

TEST_CASE("segment crossings") {
    PolygonSurface deca = opposite_pairing(10);
    CHECK(segment_intersection(deca, 0, 1) == 1);
    PolygonSurface adj = parse_pairing(10, "0-1,2-3,4-5,6-7,8-9");
    CHECK(segment_intersection(adj, 0, 2) == 0);
    CHECK_THROWS_AS(segment_intersection(deca, 0, 5), Error);
    CHECK_THROWS_AS(segment_intersection(deca, 0, 0), Error);
    ChordSystem cs = chord_system(deca, {0, 1});
    CHECK(geometric_intersection(cs.sys, 0, 1) == 1);
}

TEST_CASE("midpoint curve kinds") {
    for (int s = 0; s < 10; ++s) CHECK(midpoint_curve_properties(opposite_pairing(10), s) == CurveKind::Nonseparating);
    CHECK(midpoint_curve_properties(opposite_pairing(4), 0) == CurveKind::Nonseparating);
    PolygonSurface adj = parse_pairing(4, "0-1,2-3");
    CHECK(midpoint_curve_properties(adj, 0) == CurveKind::Trivial);
    CHECK(curve_kind_name(CurveKind::Separating) == "separating");
}

TEST_CASE("triple region test") {
    // three disjoint homologous curves cutting the surface into three pieces
    CurveSystem h = fixtures::build(fixtures::disjoint({"a", "b", "c"}),
                                    [](int s) {
                                        int e = side_edge(s);
                                        return side_is_right(s) ? e : (e + 2) % 3;
                                    },
                                    {1, 1, 1});
    REQUIRE(ambient_genus(h) == 4);
    REQUIRE(mod2_class_equal(h, {0}, {1}));
    CHECK_FALSE(triple_region_test(h, 0, 1, 2));
    // three disjoint curves on one genus-0 region: every region borders all three
    CurveSystem one = fixtures::build(fixtures::disjoint({"a", "b", "c"}), [](int) { return 0; }, {0});
    CHECK(triple_region_test(one, 0, 1, 2));
    CurveSystem x = fixtures::crossing_once();
    auto [q, c] = insert_parallel_copy(x, 0, "p");
    CHECK_THROWS_AS(triple_region_test(q, 0, 1, c), Error);
}

TEST_CASE("center region borders the rotated curves") {
    for (int n : {8, 10, 12, 14}) {
        PolygonSurface p = opposite_pairing(n);
        for (int k = 1; k < n; ++k) {
            if (!is_equivariant(p, k) || rotation_order(p, k) <= 2) continue;
            std::vector<int> sides = {0, k % n, (2 * k) % n};
            bool disjoint = true;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (p.pairing[sides[i]] == sides[j] || segment_intersection(p, sides[i], sides[j])) disjoint = false;
            if (!disjoint) continue;
            CHECK(triple_region_test(p, k, 0));
        }
    }
}

TEST_CASE("case 3 verdicts") {
    PolygonVerdict d = periodic_case3_verdict(opposite_pairing(10), 1);
    CHECK(d.verdict.positive());
    CHECK(d.certificate);
    CHECK(d.genus == 2);
    CHECK(d.order == 10);
    CHECK(periodic_case3_verdict(opposite_pairing(8), 1).verdict.positive());
    PolygonVerdict s = periodic_case3_verdict(parse_pairing(6, "0-1,2-3,4-5"), 2);
    CHECK(s.genus == 0);
    CHECK(s.verdict.conclusion == Conclusion::TrivialGroup);
    CHECK_THROWS_AS(periodic_case3_verdict(opposite_pairing(10), 5), Error);
}

TEST_CASE("case 3 sweep over opposite pairings") {
    PolygonSweep par = case3_sweep(14, true);
    CHECK(par.instances > 0);
    CHECK(par.positive == par.instances);
    CHECK(par.failures.empty());
    CHECK(par == case3_sweep(14, false));
}

TEST_CASE("case 3 sweep over every pairing") {
    PolygonSweep s = case3_sweep(12, true, true);
    CHECK(s.failures.empty());
    CHECK(s.positive + s.trivial == s.instances);
    CHECK(s == case3_sweep(12, false, true));
}

TEST_CASE("segment formula matches the combinatorial count") {
    PolygonSweep s = intersection_sweep(12, true);
    CHECK(s.instances > 100000);
    CHECK(s.failures.empty());
    CHECK(intersection_sweep(8, true) == intersection_sweep(8, false));
}

TEST_CASE("pairing enumeration") {
    long count = 0;
    for_each_pairing(8, [&](const std::vector<int>&) { ++count; });
    CHECK(count == 105);  // 7!!
}
