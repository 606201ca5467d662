#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "scc/catalog.hpp"
#include "scc/strands.hpp"
#include "scc/surface_io.hpp"

using namespace scc;

namespace {

const Catalog& catalog() {
    static const Catalog cat = build_catalog({}, false);
    return cat;
}

// Same system with vertices, edges and curves' edge lists renumbered.
CurveSystem renumbered(const CurveSystem& s) {
    json j = system_to_json(s);
    std::reverse(j["vertices"].begin(), j["vertices"].end());
    std::reverse(j["edges"].begin(), j["edges"].end());
    for (auto& r : j["regions"]) std::reverse(r["walks"].begin(), r["walks"].end());
    return system_from_json(j);
}

}  // namespace

TEST_CASE("type names") {
    CHECK(parse_type("III") == PairType::III);
    CHECK(type_name(PairType::IV) == "IV");
    CHECK_THROWS_AS(parse_type("V"), Error);
}

TEST_CASE("pair classification") {
    CHECK(classify_pair(fixtures::bounding_pair(1, 1), 0, 1) == PairType::I);
    CHECK(classify_pair(fixtures::crossing_once(), 0, 1) == PairType::None);
    // homotopic curves are not a pair of any type
    CHECK(classify_pair(fixtures::bounding_pair(0, 2), 0, 1) == PairType::None);
    CHECK(classify_pair(fixtures::separating_curve(1, 1), 0, 0) == PairType::None);
}

TEST_CASE("pair invariants of catalog entries") {
    for (const auto& e : catalog().entries) {
        CAPTURE(type_name(e.type));
        CAPTURE(e.index);
        const CurveSystem& s = e.sys;
        CHECK(classify_pair(s, 0, 1) == e.type);
        CHECK(classify_pair(s, 1, 2) == e.type);
        for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}}) {
            CHECK(detect_bigons(s, a, b).empty());
            CHECK(mod2_class_equal(s, {a}, {b}));
        }
        CHECK(complement_components(s, {}).size() == 1);
        switch (e.type) {
            case PairType::I:
                CHECK(geometric_intersection(s, 0, 1) == 0);
                CHECK(ambient_genus(s) >= 3);
                break;
            case PairType::II:
                CHECK(geometric_intersection(s, 0, 1) == 2);
                CHECK(algebraic_intersection(s, 0, 1) == 0);
                CHECK(complement_components(s, {0, 1}).size() == 3);
                break;
            case PairType::III:
                CHECK(algebraic_intersection(s, 0, 1) == 0);
                CHECK(complement_components(s, {0, 1}).size() == 2);
                break;
            case PairType::IV:
                CHECK(geometric_intersection(s, 0, 1) == 2);
                CHECK(algebraic_intersection(s, 0, 1) == 2);
                break;
            default: FAIL("unexpected type");
        }
        for (int c = 0; c < 3; ++c) CHECK_FALSE(is_separating(s, c));
    }
}

TEST_CASE("cutting catalog pairs") {
    for (const auto& e : catalog().entries) {
        if (e.type == PairType::I) {
            CutSurface cut = cut_along(e.sys, 1);
            CHECK(cut.arcs.empty());
            auto lab = component_labels(cut.sys, {0});
            // gamma separates the two copies of delta
            CHECK(lab[cut.cap1] != lab[cut.cap2]);
        }
        if (e.type == PairType::II) {
            CutSurface cut = cut_along(e.sys, 1);
            int arcs = 0;
            for (const auto& a : cut.arcs)
                if (a.curve == 0) {
                    ++arcs;
                    CHECK(a.start_copy == a.end_copy);
                }
            CHECK(arcs == 2);
        }
        for (int c = 0; c < 3; ++c) CHECK(isomorphic(reglue(cut_along(e.sys, c)), e.sys));
    }
}

TEST_CASE("template counts") {
    CHECK(enumerate_templates(PairType::III).size() == 7);
    CHECK(enumerate_templates(PairType::IV).size() == 3);
    // reference count; README lists the emitted one
    CHECK(enumerate_templates(PairType::II).size() == 4);
}

TEST_CASE("templates are ambient triples of their type") {
    for (PairType t : {PairType::II, PairType::III, PairType::IV}) {
        TemplateStats stats;
        auto ts = enumerate_templates(t, {}, &stats);
        CHECK(stats.candidates >= static_cast<long>(ts.size()));
        for (const auto& tp : ts) {
            CHECK(tp.type == t);
            CHECK(ambient_genus(tp.sys) == (t == PairType::III ? 2 : 1));
            CHECK(tp.sys.num_curves() == 3);
            CHECK(mod2_class_equal(tp.sys, {0}, {2}));
            CHECK(algebraic_intersection(tp.sys, 0, 1) == (t == PairType::IV ? 2 : 0));
            CHECK_FALSE(is_separating(tp.sys, 2));
        }
    }
}

TEST_CASE("handle inside a bigon removes it") {
    const CurveSystem s = enumerate_templates(PairType::IV)[1].sys;
    auto bigons = detect_bigons(s, 0, 2);
    REQUIRE(bigons.size() == 2);
    CurveSystem h = add_handle(s, bigons[0][0], bigons[0][0]);
    CHECK(detect_bigons(h, 0, 2).size() == 1);
    CHECK(ambient_genus(h) == ambient_genus(s) + 1);
}

TEST_CASE("entries are their template plus recorded handles") {
    for (PairType t : {PairType::II, PairType::III, PairType::IV}) {
        auto ts = enumerate_templates(t);
        for (const auto& e : catalog().entries) {
            if (e.type != t) continue;
            CAPTURE(e.index);
            // several templates can share a standard number
            bool found = false;
            for (const auto& x : ts)
                if (x.number == e.template_number && isomorphic(apply_handles(x.sys, e.handles), e.sys)) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("minimal configuration counts") {
    const Catalog& cat = catalog();
    CHECK(cat.count(PairType::I) == 2);
    CHECK(cat.count(PairType::II) == 10);
    CHECK(cat.count(PairType::III) == 16);
    CHECK(cat.count(PairType::IV) == 8);
    CHECK(cat.entries.size() == 36);
}

TEST_CASE("entries are minimal and pairwise distinct") {
    const auto& es = catalog().entries;
    for (size_t i = 0; i < es.size(); ++i) {
        CHECK(is_minimal_configuration(es[i].sys, es[i].type));
        CHECK(classify_triple(es[i].sys, 0, 1, 2) == es[i].type);
        for (size_t j = i + 1; j < es.size(); ++j) {
            if (es[i].type != es[j].type) continue;
            CHECK_FALSE(isomorphic(es[i].sys, es[j].sys));
            CHECK_FALSE(is_stabilization_of(es[i].sys, es[j].sys));
            CHECK_FALSE(is_stabilization_of(es[j].sys, es[i].sys));
        }
    }
}

TEST_CASE("isomorphism and dart renumbering") {
    const CurveSystem& a = catalog().at(PairType::II, 1).sys;
    const CurveSystem& b = catalog().at(PairType::II, 2).sys;
    CurveSystem r = renumbered(a);
    CHECK(isomorphic(a, r));
    CHECK(canonical_form(a) == canonical_form(r));
    CHECK_FALSE(isomorphic(a, b));
    CHECK(is_stabilization_of(a, a));
    CHECK(is_stabilization_of(stabilize(a, 0), a));
    CHECK_FALSE(is_stabilization_of(a, stabilize(a, 0)));
}

TEST_CASE("rotated labels") {
    int rejected = 0;
    for (const auto& e : catalog().entries) {
        PairType p = classify_pair(e.sys, 2, 0);
        PairType rot = classify_triple(e.sys, 2, 0, 1);
        if (p != e.type) {
            CHECK(rot == PairType::None);
            ++rejected;
        }
    }
    CHECK(rejected > 0);
    CurveSystem x = fixtures::crossing_once();
    auto [q, c] = insert_parallel_copy(x, 0, "p");
    CHECK(classify_triple(q, 0, 1, c) == PairType::None);
}

TEST_CASE("boundary pushoffs of a type-II union") {
    for (const auto& e : catalog().entries) {
        if (e.type != PairType::II) continue;
        int separating = 0;
        auto walks = neighborhood_walks(e.sys, {0, 1});
        for (size_t w = 0; w < walks.size(); ++w) {
            auto [q, d] = insert_neighborhood_pushoff(e.sys, {0, 1}, static_cast<int>(w), "d");
            CHECK(geometric_intersection(q, 0, d) == 0);
            CHECK(geometric_intersection(q, 1, d) == 0);
            separating += is_separating(q, d);
        }
        CHECK(separating >= 1);
    }
}

TEST_CASE("left-turn curves of a type-IV pair are disjoint up to homotopy") {
    for (const auto& e : catalog().entries) {
        if (e.type != PairType::IV) continue;
        CurveSystem q = e.sys;
        std::vector<int> ks;
        std::pair<int, int> last{-1, -1};
        for (const auto& c : turn_curves(e.sys, 0, 1)) {
            if (!c.left_turn || c.choice.smooth || c.key == last) continue;
            last = c.key;
            auto [r, k] = insert_turn_curve(q, 0, 1, c.choice, "t" + std::to_string(ks.size()));
            q = r;
            ks.push_back(k);
        }
        REQUIRE(ks.size() == 2);
        CHECK(algebraic_intersection(q, ks[0], ks[1]) == 0);
        // every crossing between them lies on a bigon
        if (geometric_intersection(q, ks[0], ks[1]) > 0) CHECK_FALSE(detect_bigons(q, ks[0], ks[1]).empty());
    }
}

TEST_CASE("catalog lookup") {
    const Catalog& cat = catalog();
    std::mt19937_64 rng(5);
    for (const auto& e : cat.entries) {
        Match m = match_catalog(cat, e.sys, 0, 1, 2);
        CHECK(m.entry == &e);
        // a stabilization may sit above several minimal entries
        CurveSystem s = random_stabilization(e.sys, rng, 1);
        Match ms = match_catalog(cat, s, 0, 1, 2);
        CHECK(ms.entry->type == e.type);
        CHECK(is_stabilization_of(s, ms.entry->sys));
    }
    // a type-III triple deep in genus 9
    const auto& iii = cat.at(PairType::III, 5);
    CurveSystem big = iii.sys;
    while (ambient_genus(big) < 9) big = random_stabilization(big, rng, 1);
    CHECK(is_stabilization_of(big, match_catalog(cat, big, 0, 1, 2).entry->sys));
    CHECK_THROWS_AS(match_catalog(cat, fixtures::bounding_pair(1, 1), 0, 1, 1), Error);
}

TEST_CASE("brute force agrees with the template route for type IV") {
    auto brute = brute_force_minimal(PairType::IV);
    CHECK(static_cast<int>(brute.size()) == catalog().count(PairType::IV));
    for (const auto& s : brute) {
        bool found = false;
        for (const auto& e : catalog().entries)
            if (e.type == PairType::IV && isomorphic(e.sys, s)) found = true;
        CHECK(found);
    }
}
