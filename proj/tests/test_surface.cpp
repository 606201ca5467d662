#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "scc/canonical.hpp"
#include "scc/catalog.hpp"
#include "scc/surface_io.hpp"

using namespace scc;

namespace {

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("one curve on a torus") {
    CurveSystem t = fixtures::torus_one_curve();
    CHECK_NOTHROW(validate(t));
    CHECK(t.num_vertices() == 1);
    CHECK(t.num_edges() == 1);
    CHECK(t.regions[0].walks.size() == 2);
    CHECK(euler_characteristic(t) == 0);
    CHECK(ambient_genus(t) == 1);
    CHECK_FALSE(is_separating(t, 0));
}

TEST_CASE("a genus-1 region with two walks gives genus 2") {
    CurveSystem t = fixtures::torus_one_curve(1);
    CHECK(ambient_genus(t) == 2);
    CHECK_FALSE(is_separating(t, 0));
}

TEST_CASE("separating curve") {
    CurveSystem s = fixtures::separating_curve(1, 2);
    CHECK(ambient_genus(s) == 3);
    CHECK(is_separating(s, 0));
    CHECK(complement_components(s, {0}).size() == 2);
    CHECK(mod2_class_equal(s, {0}, {}));
}

TEST_CASE("curves crossing once") {
    CurveSystem x = fixtures::crossing_once();
    CHECK(ambient_genus(x) == 1);
    CHECK(geometric_intersection(x, 0, 1) == 1);
    CHECK(std::abs(algebraic_intersection(x, 0, 1)) == 1);
    CHECK(crossing_vertices(x, 0, 1).size() == 1);
    CHECK(in_minimal_position(x, 0, 1));
    CHECK_FALSE(mod2_class_equal(x, {0}, {1}));
    CHECK(complement_components(x, {0, 1}).size() == 1);
    CHECK(error_of([&] { geometric_intersection(x, 0, 0); }) != "");
}

TEST_CASE("bounding pair needs genus three") {
    CurveSystem b = fixtures::bounding_pair(1, 1);
    CHECK(ambient_genus(b) == 3);
    CHECK(mod2_class_equal(b, {0}, {1}));
    CHECK_FALSE(is_separating(b, 0));
    CHECK(complement_components(b, {0, 1}).size() == 2);
    CHECK_FALSE(homotopic_disjoint(b, 0, 1));
    // an annulus between them makes them homotopic
    CHECK(homotopic_disjoint(fixtures::bounding_pair(0, 2), 0, 1));
}

TEST_CASE("transversality is enforced") {
    json j = system_to_json(fixtures::crossing_once());
    for (auto& v : j["vertices"]) {
        if (v["rot"].size() != 4) continue;
        auto rot = v["rot"].get<std::vector<std::string>>();
        // make the two darts of one curve adjacent
        std::stable_partition(rot.begin(), rot.end(), [&](const std::string& d) {
            for (const auto& e : j["curves"][0]["edges"])
                if (d.rfind(e.get<std::string>() + ":", 0) == 0) return true;
            return false;
        });
        v["rot"] = rot;
    }
    std::string msg = error_of([&] { system_from_json(j); });
    CHECK(msg.find("vertex") != std::string::npos);
}

TEST_CASE("structural errors name the culprit") {
    json j = system_to_json(fixtures::crossing_once());
    json no_edges = j;
    no_edges.erase("edges");
    CHECK(error_of([&] { system_from_json(no_edges); }).find("'edges'") != std::string::npos);

    json bad_side = j;
    bad_side["regions"][0]["walks"][0][0] = "zz:L";
    CHECK(error_of([&] { system_from_json(bad_side); }).find("zz") != std::string::npos);

    json odd = system_to_json(fixtures::torus_one_curve());
    odd["regions"][0]["genus"] = -1;
    CHECK(error_of([&] { system_from_json(odd); }).find("genus") != std::string::npos);
}

TEST_CASE("bigons and annuli of templates") {
    auto iv = enumerate_templates(PairType::IV);
    REQUIRE(iv.size() >= 2);
    const CurveSystem& s = iv[1].sys;
    CHECK(detect_bigons(s, 0, 2).size() == 2);
    CHECK_FALSE(in_minimal_position(s, 0, 2));
    CHECK(detect_bigons(s, 0, 1).empty());
    CHECK(in_minimal_position(s, 0, 1));
    CHECK(detect_annuli(iv[0].sys, 0, 2).size() == 2);
}

TEST_CASE("restriction keeps the ambient surface") {
    for (const auto& t : enumerate_templates(PairType::III)) {
        Restriction r = restrict_to(t.sys, {0, 1});
        CHECK_NOTHROW(validate(r.sys));
        CHECK(ambient_genus(r.sys) == ambient_genus(t.sys));
        CHECK(r.sys.num_curves() == 2);
    }
}

TEST_CASE("add_handle and stabilize") {
    CurveSystem s = fixtures::separating_curve(0, 1);
    CHECK(ambient_genus(s) == 1);
    CurveSystem h = add_handle(s, 0, 0);
    CHECK(ambient_genus(h) == 2);
    CHECK(h.regions[0].genus == 1);
    CurveSystem m = add_handle(s, 0, 1);
    CHECK(ambient_genus(m) == 2);
    CHECK_FALSE(is_separating(m, 0));
    CHECK(ambient_genus(stabilize(s, 1)) == 2);
    CHECK(error_of([&] { add_handle(s, 0, 7); }) != "");
}

TEST_CASE("pushoff is disjoint and homotopic") {
    CurveSystem t = fixtures::torus_one_curve();
    auto [p, c] = insert_pushoff(t, 0, 0, "p");
    CHECK_NOTHROW(validate(p));
    CHECK(ambient_genus(p) == 1);
    CHECK(geometric_intersection(p, 0, c) == 0);
    CHECK(homotopic_disjoint(p, 0, c));
    CHECK(mod2_class_equal(p, {0}, {c}));
}

TEST_CASE("region curves") {
    CurveSystem t = fixtures::torus_one_curve(1);
    RegionCurve h;
    h.region = 0;
    h.handle = true;
    auto [s, c] = insert_region_curve(t, h, "h");
    CHECK(ambient_genus(s) == 2);
    CHECK_FALSE(is_separating(s, c));
    CHECK_FALSE(mod2_class_equal(s, {0}, {c}));

    RegionCurve sep;
    sep.region = 0;
    sep.genus_left = 1;
    auto [s2, c2] = insert_region_curve(t, sep, "d");
    CHECK(is_separating(s2, c2));
    RegionCurve disk;
    disk.region = 0;
    CHECK(error_of([&] { insert_region_curve(t, disk); }).find("disk") != std::string::npos);
}

TEST_CASE("cut and reglue round trip") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        CurveSystem s = random_system(rng, 8);
        for (int c = 0; c < s.num_curves(); ++c) {
            CutSurface cut = cut_along(s, c);
            CHECK(cut.copy1 >= 0);
            CHECK(isomorphic(reglue(cut), s));
        }
    }
}

TEST_CASE("isomorphism ignores labels of elements but not curves") {
    CurveSystem a = fixtures::bounding_pair(1, 2);
    CurveSystem b = fixtures::bounding_pair(2, 1);
    CHECK(isomorphic(a, a));
    IsoPolicy unordered;
    unordered.ordered_labels = false;
    CHECK(isomorphic(a, b, unordered));
    CHECK(canonical_form(a) == canonical_form(system_from_json(system_to_json(a))));
    CHECK_FALSE(isomorphic(a, fixtures::bounding_pair(1, 1)));
}

TEST_CASE("json round trip over random systems") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        CurveSystem s = random_system(rng, 10);
        CurveSystem r = system_from_json(json::parse(system_to_json(s).dump()));
        CHECK(canonical_form(r) == canonical_form(s));
        CHECK(ambient_genus(r) == ambient_genus(s));
    }
}

TEST_CASE("example file loads") {
    CurveSystem s = system_from_json(read_json_file(std::string(SCC_DATA_DIR) + "/examples_type_I_1.json"));
    CHECK(classify_triple(s, 0, 1, 2) == PairType::I);
    CHECK(error_of([] { read_json_file("/nonexistent.json"); }).find("cannot open") != std::string::npos);
}

TEST_CASE("dot output") {
    std::string dot = to_dot(fixtures::crossing_once());
    CHECK(dot.rfind("graph curves {", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '\n') >= 4);
    CHECK(dot.find("label=\"d\"") != std::string::npos);
}
