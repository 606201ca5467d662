#pragma once

#include <string>
#include <vector>

#include "scc/generate.hpp"
#include "scc/surface.hpp"

namespace fixtures {

using namespace scc;

// Groups traced walks by the first-side rule: walk w goes to region_of(first side).
inline CurveSystem build(const ChordSpec& spec, const std::function<int(int)>& region_of_side,
                         const std::vector<int>& genus) {
    RawMap m = build_map(spec);
    auto walks = trace_walks(m);
    std::vector<int> wr;
    for (const auto& w : walks) wr.push_back(region_of_side(w.front()));
    return attach_regions(m, walks, wr, genus);
}

inline ChordSpec disjoint(std::vector<std::string> names) {
    ChordSpec s;
    s.order.resize(names.size());
    s.names = std::move(names);
    return s;
}

// One crossing-free curve; the two sides lie in one region.
inline CurveSystem torus_one_curve(int genus = 0) {
    return build(disjoint({"c"}), [](int) { return 0; }, {genus});
}

// One crossing-free curve separating two regions.
inline CurveSystem separating_curve(int g1, int g2) {
    return build(disjoint({"c"}), [](int s) { return side_is_right(s) ? 1 : 0; }, {g1, g2});
}

// Two curves crossing once, the complement one disk.
inline CurveSystem crossing_once() {
    ChordSpec s;
    s.names = {"c", "d"};
    s.crossings = {{0, 1, 1}};
    s.order = {{0}, {0}};
    return build(s, [](int) { return 0; }, {0});
}

// Disjoint curves c, d cobounding two regions of the given genera.
inline CurveSystem bounding_pair(int g1, int g2) {
    return build(disjoint({"c", "d"}),
                 [](int s) {
                     // left of c faces right of d
                     bool c = side_edge(s) == 0;
                     return (c ? !side_is_right(s) : side_is_right(s)) ? 0 : 1;
                 },
                 {g1, g2});
}

}  // namespace fixtures
