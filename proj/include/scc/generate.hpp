#pragma once

#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "scc/canonical.hpp"
#include "scc/surface.hpp"

namespace scc {

// Crossing of curve a by curve b; sign +1 when b crosses a from its right to
// its left.
struct Crossing {
    int a = 0, b = 1, sign = 1;
};

// Combinatorial description of a curve arrangement: which crossings exist,
// their signs, and the cyclic order in which each curve meets them.
struct ChordSpec {
    std::vector<std::string> names;
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> order;  // per curve, crossing indices
};

RawMap build_map(const ChordSpec& spec);

// System from a map and a grouping of its traced walks into regions.
CurveSystem attach_regions(const RawMap& m, const std::vector<std::vector<int>>& walks,
                           const std::vector<int>& walk_region, const std::vector<int>& genus);

// Every walk its own genus-0 region; only the ribbon structure is meaningful.
CurveSystem ribbon_system(const RawMap& m);

// Restricted growth strings: fn(block_of, number_of_blocks). blocks < 0 means
// any number of blocks.
void for_each_set_partition(int n, int blocks, const std::function<void(const std::vector<int>&, int)>& fn);

// Number of connected components of the curve union.
int ribbon_components(const RawMap& m);

// All labeled ribbon graphs with the given crossing counts per curve pair
// (triples a, b, count), up to isomorphism under the policy.
std::vector<RawMap> enumerate_ribbons(const std::vector<std::string>& names,
                                      const std::vector<std::array<int, 3>>& pair_counts,
                                      const IsoPolicy& policy = {});

// Random valid system with at most max_edges edges, for property tests.
CurveSystem random_system(std::mt19937_64& rng, int max_edges);

}  // namespace scc
