#pragma once

#include <functional>
#include <vector>

#include "scc/surface.hpp"

namespace scc {

struct IsoPolicy {
    bool allow_reflection = true;  // orientation-reversing maps count as isomorphisms
    bool ordered_labels = true;    // curve i must map to curve i
};

// Exact canonical encoding: minimum over all BFS dart numberings (one seed per
// connected component of the curve union, reflections per policy). Markers are
// normalized first, and curve orientations are not part of the structure.
// With with_regions=false only the labeled ribbon graph is encoded.
std::vector<int> canonical_form(const CurveSystem& sys, const IsoPolicy& policy = {},
                                bool with_regions = true, bool with_genus = true);

bool isomorphic(const CurveSystem& a, const CurveSystem& b, const IsoPolicy& policy = {});

// Calls visit(region_map) for every isomorphism a -> b of the structure with
// region genera ignored (region_map sends regions of normalize(a) to regions of
// normalize(b); region indices are unchanged by normalize). Stops early when
// visit returns true and reports whether it did.
bool for_each_isomorphism(const CurveSystem& a, const CurveSystem& b, const IsoPolicy& policy,
                          const std::function<bool(const std::vector<int>&)>& visit);

// Isomorphism data in terms of the original (unnormalized) systems.
struct IsoMap {
    std::vector<int> regions;  // region of a -> region of b
    std::vector<int> walks;    // boundary walk of a -> boundary walk of b
    bool reflected = false;
};
bool for_each_isomorphism_map(const CurveSystem& a, const CurveSystem& b, const IsoPolicy& policy,
                              const std::function<bool(const IsoMap&)>& visit);

// True iff sys1 is obtained from sys2 by stabilizations: some isomorphism of the
// genus-free structure has genus(sys1) >= genus(sys2) regionwise. On success
// region_map (optional) receives the map from regions of sys2 to regions of sys1.
bool is_stabilization_of(const CurveSystem& sys1, const CurveSystem& sys2, const IsoPolicy& policy = {},
                         std::vector<int>* region_map = nullptr);
// Same, reporting the full map from sys2 to sys1.
bool stabilization_map(const CurveSystem& sys1, const CurveSystem& sys2, const IsoPolicy& policy, IsoMap* map);

}  // namespace scc
