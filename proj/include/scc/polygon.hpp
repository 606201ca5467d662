#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scc/criteria.hpp"
#include "scc/surface.hpp"

namespace scc {

// Regular n-gon with sides paired by a fixed-point-free involution. Side i runs
// from corner i to corner i+1 (counterclockwise); paired sides are glued with
// reversed boundary orientation unless flagged otherwise, in which case the
// quotient is non-orientable and validate_polygon rejects it.
struct PolygonSurface {
    int n = 0;
    std::vector<int> pairing;
    std::vector<bool> same_direction;  // optional, per side; empty means all reversed
};

PolygonSurface opposite_pairing(int n);
// "opposite" or a comma-separated list "0-5,1-6,..." ("a~b" glues a and b
// preserving direction).
PolygonSurface parse_pairing(int n, const std::string& text);
void validate_polygon(const PolygonSurface& p);

int corner_orbits(const PolygonSurface& p);
int quotient_genus(const PolygonSurface& p);

// Rotation by 2*pi*k/n descends to the quotient iff pairing(i+k) = pairing(i)+k.
bool is_equivariant(const PolygonSurface& p, int k);
int rotation_order(const PolygonSurface& p, int k);  // throws unless equivariant

// The midpoint segment of side i joins the midpoints of sides i and pairing(i).
// 1 iff the two segments cross inside the polygon.
int segment_intersection(const PolygonSurface& p, int side1, int side2);

// The quotient surface with the given midpoint segments as curves (named
// "s<side>", oriented from side to pairing(side)). Throws if three segments
// are concurrent.
struct ChordSystem {
    CurveSystem sys;
    std::vector<int> sides;
    int center_region = -1;  // region containing the polygon center, -1 if on a curve
};
ChordSystem chord_system(const PolygonSurface& p, const std::vector<int>& sides);

enum class CurveKind { Trivial, Separating, Nonseparating };
std::string curve_kind_name(CurveKind k);
CurveKind midpoint_curve_properties(const PolygonSurface& p, int side);

// Some complementary region of three pairwise disjoint curves borders all
// three; false for three disjoint homologous curves.
bool triple_region_test(const CurveSystem& sys, int c1, int c2, int c3);
bool triple_region_test(const PolygonSurface& p, int k, int side);

struct PolygonVerdict {
    Verdict verdict;
    std::optional<Certificate> certificate;
    int genus = 0, order = 0;
    int side = -1;      // side of the chosen midpoint curve
    std::string route;
};
// Case analysis for a fixed-point rotation of order > 2.
PolygonVerdict periodic_case3_verdict(const PolygonSurface& p, int k);

// Calls f on every fixed-point-free involution of {0..n-1}.
void for_each_pairing(int n, const std::function<void(const std::vector<int>&)>& f);

struct PolygonSweep {
    long instances = 0, positive = 0, trivial = 0;
    std::vector<std::string> failures;
    bool operator==(const PolygonSweep&) const = default;
};
// Every equivariant k with order > 2 on opposite-pairing n-gons (or on every
// pairing), n <= max_n.
PolygonSweep case3_sweep(int max_n, bool parallel = true, bool all_pairings = false);
// segment_intersection against geometric_intersection and minimal position,
// for every pair of segments of every pairing with n <= max_n.
PolygonSweep intersection_sweep(int max_n, bool parallel = true);

}  // namespace scc
