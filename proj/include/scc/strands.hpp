#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scc/surface.hpp"

namespace scc {

// One leg of a strand: leave the vertex of `dart` along its edge, on the left
// or right of the direction of travel. With cross_mid the strand crosses the
// edge it follows halfway along and keeps to the other hand afterwards. At the
// far vertex the strand sweeps around the vertex (clockwise when on the left,
// counterclockwise when on the right), crossing every dart it passes, until it
// reaches the dart of the next leg.
struct Leg {
    int dart = -1;
    bool left = true;
    bool cross_mid = false;
};

// Inserts the closed strand as a new curve, innermost with respect to every
// existing curve. Region indices of sys are preserved; the thin disks between
// the strand and the edges it follows are appended as genus-0 regions.
// Throws Error when the strand is inconsistent or crosses nothing.
std::pair<CurveSystem, int> insert_strand(const CurveSystem& sys, const std::vector<Leg>& legs,
                                          const std::string& name = "");

// Boundary walks of a regular neighborhood of the union of the given curves,
// as cyclic side sequences of their edges.
std::vector<std::vector<int>> neighborhood_walks(const CurveSystem& sys, const std::vector<int>& curves);

// New curve parallel to a boundary component of that neighborhood.
std::pair<CurveSystem, int> insert_neighborhood_pushoff(const CurveSystem& sys, const std::vector<int>& curves,
                                                        int walk_index, const std::string& name = "");

// New curve parallel to the given one, on its left.
std::pair<CurveSystem, int> insert_parallel_copy(const CurveSystem& sys, int curve, const std::string& name = "");

// Curves made of one arc of c1 and one arc of c2 (i(c1,c2) = 2): traverse arc
// `arc` of c1 (reversed if asked), turn left onto c2 and return along c2.
// A left-turn curve is one that also turns right when coming back onto c1,
// i.e. it turns left onto c2 in either traversal.
struct TurnChoice {
    int arc = 0;
    bool reverse = false;
    bool smooth = false;  // cross each arc once instead of sweeping around a junction
};
struct TurnCurve {
    TurnChoice choice;
    std::vector<Leg> legs;
    bool left_turn = false;
    std::pair<int, int> key;  // identifies the underlying curve: (junction, rotation slot)
};
std::vector<TurnCurve> turn_curves(const CurveSystem& sys, int c1, int c2);
std::pair<CurveSystem, int> insert_turn_curve(const CurveSystem& sys, int c1, int c2, const TurnChoice& choice,
                                              const std::string& name = "");

// Curve crossing `edge` once at its midpoint and otherwise running inside the
// region on both sides of it (both sides must lie in one region).
std::pair<CurveSystem, int> insert_dual_loop(const CurveSystem& sys, int edge, const std::string& name = "");

}  // namespace scc
