#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace scc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dart 2e is the tail end of edge e and 2e+1 its head end.
// Side 2e is the left side of e (relative to its orientation), 2e+1 the right.
inline int dart_edge(int d) { return d >> 1; }
inline bool dart_is_head(int d) { return d & 1; }
inline int tail_dart(int e) { return 2 * e; }
inline int head_dart(int e) { return 2 * e + 1; }
inline int side_edge(int s) { return s >> 1; }
inline bool side_is_right(int s) { return s & 1; }
inline int left_side(int e) { return 2 * e; }
inline int right_side(int e) { return 2 * e + 1; }

struct Edge {
    int curve = -1;
    int tail = -1;
    int head = -1;
};

struct Vertex {
    std::vector<int> rot;  // incident darts in counterclockwise order
};

struct Region {
    int genus = 0;
    std::vector<int> walks;
};

// A system of simple closed curves on a closed oriented surface, stored as a
// combinatorial map of the curve union together with its complementary regions.
// Regions are open subsurfaces of arbitrary genus, each bounded by one or more
// traced boundary walks. Build with assemble(); after that the value is treated
// as immutable.
struct CurveSystem {
    std::vector<std::string> names;        // curve labels, in order
    std::vector<std::vector<int>> curves;  // cyclic oriented edge sequences
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;
    std::vector<std::vector<int>> walks;   // cyclic side sequences
    std::vector<Region> regions;

    // optional external ids (used for diagnostics and serialization)
    std::vector<std::string> vertex_ids, edge_ids, region_ids;

    // lookup tables filled by index()
    std::vector<int> dart_vertex, dart_pos, side_walk, walk_region;

    int num_curves() const { return static_cast<int>(curves.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_regions() const { return static_cast<int>(regions.size()); }

    int curve_index(const std::string& name) const;
    int vertex_of(int dart) const;
    int degree(int v) const { return static_cast<int>(vertices[v].rot.size()); }
    int ccw(int dart) const;
    int cw(int dart) const;
    int region_of_side(int s) const { return walk_region[side_walk[s]]; }
    int curve_of_side(int s) const { return edges[side_edge(s)].curve; }

    std::string vertex_name(int v) const;
    std::string edge_name(int e) const;
    std::string region_name(int r) const;

    void index();  // rebuild lookup tables
};

// Underlying map before regions are attached.
struct RawMap {
    std::vector<std::string> names;
    std::vector<std::vector<int>> curves;
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;
};

// Traces boundary walks with the region kept on the left of each side.
std::vector<std::vector<int>> trace_walks(const RawMap& m);

// Assembles a system: walks are traced, each walk is assigned to
// side_region(first side) (all its sides must agree), and genus is
// genus_of(region, number of walks of that region).
CurveSystem assemble(RawMap m, int num_regions, const std::function<int(int)>& side_region,
                     const std::function<int(int, int)>& genus_of);

// Checks every invariant; throws Error naming the first violation.
void validate(const CurveSystem& sys);

int euler_characteristic(const CurveSystem& sys);
int ambient_genus(const CurveSystem& sys);

int geometric_intersection(const CurveSystem& sys, int c1, int c2);
int signed_intersection(const CurveSystem& sys, int c1, int c2);
int algebraic_intersection(const CurveSystem& sys, int c1, int c2);
std::vector<int> crossing_vertices(const CurveSystem& sys, int c1, int c2);

// Region labels of the complement of the given curves: regions adjacent
// across an edge of a curve outside cut_set share a label.
std::vector<int> component_labels(const CurveSystem& sys, const std::vector<int>& cut_set);
std::vector<std::vector<int>> complement_components(const CurveSystem& sys,
                                                   const std::vector<int>& cut_set);
bool is_separating(const CurveSystem& sys, int c);
bool mod2_class_equal(const CurveSystem& sys, const std::vector<int>& set1,
                      const std::vector<int>& set2);
// Two-coloring flipping across edges of the given curves; empty when none exists.
std::vector<int> region_coloring(const CurveSystem& sys, const std::vector<int>& flip_curves);

// Subsystem keeping only the listed curves (in that order). origin[r] lists the
// regions of sys merged into region r of the result.
struct Restriction {
    CurveSystem sys;
    std::vector<std::vector<int>> origin;
    std::vector<int> region_map;  // region of sys -> region of result
    std::vector<int> side_origin; // side of the result -> a side of sys it runs along
};
Restriction restrict_to(const CurveSystem& sys, const std::vector<int>& keep);

// Drops markers on curves that cross something; keeps exactly one marker on
// every crossing-free curve.
CurveSystem normalize(const CurveSystem& sys);

// Regions of restrict_to(sys,{c1,c2}) that are bigons / annuli between c1 and c2,
// each given as the list of regions of sys it consists of.
std::vector<std::vector<int>> detect_bigons(const CurveSystem& sys, int c1, int c2);
std::vector<std::vector<int>> detect_annuli(const CurveSystem& sys, int c1, int c2);
bool in_minimal_position(const CurveSystem& sys, int c1, int c2);
bool homotopic_disjoint(const CurveSystem& sys, int c1, int c2);

CurveSystem add_handle(const CurveSystem& sys, int r1, int r2);
CurveSystem stabilize(const CurveSystem& sys, int r);

// New curve parallel to the given boundary walk of region r; the thin annulus
// between walk and new curve becomes a genus-0 region.
std::pair<CurveSystem, int> insert_pushoff(const CurveSystem& sys, int r, int walk_index,
                                           const std::string& name = "");

// Description of a curve inside one region, disjoint from every other curve.
// Either a handle curve (nonseparating in the region), or a curve splitting the
// region's walks into `walks_left` vs the rest with `genus_left` handles on the
// left side.
struct RegionCurve {
    int region = -1;
    bool handle = false;
    std::vector<int> walks_left;  // walk ids
    int genus_left = 0;
};
std::pair<CurveSystem, int> insert_region_curve(const CurveSystem& sys, const RegionCurve& spec,
                                                const std::string& name = "");

// The surface cut along one curve, with both new boundary circles capped by
// disks so that the usual walk machinery applies. copy1 runs along the left
// side of the cut curve and copy2 along the right; their edges and vertices are
// paired index by index. Vertices on the copies have degree 2 or 3, so this
// structure is not a CurveSystem in the strict sense and is not validated.
struct CutSurface {
    CurveSystem sys;
    int copy1 = -1, copy2 = -1;   // curve indices in sys
    int cap1 = -1, cap2 = -1;     // disk regions glued into the two boundaries
    int base_vertices = 0, base_edges = 0;  // sizes of the uncut system
    struct Arc {
        int curve = -1;
        std::vector<int> edges;
        int start_copy = 0, end_copy = 0;  // 1 or 2
    };
    std::vector<Arc> arcs;
    std::vector<int> closed_curves;  // curves not meeting the cut
};
CutSurface cut_along(const CurveSystem& sys, int c);
CurveSystem reglue(const CutSurface& cut);

}  // namespace scc
