#include "scc/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "scc/util.hpp"

namespace scc {

PolygonSurface opposite_pairing(int n) {
    if (n < 2 || n % 2) throw Error("polygon: n must be even and at least 2");
    PolygonSurface p;
    p.n = n;
    for (int i = 0; i < n; ++i) p.pairing.push_back((i + n / 2) % n);
    return p;
}

PolygonSurface parse_pairing(int n, const std::string& text) {
    if (text == "opposite") return opposite_pairing(n);
    PolygonSurface p;
    p.n = n;
    p.pairing.assign(std::max(n, 0), -1);
    p.same_direction.assign(std::max(n, 0), false);
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto pos = tok.find_first_of("-~");
        if (pos == std::string::npos) throw Error("pairing: expected 'a-b', got '" + tok + "'");
        int a, b;
        try {
            a = std::stoi(tok.substr(0, pos));
            b = std::stoi(tok.substr(pos + 1));
        } catch (const std::exception&) {
            throw Error("pairing: expected 'a-b', got '" + tok + "'");
        }
        if (a < 0 || a >= n || b < 0 || b >= n) throw Error("pairing: side out of range in '" + tok + "'");
        if (p.pairing[a] >= 0 || p.pairing[b] >= 0) throw Error("pairing: side listed twice in '" + tok + "'");
        p.pairing[a] = b;
        p.pairing[b] = a;
        p.same_direction[a] = p.same_direction[b] = tok[pos] == '~';
    }
    validate_polygon(p);
    return p;
}

void validate_polygon(const PolygonSurface& p) {
    if (p.n < 2 || p.n % 2) throw Error("polygon: n must be even and at least 2");
    if (static_cast<int>(p.pairing.size()) != p.n) throw Error("polygon: pairing must list every side");
    for (int i = 0; i < p.n; ++i) {
        int j = p.pairing[i];
        if (j < 0 || j >= p.n) throw Error("polygon: side " + std::to_string(i) + " is unpaired");
        if (j == i) throw Error("polygon: side " + std::to_string(i) + " paired with itself");
        if (p.pairing[j] != i) throw Error("polygon: pairing is not an involution at side " + std::to_string(i));
    }
    // A single polygon with one pair glued preserving direction contains a
    // Moebius band.
    if (!p.same_direction.empty()) {
        if (static_cast<int>(p.same_direction.size()) != p.n) throw Error("polygon: gluing flags must list every side");
        for (int i = 0; i < p.n; ++i)
            if (p.same_direction[i])
                throw Error("non-orientable gluing: sides " + std::to_string(i) + " and " +
                            std::to_string(p.pairing[i]));
    }
}

namespace {

// Reversed gluing sends corner i to corner pairing(i)+1 and corner i+1 to
// corner pairing(i).
UnionFind corner_classes(const PolygonSurface& p) {
    UnionFind uf(p.n);
    for (int i = 0; i < p.n; ++i) {
        int j = p.pairing[i];
        uf.unite(i, (j + 1) % p.n);
        uf.unite((i + 1) % p.n, j);
    }
    return uf;
}

}  // namespace

int corner_orbits(const PolygonSurface& p) {
    validate_polygon(p);
    UnionFind uf = corner_classes(p);
    int k;
    uf.labels(&k);
    return k;
}

int quotient_genus(const PolygonSurface& p) {
    int chi = corner_orbits(p) - p.n / 2 + 1;
    return (2 - chi) / 2;
}

bool is_equivariant(const PolygonSurface& p, int k) {
    validate_polygon(p);
    const int n = p.n;
    k = ((k % n) + n) % n;
    for (int i = 0; i < n; ++i)
        if (p.pairing[(i + k) % n] != (p.pairing[i] + k) % n) return false;
    return true;
}

int rotation_order(const PolygonSurface& p, int k) {
    if (!is_equivariant(p, k)) throw Error("rotation by " + std::to_string(k) + " does not descend to the quotient");
    k = ((k % p.n) + p.n) % p.n;
    return p.n / std::gcd(p.n, k);
}

int segment_intersection(const PolygonSurface& p, int s1, int s2) {
    validate_polygon(p);
    if (s1 < 0 || s1 >= p.n || s2 < 0 || s2 >= p.n) throw Error("segment: side out of range");
    int a = std::min(s1, p.pairing[s1]), b = std::max(s1, p.pairing[s1]);
    int c = std::min(s2, p.pairing[s2]), d = std::max(s2, p.pairing[s2]);
    if (a == c) throw Error("segment: the two segments coincide");
    auto inside = [&](int x) { return a < x && x < b; };
    return inside(c) != inside(d) ? 1 : 0;
}

std::string curve_kind_name(CurveKind k) {
    switch (k) {
        case CurveKind::Trivial: return "trivial";
        case CurveKind::Separating: return "separating";
        case CurveKind::Nonseparating: return "nonseparating";
    }
    return "?";
}

namespace {

struct Pt {
    double x, y;
};

// Planar straight-line map of the polygon, its side fragments and the chords.
struct Planar {
    std::vector<Pt> pts;
    std::vector<std::pair<int, int>> edges;  // dart 2e: first -> second
    std::vector<std::vector<int>> rot;       // outgoing darts, counterclockwise
    std::vector<int> pos, face;              // per dart
    int num_faces = 0;

    int tail(int d) const { return d & 1 ? edges[d >> 1].second : edges[d >> 1].first; }
    int head(int d) const { return tail(d ^ 1); }

    int add_edge(int a, int b) {
        edges.push_back({a, b});
        return static_cast<int>(edges.size()) - 1;
    }

    void build() {
        rot.assign(pts.size(), {});
        for (int d = 0; d < 2 * static_cast<int>(edges.size()); ++d) rot[tail(d)].push_back(d);
        pos.assign(2 * edges.size(), -1);
        for (size_t v = 0; v < pts.size(); ++v) {
            auto ang = [&](int d) {
                const Pt &a = pts[v], &b = pts[head(d)];
                return std::atan2(b.y - a.y, b.x - a.x);
            };
            std::sort(rot[v].begin(), rot[v].end(), [&](int x, int y) { return ang(x) < ang(y); });
            for (size_t k = 0; k < rot[v].size(); ++k) pos[rot[v][k]] = static_cast<int>(k);
        }
        // face on the left: continue with the dart just clockwise of the reversal
        face.assign(2 * edges.size(), -1);
        for (int d0 = 0; d0 < static_cast<int>(face.size()); ++d0) {
            if (face[d0] >= 0) continue;
            for (int d = d0; face[d] < 0;) {
                face[d] = num_faces;
                int r = d ^ 1;
                const auto& rv = rot[tail(r)];
                d = rv[(pos[r] + rv.size() - 1) % rv.size()];
            }
            ++num_faces;
        }
    }
};

}  // namespace

ChordSystem chord_system(const PolygonSurface& p, const std::vector<int>& sides) {
    validate_polygon(p);
    const int n = p.n;
    const int m = static_cast<int>(sides.size());
    for (int a = 0; a < m; ++a) {
        if (sides[a] < 0 || sides[a] >= n) throw Error("chord: side out of range");
        for (int b = 0; b < a; ++b)
            if (std::min(sides[a], p.pairing[sides[a]]) == std::min(sides[b], p.pairing[sides[b]]))
                throw Error("chord: segment of side " + std::to_string(sides[a]) + " listed twice");
    }
    const double pi = std::acos(-1.0);
    std::vector<Pt> corner(n);
    for (int j = 0; j < n; ++j) corner[j] = {std::cos(2 * pi * j / n), std::sin(2 * pi * j / n)};
    // Side midpoints pushed out to the circumcircle: chords keep their
    // arrangement (a uniform scaling) and the 2-gon stops being degenerate.
    auto midpoint = [&](int j) { return Pt{std::cos(2 * pi * (j + 0.5) / n), std::sin(2 * pi * (j + 0.5) / n)}; };

    Planar pl;
    std::vector<int> corner_pt(n), mid_pt(n, -1);
    std::vector<char> hit(n, 0);
    for (int s : sides) hit[s] = hit[p.pairing[s]] = 1;
    std::vector<int> boundary;  // counterclockwise
    for (int j = 0; j < n; ++j) {
        corner_pt[j] = static_cast<int>(pl.pts.size());
        pl.pts.push_back(corner[j]);
        boundary.push_back(corner_pt[j]);
        if (hit[j]) {
            mid_pt[j] = static_cast<int>(pl.pts.size());
            pl.pts.push_back(midpoint(j));
            boundary.push_back(mid_pt[j]);
        }
    }
    std::map<std::pair<int, int>, int> arc_of;  // boundary arc (from, to) -> edge
    for (size_t k = 0; k < boundary.size(); ++k) {
        int a = boundary[k], b = boundary[(k + 1) % boundary.size()];
        arc_of[{a, b}] = pl.add_edge(a, b);
    }

    // crossings, ordered along each chord by their parameter
    std::vector<std::vector<std::pair<double, int>>> along(m);
    auto chord_ends = [&](int a) { return std::pair{midpoint(sides[a]), midpoint(p.pairing[sides[a]])}; };
    std::vector<std::vector<int>> crossing_of(m, std::vector<int>(m, -1));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (!segment_intersection(p, sides[a], sides[b])) continue;
            auto [p1, p2] = chord_ends(a);
            auto [q1, q2] = chord_ends(b);
            double rx = p2.x - p1.x, ry = p2.y - p1.y, sx = q2.x - q1.x, sy = q2.y - q1.y;
            double den = rx * sy - ry * sx;
            double t = ((q1.x - p1.x) * sy - (q1.y - p1.y) * sx) / den;
            double u = ((q1.x - p1.x) * ry - (q1.y - p1.y) * rx) / den;
            int v = static_cast<int>(pl.pts.size());
            pl.pts.push_back({p1.x + t * rx, p1.y + t * ry});
            along[a].push_back({t, v});
            along[b].push_back({u, v});
            crossing_of[a][b] = crossing_of[b][a] = v;
        }
    for (auto& l : along) {
        std::sort(l.begin(), l.end());
        for (size_t k = 1; k < l.size(); ++k)
            if (l[k].first - l[k - 1].first < 1e-9) throw Error("chord: three segments meet in one point");
    }

    // curve edges: chord pieces; one marker per chord at the glued midpoint
    RawMap raw;
    std::vector<int> planar_dart_of_edge;  // curve edge -> planar dart in curve direction
    std::map<int, int> crossing_vertex;
    for (int a = 0; a < m; ++a) {
        raw.names.push_back("s" + std::to_string(sides[a]));
        int marker = static_cast<int>(raw.vertices.size());
        raw.vertices.push_back({});
        std::vector<int> chain{mid_pt[sides[a]]};
        for (auto& [t, v] : along[a]) chain.push_back(v);
        chain.push_back(mid_pt[p.pairing[sides[a]]]);
        std::vector<int> seq;
        for (size_t k = 0; k + 1 < chain.size(); ++k) {
            int pe = pl.add_edge(chain[k], chain[k + 1]);
            int e = static_cast<int>(raw.edges.size());
            auto vert = [&](size_t idx) {
                if (idx == 0 || idx + 1 == chain.size()) return marker;
                auto [it, fresh] = crossing_vertex.emplace(chain[idx], static_cast<int>(raw.vertices.size()));
                if (fresh) raw.vertices.push_back({});
                return it->second;
            };
            int tl = vert(k), hd = vert(k + 1);
            raw.edges.push_back({a, tl, hd});
            planar_dart_of_edge.push_back(2 * pe);
            seq.push_back(e);
        }
        raw.curves.push_back(seq);
    }
    pl.build();

    // rotation at curve vertices from the planar rotation
    std::vector<int> curve_dart_of_planar(2 * pl.edges.size(), -1);
    for (int e = 0; e < static_cast<int>(raw.edges.size()); ++e) {
        curve_dart_of_planar[planar_dart_of_edge[e]] = tail_dart(e);
        curve_dart_of_planar[planar_dart_of_edge[e] ^ 1] = head_dart(e);
    }
    for (auto& [pt, v] : crossing_vertex)
        for (int d : pl.rot[pt]) raw.vertices[v].rot.push_back(curve_dart_of_planar[d]);
    for (int a = 0; a < m; ++a) {
        int first = raw.curves[a].front(), last = raw.curves[a].back();
        raw.vertices[raw.edges[first].tail].rot = {tail_dart(first), head_dart(last)};
    }

    // pieces glued across side fragments; the outer face is not a piece
    const int outer = pl.face[2 * arc_of.begin()->second + 1];
    UnionFind uf(pl.num_faces);
    auto piece_left = [&](int a, int b) { return pl.face[2 * arc_of.at({a, b})]; };
    std::vector<std::pair<int, int>> fragments;  // pairs of glued pieces
    for (int j = 0; j < n; ++j) {
        int i = p.pairing[j];
        if (j > i) continue;
        int cj = corner_pt[j], cj1 = corner_pt[(j + 1) % n], ci = corner_pt[i], ci1 = corner_pt[(i + 1) % n];
        if (hit[j]) {
            fragments.push_back({piece_left(cj, mid_pt[j]), piece_left(mid_pt[i], ci1)});
            fragments.push_back({piece_left(mid_pt[j], cj1), piece_left(ci, mid_pt[i])});
        } else {
            fragments.push_back({piece_left(cj, cj1), piece_left(ci, ci1)});
        }
    }
    for (auto [x, y] : fragments) uf.unite(x, y);
    std::vector<int> region_of_face(pl.num_faces, -1), chi;
    int num_regions = 0;
    for (int f = 0; f < pl.num_faces; ++f) {
        if (f == outer) continue;
        int r = uf.find(f);
        if (region_of_face[r] < 0) {
            region_of_face[r] = num_regions++;
            chi.push_back(0);
        }
        region_of_face[f] = region_of_face[r];
        chi[region_of_face[f]] += 1;
    }
    for (auto [x, y] : fragments) chi[region_of_face[x]] -= 1;
    UnionFind cc = corner_classes(p);
    std::vector<char> counted(n, 0);
    for (int j = 0; j < n; ++j) {
        int root = cc.find(j);
        if (counted[root]) continue;
        counted[root] = 1;
        int next = hit[j] ? mid_pt[j] : corner_pt[(j + 1) % n];
        chi[region_of_face[piece_left(corner_pt[j], next)]] += 1;
    }

    auto side_region = [&](int s) {
        int d = planar_dart_of_edge[side_edge(s)] ^ (side_is_right(s) ? 1 : 0);
        return region_of_face[pl.face[d]];
    };
    auto genus_of = [&](int r, int b) {
        int twice = 2 - b - chi[r];
        if (twice < 0 || twice % 2) throw Error("chord: inconsistent Euler characteristic");
        return twice / 2;
    };
    ChordSystem out;
    out.sides = sides;
    out.sys = assemble(std::move(raw), num_regions, side_region, genus_of);
    validate(out.sys);

    // the center lies on some chord, or inside exactly one piece
    bool on_chord = false;
    for (int a = 0; a < m && !on_chord; ++a) {
        auto [p1, p2] = chord_ends(a);
        on_chord = std::abs(p1.x * p2.y - p1.y * p2.x) < 1e-12;
    }
    if (!on_chord && m > 0) {
        std::vector<std::vector<int>> face_pts(pl.num_faces);
        for (int d = 0; d < static_cast<int>(pl.face.size()); ++d) face_pts[pl.face[d]].push_back(pl.tail(d));
        for (int f = 0; f < pl.num_faces; ++f) {
            if (f == outer || face_pts[f].empty()) continue;
            // pieces are convex: the center is inside iff it is left of every boundary dart
            bool in = true;
            for (int d = 0; d < static_cast<int>(pl.face.size()) && in; ++d) {
                if (pl.face[d] != f) continue;
                const Pt &a = pl.pts[pl.tail(d)], &b = pl.pts[pl.head(d)];
                in = (b.x - a.x) * (0 - a.y) - (b.y - a.y) * (0 - a.x) > 0;
            }
            if (in) out.center_region = region_of_face[f];
        }
    } else if (m == 0) {
        out.center_region = 0;
    }
    return out;
}

CurveKind midpoint_curve_properties(const PolygonSurface& p, int side) {
    ChordSystem cs = chord_system(p, {side});
    const CurveSystem& s = cs.sys;
    if (!is_separating(s, 0)) return CurveKind::Nonseparating;
    for (const auto& r : s.regions)
        if (r.genus == 0 && r.walks.size() == 1) return CurveKind::Trivial;
    return CurveKind::Separating;
}

bool triple_region_test(const CurveSystem& s, int c1, int c2, int c3) {
    for (auto [x, y] : {std::pair{c1, c2}, {c2, c3}, {c1, c3}}) {
        if (x == y) throw Error("triple region test: curves must be distinct");
        if (geometric_intersection(s, x, y) != 0) throw Error("triple region test: curves must be disjoint");
    }
    Restriction rs = restrict_to(s, {c1, c2, c3});
    const CurveSystem& t = rs.sys;
    for (int r = 0; r < t.num_regions(); ++r) {
        std::vector<char> seen(3, 0);
        for (int w : t.regions[r].walks)
            for (int side : t.walks[w]) seen[t.curve_of_side(side)] = 1;
        if (seen[0] && seen[1] && seen[2]) return true;
    }
    return false;
}

bool triple_region_test(const PolygonSurface& p, int k, int side) {
    const int n = p.n;
    std::vector<int> sides{side, ((side + k) % n + n) % n, ((side + 2 * k) % n + n) % n};
    ChordSystem cs = chord_system(p, sides);
    return triple_region_test(cs.sys, 0, 1, 2);
}

PolygonVerdict periodic_case3_verdict(const PolygonSurface& p, int k) {
    PolygonVerdict out;
    out.order = rotation_order(p, k);
    out.genus = quotient_genus(p);
    if (out.order <= 2) throw Error("case 3 needs a rotation of order greater than 2");
    const int n = p.n;
    auto rot = [&](int side, int times) { return (((side + times * k) % n) + n) % n; };

    int side = -1;
    for (int i = 0; i < n && side < 0; ++i)
        if (i < p.pairing[i] && midpoint_curve_properties(p, i) != CurveKind::Trivial) side = i;
    if (side < 0) {
        if (out.genus != 0) throw Error("no essential midpoint curve");
        out.verdict.conclusion = Conclusion::TrivialGroup;
        out.verdict.criterion = "periodic-case3";
        out.verdict.lemma = "the mapping class group of the sphere is trivial";
        out.verdict.detail = "no essential midpoint curve; genus 0";
        out.route = "trivial";
        return out;
    }
    out.side = side;

    auto certify = [&](const ChordSystem& cs, const std::string& criterion, Verdict v, const std::string& route) {
        Certificate cert;
        cert.criterion = criterion;
        cert.sys = cs.sys;
        cert.roles = {{"c", 0}, {"fc", 1}};
        cert.genus = out.genus;
        cert.verdict = finalize(v, out.genus);
        out.verdict = cert.verdict;
        out.certificate = cert;
        out.route = route;
    };

    ChordSystem pair = chord_system(p, {side, rot(side, 1)});
    if (midpoint_curve_properties(p, side) == CurveKind::Separating) {
        certify(pair, "wsccsep", check_wsccsep(pair.sys, 0, 1), "separating");
        return out;
    }
    if (segment_intersection(p, side, rot(side, 1)) == 1) {
        certify(pair, "wscca", check_wscca(pair.sys, 0, 1), "i(c,fc)=1");
        return out;
    }
    if (segment_intersection(p, side, rot(side, 2)) == 1) {
        ChordSystem sq = chord_system(p, {side, rot(side, 2)});
        Verdict v = check_wscca(sq.sys, 0, 1);
        v.detail += "; applied to f^2";
        certify(sq, "wscca", v, "i(c,f2c)=1");
        return out;
    }
    // c, fc, f^2c disjoint: the center region borders all three, so their
    // classes are not all equal and [c] != [fc]
    ChordSystem tri = chord_system(p, {side, rot(side, 1), rot(side, 2)});
    if (!triple_region_test(tri.sys, 0, 1, 2)) {
        out.verdict.detail = "no region borders all three curves";
        out.route = "triple";
        return out;
    }
    Verdict v = check_wsccb(pair.sys, 0, 1);
    v.detail += "; a region borders c, fc and f^2c";
    certify(pair, "wsccb", v, "triple region");
    return out;
}

void for_each_pairing(int n, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> pr(n, -1);
    std::function<void()> rec = [&]() {
        int i = 0;
        while (i < n && pr[i] >= 0) ++i;
        if (i == n) {
            f(pr);
            return;
        }
        for (int j = i + 1; j < n; ++j) {
            if (pr[j] >= 0) continue;
            pr[i] = j;
            pr[j] = i;
            rec();
            pr[i] = pr[j] = -1;
        }
    };
    if (n % 2 == 0) rec();
}

namespace {

template <class Work>
PolygonSweep run_sweep(std::vector<std::pair<PolygonSurface, int>>& jobs, bool parallel, Work work) {
    const long total = static_cast<long>(jobs.size());
    std::vector<PolygonSweep> part(total);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long j = 0; j < total; ++j) part[j] = work(jobs[j].first, jobs[j].second);
    } else {
        for (long j = 0; j < total; ++j) part[j] = work(jobs[j].first, jobs[j].second);
    }
    PolygonSweep r;
    for (auto& s : part) {
        r.instances += s.instances;
        r.positive += s.positive;
        r.trivial += s.trivial;
        for (auto& f : s.failures) r.failures.push_back(std::move(f));
    }
    return r;
}

std::string describe(const PolygonSurface& p, int k) {
    std::string s = "n=" + std::to_string(p.n) + " pairing=";
    for (int i = 0; i < p.n; ++i)
        if (i < p.pairing[i]) s += std::to_string(i) + "-" + std::to_string(p.pairing[i]) + ",";
    if (k >= 0) s += " k=" + std::to_string(k);
    return s;
}

}  // namespace

PolygonSweep case3_sweep(int max_n, bool parallel, bool all_pairings) {
    std::vector<std::pair<PolygonSurface, int>> jobs;
    auto add = [&](const PolygonSurface& p) {
        for (int k = 1; k < p.n; ++k)
            if (is_equivariant(p, k) && rotation_order(p, k) > 2) jobs.push_back({p, k});
    };
    for (int n = 2; n <= max_n; n += 2) {
        if (all_pairings)
            for_each_pairing(n, [&](const std::vector<int>& pr) { add(PolygonSurface{n, pr, {}}); });
        else
            add(opposite_pairing(n));
    }
    return run_sweep(jobs, parallel, [](const PolygonSurface& p, int k) {
        PolygonSweep s;
        s.instances = 1;
        try {
            PolygonVerdict v = periodic_case3_verdict(p, k);
            if (v.verdict.conclusion == Conclusion::TrivialGroup) {
                ++s.trivial;
            } else if (v.verdict.positive() && v.certificate && verify_certificate(*v.certificate).positive()) {
                ++s.positive;
            } else {
                s.failures.push_back(describe(p, k) + ": " + v.verdict.detail);
            }
        } catch (const Error& ex) {
            s.failures.push_back(describe(p, k) + ": " + ex.what());
        }
        return s;
    });
}

PolygonSweep intersection_sweep(int max_n, bool parallel) {
    std::vector<std::pair<PolygonSurface, int>> jobs;
    for (int n = 2; n <= max_n; n += 2)
        for_each_pairing(n, [&](const std::vector<int>& pr) { jobs.push_back({PolygonSurface{n, pr, {}}, -1}); });
    return run_sweep(jobs, parallel, [](const PolygonSurface& p, int) {
        PolygonSweep s;
        for (int a = 0; a < p.n; ++a) {
            if (a > p.pairing[a]) continue;
            for (int b = a + 1; b < p.n; ++b) {
                if (b > p.pairing[b]) continue;
                ++s.instances;
                try {
                    ChordSystem cs = chord_system(p, {a, b});
                    int seg = segment_intersection(p, a, b);
                    if (seg != geometric_intersection(cs.sys, 0, 1) || !in_minimal_position(cs.sys, 0, 1))
                        s.failures.push_back(describe(p, -1) + " sides " + std::to_string(a) + "," +
                                             std::to_string(b) + ": crossing count disagrees");
                    else
                        ++s.positive;
                } catch (const Error& ex) {
                    s.failures.push_back(describe(p, -1) + ": " + ex.what());
                }
            }
        }
        return s;
    });
}

}  // namespace scc
