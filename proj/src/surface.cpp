#include "scc/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scc/util.hpp"

namespace scc {

namespace {

std::string side_label(const CurveSystem& s, int side) {
    return s.edge_name(side_edge(side)) + (side_is_right(side) ? ":R" : ":L");
}

std::string dart_label(const CurveSystem& s, int d) {
    return s.edge_name(dart_edge(d)) + (dart_is_head(d) ? ":h" : ":t");
}

}  // namespace

int CurveSystem::curve_index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw Error("unknown curve '" + name + "'");
}

int CurveSystem::vertex_of(int d) const {
    const Edge& e = edges[dart_edge(d)];
    return dart_is_head(d) ? e.head : e.tail;
}

int CurveSystem::ccw(int d) const {
    const auto& r = vertices[dart_vertex[d]].rot;
    return r[(dart_pos[d] + 1) % r.size()];
}

int CurveSystem::cw(int d) const {
    const auto& r = vertices[dart_vertex[d]].rot;
    return r[(dart_pos[d] + r.size() - 1) % r.size()];
}

std::string CurveSystem::vertex_name(int v) const {
    if (v >= 0 && v < static_cast<int>(vertex_ids.size())) return vertex_ids[v];
    return "v" + std::to_string(v);
}

std::string CurveSystem::edge_name(int e) const {
    if (e >= 0 && e < static_cast<int>(edge_ids.size())) return edge_ids[e];
    return "e" + std::to_string(e);
}

std::string CurveSystem::region_name(int r) const {
    if (r >= 0 && r < static_cast<int>(region_ids.size())) return region_ids[r];
    return "R" + std::to_string(r);
}

void CurveSystem::index() {
    const int D = 2 * num_edges();
    dart_vertex.assign(D, -1);
    dart_pos.assign(D, -1);
    for (int v = 0; v < num_vertices(); ++v)
        for (size_t k = 0; k < vertices[v].rot.size(); ++k) {
            dart_vertex[vertices[v].rot[k]] = v;
            dart_pos[vertices[v].rot[k]] = static_cast<int>(k);
        }
    side_walk.assign(D, -1);
    for (size_t w = 0; w < walks.size(); ++w)
        for (int s : walks[w]) side_walk[s] = static_cast<int>(w);
    walk_region.assign(walks.size(), -1);
    for (int r = 0; r < num_regions(); ++r)
        for (int w : regions[r].walks) walk_region[w] = r;
}

std::vector<std::vector<int>> trace_walks(const RawMap& m) {
    const int D = 2 * static_cast<int>(m.edges.size());
    std::vector<int> vtx(D, -1), pos(D, -1);
    for (size_t v = 0; v < m.vertices.size(); ++v)
        for (size_t k = 0; k < m.vertices[v].rot.size(); ++k) {
            vtx[m.vertices[v].rot[k]] = static_cast<int>(v);
            pos[m.vertices[v].rot[k]] = static_cast<int>(k);
        }
    for (int d = 0; d < D; ++d)
        if (vtx[d] < 0) throw Error("dart " + std::to_string(d) + " is not attached to a vertex");
    auto next_side = [&](int s) {
        int e = side_edge(s);
        int arrival = side_is_right(s) ? tail_dart(e) : head_dart(e);
        const auto& r = m.vertices[vtx[arrival]].rot;
        int deg = static_cast<int>(r.size());
        int d = r[(pos[arrival] + deg - 1) % deg];
        return dart_is_head(d) ? right_side(dart_edge(d)) : left_side(dart_edge(d));
    };
    std::vector<std::vector<int>> walks;
    std::vector<char> seen(D, 0);
    for (int s = 0; s < D; ++s) {
        if (seen[s]) continue;
        std::vector<int> w;
        int x = s;
        do {
            if (seen[x]) throw Error("corner data inconsistent: side visited twice");
            seen[x] = 1;
            w.push_back(x);
            x = next_side(x);
        } while (x != s);
        walks.push_back(std::move(w));
    }
    return walks;
}

CurveSystem assemble(RawMap m, int num_regions, const std::function<int(int)>& side_region,
                     const std::function<int(int, int)>& genus_of) {
    CurveSystem s;
    s.walks = trace_walks(m);
    s.names = std::move(m.names);
    s.curves = std::move(m.curves);
    s.edges = std::move(m.edges);
    s.vertices = std::move(m.vertices);
    s.regions.assign(num_regions, Region{});
    for (size_t w = 0; w < s.walks.size(); ++w) {
        int r = side_region(s.walks[w][0]);
        for (int side : s.walks[w])
            if (side_region(side) != r) throw Error("assemble: boundary walk spans two regions");
        if (r < 0 || r >= num_regions) throw Error("assemble: region index out of range");
        s.regions[r].walks.push_back(static_cast<int>(w));
    }
    for (int r = 0; r < num_regions; ++r) {
        if (s.regions[r].walks.empty()) throw Error("assemble: region without boundary");
        s.regions[r].genus = genus_of(r, static_cast<int>(s.regions[r].walks.size()));
        if (s.regions[r].genus < 0) throw Error("assemble: negative genus");
    }
    s.index();
    return s;
}

void validate(const CurveSystem& s) {
    const int V = s.num_vertices(), E = s.num_edges(), C = s.num_curves();
    const int D = 2 * E;
    if (static_cast<int>(s.names.size()) != C) throw Error("curve name list does not match curves");
    {
        std::set<std::string> seen;
        for (const auto& n : s.names)
            if (n.empty() || !seen.insert(n).second) throw Error("duplicate or empty curve name '" + n + "'");
    }
    for (int e = 0; e < E; ++e) {
        const Edge& ed = s.edges[e];
        if (ed.curve < 0 || ed.curve >= C)
            throw Error("edge " + s.edge_name(e) + ": unknown curve label");
        if (ed.tail < 0 || ed.tail >= V || ed.head < 0 || ed.head >= V)
            throw Error("edge " + s.edge_name(e) + ": endpoint is not a vertex");
    }
    // darts
    std::vector<int> where(D, -1);
    for (int v = 0; v < V; ++v) {
        const auto& rot = s.vertices[v].rot;
        if (rot.size() != 2 && rot.size() != 4)
            throw Error("vertex " + s.vertex_name(v) + ": degree " + std::to_string(rot.size()) +
                        " not in {2,4}");
        for (int d : rot) {
            if (d < 0 || d >= D) throw Error("vertex " + s.vertex_name(v) + ": unknown dart");
            if (where[d] >= 0) throw Error("dart " + dart_label(s, d) + " listed twice");
            where[d] = v;
            if (s.vertex_of(d) != v)
                throw Error("dart " + dart_label(s, d) + " listed at vertex " + s.vertex_name(v) +
                            " but edge ends elsewhere");
        }
    }
    for (int d = 0; d < D; ++d)
        if (where[d] < 0) throw Error("dart " + dart_label(s, d) + " missing from every vertex");
    // curves
    std::vector<int> edge_owner(E, -1);
    for (int c = 0; c < C; ++c) {
        const auto& seq = s.curves[c];
        if (seq.empty()) throw Error("curve " + s.names[c] + " has no edges");
        for (size_t i = 0; i < seq.size(); ++i) {
            int e = seq[i];
            if (e < 0 || e >= E) throw Error("curve " + s.names[c] + ": unknown edge");
            if (edge_owner[e] >= 0) throw Error("edge " + s.edge_name(e) + " used twice by curves");
            edge_owner[e] = c;
            if (s.edges[e].curve != c)
                throw Error("edge " + s.edge_name(e) + " listed in curve " + s.names[c] +
                            " but labeled " + s.names[s.edges[e].curve]);
            int nxt = seq[(i + 1) % seq.size()];
            if (nxt < 0 || nxt >= E || s.edges[e].head != s.edges[nxt].tail)
                throw Error("curve " + s.names[c] + " is not closed at edge " + s.edge_name(e));
        }
    }
    for (int e = 0; e < E; ++e)
        if (edge_owner[e] < 0) throw Error("edge " + s.edge_name(e) + " belongs to no curve");
    // transversality
    for (int v = 0; v < V; ++v) {
        const auto& rot = s.vertices[v].rot;
        auto cv = [&](int k) { return s.edges[dart_edge(rot[k])].curve; };
        if (rot.size() == 2) {
            if (cv(0) != cv(1))
                throw Error("marker vertex " + s.vertex_name(v) + " has darts of two curves");
        } else {
            if (cv(0) != cv(2) || cv(1) != cv(3) || cv(0) == cv(1))
                throw Error("transversality violated at vertex " + s.vertex_name(v));
            if (dart_is_head(rot[0]) == dart_is_head(rot[2]) ||
                dart_is_head(rot[1]) == dart_is_head(rot[3]))
                throw Error("transversality violated at vertex " + s.vertex_name(v) +
                            ": curve does not pass straight through");
        }
    }
    // walks and regions
    std::vector<int> side_seen(D, -1);
    for (size_t w = 0; w < s.walks.size(); ++w) {
        if (s.walks[w].empty()) throw Error("empty boundary walk");
        for (int side : s.walks[w]) {
            if (side < 0 || side >= D) throw Error("boundary walk lists an unknown side");
            if (side_seen[side] >= 0) throw Error("edge-side " + side_label(s, side) + " appears twice");
            side_seen[side] = static_cast<int>(w);
        }
    }
    for (int side = 0; side < D; ++side)
        if (side_seen[side] < 0) throw Error("edge-side " + side_label(s, side) + " is in no boundary walk");
    std::vector<int> walk_owner(s.walks.size(), -1);
    for (int r = 0; r < s.num_regions(); ++r) {
        if (s.regions[r].genus < 0) throw Error("region " + s.region_name(r) + ": negative genus");
        if (s.regions[r].walks.empty()) throw Error("region " + s.region_name(r) + " has no boundary walk");
        for (int w : s.regions[r].walks) {
            if (w < 0 || w >= static_cast<int>(s.walks.size()))
                throw Error("region " + s.region_name(r) + ": unknown walk");
            if (walk_owner[w] >= 0) throw Error("boundary walk claimed by two regions");
            walk_owner[w] = r;
        }
    }
    for (size_t w = 0; w < s.walks.size(); ++w)
        if (walk_owner[w] < 0) throw Error("boundary walk belongs to no region");
    // corners: every listed walk must follow the rotation system
    {
        RawMap m{s.names, s.curves, s.edges, s.vertices};
        auto traced = trace_walks(m);
        std::vector<int> next(D, -1);
        for (const auto& w : traced)
            for (size_t i = 0; i < w.size(); ++i) next[w[i]] = w[(i + 1) % w.size()];
        for (size_t w = 0; w < s.walks.size(); ++w) {
            const auto& wk = s.walks[w];
            for (size_t i = 0; i < wk.size(); ++i)
                if (next[wk[i]] != wk[(i + 1) % wk.size()])
                    throw Error("boundary walk of region " + s.region_name(walk_owner[w]) +
                                " inconsistent with corner data after side " + side_label(s, wk[i]));
        }
    }
    int chi = euler_characteristic(s);
    if (chi % 2 != 0) throw Error("Euler characteristic " + std::to_string(chi) + " is odd");
    if (chi > 2) throw Error("Euler characteristic " + std::to_string(chi) + " exceeds 2");
    // connectivity through edges
    UnionFind uf(s.num_regions());
    std::vector<int> sw(D);
    for (size_t w = 0; w < s.walks.size(); ++w)
        for (int side : s.walks[w]) sw[side] = walk_owner[w];
    for (int e = 0; e < E; ++e) uf.unite(sw[left_side(e)], sw[right_side(e)]);
    int comps = 0;
    uf.labels(&comps);
    if (comps != 1) throw Error("surface is disconnected");
}

int euler_characteristic(const CurveSystem& s) {
    int chi = s.num_vertices() - s.num_edges();
    for (const auto& r : s.regions) chi += 2 - 2 * r.genus - static_cast<int>(r.walks.size());
    return chi;
}

int ambient_genus(const CurveSystem& s) { return (2 - euler_characteristic(s)) / 2; }

std::vector<int> crossing_vertices(const CurveSystem& s, int c1, int c2) {
    if (c1 == c2) throw Error("intersection of a curve with itself is undefined here");
    std::vector<int> out;
    for (int v = 0; v < s.num_vertices(); ++v) {
        const auto& rot = s.vertices[v].rot;
        if (rot.size() != 4) continue;
        int a = s.edges[dart_edge(rot[0])].curve, b = s.edges[dart_edge(rot[1])].curve;
        if ((a == c1 && b == c2) || (a == c2 && b == c1)) out.push_back(v);
    }
    return out;
}

int geometric_intersection(const CurveSystem& s, int c1, int c2) {
    return static_cast<int>(crossing_vertices(s, c1, c2).size());
}

int signed_intersection(const CurveSystem& s, int c1, int c2) {
    int total = 0;
    for (int v : crossing_vertices(s, c1, c2)) {
        const auto& rot = s.vertices[v].rot;
        int k = 0;
        while (!(s.edges[dart_edge(rot[k])].curve == c1 && !dart_is_head(rot[k]))) ++k;
        int nxt = rot[(k + 1) % 4];
        total += dart_is_head(nxt) ? -1 : 1;
    }
    return total;
}

int algebraic_intersection(const CurveSystem& s, int c1, int c2) {
    return std::abs(signed_intersection(s, c1, c2));
}

std::vector<int> component_labels(const CurveSystem& s, const std::vector<int>& cut_set) {
    std::vector<char> cut(s.num_curves(), 0);
    for (int c : cut_set) cut[c] = 1;
    UnionFind uf(s.num_regions());
    for (int e = 0; e < s.num_edges(); ++e)
        if (!cut[s.edges[e].curve]) uf.unite(s.region_of_side(left_side(e)), s.region_of_side(right_side(e)));
    return uf.labels();
}

std::vector<std::vector<int>> complement_components(const CurveSystem& s, const std::vector<int>& cut_set) {
    auto lab = component_labels(s, cut_set);
    int k = lab.empty() ? 0 : *std::max_element(lab.begin(), lab.end()) + 1;
    std::vector<std::vector<int>> out(k);
    for (int r = 0; r < s.num_regions(); ++r) out[lab[r]].push_back(r);
    return out;
}

bool is_separating(const CurveSystem& s, int c) { return complement_components(s, {c}).size() == 2; }

std::vector<int> region_coloring(const CurveSystem& s, const std::vector<int>& flip_curves) {
    std::vector<char> flip(s.num_curves(), 0);
    for (int c : flip_curves) flip[c] ^= 1;
    ParityUnionFind uf(s.num_regions());
    for (int e = 0; e < s.num_edges(); ++e)
        if (!uf.relate(s.region_of_side(left_side(e)), s.region_of_side(right_side(e)), flip[s.edges[e].curve]))
            return {};
    std::vector<int> color(s.num_regions());
    for (int r = 0; r < s.num_regions(); ++r) uf.find(r, color[r]);
    return color;
}

bool mod2_class_equal(const CurveSystem& s, const std::vector<int>& set1, const std::vector<int>& set2) {
    std::vector<int> sym(set1);
    sym.insert(sym.end(), set2.begin(), set2.end());
    return !region_coloring(s, sym).empty() || s.num_regions() == 0;
}

Restriction restrict_to(const CurveSystem& s, const std::vector<int>& keep) {
    const int C = s.num_curves(), R = s.num_regions();
    std::vector<int> newc(C, -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= C || newc[keep[i]] >= 0) throw Error("restrict: bad curve list");
        newc[keep[i]] = static_cast<int>(i);
    }
    if (keep.empty()) throw Error("restrict: nothing kept");
    auto kept_edge = [&](int e) { return newc[s.edges[e].curve] >= 0; };

    UnionFind uf(R);
    for (int e = 0; e < s.num_edges(); ++e)
        if (!kept_edge(e)) uf.unite(s.region_of_side(left_side(e)), s.region_of_side(right_side(e)));
    int F = 0;
    auto lab = uf.labels(&F);

    std::vector<int> chi(F, 0);
    for (int r = 0; r < R; ++r)
        chi[lab[r]] += 2 - 2 * s.regions[r].genus - static_cast<int>(s.regions[r].walks.size());
    for (int e = 0; e < s.num_edges(); ++e)
        if (!kept_edge(e)) chi[lab[s.region_of_side(left_side(e))]] -= 1;
    for (int v = 0; v < s.num_vertices(); ++v) {
        bool any = false;
        for (int d : s.vertices[v].rot) any = any || kept_edge(dart_edge(d));
        if (!any) chi[lab[s.region_of_side(left_side(dart_edge(s.vertices[v].rot[0])))]] += 1;
    }

    RawMap m;
    std::vector<int> newv(s.num_vertices(), -1);
    for (int v = 0; v < s.num_vertices(); ++v) {
        const auto& rot = s.vertices[v].rot;
        if (rot.size() != 4) continue;
        bool all = true;
        for (int d : rot) all = all && kept_edge(dart_edge(d));
        if (all) {
            newv[v] = static_cast<int>(m.vertices.size());
            m.vertices.push_back(Vertex{});
        }
    }
    std::vector<int> dart_map(2 * s.num_edges(), -1);
    std::vector<int> side_origin;  // new side -> old side
    for (int c : keep) {
        const auto& seq = s.curves[c];
        const int n = static_cast<int>(seq.size());
        m.names.push_back(s.names[c]);
        m.curves.emplace_back();
        const int nc = static_cast<int>(m.curves.size()) - 1;
        int start = -1;
        for (int i = 0; i < n; ++i)
            if (newv[s.edges[seq[i]].tail] >= 0) {
                start = i;
                break;
            }
        if (start < 0) {
            int mv = static_cast<int>(m.vertices.size());
            int ne = static_cast<int>(m.edges.size());
            m.vertices.push_back(Vertex{{tail_dart(ne), head_dart(ne)}});
            m.edges.push_back(Edge{nc, mv, mv});
            m.curves[nc].push_back(ne);
            side_origin.push_back(left_side(seq[0]));
            side_origin.push_back(right_side(seq[0]));
            continue;
        }
        int i = 0;
        while (i < n) {
            int first = seq[(start + i) % n];
            int j = i;
            while (newv[s.edges[seq[(start + j) % n]].head] < 0) ++j;
            int last = seq[(start + j) % n];
            int ne = static_cast<int>(m.edges.size());
            m.edges.push_back(Edge{nc, newv[s.edges[first].tail], newv[s.edges[last].head]});
            m.curves[nc].push_back(ne);
            dart_map[tail_dart(first)] = tail_dart(ne);
            dart_map[head_dart(last)] = head_dart(ne);
            side_origin.push_back(left_side(first));
            side_origin.push_back(right_side(first));
            i = j + 1;
        }
    }
    for (int v = 0; v < s.num_vertices(); ++v)
        if (newv[v] >= 0)
            for (int d : s.vertices[v].rot) m.vertices[newv[v]].rot.push_back(dart_map[d]);

    Restriction out;
    out.sys = assemble(
        std::move(m), F, [&](int side) { return lab[s.region_of_side(side_origin[side])]; },
        [&](int f, int b) {
            int twice = 2 - b - chi[f];
            if (twice < 0 || twice % 2) throw Error("restrict: inconsistent Euler count");
            return twice / 2;
        });
    out.origin.assign(F, {});
    for (int r = 0; r < R; ++r) out.origin[lab[r]].push_back(r);
    out.region_map = lab;
    out.side_origin = std::move(side_origin);
    return out;
}

CurveSystem normalize(const CurveSystem& s) {
    std::vector<int> all(s.num_curves());
    std::iota(all.begin(), all.end(), 0);
    return restrict_to(s, all).sys;
}

namespace {

int count_runs(const CurveSystem& s, const std::vector<int>& walk) {
    int runs = 0;
    for (size_t i = 0; i < walk.size(); ++i)
        if (s.curve_of_side(walk[i]) != s.curve_of_side(walk[(i + walk.size() - 1) % walk.size()])) ++runs;
    return runs;
}

}  // namespace

std::vector<std::vector<int>> detect_bigons(const CurveSystem& s, int c1, int c2) {
    auto res = restrict_to(s, {c1, c2});
    std::vector<std::vector<int>> out;
    for (int r = 0; r < res.sys.num_regions(); ++r) {
        const Region& reg = res.sys.regions[r];
        if (reg.genus == 0 && reg.walks.size() == 1 && count_runs(res.sys, res.sys.walks[reg.walks[0]]) == 2)
            out.push_back(res.origin[r]);
    }
    return out;
}

std::vector<std::vector<int>> detect_annuli(const CurveSystem& s, int c1, int c2) {
    auto res = restrict_to(s, {c1, c2});
    std::vector<std::vector<int>> out;
    for (int r = 0; r < res.sys.num_regions(); ++r) {
        const Region& reg = res.sys.regions[r];
        if (reg.genus != 0 || reg.walks.size() != 2) continue;
        const auto& w0 = res.sys.walks[reg.walks[0]];
        const auto& w1 = res.sys.walks[reg.walks[1]];
        if (count_runs(res.sys, w0) != 0 || count_runs(res.sys, w1) != 0) continue;
        if (res.sys.curve_of_side(w0[0]) != res.sys.curve_of_side(w1[0])) out.push_back(res.origin[r]);
    }
    return out;
}

bool in_minimal_position(const CurveSystem& s, int c1, int c2) { return detect_bigons(s, c1, c2).empty(); }

bool homotopic_disjoint(const CurveSystem& s, int c1, int c2) {
    return geometric_intersection(s, c1, c2) == 0 && !detect_annuli(s, c1, c2).empty();
}

CurveSystem add_handle(const CurveSystem& s, int r1, int r2) {
    if (r1 < 0 || r2 < 0 || r1 >= s.num_regions() || r2 >= s.num_regions())
        throw Error("add_handle: unknown region");
    CurveSystem out = s;
    if (r1 == r2) {
        out.regions[r1].genus += 1;
        return out;
    }
    if (r2 < r1) std::swap(r1, r2);
    Region& a = out.regions[r1];
    a.genus += s.regions[r2].genus;
    a.walks.insert(a.walks.end(), s.regions[r2].walks.begin(), s.regions[r2].walks.end());
    out.regions.erase(out.regions.begin() + r2);
    if (static_cast<int>(out.region_ids.size()) > r2) out.region_ids.erase(out.region_ids.begin() + r2);
    out.index();
    return out;
}

CurveSystem stabilize(const CurveSystem& s, int r) { return add_handle(s, r, r); }

std::pair<CurveSystem, int> insert_region_curve(const CurveSystem& s, const RegionCurve& spec,
                                                const std::string& name) {
    if (spec.region < 0 || spec.region >= s.num_regions()) throw Error("insert: unknown region");
    const Region& reg = s.regions[spec.region];
    CurveSystem out = s;
    const int c = out.num_curves(), e = out.num_edges(), v = out.num_vertices();
    const int w = static_cast<int>(out.walks.size());
    out.names.push_back(name.empty() ? "x" + std::to_string(c) : name);
    out.curves.push_back({e});
    out.edges.push_back(Edge{c, v, v});
    out.vertices.push_back(Vertex{{tail_dart(e), head_dart(e)}});
    out.walks.push_back({left_side(e)});
    out.walks.push_back({right_side(e)});
    if (!out.vertex_ids.empty()) out.vertex_ids.push_back("m_" + out.names.back());
    if (!out.edge_ids.empty()) out.edge_ids.push_back("e_" + out.names.back());
    if (spec.handle) {
        if (reg.genus < 1) throw Error("insert: handle curve needs a region of positive genus");
        out.regions[spec.region].genus -= 1;
        out.regions[spec.region].walks.push_back(w);
        out.regions[spec.region].walks.push_back(w + 1);
    } else {
        std::set<int> left(spec.walks_left.begin(), spec.walks_left.end());
        for (int x : left)
            if (std::find(reg.walks.begin(), reg.walks.end(), x) == reg.walks.end())
                throw Error("insert: walk not on the region boundary");
        Region lr, rr;
        lr.genus = spec.genus_left;
        rr.genus = reg.genus - spec.genus_left;
        if (lr.genus < 0 || rr.genus < 0) throw Error("insert: genus split out of range");
        for (int x : reg.walks) (left.count(x) ? lr : rr).walks.push_back(x);
        if ((lr.walks.empty() && lr.genus == 0) || (rr.walks.empty() && rr.genus == 0))
            throw Error("insert: curve would bound a disk");
        lr.walks.push_back(w);
        rr.walks.push_back(w + 1);
        out.regions[spec.region] = lr;
        out.regions.push_back(rr);
        if (!out.region_ids.empty()) out.region_ids.push_back(out.region_name(spec.region) + "'");
    }
    out.index();
    return {out, c};
}

std::pair<CurveSystem, int> insert_pushoff(const CurveSystem& s, int r, int walk_index, const std::string& name) {
    if (r < 0 || r >= s.num_regions()) throw Error("pushoff: unknown region");
    if (walk_index < 0 || walk_index >= static_cast<int>(s.regions[r].walks.size()))
        throw Error("pushoff: walk index out of range");
    RegionCurve spec;
    spec.region = r;
    spec.walks_left = {s.regions[r].walks[walk_index]};
    return insert_region_curve(s, spec, name);
}

CutSurface cut_along(const CurveSystem& s, int c) {
    const int V = s.num_vertices(), E = s.num_edges(), C = s.num_curves(), R = s.num_regions();
    const auto& seq = s.curves[c];
    const int m = static_cast<int>(seq.size());
    RawMap raw{s.names, s.curves, s.edges, s.vertices};
    raw.names[c] = s.names[c] + "_1";
    raw.names.push_back(s.names[c] + "_2");
    raw.curves.emplace_back();
    std::vector<int> on_cut(V, -1);
    for (int j = 0; j < m; ++j) on_cut[s.edges[seq[j]].tail] = j;
    for (int j = 0; j < m; ++j) {
        raw.vertices.push_back(Vertex{});
        raw.edges.push_back(Edge{C, V + j, V + (j + 1) % m});
        raw.curves[C].push_back(E + j);
    }
    for (int j = 0; j < m; ++j) {
        int v = s.edges[seq[j]].tail;
        int out_d = tail_dart(seq[j]);
        int in_d = head_dart(seq[(j + m - 1) % m]);
        const auto& rot = s.vertices[v].rot;
        std::vector<int> r1{out_d}, r2{tail_dart(E + j), head_dart(E + (j + m - 1) % m)};
        if (rot.size() == 4) {
            int k = s.dart_pos[out_d];
            int x1 = rot[(k + 1) % 4], x2 = rot[(k + 3) % 4];
            r1.push_back(x1);
            r2.push_back(x2);
            Edge& ex2 = raw.edges[dart_edge(x2)];
            (dart_is_head(x2) ? ex2.head : ex2.tail) = V + j;
        }
        r1.push_back(in_d);
        raw.vertices[v].rot = r1;
        raw.vertices[V + j].rot = r2;
    }
    CutSurface cs;
    cs.copy1 = c;
    cs.copy2 = C;
    cs.cap1 = R;
    cs.cap2 = R + 1;
    cs.base_vertices = V;
    cs.base_edges = E;
    std::vector<int> side_reg(2 * (E + m));
    for (int e = 0; e < E; ++e) {
        side_reg[left_side(e)] = s.region_of_side(left_side(e));
        side_reg[right_side(e)] = s.region_of_side(right_side(e));
    }
    for (int j = 0; j < m; ++j) {
        side_reg[right_side(seq[j])] = R;
        side_reg[left_side(E + j)] = R + 1;
        side_reg[right_side(E + j)] = s.region_of_side(right_side(seq[j]));
    }
    cs.sys = assemble(
        std::move(raw), R + 2, [&](int side) { return side_reg[side]; },
        [&](int r, int) { return r < R ? s.regions[r].genus : 0; });
    cs.sys.vertex_ids = s.vertex_ids;
    cs.sys.edge_ids = s.edge_ids;
    cs.sys.region_ids = s.region_ids;
    for (int x = 0; x < C; ++x) {
        if (x == c) continue;
        const auto& xs = s.curves[x];
        const int n = static_cast<int>(xs.size());
        int start = -1;
        for (int i = 0; i < n; ++i)
            if (on_cut[s.edges[xs[i]].tail] >= 0) {
                start = i;
                break;
            }
        if (start < 0) {
            cs.closed_curves.push_back(x);
            continue;
        }
        auto copy_of = [&](int vtx) { return vtx >= V ? 2 : 1; };
        CutSurface::Arc arc;
        for (int i = 0; i < n; ++i) {
            int e = xs[(start + i) % n];
            if (arc.edges.empty()) {
                arc.curve = x;
                arc.start_copy = copy_of(cs.sys.edges[e].tail);
            }
            arc.edges.push_back(e);
            if (on_cut[s.edges[e].head] >= 0) {
                arc.end_copy = copy_of(cs.sys.edges[e].head);
                cs.arcs.push_back(arc);
                arc = CutSurface::Arc{};
            }
        }
    }
    return cs;
}

CurveSystem reglue(const CutSurface& cs) {
    const CurveSystem& t = cs.sys;
    const int V = cs.base_vertices, E = cs.base_edges;
    const int c = cs.copy1;
    RawMap raw;
    raw.names.assign(t.names.begin(), t.names.begin() + cs.copy2);
    std::string nm = raw.names[c];
    if (nm.size() > 2 && nm.substr(nm.size() - 2) == "_1") nm.resize(nm.size() - 2);
    raw.names[c] = nm;
    raw.curves.assign(t.curves.begin(), t.curves.begin() + cs.copy2);
    raw.edges.assign(t.edges.begin(), t.edges.begin() + E);
    raw.vertices.assign(t.vertices.begin(), t.vertices.begin() + V);
    const auto& seq = t.curves[c];
    const int m = static_cast<int>(seq.size());
    for (auto& e : raw.edges) {
        if (e.tail >= V) e.tail = t.edges[seq[e.tail - V]].tail;
        if (e.head >= V) e.head = t.edges[seq[e.head - V]].tail;
    }
    for (int j = 0; j < m; ++j) {
        int v = t.edges[seq[j]].tail;
        const auto& r1 = t.vertices[v].rot;
        const auto& r2 = t.vertices[V + j].rot;
        std::vector<int> rot{r1[0]};
        if (r1.size() == 3) rot.push_back(r1[1]);
        rot.push_back(r1.back());
        if (r2.size() == 3) rot.push_back(r2[2]);
        raw.vertices[v].rot = rot;
    }
    std::vector<int> side_reg(2 * E);
    for (int e = 0; e < E; ++e) {
        side_reg[left_side(e)] = t.region_of_side(left_side(e));
        side_reg[right_side(e)] = t.region_of_side(right_side(e));
    }
    for (int j = 0; j < m; ++j) side_reg[right_side(seq[j])] = t.region_of_side(right_side(E + j));
    const int R = t.num_regions() - 2;
    CurveSystem out = assemble(
        std::move(raw), R, [&](int side) { return side_reg[side]; },
        [&](int r, int) { return t.regions[r].genus; });
    out.vertex_ids = t.vertex_ids;
    out.edge_ids = t.edge_ids;
    out.region_ids = t.region_ids;
    return out;
}

}  // namespace scc
