#include "scc/strands.hpp"

#include <algorithm>
#include <map>

namespace scc {

namespace {

// Region in the angle between dart y and cw(y).
int corner_region(const CurveSystem& s, int y) {
    int e = dart_edge(y);
    return s.region_of_side(dart_is_head(y) ? left_side(e) : right_side(e));
}

// Side of the edge of `dart` that a strand leaving along it keeps next to.
int followed_side(int dart, bool left) {
    int e = dart_edge(dart);
    bool forward = !dart_is_head(dart);
    return forward == left ? left_side(e) : right_side(e);
}

std::string fresh_name(const CurveSystem& s, const std::string& want) {
    std::string n = want.empty() ? "s" + std::to_string(s.num_curves()) : want;
    while (std::find(s.names.begin(), s.names.end(), n) != s.names.end()) n += "'";
    return n;
}

struct Event {
    int edge = -1;
    int pos = 0;             // 0 near the tail, 1 midway, 2 near the head
    bool from_left = false;  // crosses from the left side of the edge to its right
    int region = -1;         // region of the strand piece starting here
    bool hand_left = true;   // hand of that piece
};

void extend_ids(const CurveSystem& s, CurveSystem& out, const std::string& tag) {
    if (!s.vertex_ids.empty())
        for (int v = static_cast<int>(out.vertex_ids.size()); v < out.num_vertices(); ++v)
            out.vertex_ids.push_back("v_" + tag + "_" + std::to_string(v));
    if (!s.edge_ids.empty())
        for (int e = static_cast<int>(out.edge_ids.size()); e < out.num_edges(); ++e)
            out.edge_ids.push_back("e_" + tag + "_" + std::to_string(e));
    if (!s.region_ids.empty())
        for (int r = static_cast<int>(out.region_ids.size()); r < out.num_regions(); ++r)
            out.region_ids.push_back("r_" + tag + "_" + std::to_string(r));
}

void replace_dart(RawMap& m, int v, int from, int to) {
    auto& rot = m.vertices[v].rot;
    auto it = std::find(rot.begin(), rot.end(), from);
    if (it == rot.end()) throw Error("internal: dart missing from its vertex");
    *it = to;
}

void insert_after(RawMap& m, int curve, int e, const std::vector<int>& pieces) {
    auto& seq = m.curves[curve];
    auto it = std::find(seq.begin(), seq.end(), e);
    seq.insert(it + 1, pieces.begin(), pieces.end());
}

}  // namespace

std::pair<CurveSystem, int> insert_strand(const CurveSystem& s, const std::vector<Leg>& legs,
                                          const std::string& name) {
    const int n = static_cast<int>(legs.size());
    if (n == 0) throw Error("strand: no legs");
    for (const auto& l : legs)
        if (l.dart < 0 || l.dart >= 2 * s.num_edges()) throw Error("strand: unknown dart");

    std::vector<Event> ev;
    bool hand = legs[0].left;
    int cur = s.region_of_side(followed_side(legs[0].dart, hand));
    for (int i = 0; i < n; ++i) {
        const Leg& L = legs[i];
        if (L.left != hand) throw Error("strand: hand changes without crossing");
        if (s.region_of_side(followed_side(L.dart, hand)) != cur) throw Error("strand: leg leaves its region");
        const int e = dart_edge(L.dart);
        const bool fwd = !dart_is_head(L.dart);
        if (L.cross_mid) {
            Event x;
            x.edge = e;
            x.pos = 1;
            x.from_left = (fwd == hand);
            hand = !hand;
            x.hand_left = hand;
            x.region = s.region_of_side(followed_side(L.dart, hand));
            cur = x.region;
            ev.push_back(x);
        }
        const int a = L.dart ^ 1;
        const int next = legs[(i + 1) % n].dart;
        if (s.vertex_of(next) != s.vertex_of(a)) throw Error("strand: consecutive legs do not meet");
        auto step = [&](int d) { return hand ? s.cw(d) : s.ccw(d); };
        for (int x = step(a); x != next; x = step(x)) {
            int before = hand ? corner_region(s, s.ccw(x)) : corner_region(s, x);
            if (before != cur) throw Error("strand: sweep leaves its region");
            Event y;
            y.edge = dart_edge(x);
            y.pos = dart_is_head(x) ? 2 : 0;
            y.from_left = (!dart_is_head(x)) == hand;
            y.hand_left = hand;
            y.region = hand ? corner_region(s, x) : corner_region(s, step(x));
            cur = y.region;
            ev.push_back(y);
        }
    }
    if (hand != legs[0].left || cur != s.region_of_side(followed_side(legs[0].dart, hand)))
        throw Error("strand: does not close up");
    if (ev.empty()) throw Error("strand: crosses nothing (use a region curve)");
    const int K = static_cast<int>(ev.size());

    std::map<int, std::vector<std::pair<int, int>>> per_edge;  // edge -> (pos, event)
    for (int k = 0; k < K; ++k) per_edge[ev[k].edge].push_back({ev[k].pos, k});

    RawMap m{s.names, s.curves, s.edges, s.vertices};
    const int C = s.num_curves();
    const std::string cname = fresh_name(s, name);
    m.names.push_back(cname);
    m.curves.emplace_back();

    std::vector<int> ev_vertex(K), ev_in(K), ev_out(K), piece_parent;
    for (auto& [e, lst] : per_edge) {
        std::sort(lst.begin(), lst.end());
        for (size_t k = 1; k < lst.size(); ++k)
            if (lst[k].first == lst[k - 1].first) throw Error("strand: crosses the same spot twice");
        const int orig_head = s.edges[e].head;
        int prev = e;
        std::vector<int> pieces;
        for (auto [pos, k] : lst) {
            int u = static_cast<int>(m.vertices.size());
            m.vertices.emplace_back();
            int ne = static_cast<int>(m.edges.size());
            m.edges.push_back(Edge{s.edges[e].curve, u, -1});
            piece_parent.push_back(e);
            m.edges[prev].head = u;
            ev_vertex[k] = u;
            ev_in[k] = head_dart(prev);
            ev_out[k] = tail_dart(ne);
            pieces.push_back(ne);
            prev = ne;
        }
        m.edges[prev].head = orig_head;
        replace_dart(m, orig_head, head_dart(e), head_dart(prev));
        insert_after(m, s.edges[e].curve, e, pieces);
    }
    const int E1 = static_cast<int>(m.edges.size());
    for (int j = 0; j < K; ++j) {
        m.edges.push_back(Edge{C, ev_vertex[j], ev_vertex[(j + 1) % K]});
        m.curves[C].push_back(E1 + j);
    }
    for (int j = 0; j < K; ++j) {
        int b_out = tail_dart(E1 + j), b_in = head_dart(E1 + (j + K - 1) % K);
        if (!ev[j].from_left) m.vertices[ev_vertex[j]].rot = {ev_out[j], b_out, ev_in[j], b_in};
        else m.vertices[ev_vertex[j]].rot = {ev_out[j], b_in, ev_in[j], b_out};
    }

    // original region of every side, and which strand sides face the edges followed
    const int D = 2 * static_cast<int>(m.edges.size());
    std::vector<int> orig(D, -1);
    std::vector<char> outer(D, 0), inner(D, 0);
    for (int e = 0; e < s.num_edges(); ++e) {
        orig[left_side(e)] = s.region_of_side(left_side(e));
        orig[right_side(e)] = s.region_of_side(right_side(e));
    }
    for (size_t p = 0; p < piece_parent.size(); ++p) {
        int e = s.num_edges() + static_cast<int>(p);
        orig[left_side(e)] = s.region_of_side(left_side(piece_parent[p]));
        orig[right_side(e)] = s.region_of_side(right_side(piece_parent[p]));
    }
    for (int j = 0; j < K; ++j) {
        int e = E1 + j;
        orig[left_side(e)] = orig[right_side(e)] = ev[j].region;
        int out_side = ev[j].hand_left ? right_side(e) : left_side(e);
        outer[out_side] = 1;
        inner[out_side ^ 1] = 1;
    }

    auto walks = trace_walks(m);
    const int R0 = s.num_regions();
    int R = R0;
    std::vector<int> side_region(D, -1), body_walks(R0, 0);
    for (const auto& w : walks) {
        bool has_outer = false, has_inner = false;
        for (int x : w) {
            has_outer |= outer[x] != 0;
            has_inner |= inner[x] != 0;
        }
        if (has_outer && has_inner) throw Error("strand: inconsistent arrangement");
        int r;
        if (has_outer) {
            r = R++;
        } else {
            r = orig[w[0]];
            for (int x : w)
                if (orig[x] != r) throw Error("strand: inconsistent arrangement");
            ++body_walks[r];
        }
        for (int x : w) side_region[x] = r;
    }
    for (int r = 0; r < R0; ++r)
        if (body_walks[r] != static_cast<int>(s.regions[r].walks.size()))
            throw Error("strand: region " + s.region_name(r) + " changed its boundary");

    CurveSystem out = assemble(
        std::move(m), R, [&](int x) { return side_region[x]; },
        [&](int r, int) { return r < R0 ? s.regions[r].genus : 0; });
    out.vertex_ids = s.vertex_ids;
    out.edge_ids = s.edge_ids;
    out.region_ids = s.region_ids;
    extend_ids(s, out, cname);
    validate(out);
    if (ambient_genus(out) != ambient_genus(s)) throw Error("strand: ambient genus changed");
    return {out, C};
}

std::vector<std::vector<int>> neighborhood_walks(const CurveSystem& s, const std::vector<int>& curves) {
    std::vector<char> in(s.num_edges(), 0);
    for (int c : curves)
        for (int e : s.curves.at(c)) in[e] = 1;
    auto next = [&](int side) {
        int e = side_edge(side);
        int d = s.cw(side_is_right(side) ? tail_dart(e) : head_dart(e));
        while (!in[dart_edge(d)]) d = s.cw(d);
        return dart_is_head(d) ? right_side(dart_edge(d)) : left_side(dart_edge(d));
    };
    std::vector<std::vector<int>> walks;
    std::vector<char> seen(2 * s.num_edges(), 0);
    for (int x = 0; x < 2 * s.num_edges(); ++x) {
        if (!in[side_edge(x)] || seen[x]) continue;
        std::vector<int> w;
        int y = x;
        do {
            seen[y] = 1;
            w.push_back(y);
            y = next(y);
        } while (y != x);
        walks.push_back(std::move(w));
    }
    return walks;
}

namespace {

std::vector<Leg> walk_legs(const std::vector<int>& walk) {
    std::vector<Leg> legs;
    for (int x : walk) {
        int e = side_edge(x);
        legs.push_back(Leg{side_is_right(x) ? head_dart(e) : tail_dart(e), true, false});
    }
    return legs;
}

bool sweeps_nothing(const CurveSystem& s, const std::vector<Leg>& legs) {
    for (size_t i = 0; i < legs.size(); ++i)
        if (legs[i].cross_mid || s.cw(legs[i].dart ^ 1) != legs[(i + 1) % legs.size()].dart) return false;
    return true;
}

std::pair<CurveSystem, int> pushoff_of_side_walk(const CurveSystem& s, int side, const std::string& name) {
    int w = s.side_walk[side];
    int r = s.walk_region[w];
    const auto& ws = s.regions[r].walks;
    int idx = static_cast<int>(std::find(ws.begin(), ws.end(), w) - ws.begin());
    return insert_pushoff(s, r, idx, fresh_name(s, name));
}

}  // namespace

std::pair<CurveSystem, int> insert_neighborhood_pushoff(const CurveSystem& s, const std::vector<int>& curves,
                                                        int walk_index, const std::string& name) {
    auto walks = neighborhood_walks(s, curves);
    if (walk_index < 0 || walk_index >= static_cast<int>(walks.size()))
        throw Error("pushoff: walk index out of range");
    auto legs = walk_legs(walks[walk_index]);
    if (sweeps_nothing(s, legs)) return pushoff_of_side_walk(s, walks[walk_index][0], name);
    return insert_strand(s, legs, name);
}

std::pair<CurveSystem, int> insert_parallel_copy(const CurveSystem& s, int curve, const std::string& name) {
    std::vector<Leg> legs;
    for (int e : s.curves.at(curve)) legs.push_back(Leg{tail_dart(e), true, false});
    if (sweeps_nothing(s, legs)) return pushoff_of_side_walk(s, left_side(s.curves[curve][0]), name);
    return insert_strand(s, legs, name);
}

std::vector<TurnCurve> turn_curves(const CurveSystem& s, int c1, int c2) {
    auto J = crossing_vertices(s, c1, c2);
    if (J.size() != 2) throw Error("turn curve: the two curves must cross exactly twice");
    auto junction = [&](int v) { return v == J[0] || v == J[1]; };
    auto arcs_of = [&](int c) {
        const auto& seq = s.curves[c];
        const int m = static_cast<int>(seq.size());
        int start = 0;
        while (start < m && !junction(s.edges[seq[start]].tail)) ++start;
        std::vector<std::vector<int>> arcs;
        for (int k = 0; k < m; ++k) {
            int e = seq[(start + k) % m];
            if (junction(s.edges[e].tail)) arcs.emplace_back();
            arcs.back().push_back(e);
        }
        return arcs;
    };
    const auto arcs1 = arcs_of(c1), arcs2 = arcs_of(c2);
    auto slot = [&](int d) { return std::make_pair(s.vertex_of(d), s.dart_pos[d]); };

    std::vector<TurnCurve> out;
    for (int ai = 0; ai < static_cast<int>(arcs1.size()); ++ai) {
        const auto& alpha = arcs1[ai];
        auto key = std::min(slot(tail_dart(alpha.front())), slot(head_dart(alpha.back())));
        for (int rev = 0; rev < 2; ++rev) {
            std::vector<Leg> a_legs, b_legs;
            if (!rev)
                for (int e : alpha) a_legs.push_back(Leg{tail_dart(e)});
            else
                for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) a_legs.push_back(Leg{head_dart(*it)});
            int b = s.cw(a_legs.back().dart ^ 1);
            if (s.edges[dart_edge(b)].curve != c2) throw Error("turn curve: junction is not a crossing with c2");
            for (const auto& beta : arcs2) {
                if (!dart_is_head(b) && beta.front() == dart_edge(b))
                    for (int e : beta) b_legs.push_back(Leg{tail_dart(e)});
                if (dart_is_head(b) && beta.back() == dart_edge(b))
                    for (auto it = beta.rbegin(); it != beta.rend(); ++it) b_legs.push_back(Leg{head_dart(*it)});
            }
            if (b_legs.empty()) throw Error("turn curve: arc of c2 not found");
            const bool left_turn = s.ccw(b_legs.back().dart ^ 1) == a_legs.front().dart;
            for (int smooth = 0; smooth < 2; ++smooth) {
                if (smooth && !left_turn) continue;
                TurnCurve t;
                t.choice = TurnChoice{ai, rev != 0, smooth != 0};
                t.left_turn = left_turn;
                t.key = key;
                auto al = a_legs, bl = b_legs;
                if (smooth) {
                    for (auto& l : al) l.left = false;
                    al.back().cross_mid = true;
                    bl.back().cross_mid = true;
                }
                t.legs = al;
                t.legs.insert(t.legs.end(), bl.begin(), bl.end());
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

std::pair<CurveSystem, int> insert_turn_curve(const CurveSystem& s, int c1, int c2, const TurnChoice& choice,
                                              const std::string& name) {
    for (const auto& t : turn_curves(s, c1, c2))
        if (t.choice.arc == choice.arc && t.choice.reverse == choice.reverse && t.choice.smooth == choice.smooth)
            return insert_strand(s, t.legs, name);
    throw Error("turn curve: chosen arcs do not close up into a simple curve");
}

std::pair<CurveSystem, int> insert_dual_loop(const CurveSystem& s, int e, const std::string& name) {
    if (e < 0 || e >= s.num_edges()) throw Error("dual loop: unknown edge");
    const int R = s.region_of_side(left_side(e));
    if (s.region_of_side(right_side(e)) != R) throw Error("dual loop: the edge separates two regions");
    RawMap m{s.names, s.curves, s.edges, s.vertices};
    const int C = s.num_curves();
    const std::string cname = fresh_name(s, name);
    const int u = static_cast<int>(m.vertices.size());
    const int e2 = static_cast<int>(m.edges.size()), f = e2 + 1;
    const int head = s.edges[e].head;
    m.edges.push_back(Edge{s.edges[e].curve, u, head});
    m.edges[e].head = u;
    replace_dart(m, head, head_dart(e), head_dart(e2));
    insert_after(m, s.edges[e].curve, e, {e2});
    m.edges.push_back(Edge{C, u, u});
    m.names.push_back(cname);
    m.curves.push_back({f});
    m.vertices.push_back(Vertex{{tail_dart(e2), tail_dart(f), head_dart(e), head_dart(f)}});

    const int D = 2 * static_cast<int>(m.edges.size());
    std::vector<int> orig(D);
    for (int x = 0; x < 2 * s.num_edges(); ++x) orig[x] = s.region_of_side(x);
    orig[left_side(e2)] = s.region_of_side(left_side(e));
    orig[right_side(e2)] = s.region_of_side(right_side(e));
    orig[left_side(f)] = orig[right_side(f)] = R;

    auto walks = trace_walks(m);
    std::vector<int> walk_of(D);
    for (size_t w = 0; w < walks.size(); ++w)
        for (int x : walks[w]) walk_of[x] = static_cast<int>(w);
    int count = 0;
    for (const auto& w : walks) count += orig[w[0]] == R;
    const int b = static_cast<int>(s.regions[R].walks.size());
    int num_regions = s.num_regions();
    std::vector<int> side_region(orig);
    if (count == b + 1) {
        if (walk_of[left_side(f)] == walk_of[right_side(f)]) throw Error("dual loop: unexpected walk structure");
        for (int x : walks[walk_of[right_side(f)]]) side_region[x] = num_regions;
        ++num_regions;
    } else if (count != b - 1) {
        throw Error("dual loop: unexpected walk structure");
    }
    CurveSystem out = assemble(
        std::move(m), num_regions, [&](int x) { return side_region[x]; },
        [&](int r, int) { return r < s.num_regions() ? s.regions[r].genus : 0; });
    out.vertex_ids = s.vertex_ids;
    out.edge_ids = s.edge_ids;
    out.region_ids = s.region_ids;
    extend_ids(s, out, cname);
    validate(out);
    if (ambient_genus(out) != ambient_genus(s)) throw Error("dual loop: ambient genus changed");
    return {out, C};
}

}  // namespace scc
