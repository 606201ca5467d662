#include "scc/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace scc {

namespace {

// Dart permutations of a system in one orientation and labeling.
struct Frame {
    int D = 0;
    std::vector<int> alpha, sigma, label, corner_region, genus;
};

Frame make_frame(const CurveSystem& s, bool reflect, const std::vector<int>& perm) {
    Frame f;
    f.D = 2 * s.num_edges();
    f.alpha.resize(f.D);
    f.sigma.resize(f.D);
    f.label.resize(f.D);
    std::vector<int> base(f.D, -1);
    for (int side = 0; side < f.D; ++side) {
        int e = side_edge(side);
        int arrival = side_is_right(side) ? tail_dart(e) : head_dart(e);
        base[s.cw(arrival)] = s.region_of_side(side);
    }
    f.corner_region.resize(f.D);
    for (int d = 0; d < f.D; ++d) {
        f.alpha[d] = d ^ 1;
        f.sigma[d] = reflect ? s.cw(d) : s.ccw(d);
        f.label[d] = perm[s.edges[dart_edge(d)].curve];
        f.corner_region[d] = reflect ? base[s.cw(d)] : base[d];
    }
    for (const auto& r : s.regions) f.genus.push_back(r.genus);
    return f;
}

void bfs(const Frame& f, int seed, std::vector<int>& num, std::vector<int>& inv) {
    size_t head = inv.size();
    num[seed] = static_cast<int>(inv.size());
    inv.push_back(seed);
    while (head < inv.size()) {
        int x = inv[head++];
        for (int y : {f.alpha[x], f.sigma[x]})
            if (num[y] < 0) {
                num[y] = static_cast<int>(inv.size());
                inv.push_back(y);
            }
    }
}

std::vector<int> encode(const Frame& f, const std::vector<int>& num, const std::vector<int>& inv,
                        bool with_regions, bool with_genus, std::vector<int>* codes_out = nullptr) {
    std::vector<int> code;
    code.reserve(4 * inv.size() + f.genus.size());
    std::vector<int> rc(f.genus.size(), -1);
    int next = 0;
    for (int x : inv) {
        code.push_back(f.label[x]);
        code.push_back(num[f.alpha[x]]);
        code.push_back(num[f.sigma[x]]);
        if (with_regions) {
            int& c = rc[f.corner_region[x]];
            if (c < 0) c = next++;
            code.push_back(c);
        }
    }
    if (with_regions && with_genus) {
        std::vector<int> g(next);
        for (size_t r = 0; r < rc.size(); ++r) g[rc[r]] = f.genus[r];
        code.push_back(-1);
        code.insert(code.end(), g.begin(), g.end());
    }
    if (codes_out) *codes_out = rc;
    return code;
}

// Enumerates all seed sequences; leaf returns true to stop.
bool search(const Frame& f, std::vector<int>& num, std::vector<int>& inv, const std::function<bool()>& leaf) {
    if (static_cast<int>(inv.size()) == f.D) return leaf();
    for (int d = 0; d < f.D; ++d) {
        if (num[d] >= 0) continue;
        size_t mark = inv.size();
        bfs(f, d, num, inv);
        bool stop = search(f, num, inv, leaf);
        for (size_t i = mark; i < inv.size(); ++i) num[inv[i]] = -1;
        inv.resize(mark);
        if (stop) return true;
    }
    return false;
}

std::vector<std::vector<int>> label_perms(int C, bool ordered) {
    std::vector<int> p(C);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out{p};
    if (!ordered)
        while (std::next_permutation(p.begin(), p.end())) out.push_back(p);
    return out;
}

}  // namespace

std::vector<int> canonical_form(const CurveSystem& sys, const IsoPolicy& policy, bool with_regions,
                                bool with_genus) {
    CurveSystem s = normalize(sys);
    std::vector<int> best;
    bool have = false;
    for (int refl = 0; refl < (policy.allow_reflection ? 2 : 1); ++refl)
        for (const auto& perm : label_perms(s.num_curves(), policy.ordered_labels)) {
            Frame f = make_frame(s, refl == 1, perm);
            std::vector<int> num(f.D, -1), inv;
            search(f, num, inv, [&] {
                auto code = encode(f, num, inv, with_regions, with_genus);
                if (!have || code < best) {
                    best = std::move(code);
                    have = true;
                }
                return false;
            });
        }
    best.insert(best.begin(), {s.num_curves(), s.num_regions()});
    return best;
}

bool isomorphic(const CurveSystem& a, const CurveSystem& b, const IsoPolicy& policy) {
    if (a.num_curves() != b.num_curves() || a.num_regions() != b.num_regions()) return false;
    return canonical_form(a, policy) == canonical_form(b, policy);
}

namespace {

// Core search: leaf(region_map, a_norm, b_norm, num_a, inv_b, reflected).
bool iso_search(const CurveSystem& a, const CurveSystem& b, const IsoPolicy& policy,
                const std::function<bool(const std::vector<int>&, const std::vector<int>&,
                                         const std::vector<int>&, bool)>& leaf) {
    if (a.num_curves() != b.num_curves() || a.num_edges() != b.num_edges() ||
        a.num_regions() != b.num_regions() || a.num_vertices() != b.num_vertices())
        return false;
    std::vector<int> ident(a.num_curves());
    std::iota(ident.begin(), ident.end(), 0);
    Frame fa = make_frame(a, false, ident);
    std::vector<int> num_a(fa.D, -1), inv_a;
    for (int d = 0; d < fa.D; ++d)
        if (num_a[d] < 0) bfs(fa, d, num_a, inv_a);
    std::vector<int> rc_a;
    auto code_a = encode(fa, num_a, inv_a, true, false, &rc_a);
    for (int refl = 0; refl < (policy.allow_reflection ? 2 : 1); ++refl)
        for (const auto& perm : label_perms(b.num_curves(), policy.ordered_labels)) {
            Frame fb = make_frame(b, refl == 1, perm);
            std::vector<int> num(fb.D, -1), inv;
            bool stop = search(fb, num, inv, [&] {
                std::vector<int> rc_b;
                if (encode(fb, num, inv, true, false, &rc_b) != code_a) return false;
                std::vector<int> by_code(rc_b.size());
                for (size_t r = 0; r < rc_b.size(); ++r) by_code[rc_b[r]] = static_cast<int>(r);
                std::vector<int> map(rc_a.size());
                for (size_t r = 0; r < rc_a.size(); ++r) map[r] = by_code[rc_a[r]];
                return leaf(map, num_a, inv, refl == 1);
            });
            if (stop) return true;
        }
    return false;
}

// Side whose arrival dart is d.
int side_arriving(int d) { return dart_is_head(d) ? left_side(dart_edge(d)) : right_side(dart_edge(d)); }

}  // namespace

bool for_each_isomorphism(const CurveSystem& a0, const CurveSystem& b0, const IsoPolicy& policy,
                          const std::function<bool(const std::vector<int>&)>& visit) {
    CurveSystem a = normalize(a0), b = normalize(b0);
    return iso_search(a, b, policy, [&](const std::vector<int>& map, const std::vector<int>&,
                                        const std::vector<int>&, bool) { return visit(map); });
}

bool for_each_isomorphism_map(const CurveSystem& a0, const CurveSystem& b0, const IsoPolicy& policy,
                              const std::function<bool(const IsoMap&)>& visit) {
    std::vector<int> all(a0.num_curves());
    std::iota(all.begin(), all.end(), 0);
    Restriction ra = restrict_to(a0, all);
    if (b0.num_curves() != a0.num_curves()) return false;
    Restriction rb = restrict_to(b0, all);
    const CurveSystem &a = ra.sys, &b = rb.sys;
    return iso_search(a, b, policy, [&](const std::vector<int>& map, const std::vector<int>& num_a,
                                        const std::vector<int>& inv_b, bool refl) {
        IsoMap m;
        m.regions = map;
        m.reflected = refl;
        m.walks.assign(a0.walks.size(), -1);
        for (int x = 0; x < 2 * a.num_edges(); ++x) {
            int y = inv_b[num_a[x]];
            int sa = side_arriving(a.ccw(x));
            int sb = side_arriving(refl ? y : b.ccw(y));
            m.walks[a0.side_walk[ra.side_origin[sa]]] = b0.side_walk[rb.side_origin[sb]];
        }
        return visit(m);
    });
}

bool is_stabilization_of(const CurveSystem& sys1, const CurveSystem& sys2, const IsoPolicy& policy,
                         std::vector<int>* region_map) {
    return for_each_isomorphism(sys2, sys1, policy, [&](const std::vector<int>& map) {
        for (size_t r = 0; r < map.size(); ++r)
            if (sys1.regions[map[r]].genus < sys2.regions[r].genus) return false;
        if (region_map) *region_map = map;
        return true;
    });
}

bool stabilization_map(const CurveSystem& sys1, const CurveSystem& sys2, const IsoPolicy& policy, IsoMap* out) {
    return for_each_isomorphism_map(sys2, sys1, policy, [&](const IsoMap& m) {
        for (size_t r = 0; r < m.regions.size(); ++r)
            if (sys1.regions[m.regions[r]].genus < sys2.regions[r].genus) return false;
        if (out) *out = m;
        return true;
    });
}

}  // namespace scc
