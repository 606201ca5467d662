#include "scc/generate.hpp"

#include <algorithm>
#include <numeric>
#include <array>
#include <set>

#include "scc/util.hpp"

namespace scc {

RawMap build_map(const ChordSpec& spec) {
    const int C = static_cast<int>(spec.names.size());
    const int X = static_cast<int>(spec.crossings.size());
    RawMap m;
    m.names = spec.names;
    m.curves.resize(C);
    m.vertices.resize(X);
    std::vector<int> out_a(X, -1), in_a(X, -1), out_b(X, -1), in_b(X, -1);
    for (int c = 0; c < C; ++c) {
        const auto& ord = spec.order[c];
        const int n = static_cast<int>(ord.size());
        if (n == 0) {
            int v = static_cast<int>(m.vertices.size());
            int e = static_cast<int>(m.edges.size());
            m.vertices.push_back(Vertex{{tail_dart(e), head_dart(e)}});
            m.edges.push_back(Edge{c, v, v});
            m.curves[c].push_back(e);
            continue;
        }
        const int base = static_cast<int>(m.edges.size());
        for (int i = 0; i < n; ++i) {
            int x = ord[i], y = ord[(i + 1) % n];
            int e = base + i;
            m.edges.push_back(Edge{c, x, y});
            m.curves[c].push_back(e);
            const Crossing& cx = spec.crossings[x];
            const Crossing& cy = spec.crossings[y];
            if (cx.a == c) out_a[x] = tail_dart(e);
            else if (cx.b == c) out_b[x] = tail_dart(e);
            else throw Error("chord spec: curve listed at a crossing it does not pass");
            if (cy.a == c) in_a[y] = head_dart(e);
            else if (cy.b == c) in_b[y] = head_dart(e);
            else throw Error("chord spec: curve listed at a crossing it does not pass");
        }
    }
    for (int x = 0; x < X; ++x) {
        if (out_a[x] < 0 || in_a[x] < 0 || out_b[x] < 0 || in_b[x] < 0)
            throw Error("chord spec: crossing not visited by both curves");
        if (spec.crossings[x].sign > 0) m.vertices[x].rot = {out_a[x], out_b[x], in_a[x], in_b[x]};
        else m.vertices[x].rot = {out_a[x], in_b[x], in_a[x], out_b[x]};
    }
    return m;
}

CurveSystem attach_regions(const RawMap& m, const std::vector<std::vector<int>>& walks,
                           const std::vector<int>& walk_region, const std::vector<int>& genus) {
    std::vector<int> side_region(2 * m.edges.size(), -1);
    for (size_t w = 0; w < walks.size(); ++w)
        for (int s : walks[w]) side_region[s] = walk_region[w];
    return assemble(
        m, static_cast<int>(genus.size()), [&](int s) { return side_region[s]; },
        [&](int r, int) { return genus[r]; });
}

CurveSystem ribbon_system(const RawMap& m) {
    auto walks = trace_walks(m);
    std::vector<int> wr(walks.size());
    std::iota(wr.begin(), wr.end(), 0);
    return attach_regions(m, walks, wr, std::vector<int>(walks.size(), 0));
}

void for_each_set_partition(int n, int blocks, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (blocks >= 0 && used + (n - i) < blocks) return;
        if (i == n) {
            if (blocks < 0 || used == blocks) fn(a, used);
            return;
        }
        int lim = blocks >= 0 ? std::min(used + 1, blocks) : used + 1;
        for (int b = 0; b < lim; ++b) {
            a[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    if (n == 0) {
        if (blocks <= 0) fn(a, 0);
        return;
    }
    rec(0, 0);
}

int ribbon_components(const RawMap& m) {
    UnionFind uf(static_cast<int>(m.vertices.size()));
    for (const auto& e : m.edges) uf.unite(e.tail, e.head);
    int k = 0;
    uf.labels(&k);
    return k;
}

std::vector<RawMap> enumerate_ribbons(const std::vector<std::string>& names,
                                      const std::vector<std::array<int, 3>>& pair_counts,
                                      const IsoPolicy& policy) {
    const int C = static_cast<int>(names.size());
    ChordSpec spec;
    spec.names = names;
    spec.order.resize(C);
    std::vector<std::vector<int>> incident(C);
    for (const auto& pc : pair_counts)
        for (int k = 0; k < pc[2]; ++k) {
            int x = static_cast<int>(spec.crossings.size());
            spec.crossings.push_back(Crossing{pc[0], pc[1], 1});
            incident[pc[0]].push_back(x);
            incident[pc[1]].push_back(x);
        }
    const int X = static_cast<int>(spec.crossings.size());
    std::set<std::vector<int>> seen;
    std::vector<RawMap> out;

    auto emit_signs = [&]() {
        for (int mask = 0; mask < (1 << X); ++mask) {
            for (int x = 0; x < X; ++x) spec.crossings[x].sign = (mask >> x) & 1 ? -1 : 1;
            RawMap m = build_map(spec);
            auto key = canonical_form(ribbon_system(m), policy, false);
            if (seen.insert(key).second) out.push_back(std::move(m));
        }
    };
    // cyclic orders: first incident crossing fixed in front
    std::function<void(int)> rec = [&](int c) {
        if (c == C) {
            emit_signs();
            return;
        }
        std::vector<int> inc = incident[c];
        if (inc.size() <= 2) {
            spec.order[c] = inc;
            rec(c + 1);
            return;
        }
        std::sort(inc.begin() + 1, inc.end());
        do {
            spec.order[c] = inc;
            rec(c + 1);
        } while (std::next_permutation(inc.begin() + 1, inc.end()));
    };
    rec(0);
    return out;
}

CurveSystem random_system(std::mt19937_64& rng, int max_edges) {
    std::uniform_int_distribution<int> coin(0, 1);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        int C = std::uniform_int_distribution<int>(1, 3)(rng);
        ChordSpec spec;
        for (int c = 0; c < C; ++c) spec.names.push_back(std::string(1, char('a' + c)));
        spec.order.resize(C);
        for (int a = 0; a < C; ++a)
            for (int b = a + 1; b < C; ++b) {
                int cnt = std::uniform_int_distribution<int>(0, 2)(rng);
                for (int k = 0; k < cnt; ++k) {
                    int x = static_cast<int>(spec.crossings.size());
                    spec.crossings.push_back(Crossing{a, b, coin(rng) ? 1 : -1});
                    spec.order[a].push_back(x);
                    spec.order[b].push_back(x);
                }
            }
        int E = 0;
        for (int c = 0; c < C; ++c) E += std::max<int>(1, spec.order[c].size());
        if (E > max_edges) continue;
        for (auto& o : spec.order) std::shuffle(o.begin(), o.end(), rng);
        RawMap m = build_map(spec);
        auto walks = trace_walks(m);
        const int W = static_cast<int>(walks.size());
        int k = std::uniform_int_distribution<int>(1, W)(rng);
        std::vector<int> wr(W);
        for (auto& x : wr) x = std::uniform_int_distribution<int>(0, k - 1)(rng);
        std::vector<int> relabel(k, -1);
        int used = 0;
        for (auto& x : wr) {
            if (relabel[x] < 0) relabel[x] = used++;
            x = relabel[x];
        }
        std::vector<int> genus(used);
        for (auto& g : genus) {
            int roll = std::uniform_int_distribution<int>(0, 9)(rng);
            g = roll < 7 ? 0 : (roll < 9 ? 1 : 2);
        }
        try {
            CurveSystem s = attach_regions(m, walks, wr, genus);
            validate(s);
            return s;
        } catch (const Error&) {
            continue;
        }
    }
    throw Error("random_system: no valid system found");
}

}  // namespace scc
