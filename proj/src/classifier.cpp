#include "scc/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scc/generate.hpp"
#include "scc/util.hpp"

namespace scc {

std::string type_name(PairType t) {
    switch (t) {
        case PairType::I: return "I";
        case PairType::II: return "II";
        case PairType::III: return "III";
        case PairType::IV: return "IV";
        default: return "none";
    }
}

PairType parse_type(const std::string& s) {
    if (s == "I") return PairType::I;
    if (s == "II") return PairType::II;
    if (s == "III") return PairType::III;
    if (s == "IV") return PairType::IV;
    throw Error("unknown type '" + s + "' (expected I, II, III or IV)");
}

namespace {

struct PairData {
    int crossings = 0;
    int algebraic = 0;
    bool bigon = false, annulus = false;
    int regions = 0;
    std::vector<int> walks_per_region;
    bool every_region_abuts_both = true;
};

PairData pair_data(const CurveSystem& s, int a, int b) {
    PairData p;
    p.crossings = geometric_intersection(s, a, b);
    p.algebraic = algebraic_intersection(s, a, b);
    auto res = restrict_to(s, {a, b});
    const CurveSystem& t = res.sys;
    p.regions = t.num_regions();
    for (const Region& reg : t.regions) {
        p.walks_per_region.push_back(static_cast<int>(reg.walks.size()));
        bool on[2] = {false, false};
        std::vector<int> runs;
        for (int w : reg.walks) {
            const auto& wk = t.walks[w];
            int r = 0;
            for (size_t i = 0; i < wk.size(); ++i) {
                on[t.curve_of_side(wk[i])] = true;
                if (t.curve_of_side(wk[i]) != t.curve_of_side(wk[(i + wk.size() - 1) % wk.size()])) ++r;
            }
            runs.push_back(r);
        }
        if (!(on[0] && on[1])) p.every_region_abuts_both = false;
        if (reg.genus != 0) continue;
        if (reg.walks.size() == 1 && runs[0] == 2) p.bigon = true;
        if (reg.walks.size() == 2 && runs[0] == 0 && runs[1] == 0 &&
            t.curve_of_side(t.walks[reg.walks[0]][0]) != t.curve_of_side(t.walks[reg.walks[1]][0]))
            p.annulus = true;
    }
    return p;
}

}  // namespace

PairType classify_pair(const CurveSystem& s, int a, int b) {
    if (a == b) return PairType::None;
    if (is_separating(s, a) || is_separating(s, b)) return PairType::None;
    if (!mod2_class_equal(s, {a}, {b})) return PairType::None;
    PairData p = pair_data(s, a, b);
    if (p.crossings == 0) {
        if (p.annulus) return PairType::None;
        return p.regions == 2 && p.every_region_abuts_both ? PairType::I : PairType::None;
    }
    if (p.crossings != 2 || p.bigon) return PairType::None;
    if (p.algebraic == 2) return PairType::IV;
    if (p.algebraic != 0) return PairType::None;
    if (p.regions == 3) return PairType::II;
    if (p.regions == 2 && p.walks_per_region[0] == 2 && p.walks_per_region[1] == 2) return PairType::III;
    return PairType::None;
}

PairType classify_triple(const CurveSystem& s, int c, int fc, int ffc) {
    if (c == fc || fc == ffc || c == ffc) return PairType::None;
    PairType t1 = classify_pair(s, c, fc);
    if (t1 == PairType::None) return t1;
    if (classify_pair(s, fc, ffc) != t1) return PairType::None;
    // the outer pair only needs to be an honest pair: minimal position, not
    // homotopic, at most two crossings
    int i = geometric_intersection(s, c, ffc);
    if (i != 0 && i != 2) return PairType::None;
    if (!mod2_class_equal(s, {c}, {ffc})) return PairType::None;
    PairData p = pair_data(s, c, ffc);
    if (i == 2 && p.bigon) return PairType::None;
    if (i == 0 && p.annulus) return PairType::None;
    return t1;
}

std::vector<ArcInfo> arcs_across(const CurveSystem& s, int x, int cut) {
    const auto& seq = s.curves[x];
    const int n = static_cast<int>(seq.size());
    std::vector<char> hit(s.num_vertices(), 0);
    for (int v : crossing_vertices(s, x, cut)) hit[v] = 1;
    auto side_of = [&](int d) {
        int v = s.vertex_of(d);
        const auto& rot = s.vertices[v].rot;
        int k = 0;
        while (!(s.edges[dart_edge(rot[k])].curve == cut && !dart_is_head(rot[k]))) ++k;
        return rot[(k + 1) % 4] == d ? 1 : 2;
    };
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (hit[s.edges[seq[i]].tail]) {
            start = i;
            break;
        }
    std::vector<ArcInfo> out;
    if (start < 0) return out;
    ArcInfo cur;
    for (int i = 0; i < n; ++i) {
        int e = seq[(start + i) % n];
        if (cur.edges.empty()) cur.start_side = side_of(tail_dart(e));
        cur.edges.push_back(e);
        if (hit[s.edges[e].head]) {
            cur.end_side = side_of(head_dart(e));
            out.push_back(cur);
            cur = ArcInfo{};
        }
    }
    return out;
}

namespace {

std::array<int, 4> arc_matrix(const CurveSystem& s, const std::vector<ArcInfo>& ga, const std::vector<ArcInfo>& ea) {
    std::vector<int> arc_of(s.num_edges(), -1);
    for (size_t i = 0; i < ga.size(); ++i)
        for (int e : ga[i].edges) arc_of[e] = static_cast<int>(i);
    for (size_t j = 0; j < ea.size(); ++j)
        for (int e : ea[j].edges) arc_of[e] = static_cast<int>(j);
    std::array<int, 4> m{};
    for (int v : crossing_vertices(s, 0, 2)) {
        int gi = -1, ej = -1;
        for (int d : s.vertices[v].rot) {
            if (!dart_is_head(d)) continue;
            int e = dart_edge(d);
            if (s.edges[e].curve == 0) gi = arc_of[e];
            if (s.edges[e].curve == 2) ej = arc_of[e];
        }
        if (gi >= 0 && ej >= 0 && gi < 2 && ej < 2) m[2 * gi + ej] += 1;
    }
    return m;
}

std::array<int, 4> matrix_key(PairType type, std::array<int, 4> m) {
    if (type == PairType::IV) {
        std::array<int, 4> best = m;
        for (int rs = 0; rs < 2; ++rs)
            for (int cs = 0; cs < 2; ++cs) {
                std::array<int, 4> x;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) x[2 * i + j] = m[2 * (i ^ rs) + (j ^ cs)];
                best = std::min(best, x);
            }
        return best;
    }
    std::array<int, 4> sw{m[3], m[2], m[1], m[0]};
    return std::min(m, sw);
}

int template_number(PairType type, const std::array<int, 4>& key, int de_regions) {
    auto k = [&](std::array<int, 4> m) { return matrix_key(type, m); };
    if (type == PairType::II) {
        if (key == k({0, 0, 0, 0})) return 1;
        if (key == k({0, 0, 2, 0})) return 2;
        if (key == k({1, 0, 0, 1})) return 3;
        if (key == k({2, 0, 0, 0})) return 4;
    } else if (type == PairType::III) {
        if (key == k({0, 0, 0, 0})) return 1;
        if (key == k({1, 0, 0, 1})) return de_regions == 3 ? 2 : 3;
        if (key == k({2, 0, 0, 0})) return de_regions == 3 ? 4 : 5;
        if (key == k({0, 2, 0, 0})) return de_regions == 3 ? 6 : 7;
    } else if (type == PairType::IV) {
        if (key == k({0, 0, 0, 0})) return 1;
        if (key == k({1, 0, 0, 1})) return 2;
        if (key == k({0, 0, 2, 0})) return 3;
    }
    return 0;
}

void order_arcs(std::vector<ArcInfo>& arcs) {
    std::stable_sort(arcs.begin(), arcs.end(),
                     [](const ArcInfo& a, const ArcInfo& b) { return a.start_side < b.start_side; });
}

bool arc_separates(const CurveSystem& s, int cut, const ArcInfo& arc) {
    std::vector<char> blocked(s.num_edges(), 0);
    for (int e = 0; e < s.num_edges(); ++e)
        if (s.edges[e].curve == cut) blocked[e] = 1;
    int before = 0, after = 0;
    {
        UnionFind uf(s.num_regions());
        for (int e = 0; e < s.num_edges(); ++e)
            if (!blocked[e]) uf.unite(s.region_of_side(left_side(e)), s.region_of_side(right_side(e)));
        uf.labels(&before);
    }
    for (int e : arc.edges) blocked[e] = 1;
    UnionFind uf(s.num_regions());
    for (int e = 0; e < s.num_edges(); ++e)
        if (!blocked[e]) uf.unite(s.region_of_side(left_side(e)), s.region_of_side(right_side(e)));
    uf.labels(&after);
    return after > before;
}

bool linked_along(const CurveSystem& s, int a, int cut, int b) {
    std::vector<int> mark(s.num_vertices(), -1);
    for (int v : crossing_vertices(s, a, cut)) mark[v] = 0;
    for (int v : crossing_vertices(s, b, cut)) mark[v] = 1;
    std::vector<int> seq;
    for (int e : s.curves[cut])
        if (mark[s.edges[e].head] >= 0) seq.push_back(mark[s.edges[e].head]);
    if (seq.size() != 4) return false;
    return seq[0] != seq[1] && seq[1] != seq[2] && seq[2] != seq[3];
}

// (gamma0, delta0) as drawn in the template surface. For type II the cut
// surface splits into an annulus and two disks, so the pair is not minimal yet.
bool standard_template_pair(const CurveSystem& s, PairType type) {
    if (type != PairType::II) return classify_pair(s, 0, 1) == type;
    if (is_separating(s, 0) || is_separating(s, 1) || !mod2_class_equal(s, {0}, {1})) return false;
    if (geometric_intersection(s, 0, 1) != 2 || algebraic_intersection(s, 0, 1) != 0) return false;
    PairData p = pair_data(s, 0, 1);
    std::vector<int> w = p.walks_per_region;
    std::sort(w.begin(), w.end());
    return w == std::vector<int>{1, 1, 2};
}

}  // namespace

std::vector<Template> enumerate_templates(PairType type, const IsoPolicy& policy, TemplateStats* stats) {
    if (type != PairType::II && type != PairType::III && type != PairType::IV)
        throw Error("templates exist only for types II, III and IV");
    const int target_genus = type == PairType::III ? 2 : 1;
    const int alg = type == PairType::IV ? 2 : 0;
    std::vector<Template> out;
    std::set<std::vector<int>> seen, seen_sep, seen_mixed;
    for (int ge : {0, 2}) {
        auto ribbons = enumerate_ribbons({"gamma", "delta", "epsilon"}, {{{0, 1, 2}, {1, 2, 2}, {0, 2, ge}}}, policy);
        for (const RawMap& m : ribbons) {
            CurveSystem rs = ribbon_system(m);
            if (algebraic_intersection(rs, 0, 1) != alg || algebraic_intersection(rs, 1, 2) != alg) continue;
            const int X = 4 + ge;
            const int W = static_cast<int>(rs.walks.size());
            int twice_k = 2 - 2 * target_genus + X + W;
            if (twice_k % 2 || twice_k < 2 || twice_k / 2 > W) continue;
            const int k = twice_k / 2;
            for_each_set_partition(W, k, [&](const std::vector<int>& part, int) {
                CurveSystem s = attach_regions(m, rs.walks, part, std::vector<int>(k, 0));
                if (!standard_template_pair(s, type)) return;
                {
                    auto gd = restrict_to(s, {0, 1});
                    for (const Region& r : gd.sys.regions)
                        if (r.genus != 0) return;
                }
                if (!mod2_class_equal(s, {0}, {1}) || !mod2_class_equal(s, {1}, {2})) return;
                if (stats) ++stats->candidates;
                if (is_separating(s, 2)) {
                    if (stats) {
                        ++stats->pruned_separating;
                        if (seen_sep.insert(canonical_form(s, policy)).second) stats->separating_examples.push_back(s);
                    }
                    return;
                }
                auto ea = arcs_across(s, 2, 1);
                if (type == PairType::III && ea.size() == 2 &&
                    arc_separates(s, 1, ea[0]) != arc_separates(s, 1, ea[1])) {
                    if (stats) {
                        ++stats->pruned_mixed_arcs;
                        if (seen_mixed.insert(canonical_form(s, policy)).second) stats->mixed_examples.push_back(s);
                    }
                    return;
                }
                if (!seen.insert(canonical_form(s, policy)).second) return;
                Template t;
                t.type = type;
                t.sys = s;
                auto ga = arcs_across(s, 0, 1);
                order_arcs(ga);
                order_arcs(ea);
                t.arc_matrix = arc_matrix(s, ga, ea);
                t.linked = linked_along(s, 0, 1, 2);
                t.delta_epsilon_regions = static_cast<int>(complement_components(s, {1, 2}).size());
                t.number = template_number(type, matrix_key(type, t.arc_matrix), t.delta_epsilon_regions);
                out.push_back(std::move(t));
            });
        }
    }
    std::stable_sort(out.begin(), out.end(), [&](const Template& a, const Template& b) {
        int na = a.number ? a.number : 1000, nb = b.number ? b.number : 1000;
        if (na != nb) return na < nb;
        return canonical_form(a.sys, policy) < canonical_form(b.sys, policy);
    });
    return out;
}

CurveSystem apply_handles(const CurveSystem& s, const std::vector<std::pair<int, int>>& pairs) {
    const int R = s.num_regions();
    UnionFind uf(R);
    for (auto [a, b] : pairs) uf.unite(a, b);
    int G = 0;
    auto lab = uf.labels(&G);
    std::vector<Region> regs(G);
    std::vector<int> members(G, 0), handle_count(G, 0);
    for (int r = 0; r < R; ++r) {
        regs[lab[r]].genus += s.regions[r].genus;
        regs[lab[r]].walks.insert(regs[lab[r]].walks.end(), s.regions[r].walks.begin(), s.regions[r].walks.end());
        ++members[lab[r]];
    }
    for (auto [a, b] : pairs) ++handle_count[lab[a]];
    for (int g = 0; g < G; ++g) regs[g].genus += handle_count[g] - members[g] + 1;
    CurveSystem out = s;
    out.regions = regs;
    out.region_ids.clear();
    out.index();
    return out;
}

bool is_minimal_configuration(const CurveSystem& sys, PairType type) {
    for (int r = 0; r < sys.num_regions(); ++r) {
        if (sys.regions[r].genus == 0) continue;
        CurveSystem lower = sys;
        lower.regions[r].genus -= 1;
        if (classify_triple(lower, 0, 1, 2) == type) return false;
    }
    return true;
}

namespace {

// Regions lying in a bigon or annulus of some pair of the three curves.
std::vector<int> obstructed_regions(const CurveSystem& s) {
    std::set<int> out;
    for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
        for (const auto& grp : detect_bigons(s, a, b)) out.insert(grp.begin(), grp.end());
        for (const auto& grp : detect_annuli(s, a, b)) out.insert(grp.begin(), grp.end());
    }
    return {out.begin(), out.end()};
}

}  // namespace

std::vector<TripleCatalogEntry> minimal_from_template(const Template& t, const IsoPolicy& policy) {
    const CurveSystem& s = t.sys;
    const int R = s.num_regions();
    auto c01 = region_coloring(s, {0, 1}), c12 = region_coloring(s, {1, 2}), c02 = region_coloring(s, {0, 2});
    auto p01 = component_labels(s, {0, 1}), p12 = component_labels(s, {1, 2});
    const int n12 = *std::max_element(p12.begin(), p12.end()) + 1;
    std::set<std::pair<int, int>> adjacent12;
    for (int e = 0; e < s.num_edges(); ++e)
        if (s.edges[e].curve != 0) {
            int a = p12[s.region_of_side(left_side(e))], b = p12[s.region_of_side(right_side(e))];
            adjacent12.insert({std::min(a, b), std::max(a, b)});
        }
    std::vector<std::pair<int, int>> allowed;
    for (int i = 0; i < R; ++i)
        for (int j = i + 1; j < R; ++j) {
            if (c01[i] != c01[j] || c12[i] != c12[j] || c02[i] != c02[j]) continue;
            if (t.type == PairType::II && (p01[i] != p01[j] || p12[i] != p12[j])) continue;
            allowed.push_back({i, j});
        }
    std::vector<TripleCatalogEntry> found;
    std::set<std::vector<int>> seen;
    const int A = static_cast<int>(allowed.size());
    for (long mask = 0; mask < (1L << A); ++mask) {
        std::vector<std::pair<int, int>> D;
        for (int i = 0; i < A; ++i)
            if (mask >> i & 1) D.push_back(allowed[i]);
        if (t.type == PairType::III && n12 == 3) {
            bool ok = false;
            for (auto [a, b] : D) {
                int x = std::min(p12[a], p12[b]), y = std::max(p12[a], p12[b]);
                if (x != y && !adjacent12.count({x, y})) ok = true;
            }
            if (!ok) continue;
        }
        CurveSystem merged = apply_handles(s, D);
        UnionFind grp(R);
        for (auto [a, b] : D) grp.unite(a, b);
        auto glab = grp.labels();
        std::vector<int> rep(merged.num_regions(), -1);
        for (int r = 0; r < R; ++r)
            if (rep[glab[r]] < 0) rep[glab[r]] = r;
        auto bump = obstructed_regions(merged);
        const int B = static_cast<int>(bump.size());
        std::vector<long> valid_masks;
        std::vector<long> order;
        for (long bm = 0; bm < (1L << B); ++bm) order.push_back(bm);
        std::stable_sort(order.begin(), order.end(),
                         [](long x, long y) { return __builtin_popcountl(x) < __builtin_popcountl(y); });
        for (long bm : order) {
            bool super = false;
            for (long v : valid_masks)
                if ((bm & v) == v) super = true;
            if (super) continue;
            CurveSystem cand = merged;
            std::vector<std::pair<int, int>> handles = D;
            for (int i = 0; i < B; ++i)
                if (bm >> i & 1) {
                    cand.regions[bump[i]].genus += 1;
                    handles.push_back({rep[bump[i]], rep[bump[i]]});
                }
            if (classify_triple(cand, 0, 1, 2) != t.type) continue;
            valid_masks.push_back(bm);
            if (!is_minimal_configuration(cand, t.type)) continue;
            if (!seen.insert(canonical_form(cand, policy)).second) continue;
            TripleCatalogEntry e;
            e.type = t.type;
            e.template_number = t.number;
            e.sys = cand;
            e.handles = handles;
            found.push_back(std::move(e));
        }
    }
    return found;
}

namespace {

std::vector<TripleCatalogEntry> enumerate_type_I(const IsoPolicy& policy) {
    std::vector<TripleCatalogEntry> out;
    std::set<std::vector<int>> seen;
    for (int ge : {0, 2}) {
        std::vector<std::array<int, 3>> counts;
        if (ge) counts.push_back({0, 2, ge});
        auto ribbons = enumerate_ribbons({"gamma", "delta", "epsilon"}, counts, policy);
        for (const RawMap& m : ribbons) {
            CurveSystem rs = ribbon_system(m);
            const int W = static_cast<int>(rs.walks.size());
            for_each_set_partition(W, -1, [&](const std::vector<int>& part, int k) {
                for (int gm = 0; gm < (1 << k); ++gm) {
                    std::vector<int> genus(k);
                    for (int r = 0; r < k; ++r) genus[r] = gm >> r & 1;
                    CurveSystem s = attach_regions(m, rs.walks, part, genus);
                    try {
                        validate(s);
                    } catch (const Error&) {
                        continue;
                    }
                    if (classify_triple(s, 0, 1, 2) != PairType::I) continue;
                    if (!is_minimal_configuration(s, PairType::I)) continue;
                    if (!seen.insert(canonical_form(s, policy)).second) continue;
                    TripleCatalogEntry e;
                    e.type = PairType::I;
                    e.sys = s;
                    out.push_back(std::move(e));
                }
            });
        }
    }
    return out;
}

}  // namespace

std::vector<TripleCatalogEntry> enumerate_minimal_triples(PairType type, const IsoPolicy& policy) {
    std::vector<TripleCatalogEntry> out;
    if (type == PairType::I) {
        out = enumerate_type_I(policy);
    } else {
        std::set<std::vector<int>> seen;
        for (const Template& t : enumerate_templates(type, policy)) {
            auto part = minimal_from_template(t, policy);
            std::vector<std::pair<std::vector<int>, TripleCatalogEntry>> keyed;
            for (auto& e : part) {
                auto key = canonical_form(e.sys, policy);
                if (seen.insert(key).second) keyed.push_back({key, std::move(e)});
            }
            std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& [k, e] : keyed) out.push_back(std::move(e));
        }
    }
    if (type == PairType::I) {
        std::vector<std::pair<std::vector<int>, TripleCatalogEntry>> keyed;
        for (auto& e : out) keyed.push_back({canonical_form(e.sys, policy), std::move(e)});
        // the configuration with disjoint gamma and epsilon comes first
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            int ia = geometric_intersection(a.second.sys, 0, 2), ib = geometric_intersection(b.second.sys, 0, 2);
            if (ia != ib) return ia < ib;
            return a.first < b.first;
        });
        out.clear();
        for (auto& [k, e] : keyed) out.push_back(std::move(e));
    }
    for (size_t i = 0; i < out.size(); ++i) {
        out[i].index = static_cast<int>(i) + 1;
        out[i].figure = "Fig " + type_name(type) + " #" + std::to_string(i + 1);
        if (out[i].template_number) out[i].figure += " (template " + std::to_string(out[i].template_number) + ")";
    }
    return out;
}

}  // namespace scc
