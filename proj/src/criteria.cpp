#include "scc/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "scc/catalog.hpp"
#include "scc/strands.hpp"

namespace scc {

std::string conclusion_name(Conclusion c) {
    switch (c) {
        case Conclusion::Inconclusive: return "inconclusive";
        case Conclusion::ContainsCommutator: return "contains-commutator-subgroup";
        case Conclusion::NormalGenerator: return "normal-generator";
        case Conclusion::PreimageOfPlusMinusI: return "preimage-of-plus-minus-I";
        case Conclusion::CentralOrderTwo: return "central-order-2";
        case Conclusion::AbelianizationDetermined: return "abelianization-determined";
        case Conclusion::TrivialGroup: return "trivial-group";
    }
    return "?";
}

namespace {

Verdict yes(const std::string& criterion, const std::string& lemma, const std::string& detail) {
    Verdict v;
    v.conclusion = Conclusion::ContainsCommutator;
    v.criterion = criterion;
    v.lemma = lemma;
    v.detail = detail;
    return v;
}

Verdict no(const std::string& criterion, const std::string& detail) {
    Verdict v;
    v.criterion = criterion;
    v.detail = detail;
    return v;
}

int cnt(const CurveSystem& s, int x, int y) { return geometric_intersection(s, x, y); }

void check_curve(const CurveSystem& s, int c, const char* what) {
    if (c < 0 || c >= s.num_curves()) throw Error(std::string(what) + ": unknown curve");
}

void need_distinct(const CurveSystem& s, const std::vector<int>& cs, const char* what) {
    for (int c : cs) check_curve(s, c, what);
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
            if (cs[i] == cs[j]) throw Error(std::string(what) + ": curves must be distinct");
}

void need_nonseparating(const CurveSystem& s, const std::vector<int>& cs, const char* what) {
    for (int c : cs)
        if (is_separating(s, c)) throw Error(std::string(what) + ": curve " + s.names[c] + " is separating");
}

// Separating and not bounding a disk.
bool essential_separating(const CurveSystem& s, int d) {
    if (!is_separating(s, d)) return false;
    auto r = restrict_to(s, {d});
    for (const auto& reg : r.sys.regions)
        if (reg.genus == 0) return false;
    return true;
}

// Disjoint nonseparating curves are homologous up to sign iff their union separates.
bool union_separates(const CurveSystem& s, int x, int y) { return complement_components(s, {x, y}).size() > 1; }

Restriction triple_of(const CurveSystem& s, int c, int fc, int ffc) { return restrict_to(s, {c, fc, ffc}); }

std::string nm(const CurveSystem& s, int c) { return s.names[c]; }

}  // namespace

Verdict check_wscca(const CurveSystem& s, int c, int fc) {
    need_distinct(s, {c, fc}, "wscca");
    need_nonseparating(s, {c, fc}, "wscca");
    int i = cnt(s, c, fc);
    if (i == 1) return yes("wscca", "one crossing with its image", "i(" + nm(s, c) + "," + nm(s, fc) + ") = 1");
    return no("wscca", "crossing count " + std::to_string(i));
}

Verdict check_wsccb(const CurveSystem& s, int c, int fc) {
    need_distinct(s, {c, fc}, "wsccb");
    need_nonseparating(s, {c, fc}, "wsccb");
    int i = cnt(s, c, fc);
    // Two crossings cobounding a bigon isotope away.
    bool disjoint = i == 0 || (i == 2 && !in_minimal_position(s, c, fc));
    if (!disjoint) return no("wsccb", "curves cross " + std::to_string(i) + " times");
    // Disjoint nonseparating curves are homologous up to sign iff they agree mod 2.
    if (mod2_class_equal(s, {c}, {fc})) return no("wsccb", "homologous (bounding pair)");
    return yes("wsccb", "disjoint, not homologous", nm(s, c) + " and " + nm(s, fc) + " differ mod 2");
}

Verdict check_wsccsep(const CurveSystem& s, int d, int fd) {
    need_distinct(s, {d, fd}, "wsccsep");
    for (int x : {d, fd})
        if (!essential_separating(s, x)) throw Error("wsccsep: curve " + s.names[x] + " is not essential separating");
    int i = cnt(s, d, fd);
    if (i <= 2)
        return yes("wsccsep", "separating curve with i(d,fd) <= 2",
                   "i(" + nm(s, d) + "," + nm(s, fd) + ") <= " + std::to_string(i));
    return no("wsccsep", "crossing count " + std::to_string(i));
}

Verdict check_chen(const CurveSystem& s, int c, int fc, int d) {
    need_distinct(s, {c, fc, d}, "chen");
    need_nonseparating(s, {c, fc, d}, "chen");
    int x = cnt(s, c, d), y = cnt(s, fc, d);
    if (x == 1 && y == 0) return yes("chen", "dual curve to c disjoint from fc", "i(c,d) = 1, i(fc,d) = 0");
    if (x == 0 && y == 1)
        return yes("chen", "dual curve to fc disjoint from c (inverse map)", "i(c,d) = 0, i(fc,d) = 1");
    return no("chen", "i(c,d) = " + std::to_string(x) + ", i(fc,d) = " + std::to_string(y));
}

Checked check_lantern(const CurveSystem& s, int c, int fc) {
    need_distinct(s, {c, fc}, "lantern");
    need_nonseparating(s, {c, fc}, "lantern");
    if (cnt(s, c, fc) != 2) throw Error("lantern: requires exactly two crossings");
    if (!in_minimal_position(s, c, fc)) return {no("lantern", "curves not in minimal position"), std::nullopt};
    if (mod2_class_equal(s, {c}, {fc})) return {no("lantern", "curves agree mod 2"), std::nullopt};
    CurveSystem t = restrict_to(s, {c, fc}).sys;
    for (int e = 0; e < t.num_edges(); ++e) {
        if (t.region_of_side(left_side(e)) != t.region_of_side(right_side(e))) continue;
        auto [u, d] = insert_dual_loop(t, e, "d");
        Verdict v = check_chen(u, 0, 1, d);
        if (!v.positive()) continue;
        Certificate cert;
        cert.criterion = "lantern";
        cert.sys = u;
        cert.roles = {{"c", 0}, {"fc", 1}};
        cert.witnesses = {{"d", d}};
        cert.genus = ambient_genus(u);
        v.criterion = "lantern";
        v.lemma = "mod-2 inequivalent pair with two crossings, via a dual curve";
        cert.verdict = v;
        return {v, cert};
    }
    throw Error("lantern: witness search failed");
}

Verdict check_good_pair(const CurveSystem& s, int c, int fc, int ffc, int a, int b) {
    need_distinct(s, {c, fc, ffc, a, b}, "good pair");
    for (int w : {a, b})
        for (int x : {c, fc, ffc})
            if (cnt(s, w, x) != 0) throw Error("good pair: witness curves must avoid the triple");
    if (cnt(s, a, b) != 0) throw Error("good pair: witness curves must be disjoint");
    if (classify_triple(s, c, fc, ffc) == PairType::None) throw Error("good pair: triple does not classify");
    const bool bp = cnt(s, c, fc) == 0;
    const std::string crit = bp ? "good-pair-bp" : "good-pair";
    auto lab_a = component_labels(s, {c, fc});
    auto lab_b = component_labels(s, {fc, ffc});
    int ra = s.region_of_side(left_side(s.curves[a][0]));
    int rb = s.region_of_side(left_side(s.curves[b][0]));
    if (lab_a[ra] == lab_a[rb]) return no(crit, "a and b lie on the same side of c");
    if (lab_b[ra] != lab_b[rb]) return no(crit, "a and b lie on different sides of ffc");
    if (bp) {
        size_t base = complement_components(s, {c, fc}).size();
        for (int w : {a, b})
            if (complement_components(s, {c, fc, w}).size() != base)
                return no(crit, nm(s, w) + " separates the surface cut along c and fc");
        return yes(crit, "good pair for a disjoint pair", "a, b nonseparating in the cut surface");
    }
    for (int w : {a, b})
        if (is_separating(s, w)) return no(crit, nm(s, w) + " is separating");
    return yes(crit, "good pair", "a, b nonseparating, split by c, joined across ffc");
}

Checked good_pair_with(const CurveSystem& s, int c, int fc, int ffc, const RegionCurve& A, const RegionCurve& B) {
    CurveSystem t = triple_of(s, c, fc, ffc).sys;
    auto [t1, a] = insert_region_curve(t, A, "a");
    auto [t2, b] = insert_region_curve(t1, B, "b");
    Verdict v = check_good_pair(t2, 0, 1, 2, a, b);
    if (!v.positive()) return {v, std::nullopt};
    Certificate cert;
    cert.criterion = v.criterion;
    cert.sys = t2;
    cert.roles = {{"c", 0}, {"fc", 1}, {"ffc", 2}};
    cert.witnesses = {{"a", a}, {"b", b}};
    cert.genus = ambient_genus(t2);
    cert.verdict = v;
    return {v, cert};
}

namespace {

std::vector<RegionCurve> region_curve_options(const CurveSystem& t, int r) {
    std::vector<RegionCurve> out;
    const Region& reg = t.regions[r];
    if (reg.genus >= 1) out.push_back(RegionCurve{r, true, {}, 0});
    const int b = static_cast<int>(reg.walks.size());
    if (b > 10) return out;
    for (int mask = 1; mask < (1 << b); mask += 2)  // walk 0 always on the left
        for (int gl = 0; gl <= reg.genus; ++gl) {
            bool right_empty = mask == (1 << b) - 1;
            if (right_empty && gl == reg.genus) continue;
            RegionCurve rc{r, false, {}, gl};
            for (int k = 0; k < b; ++k)
                if (mask >> k & 1) rc.walks_left.push_back(reg.walks[k]);
            out.push_back(rc);
        }
    return out;
}

}  // namespace

std::optional<GoodPair> find_good_pair(const CurveSystem& s, int c, int fc, int ffc, const std::vector<int>& regions_a,
                                       const std::vector<int>& regions_b) {
    CurveSystem t = triple_of(s, c, fc, ffc).sys;
    if (classify_triple(t, 0, 1, 2) == PairType::None) throw Error("good pair: triple does not classify");
    auto lab_a = component_labels(t, {0, 1});
    auto lab_b = component_labels(t, {1, 2});
    auto pick = [&](const std::vector<int>& want) {
        std::vector<int> rs = want;
        if (rs.empty()) {
            rs.resize(t.num_regions());
            std::iota(rs.begin(), rs.end(), 0);
        }
        return rs;
    };
    for (int ra : pick(regions_a))
        for (int rb : pick(regions_b)) {
            if (ra == rb || lab_a[ra] == lab_a[rb] || lab_b[ra] != lab_b[rb]) continue;
            for (const auto& A : region_curve_options(t, ra))
                for (const auto& B : region_curve_options(t, rb)) {
                    Checked ch = good_pair_with(t, 0, 1, 2, A, B);
                    if (ch.verdict.positive()) return GoodPair{A, B, ch};
                }
        }
    return std::nullopt;
}

namespace {

// Inserts every boundary curve of N(x u y); returns the new curve ids in walk order.
std::vector<int> insert_boundary_curves(CurveSystem& t, int x, int y, const std::string& prefix,
                                        const std::vector<int>& only = {}) {
    const int n = static_cast<int>(neighborhood_walks(t, {x, y}).size());
    std::vector<int> ids;
    for (int i = 0; i < n; ++i) {
        if (!only.empty() && std::find(only.begin(), only.end(), i) == only.end()) continue;
        auto [u, d] = insert_neighborhood_pushoff(t, {x, y}, i, prefix + std::to_string(ids.size() + 1));
        t = std::move(u);
        ids.push_back(d);
    }
    return ids;
}

std::vector<int> separating_walk_indices(const CurveSystem& t, int x, int y) {
    const int n = static_cast<int>(neighborhood_walks(t, {x, y}).size());
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        auto [u, d] = insert_neighborhood_pushoff(t, {x, y}, i);
        if (essential_separating(u, d)) out.push_back(i);
    }
    return out;
}

}  // namespace

Checked check_boundary_sep(const CurveSystem& s, int c, int fc, int ffc) {
    const CurveSystem t = triple_of(s, c, fc, ffc).sys;
    auto ds = separating_walk_indices(t, 0, 1);
    std::string last = "no separating boundary curve of N(c u fc)";
    for (int di : ds) {
        CurveSystem u = t;
        int d = insert_boundary_curves(u, 0, 1, "d", {di}).at(0);
        auto es_idx = separating_walk_indices(u, 1, 2);
        if (es_idx.size() != ds.size()) {
            last = "separating boundary counts differ";
            continue;
        }
        auto es = insert_boundary_curves(u, 1, 2, "e", es_idx);
        bool ok = !es.empty();
        std::string detail = "d = " + u.names[d];
        for (int e : es) {
            Verdict v = check_wsccsep(u, d, e);
            detail += ", i(d," + u.names[e] + ") <= " + std::to_string(cnt(u, d, e));
            ok = ok && v.positive();
        }
        if (!ok) {
            last = detail;
            continue;
        }
        Certificate cert;
        cert.criterion = "wsccsep";
        cert.sys = u;
        cert.roles = {{"c", 0}, {"fc", 1}, {"ffc", 2}};
        cert.witnesses["d"] = d;
        for (size_t k = 0; k < es.size(); ++k) cert.witnesses["e" + std::to_string(k + 1)] = es[k];
        cert.genus = ambient_genus(u);
        cert.verdict = yes("wsccsep", "separating boundary curve of N(c u fc) against every candidate image",
                           detail);
        return {cert.verdict, cert};
    }
    return {no("wsccsep", last), std::nullopt};
}

namespace {

// Index of the neighborhood walk of each restricted-system walk.
std::vector<int> walk_to_neighborhood(const CurveSystem& t, const Restriction& r, const std::vector<int>& curves) {
    auto nw = neighborhood_walks(t, curves);
    std::vector<int> side_nw(2 * t.num_edges(), -1);
    for (size_t i = 0; i < nw.size(); ++i)
        for (int x : nw[i]) side_nw[x] = static_cast<int>(i);
    std::vector<int> out(r.sys.walks.size(), -1);
    for (size_t w = 0; w < r.sys.walks.size(); ++w) out[w] = side_nw.at(r.side_origin.at(r.sys.walks[w].at(0)));
    return out;
}

// Every way an orientation-preserving homeomorphism carrying (c, fc) to
// (fc, ffc) can act on the boundary curves of N(c u fc): phi[i] is the
// neighborhood walk of (fc, ffc) that walk i of (c, fc) goes to. Without
// match_genus the list is a superset.
std::vector<std::vector<int>> neighborhood_images(const CurveSystem& t, bool match_genus) {
    Restriction ra = restrict_to(t, {0, 1}), rb = restrict_to(t, {1, 2});
    auto wa = walk_to_neighborhood(t, ra, {0, 1}), wb = walk_to_neighborhood(t, rb, {1, 2});
    IsoPolicy pol;
    pol.allow_reflection = false;
    std::set<std::vector<int>> out;
    for_each_isomorphism_map(ra.sys, rb.sys, pol, [&](const IsoMap& m) {
        if (match_genus)
            for (int r = 0; r < ra.sys.num_regions(); ++r)
                if (ra.sys.regions[r].genus != rb.sys.regions[m.regions[r]].genus) return false;
        std::vector<int> phi(wa.size(), -1);
        for (size_t w = 0; w < wa.size(); ++w) phi[wa[w]] = wb[m.walks[w]];
        out.insert(phi);
        return false;
    });
    return {out.begin(), out.end()};
}

}  // namespace

bool pairs_homeomorphic(const CurveSystem& s, int c, int fc, int ffc) {
    need_distinct(s, {c, fc, ffc}, "pairs homeomorphic");
    Restriction ra = restrict_to(s, {c, fc}), rb = restrict_to(s, {fc, ffc});
    IsoPolicy pol;
    pol.allow_reflection = false;
    return for_each_isomorphism_map(ra.sys, rb.sys, pol, [&](const IsoMap& m) {
        for (int r = 0; r < ra.sys.num_regions(); ++r)
            if (ra.sys.regions[r].genus != rb.sys.regions[m.regions[r]].genus) return false;
        return true;
    });
}

Checked check_boundary_b(const CurveSystem& s, int c, int fc, int ffc) {
    const CurveSystem t = triple_of(s, c, fc, ffc).sys;
    // When no homeomorphism respects the genera the triple comes from no mapping
    // class; the genus-free superset still gives a sound check.
    auto phis = neighborhood_images(t, true);
    if (phis.empty()) phis = neighborhood_images(t, false);
    if (phis.empty()) return {no("wsccb", "no homeomorphism carries N(c u fc) to N(fc u ffc)"), std::nullopt};
    CurveSystem u = t;
    auto ds = insert_boundary_curves(u, 0, 1, "d");
    auto es = insert_boundary_curves(u, 1, 2, "e");
    auto good = [&](int i, int j) {
        return !is_separating(u, ds[i]) && !is_separating(u, es[j]) && check_wsccb(u, ds[i], es[j]).positive();
    };
    // For every possible action some nonseparating d is disjoint from and not
    // homologous to its image.
    std::string detail;
    for (const auto& phi : phis) {
        int found = -1;
        for (int i = 0; i < static_cast<int>(ds.size()) && found < 0; ++i)
            if (good(i, phi[i])) found = i;
        if (found < 0) return {no("wsccb", "some action sends every boundary curve to a bad image"), std::nullopt};
        if (!detail.empty()) detail += ", ";
        detail += u.names[ds[found]] + " -> " + u.names[es[phi[found]]];
    }
    Certificate cert;
    cert.criterion = "wsccb";
    cert.sys = u;
    cert.roles = {{"c", 0}, {"fc", 1}, {"ffc", 2}};
    for (size_t k = 0; k < ds.size(); ++k) cert.witnesses["d" + std::to_string(k + 1)] = ds[k];
    for (size_t k = 0; k < es.size(); ++k) cert.witnesses["e" + std::to_string(k + 1)] = es[k];
    cert.genus = ambient_genus(u);
    cert.verdict = yes("wsccb", "boundary curve of N(c u fc) disjoint from and not homologous to its image, "
                                "for every possible action on the neighborhood",
                       detail);
    return {cert.verdict, cert};
}

Checked check_type_IV_turn(const CurveSystem& s, int c, int fc, int ffc) {
    const CurveSystem t = triple_of(s, c, fc, ffc).sys;
    if (classify_triple(t, 0, 1, 2) != PairType::IV) throw Error("type-IV turn: triple is not of type IV");
    for (const auto& dc : turn_curves(t, 0, 1)) {
        if (!dc.left_turn) continue;
        CurveSystem t1;
        int d;
        try {
            std::tie(t1, d) = insert_strand(t, dc.legs, "d1");
        } catch (const Error&) {
            continue;
        }
        std::vector<std::pair<int, int>> keys;
        for (const auto& ec : turn_curves(t1, 1, 2))
            if (ec.left_turn && std::find(keys.begin(), keys.end(), ec.key) == keys.end()) keys.push_back(ec.key);
        if (keys.size() != 2) throw Error("type-IV turn: expected two left-turn curves");
        for (const auto& e1 : turn_curves(t1, 1, 2)) {
            if (!e1.left_turn || e1.key != keys[0]) continue;
            CurveSystem t2;
            int x1;
            try {
                std::tie(t2, x1) = insert_strand(t1, e1.legs, "e1");
            } catch (const Error&) {
                continue;
            }
            if (cnt(t2, d, x1) != 1) continue;
            for (const auto& e2 : turn_curves(t2, 1, 2)) {
                if (!e2.left_turn || e2.key != keys[1]) continue;
                CurveSystem t3;
                int x2;
                try {
                    std::tie(t3, x2) = insert_strand(t2, e2.legs, "e2");
                } catch (const Error&) {
                    continue;
                }
                if (cnt(t3, d, x2) != 1) continue;
                Certificate cert;
                cert.criterion = "type-IV-turn";
                cert.sys = t3;
                cert.roles = {{"c", 0}, {"fc", 1}, {"ffc", 2}};
                cert.witnesses = {{"d", d}, {"e1", x1}, {"e2", x2}};
                cert.genus = ambient_genus(t3);
                cert.verdict = yes("type-IV-turn", "left-turn curve crossing both candidate images once",
                                   "i(d1,e1) = i(d1,e2) = 1");
                return {cert.verdict, cert};
            }
        }
    }
    return {no("type-IV-turn", "no left-turn curve crosses both images once"), std::nullopt};
}

Checked check_type_I_boundary(const CurveSystem& s, int c, int fc, int ffc, int fffc) {
    need_distinct(s, {c, fc, ffc, fffc}, "type-I boundary");
    if (classify_pair(s, c, ffc) != PairType::II) throw Error("type-I boundary: (c, ffc) is not a type-II pair");
    CurveSystem u = restrict_to(s, {c, fc, ffc, fffc}).sys;
    const int sum = cnt(u, 0, 1) + cnt(u, 2, 1) + cnt(u, 0, 3) + cnt(u, 2, 3);
    auto ds_idx = separating_walk_indices(u, 0, 2);
    if (ds_idx.size() != 2) throw Error("type-I boundary: N(c u ffc) should have two separating boundary curves");
    auto ds = insert_boundary_curves(u, 0, 2, "d", ds_idx);
    std::string detail = "i(c,fc) + i(ffc,fc) + i(c,fffc) + i(ffc,fffc) <= " + std::to_string(sum);
    if (sum > 4) return {no("type-I-boundary", detail), std::nullopt};
    Certificate cert;
    cert.criterion = "type-I-boundary";
    cert.sys = u;
    cert.roles = {{"c", 0}, {"fc", 1}, {"ffc", 2}, {"fffc", 3}};
    cert.witnesses = {{"d1", ds[0]}, {"d2", ds[1]}};
    cert.genus = ambient_genus(u);
    cert.verdict = yes("type-I-boundary", "one of the separating boundary curves d_i has i(d_i, f d_i) <= 2",
                       detail);
    return {cert.verdict, cert};
}

Verdict verify_certificate(const Certificate& cert) {
    const CurveSystem& s = cert.sys;
    auto role = [&](const char* k) {
        auto it = cert.roles.find(k);
        if (it == cert.roles.end()) throw Error(std::string("certificate: missing role ") + k);
        return it->second;
    };
    auto wit = [&](const char* k) {
        auto it = cert.witnesses.find(k);
        if (it == cert.witnesses.end()) throw Error(std::string("certificate: missing witness ") + k);
        return it->second;
    };
    const std::string& k = cert.criterion;
    if (k == "wscca") return check_wscca(s, role("c"), role("fc"));
    if (k == "wsccb") {
        if (cert.witnesses.count("e1")) return check_boundary_b(s, role("c"), role("fc"), role("ffc")).verdict;
        return check_wsccb(s, role("c"), role("fc"));
    }
    if (k == "wsccsep") {
        if (cert.witnesses.count("d")) return check_boundary_sep(s, role("c"), role("fc"), role("ffc")).verdict;
        return check_wsccsep(s, role("c"), role("fc"));
    }
    if (k == "chen") return check_chen(s, role("c"), role("fc"), wit("d"));
    if (k == "lantern") {
        Verdict v = check_chen(s, role("c"), role("fc"), wit("d"));
        if (v.positive() && mod2_class_equal(s, {role("c")}, {role("fc")})) return no("lantern", "agree mod 2");
        return v;
    }
    if (k == "good-pair" || k == "good-pair-bp")
        return check_good_pair(s, role("c"), role("fc"), role("ffc"), wit("a"), wit("b"));
    if (k == "type-IV-turn") return check_type_IV_turn(s, role("c"), role("fc"), role("ffc")).verdict;
    if (k == "type-I-boundary")
        return check_type_I_boundary(s, role("c"), role("fc"), role("ffc"), role("fffc")).verdict;
    throw Error("certificate: unknown criterion '" + k + "'");
}

Verdict finalize(Verdict v, int genus) {
    if (v.conclusion == Conclusion::ContainsCommutator && genus >= 3) {
        v.conclusion = Conclusion::NormalGenerator;
        v.detail += "; the mapping class group is perfect in genus >= 3";
    }
    return v;
}

FlmBound flm_bound(double lambda, int k) {
    if (!(lambda > 1.0)) throw Error("flm bound: lambda must exceed 1");
    if (k < 1) throw Error("flm bound: k must be positive");
    auto ok = [&](long n) { return lambda <= std::pow(n / 2.0, 1.0 / k); };
    long n = std::max(1L, static_cast<long>(std::ceil(2.0 * std::pow(lambda, k))));
    while (n > 1 && ok(n - 1)) --n;
    while (!ok(n)) ++n;
    return FlmBound{static_cast<int>(n), static_cast<int>(n - 1)};
}

int parity_refined(int guarantee, bool mod2_equal) {
    if (mod2_equal && guarantee % 2 != 0) return guarantee - 1;
    return guarantee;
}

Verdict periodic_verdict(int g, PeriodicKind kind, int image) {
    if (g < 1) throw Error("periodic verdict: genus must be at least 1");
    Verdict v;
    v.criterion = "periodic";
    if (g >= 3) {
        if (kind == PeriodicKind::OtherPeriodic) {
            v.conclusion = Conclusion::NormalGenerator;
            v.lemma = "nontrivial periodic, not hyperelliptic, genus >= 3";
        } else {
            v.conclusion = Conclusion::PreimageOfPlusMinusI;
            v.lemma = "hyperelliptic involution acts as -I on homology";
        }
        return v;
    }
    if (kind == PeriodicKind::Hyperelliptic) {
        v.conclusion = Conclusion::CentralOrderTwo;
        v.lemma = "hyperelliptic involution is central in genus 1 and 2";
        return v;
    }
    v.modulus = g == 1 ? 12 : 10;
    v.residue = ((image % v.modulus) + v.modulus) % v.modulus;
    v.lemma = "abelianization is cyclic of order " + std::to_string(v.modulus);
    v.conclusion = std::gcd(v.residue, v.modulus) == 1 ? Conclusion::NormalGenerator
                                                        : Conclusion::AbelianizationDetermined;
    v.detail = "image " + std::to_string(v.residue) + " mod " + std::to_string(v.modulus);
    return v;
}

bool power_subgroup_full(long L, long n) {
    if (L <= 0 || L % 2 != 0) throw Error("power subgroup: L must be a positive even integer");
    if (n <= 0) throw Error("power subgroup: n must be positive");
    return n % (L / 2) != 0;
}

CaseResult run_case_analysis(const CurveSystem& s, int c, int fc, int ffc, int genus, const Catalog& catalog,
                             std::optional<int> fffc) {
    need_distinct(s, {c, fc, ffc}, "case analysis");
    if (genus != ambient_genus(s)) throw Error("case analysis: genus does not match the system");
    CaseResult out;
    auto done = [&](Checked ch, const std::string& route) {
        out.verdict = finalize(ch.verdict, genus);
        if (ch.certificate) {
            ch.certificate->verdict = out.verdict;
            out.certificate = std::move(ch.certificate);
        }
        out.route = route;
        return out;
    };
    auto simple = [&](Verdict v, const std::string& route, std::map<std::string, int> roles) {
        Checked ch{v, std::nullopt};
        if (v.positive()) {
            Certificate cert;
            cert.criterion = v.criterion;
            cert.sys = s;
            cert.roles = std::move(roles);
            cert.genus = genus;
            cert.verdict = v;
            ch.certificate = cert;
        }
        return done(ch, route);
    };
    if (is_separating(s, c)) return simple(check_wsccsep(s, c, fc), "separating", {{"c", c}, {"fc", fc}});
    if (!in_minimal_position(s, c, fc)) throw Error("case analysis: c and fc are not in minimal position");
    const int i = cnt(s, c, fc);
    if (i == 1) return simple(check_wscca(s, c, fc), "one crossing", {{"c", c}, {"fc", fc}});
    if (i == 0 && !union_separates(s, c, fc))
        return simple(check_wsccb(s, c, fc), "disjoint, not homologous", {{"c", c}, {"fc", fc}});
    if (i == 2 && !mod2_class_equal(s, {c}, {fc})) return done(check_lantern(s, c, fc), "mod-2 inequivalent");
    if (i > 2) return done({no("case analysis", "i(c,fc) > 2; tighten the stretch-factor bound"), std::nullopt},
                           "out of range");

    CurveSystem t = triple_of(s, c, fc, ffc).sys;
    PairType type = classify_triple(t, 0, 1, 2);
    out.type = type;
    if (type == PairType::None)
        return done({no("case analysis", "triple does not classify"), std::nullopt}, "unclassified");
    Match m = match_catalog(catalog, t, 0, 1, 2);
    out.type = m.entry->type;
    out.catalog_index = m.entry->index;
    const Annotation& an = m.entry->annotation;
    const std::string route = type_name(m.entry->type) + " #" + std::to_string(m.entry->index);
    if (an.criterion == "good-pair" || an.criterion == "good-pair-bp") {
        if (an.witness_curves.size() != 2) throw Error("catalog: good-pair annotation needs two curves");
        RegionCurve w[2];
        for (int k = 0; k < 2; ++k) {
            const RegionCurve& src = an.witness_curves[k];
            w[k] = src;
            w[k].region = m.map.regions.at(src.region);
            for (auto& x : w[k].walks_left) x = m.map.walks.at(x);
        }
        Checked ch = good_pair_with(t, 0, 1, 2, w[0], w[1]);
        if (ch.certificate) {
            ch.certificate->roles = {{"c", 0}, {"fc", 1}, {"ffc", 2}};
        }
        return done(ch, route);
    }
    if (an.criterion == "wsccsep") return done(check_boundary_sep(t, 0, 1, 2), route);
    if (an.criterion == "wsccb") return done(check_boundary_b(t, 0, 1, 2), route);
    if (an.criterion == "type-IV-turn") return done(check_type_IV_turn(t, 0, 1, 2), route);
    if (an.criterion == "type-I-boundary") {
        if (!fffc) return done({no("type-I-boundary", "f^3(c) data required"), std::nullopt}, route);
        return done(check_type_I_boundary(s, c, fc, ffc, *fffc), route);
    }
    // No witness on the minimal entry; the stabilized input may still admit one.
    for (auto check : {check_boundary_sep, check_boundary_b}) {
        Checked ch = check(t, 0, 1, 2);
        if (ch.verdict.positive()) return done(ch, route);
    }
    return done({no("case analysis", "catalog entry has no witness"), std::nullopt}, route);
}

}  // namespace scc
