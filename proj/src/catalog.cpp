#include "scc/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scc/generate.hpp"
#include "scc/strands.hpp"
#include "scc/util.hpp"

namespace scc {

int Catalog::count(PairType t) const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [&](const auto& e) { return e.type == t; }));
}

const TripleCatalogEntry& Catalog::at(PairType t, int index) const {
    for (const auto& e : entries)
        if (e.type == t && e.index == index) return e;
    throw Error("catalog: no entry " + type_name(t) + " #" + std::to_string(index));
}

Annotation annotate_entry(const TripleCatalogEntry& e) {
    Annotation an;
    const CurveSystem& s = e.sys;
    if (auto gp = find_good_pair(s, 0, 1, 2)) {
        an.criterion = gp->checked.verdict.criterion;
        an.witness_curves = {gp->a, gp->b};
        an.detail = gp->checked.verdict.detail;
        return an;
    }
    auto take = [&](const Checked& ch) {
        if (!ch.verdict.positive()) return false;
        an.criterion = ch.verdict.criterion;
        an.detail = ch.verdict.detail;
        return true;
    };
    switch (e.type) {
        case PairType::I: {
            auto [q, f3] = insert_parallel_copy(s, 2, "fffc");
            if (take(check_type_I_boundary(q, 0, 1, 2, f3))) return an;
            break;
        }
        case PairType::II:
            if (take(check_boundary_sep(s, 0, 1, 2))) return an;
            break;
        case PairType::III:
            if (take(check_boundary_b(s, 0, 1, 2))) return an;
            break;
        case PairType::IV:
            if (take(check_type_IV_turn(s, 0, 1, 2))) return an;
            break;
        default: break;
    }
    if (e.type != PairType::II && take(check_boundary_sep(s, 0, 1, 2))) return an;
    if (e.type != PairType::III && take(check_boundary_b(s, 0, 1, 2))) return an;
    an.criterion = "none";
    an.detail = "no witness found";
    return an;
}

Catalog build_catalog(const IsoPolicy& policy, bool annotate) {
    Catalog cat;
    cat.policy = policy;
    for (PairType t : {PairType::I, PairType::II, PairType::III, PairType::IV})
        for (auto& e : enumerate_minimal_triples(t, policy)) cat.entries.push_back(std::move(e));
    if (annotate) {
        const int n = static_cast<int>(cat.entries.size());
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) cat.entries[i].annotation = annotate_entry(cat.entries[i]);
    }
    return cat;
}

Match match_catalog(const Catalog& cat, const CurveSystem& sys, int c, int fc, int ffc) {
    CurveSystem t = restrict_to(sys, {c, fc, ffc}).sys;
    PairType type = classify_triple(t, 0, 1, 2);
    if (type == PairType::None) throw Error("no match: triple does not classify");
    Match m;
    for (const auto& e : cat.entries) {
        if (e.type != type) continue;
        if (stabilization_map(t, e.sys, cat.policy, &m.map)) {
            m.entry = &e;
            return m;
        }
    }
    throw Error("no match: type " + type_name(type) + " triple stabilizes no catalog entry");
}

std::vector<CurveSystem> brute_force_minimal(PairType type, const IsoPolicy& policy, bool parallel) {
    if (type != PairType::II && type != PairType::III && type != PairType::IV)
        throw Error("brute force: types II-IV only");
    const int alg = type == PairType::IV ? 2 : 0;
    std::vector<RawMap> maps;
    for (int ge : {0, 2})
        for (auto& m : enumerate_ribbons({"gamma", "delta", "epsilon"}, {{{0, 1, 2}, {1, 2, 2}, {0, 2, ge}}}, policy))
            maps.push_back(std::move(m));
    std::vector<std::vector<std::pair<std::vector<int>, CurveSystem>>> per(maps.size());
    auto work = [&](size_t mi) {
        const RawMap& m = maps[mi];
        CurveSystem rs = ribbon_system(m);
        if (algebraic_intersection(rs, 0, 1) != alg || algebraic_intersection(rs, 1, 2) != alg) return;
        const int W = static_cast<int>(rs.walks.size());
        for_each_set_partition(W, -1, [&](const std::vector<int>& part, int k) {
            CurveSystem s = attach_regions(m, rs.walks, part, std::vector<int>(k, 0));
            UnionFind uf(k);
            for (int e = 0; e < s.num_edges(); ++e) uf.unite(s.region_of_side(left_side(e)), s.region_of_side(right_side(e)));
            int comps;
            uf.labels(&comps);
            if (comps != 1) return;
            if (!mod2_class_equal(s, {0}, {1}) || !mod2_class_equal(s, {1}, {2})) return;
            std::set<int> ob;
            for (auto [x, y] : {std::pair{0, 1}, {1, 2}, {0, 2}}) {
                for (auto& g : detect_bigons(s, x, y)) ob.insert(g.begin(), g.end());
                for (auto& g : detect_annuli(s, x, y)) ob.insert(g.begin(), g.end());
            }
            std::vector<int> B(ob.begin(), ob.end());
            const int nb = static_cast<int>(B.size());
            std::vector<long> order, valid;
            for (long b = 0; b < (1L << nb); ++b) order.push_back(b);
            std::stable_sort(order.begin(), order.end(),
                             [](long x, long y) { return __builtin_popcountl(x) < __builtin_popcountl(y); });
            for (long bm : order) {
                if (std::any_of(valid.begin(), valid.end(), [&](long v) { return (bm & v) == v; })) continue;
                CurveSystem c = s;
                for (int i = 0; i < nb; ++i)
                    if (bm >> i & 1) c.regions[B[i]].genus = 1;
                if (classify_triple(c, 0, 1, 2) != type) continue;
                valid.push_back(bm);
                if (is_minimal_configuration(c, type)) per[mi].push_back({canonical_form(c, policy), c});
            }
        });
    };
    const long n = static_cast<long>(maps.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) work(i);
    } else {
        for (long i = 0; i < n; ++i) work(i);
    }
    std::map<std::vector<int>, CurveSystem> found;
    for (auto& v : per)
        for (auto& [k, c] : v) found.emplace(k, std::move(c));
    std::vector<CurveSystem> out;
    for (auto& [k, c] : found) out.push_back(std::move(c));
    return out;
}

CurveSystem random_stabilization(const CurveSystem& sys, std::mt19937_64& rng, int bumps) {
    CurveSystem s = sys;
    for (int k = 0; k < bumps; ++k) {
        std::uniform_int_distribution<int> pick(0, s.num_regions() - 1);
        s = stabilize(s, pick(rng));
    }
    return s;
}

bool operator==(const SweepFailure& a, const SweepFailure& b) {
    return a.type == b.type && a.index == b.index && a.trial == b.trial && a.message == b.message;
}

namespace {

enum class Outcome { Positive, Inconclusive, NoMatch, Error };

Outcome sweep_one(const Catalog& cat, const TripleCatalogEntry& e, int trial, uint64_t seed, std::string& msg) {
    CurveSystem s = e.sys;
    if (trial > 0) {
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<uint64_t>(e.type) * 1000 + e.index)) ^
                            static_cast<uint64_t>(trial));
        s = random_stabilization(s, rng, 1 + static_cast<int>(rng() % 3));
    }
    try {
        std::optional<int> f3;
        if (e.annotation.criterion == "type-I-boundary") {
            auto [q, x] = insert_parallel_copy(s, 2, "fffc");
            s = std::move(q);
            f3 = x;
        }
        CaseResult r = run_case_analysis(s, 0, 1, 2, ambient_genus(s), cat, f3);
        if (!r.verdict.positive()) {
            msg = r.route + ": " + r.verdict.detail;
            return Outcome::Inconclusive;
        }
        if (!r.certificate || !verify_certificate(*r.certificate).positive()) {
            msg = r.route + ": certificate does not re-verify";
            return Outcome::Error;
        }
        return Outcome::Positive;
    } catch (const Error& ex) {
        msg = ex.what();
        return std::string(ex.what()).rfind("no match", 0) == 0 ? Outcome::NoMatch : Outcome::Error;
    }
}

}  // namespace

SweepResult certificate_sweep(const Catalog& cat, int trials, uint64_t seed, bool parallel) {
    const long per = trials + 1;
    const long total = static_cast<long>(cat.entries.size()) * per;
    std::vector<Outcome> out(total);
    std::vector<std::string> msg(total);
    auto work = [&](long j) {
        out[j] = sweep_one(cat, cat.entries[j / per], static_cast<int>(j % per), seed, msg[j]);
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long j = 0; j < total; ++j) work(j);
    } else {
        for (long j = 0; j < total; ++j) work(j);
    }
    SweepResult r;
    for (long j = 0; j < total; ++j) {
        ++r.checked;
        switch (out[j]) {
            case Outcome::Positive: ++r.positive; continue;
            case Outcome::Inconclusive: ++r.inconclusive; break;
            case Outcome::NoMatch: ++r.no_match; break;
            case Outcome::Error: ++r.errors; break;
        }
        const auto& e = cat.entries[j / per];
        r.failures.push_back({e.type, e.index, static_cast<int>(j % per), msg[j]});
    }
    return r;
}

}  // namespace scc
