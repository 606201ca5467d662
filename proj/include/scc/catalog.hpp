#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "scc/canonical.hpp"
#include "scc/classifier.hpp"
#include "scc/criteria.hpp"

namespace scc {

struct Catalog {
    IsoPolicy policy;
    std::vector<TripleCatalogEntry> entries;  // types I..IV, each sorted by canonical form
    int count(PairType t) const;
    const TripleCatalogEntry& at(PairType t, int index) const;
};

// Enumerates all minimal configurations and annotates each with a witness.
Catalog build_catalog(const IsoPolicy& policy = {}, bool annotate = true);

// Searches for a witness: a good pair first, then the neighborhood-boundary
// and turn-curve arguments for the entry's type.
Annotation annotate_entry(const TripleCatalogEntry& entry);

struct Match {
    const TripleCatalogEntry* entry = nullptr;
    IsoMap map;  // entry -> restrict_to(sys, {c, fc, ffc})
};
// The catalog entry the triple stabilizes; throws Error("no match").
Match match_catalog(const Catalog& catalog, const CurveSystem& sys, int c, int fc, int ffc);

// Minimal configurations of type II-IV found without templates: every ribbon
// graph with the right crossing counts, every grouping of its walks into
// regions, every set of genus bumps on bigon and annulus regions.
std::vector<CurveSystem> brute_force_minimal(PairType type, const IsoPolicy& policy = {}, bool parallel = true);

// Random stabilization: `bumps` genus increments on uniformly chosen regions.
CurveSystem random_stabilization(const CurveSystem& sys, std::mt19937_64& rng, int bumps);

struct SweepFailure {
    PairType type = PairType::None;
    int index = 0, trial = 0;  // trial 0 is the entry itself
    std::string message;
};
struct SweepResult {
    long checked = 0, positive = 0, inconclusive = 0, no_match = 0, errors = 0;
    std::vector<SweepFailure> failures;  // sorted by (type, index, trial)
    bool operator==(const SweepResult&) const = default;
};
bool operator==(const SweepFailure& a, const SweepFailure& b);

// Runs the case analysis on every entry and `trials` random stabilizations of
// each. The type-I boundary entries get a parallel copy of ffc as f^3(c).
// Results do not depend on `parallel`.
SweepResult certificate_sweep(const Catalog& catalog, int trials, uint64_t seed, bool parallel = true);

}  // namespace scc
