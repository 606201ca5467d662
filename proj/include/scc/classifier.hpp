#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "scc/canonical.hpp"
#include "scc/surface.hpp"

namespace scc {

enum class PairType { None, I, II, III, IV };

std::string type_name(PairType t);
PairType parse_type(const std::string& s);  // throws Error on anything but I..IV

// Pair of nonseparating curves in minimal position: I (disjoint bounding pair),
// II (two crossings, algebraic 0, three complementary regions), III (two
// crossings, algebraic 0, two regions with two boundary walks each), IV (two
// crossings, algebraic 2). None otherwise.
PairType classify_pair(const CurveSystem& sys, int c1, int c2);

// Common type of (c,fc) and (fc,ffc), provided all three curves are
// nonseparating, mod-2 homologous, pairwise non-homotopic and pairwise in
// minimal position with |c ∩ ffc| in {0, 2}.
PairType classify_triple(const CurveSystem& sys, int c, int fc, int ffc);

// Arc of a curve between consecutive crossings with a cut curve.
struct ArcInfo {
    std::vector<int> edges;
    int start_side = 0, end_side = 0;  // 1: left of the cut curve, 2: right
};
std::vector<ArcInfo> arcs_across(const CurveSystem& sys, int curve, int cut);

struct Template {
    PairType type = PairType::None;
    int number = 0;                // position in the standard list, 0 if unmatched
    CurveSystem sys;               // curves gamma0, delta0, epsilon0
    std::array<int, 4> arc_matrix{};  // rows: gamma arcs, columns: epsilon arcs
    bool linked = false;           // gamma and epsilon alternate along delta
    int delta_epsilon_regions = 0;
};

struct TemplateStats {
    long candidates = 0;
    long pruned_separating = 0;     // epsilon0 separating
    long pruned_mixed_arcs = 0;     // type III arcs of mixed separation type
    std::vector<CurveSystem> separating_examples;
    std::vector<CurveSystem> mixed_examples;
};

std::vector<Template> enumerate_templates(PairType type, const IsoPolicy& policy = {},
                                          TemplateStats* stats = nullptr);

// Annotated normal-generation witness of a catalog entry, filled in by the
// catalog module.
struct Annotation {
    std::string criterion;
    std::vector<RegionCurve> witness_curves;  // a and b for good pairs
    std::string detail;
};

struct TripleCatalogEntry {
    PairType type = PairType::None;
    int index = 0;           // 1-based within its type
    int template_number = 0;
    std::string figure;
    CurveSystem sys;
    std::vector<std::pair<int, int>> handles;  // template regions joined
    Annotation annotation;
};

// Handles joining template regions: self pairs raise genus, other pairs merge.
CurveSystem apply_handles(const CurveSystem& sys, const std::vector<std::pair<int, int>>& pairs);

// Minimal configurations from one template.
std::vector<TripleCatalogEntry> minimal_from_template(const Template& t, const IsoPolicy& policy = {});

std::vector<TripleCatalogEntry> enumerate_minimal_triples(PairType type, const IsoPolicy& policy = {});

// True iff no single-region genus decrease keeps the triple of the same type.
bool is_minimal_configuration(const CurveSystem& sys, PairType type);

}  // namespace scc
