#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scc/classifier.hpp"
#include "scc/surface.hpp"

namespace scc {

enum class Conclusion {
    Inconclusive,
    ContainsCommutator,  // normal closure contains the commutator subgroup
    NormalGenerator,
    PreimageOfPlusMinusI,
    CentralOrderTwo,
    AbelianizationDetermined,
    TrivialGroup,
};

std::string conclusion_name(Conclusion c);

struct Verdict {
    Conclusion conclusion = Conclusion::Inconclusive;
    std::string criterion;  // check that produced it
    std::string lemma;      // statement it rests on
    std::string detail;
    int residue = 0, modulus = 0;  // for abelianization verdicts
    bool positive() const {
        return conclusion != Conclusion::Inconclusive;
    }
};

// A normal-generation certificate: the mapping class is pinned down only by
// its action on the role curves (c -> fc -> ffc -> fffc).
struct Certificate {
    std::string criterion;
    CurveSystem sys;                        // includes witness curves
    std::map<std::string, int> roles;       // "c", "fc", "ffc", "fffc"
    std::map<std::string, int> witnesses;   // "d", "e1", "a", ...
    int genus = 0;
    Verdict verdict;
};

struct Checked {
    Verdict verdict;
    std::optional<Certificate> certificate;
};

// Lemma-level checks. Preconditions are enforced with Error.
Verdict check_wscca(const CurveSystem& sys, int c, int fc);
Verdict check_wsccb(const CurveSystem& sys, int c, int fc);
Verdict check_wsccsep(const CurveSystem& sys, int d, int fd);
Verdict check_chen(const CurveSystem& sys, int c, int fc, int d);
Checked check_lantern(const CurveSystem& sys, int c, int fc);
Verdict check_good_pair(const CurveSystem& sys, int c, int fc, int ffc, int a, int b);
Checked check_type_I_boundary(const CurveSystem& sys, int c, int fc, int ffc, int fffc);
Checked check_type_IV_turn(const CurveSystem& sys, int c, int fc, int ffc);

// Neighborhood-boundary arguments. Separating boundary curves d of N(c u fc)
// against those of N(fc u ffc) (wsccsep), and a nonseparating boundary curve of
// N(fc u ffc) disjoint from and not homologous to every nonseparating boundary
// curve of N(c u fc) (wsccb).
Checked check_boundary_sep(const CurveSystem& sys, int c, int fc, int ffc);
Checked check_boundary_b(const CurveSystem& sys, int c, int fc, int ffc);

// Search for a good pair of curves in the complement of the triple. Returns
// the specifications of a and b (regions of the triple alone) on success.
struct GoodPair {
    RegionCurve a, b;
    Checked checked;
};
std::optional<GoodPair> find_good_pair(const CurveSystem& sys, int c, int fc, int ffc,
                                       const std::vector<int>& regions_a = {},
                                       const std::vector<int>& regions_b = {});
// Inserts the two witness curves into the triple and checks them.
Checked good_pair_with(const CurveSystem& sys, int c, int fc, int ffc, const RegionCurve& a, const RegionCurve& b);

// True iff an orientation-preserving homeomorphism carries (c, fc) to
// (fc, ffc); necessary for the triple to be (c, f(c), f^2(c)).
bool pairs_homeomorphic(const CurveSystem& sys, int c, int fc, int ffc);

// Recomputes the verdict of a certificate from its fields.
Verdict verify_certificate(const Certificate& cert);

// Upgrades a commutator-subgroup conclusion to normal generation when the
// mapping class group is perfect.
Verdict finalize(Verdict v, int genus);

struct FlmBound {
    int n = 0;          // least n with lambda <= (n/2)^(1/k)
    int guarantee = 0;  // i(c, f^k(c)) <= n - 1
};
FlmBound flm_bound(double lambda, int k);
// Evenness refinement when c and f^k(c) agree mod 2.
int parity_refined(int guarantee, bool mod2_equal);

enum class PeriodicKind { Hyperelliptic, OtherPeriodic };
Verdict periodic_verdict(int genus, PeriodicKind kind, int abelianization_image = 0);

bool power_subgroup_full(long L, long n);

struct CaseResult {
    Verdict verdict;
    std::optional<Certificate> certificate;
    std::string route;  // which branch of the case analysis fired
    int catalog_index = 0;
    PairType type = PairType::None;
};

struct Catalog;
// Case analysis for a triple (c, fc, ffc); fffc is only needed for the
// type-I configuration without a good pair.
CaseResult run_case_analysis(const CurveSystem& sys, int c, int fc, int ffc, int genus, const Catalog& catalog,
                             std::optional<int> fffc = std::nullopt);

}  // namespace scc
