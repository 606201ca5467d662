// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "scc/catalog.hpp"
#include "scc/generate.hpp"
#include "scc/homology.hpp"
#include "scc/polygon.hpp"
#include "scc/symplectic.hpp"
#include "scc/thurston.hpp"

using namespace scc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", n, name.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

void guarded(int n, const std::string& name, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(n, name, false, std::string("exception: ") + e.what());
    }
}

const Catalog* shared_catalog = nullptr;

void classification_counts() {
    auto t0 = Clock::now();
    size_t t2 = enumerate_templates(PairType::II).size();
    size_t t3 = enumerate_templates(PairType::III).size();
    size_t t4 = enumerate_templates(PairType::IV).size();
    static Catalog cat = build_catalog();
    shared_catalog = &cat;
    double secs = seconds_since(t0);
    int c1 = cat.count(PairType::I), c2 = cat.count(PairType::II), c3 = cat.count(PairType::III),
        c4 = cat.count(PairType::IV);
    bool ok = t2 == 4 && t3 == 7 && t4 == 3 && c1 == 2 && c2 == 10 && c3 == 16 && c4 == 8 && secs < 60;
    std::ostringstream d;
    d << "templates " << t2 << "/" << t3 << "/" << t4 << " (want 4/7/3), configurations " << c1 << "/" << c2 << "/"
      << c3 << "/" << c4 << " = " << cat.entries.size() << " (want 2/10/16/8 = 36), " << secs << " s";
    report(1, "classification counts", ok, d.str());
}

void certificate_sweep_check() {
    if (!shared_catalog) throw Error("catalog unavailable");
    auto t0 = Clock::now();
    SweepResult r = certificate_sweep(*shared_catalog, 100, 20240601);
    bool ok = r.positive == r.checked && r.no_match == 0 && r.inconclusive == 0 && r.errors == 0;
    std::ostringstream d;
    d << r.checked << " checked, " << r.positive << " positive, " << r.inconclusive << " inconclusive, " << r.no_match
      << " no match, " << r.errors << " errors, " << seconds_since(t0) << " s";
    if (!r.failures.empty()) {
        const auto& f = r.failures.front();
        d << "; first: " << type_name(f.type) << " #" << f.index << " trial " << f.trial << ": " << f.message;
    }
    report(2, "catalog certificate sweep", ok, d.str());
}

void stretch_numerics() {
    auto t0 = Clock::now();
    IntGrid one(1, 1);
    one << 1;
    double lambda = static_cast<double>(stretch_factor(make_thurston_system(one), parse_word("Ab")).lambda);
    double err1 = std::abs(lambda - (3 + std::sqrt(5.0)) / 2);
    ThurstonSystem g3 = make_thurston_system(chain_intersection_matrix(3));
    long double worst = 0;
    for (long long n = 1; n <= 1000000; n = n < 100 ? n + 1 : n * 3 / 2) {
        WordValue v = eval_word(g3, parse_word("aB^" + std::to_string(n)));
        worst = std::max(worst, std::abs(v.trace - (2 + n * static_cast<long double>(g3.mu))));
    }
    WordValue top = eval_word(g3, parse_word("aB^1000000"));
    worst = std::max(worst, std::abs(top.trace - (2 + 1000000 * static_cast<long double>(g3.mu))));
    double ms = seconds_since(t0) * 1e3;
    bool ok = err1 < 1e-9 && worst < 1e-10 && ms < 1000;
    std::ostringstream d;
    d.precision(3);
    d << "|lambda - phi^2| = " << err1 << ", max trace error " << static_cast<double>(worst) << " for n <= 1e6, " << ms
      << " ms";
    report(3, "stretch-factor numerics", ok, d.str());
}

void lemma_k() {
    struct Fixture {
        const char* name;
        IntGrid n;
        int blowup;
    };
    IntGrid one(1, 1);
    one << 1;
    std::vector<Fixture> fx = {{"torus", one, 0},
                               {"genus-2 chain", chain_intersection_matrix(2), 0},
                               {"genus-3 chain", chain_intersection_matrix(3), 1}};
    std::vector<int> ks;
    for (int k = 1; k <= 200; ++k) ks.push_back(k);
    bool ok = true;
    std::ostringstream d;
    for (const auto& f : fx) {
        auto table = exponent_growth_check(f.n, f.blowup, ks);
        bool above = true, increasing = true;
        int first_100 = 0;
        for (size_t i = 0; i < table.size(); ++i) {
            above &= table[i].min_row_sum >= table[i].k;
            if (i > 0) increasing &= table[i].lambda_lower > table[i - 1].lambda_lower;
            if (!first_100 && table[i].lambda_lower > 100) first_100 = table[i].k;
        }
        ok &= above && increasing && first_100 > 0;
        d << f.name << ": " << (above ? "bound >= k" : "bound < k somewhere") << ", "
          << (increasing ? "increasing" : "not increasing") << ", lambda > 100 "
          << (first_100 ? "from k = " + std::to_string(first_100) : std::string("never")) << (&f == &fx.back() ? "" : "; ");
    }
    report(4, "lemma-k bound", ok, d.str());
}

void flm() {
    bool ok = true;
    for (double l = 1.4151; l < 1.499; l += 0.0005) {
        FlmBound b = flm_bound(l, 1);
        ok &= b.n == 3 && parity_refined(b.guarantee, true) == 2;
    }
    double below = std::nextafter(std::sqrt(2.0), 0.0);
    int k2 = parity_refined(flm_bound(below, 2).guarantee, true);
    int k3 = parity_refined(flm_bound(below, 3).guarantee, true);
    ok &= k2 == 2 && k3 == 4;
    std::ostringstream d;
    d << "k=1 gives n=3 refined 2 on (1.415,1.499); below sqrt 2: k=2 refined " << k2 << ", k=3 refined " << k3;
    report(5, "FLM bounds", ok, d.str());
}

void symplectic_suite() {
    bool ok = true;
    long produced = 0;
    auto sym = [&](const IntMatrix& m) {
        ++produced;
        ok &= is_symplectic(m);
    };
    for (int g = 1; g <= 5; ++g) {
        IntVector x1 = IntVector::Zero(2 * g);
        x1(0) = 1;
        for (long long m = 1; m <= 20; ++m) {
            IntMatrix t = transvection(x1, m);
            sym(t);
            ok &= congruence_level(t) == m;
        }
        if (g >= 2) {
            IntMatrix M = named_matrix("M", g), N = named_matrix("N", g);
            sym(M);
            sym(N);
            ok &= matrix_order(M) == 4 && matrix_order(N) == 2;
        }
        for (int k = 1; k < g; ++k) {
            IntMatrix mk = named_matrix("M_k", g, k);
            sym(mk);
            ok &= congruence_level(mk) == 2;
        }
        IntMatrix mg = named_matrix("M_k", g, g);
        sym(mg);
        ok &= mg == -IntMatrix::Identity(2 * g, 2 * g);
    }
    report(6, "symplectic suite", ok, std::to_string(produced) + " matrices checked against M^T J M = J");
}

bool oracle_agrees(const CurveSystem& s) {
    HomologyOracle h = homology_oracle_gf2(s);
    if (h.rank != 2 * ambient_genus(s)) return false;
    auto zero = [](const std::vector<int>& v) {
        for (int x : v)
            if (x) return false;
        return true;
    };
    const int C = s.num_curves();
    for (int a = 0; a < C; ++a) {
        if (zero(h.class_of({a})) != is_separating(s, a)) return false;
        for (int b = a + 1; b < C; ++b)
            if ((h.class_of({a}) == h.class_of({b})) != mod2_class_equal(s, {a}, {b})) return false;
    }
    return true;
}

void homology() {
    if (!shared_catalog) throw Error("catalog unavailable");
    int bad_cat = 0, bad_rand = 0;
    for (const auto& e : shared_catalog->entries) bad_cat += !oracle_agrees(e.sys);
    std::mt19937_64 rng(77);
    for (int k = 0; k < 1000; ++k) bad_rand += !oracle_agrees(random_system(rng, 12));
    report(7, "homology oracle equivalence", bad_cat == 0 && bad_rand == 0,
           std::to_string(shared_catalog->entries.size()) + " catalog entries (" + std::to_string(bad_cat) +
               " disagreements), 1000 random systems (" + std::to_string(bad_rand) + " disagreements)");
}

void polygon() {
    int g4 = quotient_genus(opposite_pairing(4)), g8 = quotient_genus(opposite_pairing(8)),
        g10 = quotient_genus(opposite_pairing(10));
    PolygonSweep s = case3_sweep(14);
    bool ok = g4 == 1 && g8 == 2 && g10 == 2 && s.instances > 0 && s.positive == s.instances && s.failures.empty();
    std::ostringstream d;
    d << "genera " << g4 << "/" << g8 << "/" << g10 << "; " << s.positive << " of " << s.instances
      << " rotations of order > 2 positive for n <= 14";
    if (!s.failures.empty()) d << "; first failure: " << s.failures.front();
    report(8, "polygon model", ok, d.str());
}

}  // namespace

int main() {
    guarded(1, "classification counts", classification_counts);
    guarded(2, "catalog certificate sweep", certificate_sweep_check);
    guarded(3, "stretch-factor numerics", stretch_numerics);
    guarded(4, "lemma-k bound", lemma_k);
    guarded(5, "FLM bounds", flm);
    guarded(6, "symplectic suite", symplectic_suite);
    guarded(7, "homology oracle equivalence", homology);
    guarded(8, "polygon model", polygon);
    std::printf("%d of 8 criteria passed\n", 8 - failures);
    return failures ? 1 : 0;
}
