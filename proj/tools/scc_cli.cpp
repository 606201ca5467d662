// Command-line front end. Exit codes: 0 positive / counts as expected,
// 1 inconclusive, 2 malformed input, usage error or count mismatch.
#include <omp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scc/catalog.hpp"
#include "scc/polygon.hpp"
#include "scc/surface_io.hpp"
#include "scc/symplectic.hpp"
#include "scc/thurston.hpp"

using namespace scc;

namespace {

struct Globals {
    bool json_out = false;
    std::string policy = "default";
    double tol = 1e-12;
    int jobs = 0;

    IsoPolicy iso() const {
        IsoPolicy p;
        p.allow_reflection = policy != "no-reflection";
        return p;
    }
};

// "@path" reads the file, anything else is taken literally.
std::string at_file(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw Error("cannot open '" + arg.substr(1) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json int_matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        rows.push_back(r);
    }
    return rows;
}

void print_verdict(const Verdict& v) {
    std::cout << "verdict: " << conclusion_name(v.conclusion) << "\n";
    if (!v.criterion.empty()) std::cout << "criterion: " << v.criterion << "\n";
    if (!v.lemma.empty()) std::cout << "lemma: " << v.lemma << "\n";
    if (!v.detail.empty()) std::cout << "detail: " << v.detail << "\n";
    if (v.modulus) std::cout << "abelianization: " << v.residue << " mod " << v.modulus << "\n";
}

void print_roles(const char* label, const CurveSystem& s, const std::map<std::string, int>& m) {
    if (m.empty()) return;
    std::cout << label << ":";
    for (const auto& [k, c] : m) std::cout << " " << k << "=" << s.names[c];
    std::cout << "\n";
}

int verdict_code(const Verdict& v) { return v.positive() ? 0 : 1; }

// ---------------------------------------------------------------- catalog

struct CatalogArgs {
    std::string type, out, golden;
    int sweep = -1;
    uint64_t seed = 1;
};

int cmd_catalog(const Globals& g, const CatalogArgs& a) {
    const int expected_min[] = {0, 2, 10, 16, 8};
    const int expected_templates[] = {0, 0, 4, 7, 3};
    Catalog cat = build_catalog(g.iso());
    std::vector<PairType> types;
    if (a.type.empty())
        types = {PairType::I, PairType::II, PairType::III, PairType::IV};
    else
        types = {parse_type(a.type)};

    bool ok = true;
    json summary = json::array();
    for (PairType t : types) {
        const int ti = static_cast<int>(t);
        json row{{"type", type_name(t)}, {"minimal", cat.count(t)}, {"expected_minimal", expected_min[ti]}};
        ok = ok && cat.count(t) == expected_min[ti];
        if (t != PairType::I) {
            auto templates = enumerate_templates(t, g.iso());
            int nt = static_cast<int>(templates.size());
            json raw = json::array();
            for (const auto& tp : templates) raw.push_back(minimal_from_template(tp, g.iso()).size());
            row["templates"] = nt;
            row["per_template"] = raw;
            row["expected_templates"] = expected_templates[ti];
            ok = ok && nt == expected_templates[ti];
        }
        summary.push_back(row);
    }
    Catalog shown;
    shown.policy = cat.policy;
    for (const auto& e : cat.entries)
        if (std::find(types.begin(), types.end(), e.type) != types.end()) shown.entries.push_back(e);

    json out{{"summary", summary}, {"entries", static_cast<int>(shown.entries.size())}};
    if (a.sweep >= 0) {
        SweepResult r = certificate_sweep(shown, a.sweep, a.seed);
        json fails = json::array();
        for (const auto& f : r.failures)
            fails.push_back({{"type", type_name(f.type)}, {"index", f.index}, {"trial", f.trial}, {"message", f.message}});
        out["sweep"] = {{"trials", a.sweep}, {"seed", a.seed}, {"checked", r.checked}, {"positive", r.positive},
                        {"inconclusive", r.inconclusive}, {"no_match", r.no_match}, {"errors", r.errors},
                        {"failures", fails}};
    }
    std::string dump = catalog_to_json(shown).dump(1) + "\n";
    if (!a.out.empty()) write_text_file(a.out, dump);
    if (!a.golden.empty()) {
        std::ifstream in(a.golden);
        std::stringstream buf;
        buf << in.rdbuf();
        bool same = in && buf.str() == dump;
        out["golden_match"] = same;
        ok = ok && same;
    }

    if (g.json_out) {
        emit(out);
    } else {
        for (const auto& row : summary) {
            std::cout << "type " << row["type"].get<std::string>() << ": " << row["minimal"] << " minimal configurations (expected "
                      << row["expected_minimal"] << ")";
            if (row.contains("templates"))
                std::cout << ", " << row["templates"] << " templates (expected " << row["expected_templates"]
                          << "), per template before dedup " << row["per_template"].dump();
            std::cout << "\n";
        }
        std::cout << "total: " << shown.entries.size() << " entries\n";
        for (const auto& e : shown.entries)
            std::cout << "  " << type_name(e.type) << " #" << e.index << "  genus " << ambient_genus(e.sys) << "  "
                      << e.annotation.criterion << "\n";
        if (out.contains("sweep")) {
            const auto& s = out["sweep"];
            std::cout << "sweep: checked " << s["checked"] << ", positive " << s["positive"] << ", inconclusive "
                      << s["inconclusive"] << ", no match " << s["no_match"] << ", errors " << s["errors"] << "\n";
        }
        if (out.contains("golden_match"))
            std::cout << "golden file: " << (out["golden_match"].get<bool>() ? "identical" : "DIFFERS") << "\n";
    }
    return ok ? 0 : 2;
}

// ------------------------------------------------------------------ check

struct CheckArgs {
    std::string file, triple, dot;
};

int cmd_check(const Globals& g, const CheckArgs& a) {
    json j;
    try {
        j = read_json_file(a.file);
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    if (!a.triple.empty()) {
        CurveSystem s = system_from_json(j.contains("system") ? j.at("system") : j);
        std::vector<int> ids;
        std::stringstream ss(a.triple);
        for (std::string name; std::getline(ss, name, ',');) {
            int c = s.curve_index(name);
            if (c < 0) throw Error("unknown curve '" + name + "'");
            ids.push_back(c);
        }
        if (ids.size() != 3 && ids.size() != 4) throw Error("--triple needs c,fc,ffc[,fffc]");
        Catalog cat = build_catalog(g.iso());
        std::optional<int> f3;
        if (ids.size() == 4) f3 = ids[3];
        CaseResult r = run_case_analysis(s, ids[0], ids[1], ids[2], ambient_genus(s), cat, f3);
        if (g.json_out) {
            json o{{"route", r.route}, {"verdict", verdict_to_json(r.verdict)}};
            if (r.certificate) o["certificate"] = certificate_to_json(*r.certificate)["certificate"];
            emit(o);
        } else {
            std::cout << "route: " << r.route << "\n";
            print_verdict(r.verdict);
            if (r.certificate) print_roles("witnesses", r.certificate->sys, r.certificate->witnesses);
        }
        return verdict_code(r.verdict);
    }
    Certificate cert = certificate_from_json(j);
    Verdict v = finalize(verify_certificate(cert), cert.genus);
    if (!a.dot.empty()) write_text_file(a.dot, to_dot(cert.sys));
    if (g.json_out) {
        emit({{"criterion", cert.criterion}, {"genus", cert.genus}, {"verdict", verdict_to_json(v)}});
    } else {
        std::cout << "certificate: " << cert.criterion << " (genus " << cert.genus << ")\n";
        print_roles("roles", cert.sys, cert.roles);
        print_roles("witnesses", cert.sys, cert.witnesses);
        print_verdict(v);
    }
    return verdict_code(v);
}

// ---------------------------------------------------------------- polygon

struct PolygonArgs {
    int n = 0, k = 1, sweep = 0;
    std::string pairing = "opposite";
    bool all = false;
};

int cmd_polygon(const Globals& g, const PolygonArgs& a) {
    if (a.sweep > 0) {
        PolygonSweep s = case3_sweep(a.sweep, true, a.all);
        if (g.json_out)
            emit({{"instances", s.instances}, {"positive", s.positive}, {"trivial", s.trivial}, {"failures", s.failures}});
        else {
            std::cout << "instances " << s.instances << ", positive " << s.positive << ", trivial " << s.trivial
                      << ", failures " << s.failures.size() << "\n";
            for (const auto& f : s.failures) std::cout << "  " << f << "\n";
        }
        return s.failures.empty() ? 0 : 1;
    }
    PolygonSurface p = parse_pairing(a.n, a.pairing);
    PolygonVerdict v = periodic_case3_verdict(p, a.k);
    if (g.json_out) {
        json o{{"n", p.n}, {"k", a.k}, {"genus", v.genus}, {"order", v.order}, {"side", v.side},
               {"route", v.route}, {"verdict", verdict_to_json(v.verdict)}};
        if (v.certificate) o["certificate"] = certificate_to_json(*v.certificate)["certificate"];
        emit(o);
    } else {
        std::cout << "genus: " << v.genus << "\norder: " << v.order << "\n";
        if (v.side >= 0) std::cout << "curve: segment of side " << v.side << " (" << v.route << ")\n";
        print_verdict(v.verdict);
        if (v.certificate)
            std::cout << "certificate: " << v.certificate->criterion << ", re-verified "
                      << (verify_certificate(*v.certificate).positive() ? "positive" : "NOT positive") << "\n";
    }
    return verdict_code(v.verdict);
}

// ------------------------------------------------------------- symplectic

struct SymplecticArgs {
    int g = 1, k = 0;
    std::string word, matrix, curves;
};

int cmd_symplectic(const Globals& gl, const SymplecticArgs& a) {
    IntMatrix m;
    json o{{"g", a.g}};
    long long esum = 0;
    if (!a.matrix.empty()) {
        m = named_matrix(a.matrix, a.g, a.k);
        o["matrix_name"] = a.matrix;
        o["order"] = matrix_order(m);
    } else {
        auto named = a.curves.empty() ? chain_curve_classes(a.g) : load_curve_classes(a.curves, a.g);
        TwistWord w = parse_twist_word(at_file(a.word), a.g, &named);
        m = word_action(w, a.g);
        esum = exponent_sum(w);
        o["exponent_sum"] = esum;
        o["abelianization"] = abelianization_image(esum, a.g);
    }
    bool sym = is_symplectic(m);
    o["matrix"] = int_matrix_json(m);
    o["symplectic"] = sym;
    o["level"] = congruence_level(m);
    if (gl.json_out) {
        emit(o);
    } else {
        std::cout << format_matrix(m) << "symplectic: " << (sym ? "yes" : "NO") << "\nlevel: " << o["level"] << "\n";
        if (o.contains("order")) std::cout << "order: " << o["order"] << "\n";
        if (o.contains("abelianization")) {
            std::cout << "exponent sum: " << esum;
            if (a.g <= 2) std::cout << " (" << o["abelianization"] << " mod " << (a.g == 1 ? 12 : 10) << ")";
            std::cout << "\n";
        }
    }
    return sym ? 0 : 2;
}

// --------------------------------------------------------------- thurston

struct ThurstonArgs {
    std::string n, word, ks;
    int blowup = 0;
};

int cmd_thurston(const Globals& g, const ThurstonArgs& a) {
    ThurstonSystem sys;
    if (!a.n.empty() && a.n[0] == '@') {
        sys = load_thurston_system(a.n.substr(1), g.tol);
    } else {
        std::vector<std::vector<long long>> rows;
        std::stringstream ss(a.n);
        for (std::string r; std::getline(ss, r, ';');) {
            std::stringstream rs(r);
            std::vector<long long> row;
            for (long long v; rs >> v;) row.push_back(v);
            if (!row.empty()) rows.push_back(row);
        }
        if (rows.empty()) throw Error("--N: empty matrix");
        IntGrid n(rows.size(), rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows[0].size()) throw Error("--N: rows have different lengths");
            for (size_t j = 0; j < rows[i].size(); ++j) n(i, j) = rows[i][j];
        }
        sys = make_thurston_system(n, g.tol);
    }
    json o{{"mu", sys.mu}};
    if (!a.word.empty()) {
        TwoByTwoWord w = parse_word(at_file(a.word));
        Stretch s = stretch_factor(sys, w, g.tol);
        o["word"] = word_string(w);
        o["trace"] = static_cast<double>(s.trace);
        o["classification"] = kind_name(s.kind);
        o["lambda"] = static_cast<double>(s.lambda);
    }
    if (!a.ks.empty()) {
        std::vector<int> ks;
        std::stringstream ss(a.ks);
        for (std::string t; std::getline(ss, t, ',');) ks.push_back(std::stoi(t));
        json table = json::array();
        for (const auto& b : exponent_growth_check(sys.n, a.blowup, ks))
            table.push_back({{"k", b.k}, {"D", b.d}, {"min_row_sum", b.min_row_sum}, {"lambda_lower", b.lambda_lower}});
        o["lemma_k"] = table;
    }
    if (g.json_out) {
        emit(o);
    } else {
        std::printf("mu: %.12g\n", sys.mu);
        if (o.contains("word"))
            std::printf("word: %s\ntrace: %.12g\nclassification: %s\nlambda: %.12g\n",
                        o["word"].get<std::string>().c_str(), o["trace"].get<double>(),
                        o["classification"].get<std::string>().c_str(), o["lambda"].get<double>());
        if (o.contains("lemma_k"))
            for (const auto& r : o["lemma_k"])
                std::printf("k=%d  D=%d  min row sum %lld  lambda >= %.6f\n", r["k"].get<int>(), r["D"].get<int>(),
                            r["min_row_sum"].get<long long>(), r["lambda_lower"].get<double>());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normal generation toolkit: curve configurations, certificates, periodic and pseudo-Anosov examples"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json_out, "machine-readable output");
    app.add_option("--policy", g.policy, "isomorphism policy")->check(CLI::IsMember({"default", "no-reflection"}));
    app.add_option("--tol", g.tol, "numerical tolerance")->check(CLI::PositiveNumber);
    app.add_option("--jobs", g.jobs, "worker threads for sweeps (0: all)")->check(CLI::NonNegativeNumber);

    CatalogArgs ca;
    auto* cat = app.add_subcommand("catalog", "enumerate minimal configurations and their witnesses");
    cat->add_option("--type", ca.type, "only this type")->check(CLI::IsMember({"I", "II", "III", "IV"}));
    cat->add_option("--out", ca.out, "write the catalog as JSON");
    cat->add_option("--golden", ca.golden, "compare the JSON with a checked-in file");
    cat->add_option("--sweep", ca.sweep, "run the certificate sweep with this many stabilizations per entry");
    cat->add_option("--seed", ca.seed, "sweep seed");

    CheckArgs ch;
    auto* chk = app.add_subcommand("check", "verify a certificate, or run the case analysis on a triple");
    chk->add_option("file", ch.file, "certificate or system JSON")->required();
    chk->add_option("--triple", ch.triple, "c,fc,ffc[,fffc] curve names: run the case analysis");
    chk->add_option("--dot", ch.dot, "write the certificate system as DOT");

    PolygonArgs pa;
    auto* pol = app.add_subcommand("polygon", "periodic case analysis in the polygon model");
    pol->add_option("--n", pa.n, "number of sides");
    pol->add_option("--pairing", pa.pairing, "'opposite' or a list a-b,c-d,...");
    pol->add_option("--k", pa.k, "rotation step");
    pol->add_option("--sweep", pa.sweep, "sweep every rotation of order > 2 with n up to this");
    pol->add_flag("--all-pairings", pa.all, "sweep every equivariant pairing, not only opposite ones");

    SymplecticArgs sa;
    auto* sym = app.add_subcommand("symplectic", "action of a twist word on homology");
    sym->add_option("--g", sa.g, "genus")->required()->check(CLI::PositiveNumber);
    sym->add_option("--word", sa.word, "twist word or @file");
    sym->add_option("--matrix", sa.matrix, "M, N or M_k instead of a word");
    sym->add_option("--k", sa.k, "k for M_k");
    sym->add_option("--curves", sa.curves, "JSON file of named curve classes");

    ThurstonArgs ta;
    auto* th = app.add_subcommand("thurston", "stretch factors in the Thurston construction");
    th->add_option("--N", ta.n, "intersection matrix: @file or rows '1 1 0; 0 1 1'")->required();
    th->add_option("--word", ta.word, "word over A a B b, or @file");
    th->add_option("--k-table", ta.ks, "comma-separated k values for the blow-up bound");
    th->add_option("--blowup", ta.blowup, "A-curve to blow up");

    double lambda = 0;
    int fk = 1;
    bool mod2 = false;
    auto* flm = app.add_subcommand("flm-bound", "intersection bound for small stretch factor");
    flm->add_option("--lambda", lambda, "stretch factor")->required();
    flm->add_option("--k", fk, "power");
    flm->add_flag("--mod2", mod2, "c and f^k(c) agree mod 2");

    long L = 0, pn = 0;
    auto* pow = app.add_subcommand("power-subgroup", "does the subgroup generated by n-th powers fill the group");
    pow->add_option("--L", L, "even modulus")->required();
    pow->add_option("--n", pn, "power")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (g.jobs > 0) omp_set_num_threads(g.jobs);

    try {
        if (*cat) return cmd_catalog(g, ca);
        if (*chk) return cmd_check(g, ch);
        if (*pol) {
            if (pa.sweep <= 0 && pa.n <= 0) throw Error("polygon: --n is required");
            return cmd_polygon(g, pa);
        }
        if (*sym) {
            if (sa.word.empty() == sa.matrix.empty()) throw Error("symplectic: give exactly one of --word, --matrix");
            return cmd_symplectic(g, sa);
        }
        if (*th) return cmd_thurston(g, ta);
        if (*flm) {
            FlmBound b = flm_bound(lambda, fk);
            int refined = parity_refined(b.guarantee, mod2);
            if (g.json_out)
                emit({{"lambda", lambda}, {"k", fk}, {"n", b.n}, {"guarantee", b.guarantee}, {"parity_refined", refined}});
            else
                std::cout << "n: " << b.n << "\ni(c, f^" << fk << "(c)) <= " << b.guarantee
                          << "\nparity refined: " << refined << "\n";
            return 0;
        }
        if (*pow) {
            bool full = power_subgroup_full(L, pn);
            if (g.json_out)
                emit({{"L", L}, {"n", pn}, {"full", full}});
            else
                std::cout << (full ? "full" : "proper") << "\n";
            return full ? 0 : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
