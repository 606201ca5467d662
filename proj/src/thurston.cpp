#include "scc/thurston.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include <Eigen/Dense>
#include <json.hpp>

#include "scc/surface.hpp"

namespace scc {

namespace {

bool support_connected(const Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u = 0; u < n; ++u)
            if (!seen[u] && (m(v, u) > 0 || m(u, v) > 0)) {
                seen[u] = 1;
                ++count;
                q.push(u);
            }
    }
    return count == n;
}

}  // namespace

PfResult pf_eigenvalue(const Eigen::MatrixXd& m, double tol, int max_iter) {
    if (m.rows() == 0 || m.rows() != m.cols()) throw Error("pf eigenvalue: matrix must be square and nonempty");
    if ((m.array() < 0).any()) throw Error("pf eigenvalue: matrix has a negative entry");
    if (!support_connected(m)) throw Error("pf eigenvalue: reducible matrix");
    const int n = static_cast<int>(m.rows());
    const double scale = std::max(1.0, m.rowwise().sum().maxCoeff());
    const Eigen::MatrixXd shifted = m + Eigen::MatrixXd::Identity(n, n);
    PfResult r;
    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (r.iterations = 1; r.iterations <= max_iter; ++r.iterations) {
        Eigen::VectorXd w = shifted * v;
        v = w / w.norm();
        Eigen::VectorXd mv = m * v;
        r.mu = v.dot(mv);
        r.residual = (mv - r.mu * v).norm();
        if (r.residual <= tol * scale) {
            r.vector = v;
            return r;
        }
    }
    throw Error("pf eigenvalue: no convergence within " + std::to_string(max_iter) + " iterations");
}

bool intersection_graph_connected(const IntGrid& n) {
    const int a = static_cast<int>(n.rows()), b = static_cast<int>(n.cols());
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(a + b, a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) adj(i, a + j) = static_cast<double>(n(i, j));
    return support_connected(adj);
}

ThurstonSystem make_thurston_system(const IntGrid& n, double tol, bool filling, std::vector<std::string> an,
                                    std::vector<std::string> bn) {
    if (n.rows() == 0 || n.cols() == 0) throw Error("thurston: empty intersection matrix");
    if ((n.array() < 0).any()) throw Error("thurston: intersection numbers must be non-negative");
    if (!intersection_graph_connected(n)) throw Error("thurston: intersection graph is disconnected");
    ThurstonSystem s;
    s.n = n;
    s.tol = tol;
    s.filling = filling;
    for (int i = static_cast<int>(an.size()); i < n.rows(); ++i) an.push_back("a" + std::to_string(i + 1));
    for (int j = static_cast<int>(bn.size()); j < n.cols(); ++j) bn.push_back("b" + std::to_string(j + 1));
    if (static_cast<long>(an.size()) != n.rows() || static_cast<long>(bn.size()) != n.cols())
        throw Error("thurston: curve names do not match the matrix shape");
    s.a_names = std::move(an);
    s.b_names = std::move(bn);
    Eigen::MatrixXd nd = n.cast<double>();
    s.mu = pf_eigenvalue(nd * nd.transpose(), tol).mu;
    return s;
}

IntGrid chain_intersection_matrix(int g) {
    if (g < 1) throw Error("chain: genus must be positive");
    IntGrid n = IntGrid::Zero(g, g + 1);
    for (int i = 0; i < g; ++i) n(i, i) = n(i, i + 1) = 1;
    return n;
}

TwoByTwoWord parse_word(const std::string& text) {
    TwoByTwoWord w;
    for (size_t i = 0; i < text.size();) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c != 'A' && c != 'a' && c != 'B' && c != 'b')
            throw Error(std::string("word: unexpected character '") + c + "' (use A, a, B, b)");
        Letter l{static_cast<char>(std::toupper(c)), std::islower(static_cast<unsigned char>(c)) ? -1LL : 1LL};
        ++i;
        if (i < text.size() && text[i] == '^') {
            size_t used = 0;
            long long e;
            try {
                e = std::stoll(text.substr(i + 1), &used);
            } catch (const std::exception&) {
                throw Error("word: bad exponent after '" + std::string(1, c) + "^'");
            }
            l.exponent *= e;
            i += 1 + used;
        }
        w.push_back(l);
    }
    return w;
}

std::string word_string(const TwoByTwoWord& w) {
    std::string s;
    for (const auto& l : w) {
        s += l.exponent < 0 ? static_cast<char>(std::tolower(l.gen)) : l.gen;
        if (std::llabs(l.exponent) != 1) s += "^" + std::to_string(std::llabs(l.exponent));
    }
    return s;
}

TwoByTwoWord inverse_word(const TwoByTwoWord& w) {
    TwoByTwoWord r(w.rbegin(), w.rend());
    for (auto& l : r) l.exponent = -l.exponent;
    return r;
}

Mat2 generator_power(char gen, long long e, Real sqrt_mu) {
    Mat2 m = Mat2::Identity();
    if (gen == 'A')
        m(0, 1) = -static_cast<Real>(e) * sqrt_mu;
    else if (gen == 'B')
        m(1, 0) = static_cast<Real>(e) * sqrt_mu;
    else
        throw Error("word: unknown generator");
    return m;
}

WordValue eval_word(const ThurstonSystem& sys, const TwoByTwoWord& w) {
    if (!(sys.mu > 0)) throw Error("thurston: mu must be positive");
    const Real r = std::sqrt(static_cast<Real>(sys.mu));
    WordValue out;
    out.matrix = Mat2::Identity();
    for (const auto& l : w) out.matrix = out.matrix * generator_power(l.gen, l.exponent, r);
    out.trace = std::fabs(out.matrix.trace());
    return out;
}

std::string kind_name(TwoByTwoKind k) {
    switch (k) {
        case TwoByTwoKind::PseudoAnosov: return "pseudo-Anosov";
        case TwoByTwoKind::Reducible: return "reducible";
        case TwoByTwoKind::Periodic: return "periodic";
    }
    return "?";
}

Stretch stretch_factor(const ThurstonSystem& sys, const TwoByTwoWord& w, double tol) {
    Stretch s;
    s.trace = eval_word(sys, w).trace;
    if (std::fabs(s.trace - 2) <= tol) {
        s.kind = TwoByTwoKind::Reducible;
    } else if (s.trace > 2) {
        s.kind = TwoByTwoKind::PseudoAnosov;
        s.lambda = (s.trace + std::sqrt(s.trace * s.trace - 4)) / 2;
    } else {
        s.kind = TwoByTwoKind::Periodic;
    }
    return s;
}

IntGrid blow_up(const IntGrid& n, int blowup, int k) {
    if (blowup < 0 || blowup >= n.rows()) throw Error("lemma k: blow-up index out of range");
    if (k < 1) throw Error("lemma k: k must be positive");
    IntGrid out(n.rows() + k - 1, n.cols());
    int row = 0;
    for (int i = 0; i < n.rows(); ++i)
        for (int c = 0; c < (i == blowup ? k : 1); ++c) out.row(row++) = n.row(i);
    return out;
}

int half_a_diameter(const IntGrid& n) {
    if (!intersection_graph_connected(n)) throw Error("lemma k: intersection graph is disconnected");
    const int a = static_cast<int>(n.rows()), b = static_cast<int>(n.cols());
    int worst = 0;
    for (int s = 0; s < a; ++s) {
        std::vector<int> dist(a + b, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u = 0; u < a + b; ++u) {
                bool edge = v < a ? (u >= a && n(v, u - a) > 0) : (u < a && n(u, v - a) > 0);
                if (edge && dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
            }
        }
        for (int t = 0; t < a; ++t) worst = std::max(worst, dist[t]);
    }
    return worst / 2;  // distances between A-vertices are even
}

namespace {

long long checked_mul_add(long long acc, long long x, long long y) {
    long long p;
    if (__builtin_mul_overflow(x, y, &p) || __builtin_add_overflow(acc, p, &acc))
        throw Error("lemma k: path counts overflow 64-bit integers");
    return acc;
}

}  // namespace

KBound lemma_k_bound(const IntGrid& n, int blowup, int k) {
    KBound out;
    out.k = k;
    out.d = half_a_diameter(n);
    IntGrid nk = blow_up(n, blowup, k);
    const int rows = static_cast<int>(nk.rows()), cols = static_cast<int>(nk.cols());
    // row sums of P^(D+1), P = N_k N_k^T, as P^(D+1) 1 without forming P
    std::vector<long long> x(rows, 1);
    for (int step = 0; step <= out.d; ++step) {
        std::vector<long long> y(cols, 0), z(rows, 0);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i) y[j] = checked_mul_add(y[j], nk(i, j), x[i]);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) z[i] = checked_mul_add(z[i], nk(i, j), y[j]);
        x = std::move(z);
    }
    out.min_row_sum = *std::min_element(x.begin(), x.end());
    out.mu_lower = std::pow(static_cast<double>(out.min_row_sum), 1.0 / (out.d + 1));
    out.lambda_lower = 2 + out.mu_lower;
    return out;
}

std::vector<KBound> exponent_growth_check(const IntGrid& n, int blowup, const std::vector<int>& ks, bool parallel) {
    half_a_diameter(n);  // connectivity once, outside the parallel region
    std::vector<KBound> out(ks.size());
    const long total = static_cast<long>(ks.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < total; ++i) out[i] = lemma_k_bound(n, blowup, ks[i]);
    } else {
        for (long i = 0; i < total; ++i) out[i] = lemma_k_bound(n, blowup, ks[i]);
    }
    return out;
}

double penner_bound(int g) {
    if (g < 1) throw Error("penner bound: genus must be positive");
    return std::pow(11.0, 1.0 / g);
}

double largest_real_root(const std::vector<double>& c) {
    if (c.size() < 2 || c.front() == 0) throw Error("polynomial: leading coefficient must be nonzero");
    auto p = [&](double x) {
        double v = 0;
        for (double a : c) v = v * x + a;
        return v;
    };
    // Cauchy bound on root moduli
    double bound = 0;
    for (size_t i = 1; i < c.size(); ++i) bound = std::max(bound, std::fabs(c[i] / c[0]));
    bound += 1;
    const int steps = 1 << 16;
    const double h = 2 * bound / steps;
    for (int s = steps; s > 0; --s) {
        double lo = -bound + (s - 1) * h, hi = -bound + s * h;
        double plo = p(lo), phi = p(hi);
        if (phi == 0) return hi;
        if ((plo < 0) == (phi < 0)) continue;
        for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * std::fabs(hi); ++it) {
            double mid = (lo + hi) / 2;
            if ((p(mid) < 0) == (plo < 0))
                lo = mid;
            else
                hi = mid;
        }
        return (lo + hi) / 2;
    }
    throw Error("polynomial: no sign change found (no simple real root)");
}

double cho_ham_constant() { return largest_real_root({1, -1, -1, -1, 1}); }

ThurstonSystem load_thurston_system(const std::string& path, double tol) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::vector<std::vector<long long>> rows;
    std::vector<std::string> an, bn;
    bool filling = true;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
            rows = j.at("N").get<std::vector<std::vector<long long>>>();
            an = j.value("A", std::vector<std::string>{});
            bn = j.value("B", std::vector<std::string>{});
            filling = j.value("filling", true);
        } catch (const nlohmann::json::exception& ex) {
            throw Error(path + ": " + ex.what());
        }
    } else {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            std::istringstream ls(line);
            std::vector<long long> r;
            long long v;
            while (ls >> v) r.push_back(v);
            if (!ls.eof()) throw Error(path + ": matrix rows must contain integers only");
            if (!r.empty()) rows.push_back(r);
        }
    }
    if (rows.empty()) throw Error(path + ": empty matrix");
    IntGrid n(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw Error(path + ": rows have different lengths");
        for (size_t j = 0; j < rows[i].size(); ++j) n(i, j) = rows[i][j];
    }
    return make_thurston_system(n, tol, filling, an, bn);
}

}  // namespace scc
