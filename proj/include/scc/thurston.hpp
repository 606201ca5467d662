#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace scc {

using IntGrid = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
// The 2x2 representation is evaluated in extended precision so that traces
// of long words keep ~1e-13 absolute accuracy at magnitude 1e7.
using Real = long double;
using Mat2 = Eigen::Matrix<Real, 2, 2>;

struct PfResult {
    double mu = 0;
    Eigen::VectorXd vector;  // positive, unit length
    double residual = 0;     // |M v - mu v|
    int iterations = 0;
};
// Dominant eigenvalue of a non-negative matrix with connected (symmetrized)
// support, by power iteration on M + I. The stopping test is
// |Mv - mu v| <= tol * max(1, max row sum) * |v|.
PfResult pf_eigenvalue(const Eigen::MatrixXd& m, double tol = 1e-12, int max_iter = 1000000);

// Two multicurves A (rows) and B (columns) with intersection matrix N.
struct ThurstonSystem {
    std::vector<std::string> a_names, b_names;
    IntGrid n;
    bool filling = false;  // asserted by the caller; only connectivity is checked
    double mu = 0;         // PF eigenvalue of N N^T
    double tol = 1e-12;
};
ThurstonSystem make_thurston_system(const IntGrid& n, double tol = 1e-12, bool filling = true,
                                    std::vector<std::string> a_names = {}, std::vector<std::string> b_names = {});
bool intersection_graph_connected(const IntGrid& n);

// Intersection matrix of the chain a1 b1 ... : A = {a_1..a_g}, B = {b_1..b_{g+1}},
// a_i meeting b_i and b_{i+1} once.
IntGrid chain_intersection_matrix(int g);

// Word over A, a (= A^-1), B, b, each letter optionally followed by ^n.
struct Letter {
    char gen = 'A';  // 'A' or 'B'
    long long exponent = 1;
};
using TwoByTwoWord = std::vector<Letter>;
TwoByTwoWord parse_word(const std::string& text);
std::string word_string(const TwoByTwoWord& w);
TwoByTwoWord inverse_word(const TwoByTwoWord& w);

Mat2 generator_power(char gen, long long e, Real sqrt_mu);
struct WordValue {
    Mat2 matrix;
    Real trace = 0;  // absolute value
};
WordValue eval_word(const ThurstonSystem& sys, const TwoByTwoWord& w);

enum class TwoByTwoKind { PseudoAnosov, Reducible, Periodic };
std::string kind_name(TwoByTwoKind k);
struct Stretch {
    TwoByTwoKind kind = TwoByTwoKind::Periodic;
    Real trace = 0;
    Real lambda = 1;  // > 1 only for pseudo-Anosov words
};
Stretch stretch_factor(const ThurstonSystem& sys, const TwoByTwoWord& w, double tol = 1e-12);

// Path-counting bound for the blow-up of curve `blowup` of A into k copies:
// every row sum of (N_k N_k^T)^(D+1) is at least k, with D half the largest
// distance between A-vertices of the intersection graph.
struct KBound {
    int k = 0, d = 0;
    long long min_row_sum = 0;
    double mu_lower = 0;      // min_row_sum^(1/(D+1)) <= mu_k
    double lambda_lower = 0;  // 2 + mu_lower
};
IntGrid blow_up(const IntGrid& n, int blowup, int k);
int half_a_diameter(const IntGrid& n);
KBound lemma_k_bound(const IntGrid& n, int blowup, int k);
std::vector<KBound> exponent_growth_check(const IntGrid& n, int blowup, const std::vector<int>& ks,
                                          bool parallel = true);

double penner_bound(int g);  // 11^(1/g)
// Largest real root of x^4 - x^3 - x^2 - x + 1 (about 1.72208).
double cho_ham_constant();
// Largest real root of a polynomial (coefficients highest degree first), by
// sign-change isolation and bisection.
double largest_real_root(const std::vector<double>& coeffs);

// Matrix text: JSON {"A": [...], "B": [...], "N": [[...]]} or whitespace rows.
ThurstonSystem load_thurston_system(const std::string& path, double tol = 1e-12);

}  // namespace scc
