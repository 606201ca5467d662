#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace scc {

// Integer matrices in the basis (x1, y1, ..., xg, yg) with <xi, yi> = 1.
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

IntMatrix symplectic_form(int g);  // J, block diagonal [[0,1],[-1,0]]
long long form(const IntVector& u, const IntVector& v);  // u^T J v
bool is_symplectic(const IntMatrix& m);
bool is_primitive(const IntVector& v);

// x -> x + <x,v> v, raised to the power m (the twist about a curve of class v).
IntMatrix transvection(const IntVector& v, long long m = 1);

struct Twist {
    IntVector v;
    long long exponent = 1;
};
using TwistWord = std::vector<Twist>;

// Tokens "v1,...,v2g^e" separated by whitespace ("^e" optional). A token
// may instead name a class from `named`, again with an optional "^e".
TwistWord parse_twist_word(const std::string& text, int g,
                           const std::map<std::string, IntVector>* named = nullptr);
// Product of the twist matrices, leftmost first.
IntMatrix word_action(const TwistWord& w, int g);
long long exponent_sum(const TwistWord& w);

// gcd of the entries of M - I; 0 for the identity.
long long congruence_level(const IntMatrix& m);

// "M" (handle rotation), "N" (handle swap, g >= 2), "M_k" (-I on the first k handles).
IntMatrix named_matrix(const std::string& name, int g, int k = 0);

// Least n >= 1 with m^n = I, or 0 if none up to max_order.
int matrix_order(const IntMatrix& m, int max_order = 1000);

// Exponent sum in the abelianization: mod 12 in genus 1, mod 10 in genus 2,
// 0 in higher genus.
long long abelianization_image(long long exponent_sum, int g);

// Classes of the standard chain b1, a1, m1, a2, ..., a_g, b_g: a_i = x_i,
// b_i = y_i, m_i = y_i - y_{i+1}.
std::map<std::string, IntVector> chain_curve_classes(int g);
std::vector<std::string> chain_order(int g);
// Same data read from a JSON file {"genus": {"<g>": {"<name>": [..]}}}.
std::map<std::string, IntVector> load_curve_classes(const std::string& path, int g);

std::string format_matrix(const IntMatrix& m);

}  // namespace scc
