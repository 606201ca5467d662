#include "scc/symplectic.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "scc/surface.hpp"
#include "scc/surface_io.hpp"

namespace scc {

namespace {

// Entries below this bound keep every product of dimension <= 64 exact.
constexpr long long kEntryBound = 1LL << 28;

void check_bound(const IntMatrix& m, const char* what) {
    if (m.size() && m.cwiseAbs().maxCoeff() >= kEntryBound)
        throw Error(std::string(what) + ": entries too large for exact 64-bit arithmetic");
}

IntMatrix exact_product(const IntMatrix& a, const IntMatrix& b) {
    check_bound(a, "matrix product");
    check_bound(b, "matrix product");
    return a * b;
}

}  // namespace

IntMatrix symplectic_form(int g) {
    if (g < 0) throw Error("symplectic: genus must be non-negative");
    IntMatrix j = IntMatrix::Zero(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j(2 * i, 2 * i + 1) = 1;
        j(2 * i + 1, 2 * i) = -1;
    }
    return j;
}

long long form(const IntVector& u, const IntVector& v) {
    if (u.size() != v.size() || u.size() % 2) throw Error("symplectic form: dimension mismatch");
    long long s = 0;
    for (int i = 0; i + 1 < u.size(); i += 2) s += u(i) * v(i + 1) - u(i + 1) * v(i);
    return s;
}

bool is_symplectic(const IntMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2) return false;
    IntMatrix j = symplectic_form(static_cast<int>(m.rows() / 2));
    return exact_product(exact_product(m.transpose(), j), m) == j;
}

bool is_primitive(const IntVector& v) {
    long long g = 0;
    for (int i = 0; i < v.size(); ++i) g = std::gcd(g, std::llabs(v(i)));
    return g == 1;
}

IntMatrix transvection(const IntVector& v, long long m) {
    if (v.size() == 0 || v.size() % 2) throw Error("transvection: vector must have even positive dimension");
    if (v.isZero()) throw Error("transvection: zero vector");
    if (!is_primitive(v)) throw Error("transvection: vector is not primitive");
    // <x, v> = (J v)^T x
    const int g = static_cast<int>(v.size() / 2);
    IntVector jv = symplectic_form(g) * v;
    IntMatrix t = IntMatrix::Identity(v.size(), v.size()) + m * v * jv.transpose();
    check_bound(t, "transvection");
    return t;
}

TwistWord parse_twist_word(const std::string& text, int g, const std::map<std::string, IntVector>* named) {
    if (g < 1) throw Error("twist word: genus must be positive");
    TwistWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        Twist t;
        std::string body = tok;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            body = tok.substr(0, caret);
            try {
                size_t used;
                t.exponent = std::stoll(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw Error("twist word: bad exponent in '" + tok + "'");
            }
        }
        if (named && named->count(body)) {
            t.v = named->at(body);
        } else {
            std::vector<long long> entries;
            std::stringstream parts(body);
            std::string p;
            while (std::getline(parts, p, ',')) {
                try {
                    size_t used;
                    entries.push_back(std::stoll(p, &used));
                    if (used != p.size()) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    throw Error("twist word: bad entry in '" + tok + "'");
                }
            }
            t.v = Eigen::Map<IntVector>(entries.data(), static_cast<long>(entries.size()));
        }
        if (t.v.size() != 2 * g)
            throw Error("twist word: '" + tok + "' has dimension " + std::to_string(t.v.size()) + ", expected " +
                        std::to_string(2 * g));
        if (!is_primitive(t.v)) throw Error("twist word: '" + tok + "' is not primitive");
        w.push_back(std::move(t));
    }
    return w;
}

IntMatrix word_action(const TwistWord& w, int g) {
    IntMatrix m = IntMatrix::Identity(2 * g, 2 * g);
    for (const auto& t : w) {
        if (t.v.size() != 2 * g) throw Error("word action: dimension mismatch");
        m = exact_product(m, transvection(t.v, t.exponent));
    }
    return m;
}

long long exponent_sum(const TwistWord& w) {
    long long s = 0;
    for (const auto& t : w) s += t.exponent;
    return s;
}

long long congruence_level(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("congruence level: matrix must be square");
    IntMatrix d = m - IntMatrix::Identity(m.rows(), m.cols());
    long long g = 0;
    for (int i = 0; i < d.size(); ++i) g = std::gcd(g, std::llabs(d.data()[i]));
    return g;
}

IntMatrix named_matrix(const std::string& name, int g, int k) {
    IntMatrix m = IntMatrix::Identity(2 * g, 2 * g);
    if (name == "M" || name == "handle-rotation-M") {
        if (g < 1) throw Error("M needs genus at least 1");
        m.block(0, 0, 2, 2) << 0, 1, -1, 0;
    } else if (name == "N" || name == "handle-swap-N") {
        if (g < 2) throw Error("N needs genus at least 2");
        m.block(0, 0, 4, 4).setZero();
        m.block(0, 2, 2, 2).setIdentity();
        m.block(2, 0, 2, 2).setIdentity();
    } else if (name == "M_k" || name == "minus-block-M_k") {
        if (k < 0 || k > g) throw Error("M_k needs 0 <= k <= g");
        m.block(0, 0, 2 * k, 2 * k) *= -1;
    } else {
        throw Error("unknown matrix '" + name + "' (expected M, N or M_k)");
    }
    return m;
}

int matrix_order(const IntMatrix& m, int max_order) {
    IntMatrix p = m;
    const IntMatrix id = IntMatrix::Identity(m.rows(), m.cols());
    for (int n = 1; n <= max_order; ++n) {
        if (p == id) return n;
        p = exact_product(p, m);
    }
    return 0;
}

long long abelianization_image(long long s, int g) {
    if (g < 1) throw Error("abelianization: genus must be positive");
    if (g >= 3) return 0;
    const long long mod = g == 1 ? 12 : 10;
    return ((s % mod) + mod) % mod;
}

std::vector<std::string> chain_order(int g) {
    std::vector<std::string> out{"b1"};
    for (int i = 1; i <= g; ++i) {
        out.push_back("a" + std::to_string(i));
        if (i < g) out.push_back("m" + std::to_string(i));
    }
    out.push_back("b" + std::to_string(g));
    return out;
}

std::map<std::string, IntVector> chain_curve_classes(int g) {
    if (g < 1) throw Error("chain: genus must be positive");
    std::map<std::string, IntVector> out;
    for (int i = 0; i < g; ++i) {
        IntVector a = IntVector::Zero(2 * g), b = IntVector::Zero(2 * g);
        a(2 * i) = 1;
        b(2 * i + 1) = 1;
        out["a" + std::to_string(i + 1)] = a;
        out["b" + std::to_string(i + 1)] = b;
        if (i + 1 < g) {
            IntVector m = IntVector::Zero(2 * g);
            m(2 * i + 1) = 1;
            m(2 * i + 3) = -1;
            out["m" + std::to_string(i + 1)] = m;
        }
    }
    return out;
}

std::map<std::string, IntVector> load_curve_classes(const std::string& path, int g) {
    json j = read_json_file(path);
    const std::string key = std::to_string(g);
    if (!j.contains("genus") || !j["genus"].contains(key))
        throw Error(path + ": no curve classes for genus " + key);
    std::map<std::string, IntVector> out;
    for (auto it = j["genus"][key].begin(); it != j["genus"][key].end(); ++it) {
        auto entries = it.value().get<std::vector<long long>>();
        if (static_cast<int>(entries.size()) != 2 * g) throw Error(path + ": class '" + it.key() + "' has wrong dimension");
        out[it.key()] = Eigen::Map<IntVector>(entries.data(), static_cast<long>(entries.size()));
    }
    return out;
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
        out << "\n";
    }
    return out.str();
}

}  // namespace scc
