#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "scc/surface.hpp"
#include "scc/symplectic.hpp"

using namespace scc;

namespace {

IntVector basis(int g, int i) {
    IntVector v = IntVector::Zero(2 * g);
    v(i) = 1;
    return v;
}

// gcd of the entries of m - I, computed independently of the library.
long long level_oracle(const IntMatrix& m) {
    long long g = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) g = std::gcd(g, std::llabs(m(i, j) - (i == j)));
    return g;
}

}  // namespace

TEST_CASE("form conventions") {
    IntMatrix J = symplectic_form(2);
    CHECK(J(0, 1) == 1);
    CHECK(J(1, 0) == -1);
    CHECK(form(basis(2, 0), basis(2, 1)) == 1);
    CHECK(form(basis(2, 1), basis(2, 0)) == -1);
    CHECK(form(basis(2, 0), basis(2, 3)) == 0);
    CHECK(is_primitive(basis(2, 3)));
    CHECK_FALSE(is_primitive(2 * basis(2, 3)));
}

TEST_CASE("transvection formula") {
    const int g = 2;
    IntMatrix t = transvection(basis(g, 0));
    // x -> x + <x, x1> x1: only y1 moves, to y1 - x1
    CHECK(t * basis(g, 0) == basis(g, 0));
    CHECK(t * basis(g, 1) == basis(g, 1) - basis(g, 0));
    CHECK(t * basis(g, 2) == basis(g, 2));
    CHECK(t * basis(g, 3) == basis(g, 3));
    CHECK(is_symplectic(t));
    std::mt19937_64 rng(1);
    for (int k = 0; k < 50; ++k) {
        IntVector v(2 * g);
        for (int i = 0; i < 2 * g; ++i) v(i) = static_cast<long long>(rng() % 7) - 3;
        if (!is_primitive(v)) continue;
        IntMatrix tv = transvection(v, 3);
        CHECK(tv * v == v);
        CHECK(is_symplectic(tv));
        CHECK(transvection(v, -3) * tv == IntMatrix::Identity(2 * g, 2 * g));
    }
}

TEST_CASE("transvection powers have the matching level") {
    for (int g = 1; g <= 3; ++g)
        for (long long m = 1; m <= 20; ++m) {
            IntMatrix t = transvection(basis(g, 0), m);
            CHECK(is_symplectic(t));
            CHECK(congruence_level(t) == m);
            CHECK(level_oracle(t) == m);
        }
    CHECK(congruence_level(IntMatrix::Identity(4, 4)) == 0);
}

TEST_CASE("words") {
    CHECK(word_action({}, 2) == IntMatrix::Identity(4, 4));
    TwistWord w = parse_twist_word("1,0 0,1^-1", 1);
    IntMatrix m = word_action(w, 1);
    CHECK(is_symplectic(m));
    CHECK(std::llabs(m.trace()) == 3);
    CHECK(exponent_sum(w) == 0);
    // bounding pair map acts trivially
    CHECK(word_action(parse_twist_word("1,0,0,0 1,0,0,0^-1", 2), 2) == IntMatrix::Identity(4, 4));
    CHECK_THROWS_AS(parse_twist_word("1,0,0", 2), Error);
    CHECK_THROWS_AS(parse_twist_word("2,0", 1), Error);
    CHECK_THROWS_AS(parse_twist_word("1,0^x", 1), Error);
}

TEST_CASE("chain classes") {
    for (int g = 1; g <= 5; ++g) {
        auto cls = chain_curve_classes(g);
        auto order = chain_order(g);
        CHECK(order.size() == static_cast<size_t>(2 * g + 1));
        for (size_t i = 0; i < order.size(); ++i)
            for (size_t j = i + 1; j < order.size(); ++j) {
                long long f = std::llabs(form(cls.at(order[i]), cls.at(order[j])));
                CHECK(f == (j == i + 1 ? 1 : 0));
            }
    }
    auto file = load_curve_classes(std::string(SCC_DATA_DIR) + "/chain_curves.json", 3);
    CHECK(file == chain_curve_classes(3));
}

TEST_CASE("named twist words and exponent sums") {
    auto cls = chain_curve_classes(2);
    for (long long n = 1; n <= 6; ++n) {
        std::string text = "a1^-1 a2^-1 b1^" + std::to_string(n) + " m1^" + std::to_string(n) + " b2^" + std::to_string(n);
        TwistWord w = parse_twist_word(text, 2, &cls);
        CHECK(exponent_sum(w) == 3 * n - 2);
        CHECK(abelianization_image(exponent_sum(w), 2) == (3 * n - 2) % 10);
        CHECK(is_symplectic(word_action(w, 2)));
        CHECK(abelianization_image(2 * n - 1, 1) == (2 * n - 1) % 12);
    }
    CHECK(abelianization_image(0, 2) == 0);
    CHECK(abelianization_image(7, 3) == 0);
    CHECK(abelianization_image(-1, 1) == 11);
}

TEST_CASE("explicit matrices") {
    for (int g = 2; g <= 5; ++g) {
        IntMatrix M = named_matrix("M", g);
        IntMatrix N = named_matrix("N", g);
        CHECK(is_symplectic(M));
        CHECK(is_symplectic(N));
        CHECK(matrix_order(M) == 4);
        CHECK(matrix_order(N) == 2);
        CHECK(named_matrix("M_k", g, g) == -IntMatrix::Identity(2 * g, 2 * g));
        CHECK(named_matrix("M_k", g, 0) == IntMatrix::Identity(2 * g, 2 * g));
        for (int k = 1; k < g; ++k) {
            IntMatrix mk = named_matrix("M_k", g, k);
            CHECK(is_symplectic(mk));
            CHECK(congruence_level(mk) == 2);
            CHECK(level_oracle(mk) == 2);
        }
    }
    CHECK_THROWS_AS(named_matrix("N", 1), Error);
    CHECK_THROWS_AS(named_matrix("Q", 2), Error);
    CHECK(matrix_order(transvection(basis(1, 0)), 50) == 0);
}

TEST_CASE("formatting") {
    CHECK(format_matrix(IntMatrix::Identity(2, 2)).find('1') != std::string::npos);
}
