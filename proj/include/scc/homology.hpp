#pragma once

#include <cstdint>
#include <vector>

#include "scc/surface.hpp"

namespace scc {

// Dense vector over the two-element field.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}
    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }
    void set(int i) {
        if (!get(i)) flip(i);
    }
    BitVec& operator^=(const BitVec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    int lowest() const;  // -1 when zero
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    std::vector<int> bits() const;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Incremental row echelon form; each row carries a tag vector that is
// accumulated along reductions.
class Echelon {
public:
    Echelon(int dim, int tag_dim) : dim_(dim), tag_dim_(tag_dim) {}
    // Reduces v (and its tag) against the stored rows.
    void reduce(BitVec& v, BitVec& tag) const;
    // Inserts v; returns false (and leaves the reduced tag in tag) when v is
    // dependent on the stored rows.
    bool insert(BitVec v, BitVec& tag);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int dim_, tag_dim_;
    std::vector<int> pivots_;
    std::vector<BitVec> rows_, tags_;
};

// First homology over GF(2) from an explicit cell structure: every region of
// genus h and b boundary walks gets a base point, b spokes to its walks, 2h
// handle loops and a single 2-cell.
struct HomologyOracle {
    int rank = 0;
    std::vector<std::vector<int>> curve_class;  // coordinates of each curve
    std::vector<int> class_of(const std::vector<int>& curves) const;
};

HomologyOracle homology_oracle_gf2(const CurveSystem& sys);

}  // namespace scc
