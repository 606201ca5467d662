#include "scc/homology.hpp"

#include <bit>

namespace scc {

int BitVec::lowest() const {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
    return -1;
}

std::vector<int> BitVec::bits() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

void Echelon::reduce(BitVec& v, BitVec& tag) const {
    for (size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
            tag ^= tags_[i];
        }
}

bool Echelon::insert(BitVec v, BitVec& tag) {
    reduce(v, tag);
    int p = v.lowest();
    if (p < 0) return false;
    // later rows never contain earlier pivots, so one ordered pass reduces fully
    pivots_.push_back(p);
    rows_.push_back(v);
    tags_.push_back(tag);
    return true;
}

std::vector<int> HomologyOracle::class_of(const std::vector<int>& curves) const {
    std::vector<int> out(rank, 0);
    for (int c : curves)
        for (int i = 0; i < rank; ++i) out[i] ^= curve_class[c][i];
    return out;
}

HomologyOracle homology_oracle_gf2(const CurveSystem& s) {
    const int V = s.num_vertices(), E = s.num_edges(), R = s.num_regions();
    // 0-cells: vertices, then one base point per region.
    const int n0 = V + R;
    // 1-cells: edges, spokes, handle loops.
    struct Cell1 {
        int a, b;  // endpoints (equal for loops)
    };
    std::vector<Cell1> cells;
    for (int e = 0; e < E; ++e) cells.push_back({s.edges[e].tail, s.edges[e].head});
    for (int r = 0; r < R; ++r) {
        for (int w : s.regions[r].walks) {
            int side = s.walks[w][0];
            int e = side_edge(side);
            int v = side_is_right(side) ? s.edges[e].tail : s.edges[e].head;
            cells.push_back({V + r, v});
        }
        for (int h = 0; h < 2 * s.regions[r].genus; ++h) cells.push_back({V + r, V + r});
    }
    const int n1 = static_cast<int>(cells.size());

    // cycles: kernel of the boundary map on 1-chains
    Echelon e1(n0, n1);
    std::vector<BitVec> cycles;
    for (int i = 0; i < n1; ++i) {
        BitVec bd(n0), tag(n1);
        bd.flip(cells[i].a);
        bd.flip(cells[i].b);
        tag.flip(i);
        if (!e1.insert(bd, tag)) cycles.push_back(tag);
    }
    // boundaries of the 2-cells
    const int zdim = static_cast<int>(cycles.size());
    Echelon e2(n1, zdim);
    for (int r = 0; r < R; ++r) {
        BitVec bd(n1), tag(zdim);
        for (int w : s.regions[r].walks)
            for (int side : s.walks[w]) bd.flip(side_edge(side));
        e2.insert(bd, tag);
    }
    HomologyOracle out;
    for (const auto& z : cycles) {
        BitVec tag(zdim);
        tag.flip(out.rank);
        BitVec probe = z, scratch(zdim);
        e2.reduce(probe, scratch);
        if (!probe.any()) continue;
        e2.insert(z, tag);
        ++out.rank;
    }
    for (int c = 0; c < s.num_curves(); ++c) {
        BitVec z(n1), tag(zdim);
        for (int e : s.curves[c]) z.flip(e);
        e2.reduce(z, tag);
        if (z.any()) throw Error("homology oracle: curve chain is not a cycle");
        std::vector<int> coords(out.rank);
        for (int i = 0; i < out.rank; ++i) coords[i] = tag.get(i);
        out.curve_class.push_back(coords);
    }
    return out;
}

}  // namespace scc
