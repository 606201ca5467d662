#pragma once

#include <numeric>
#include <vector>

namespace scc {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    // dense labels 0..k-1 in order of first appearance
    std::vector<int> labels(int* count = nullptr) {
        std::vector<int> root_label(parent.size(), -1), out(parent.size());
        int k = 0;
        for (size_t i = 0; i < parent.size(); ++i) {
            int r = find(static_cast<int>(i));
            if (root_label[r] < 0) root_label[r] = k++;
            out[i] = root_label[r];
        }
        if (count) *count = k;
        return out;
    }
};

// Union-find carrying the parity of each element relative to its root.
struct ParityUnionFind {
    std::vector<int> parent, parity;
    explicit ParityUnionFind(int n) : parent(n), parity(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x, int& par) {
        par = 0;
        int r = x;
        while (parent[r] != r) {
            par ^= parity[r];
            r = parent[r];
        }
        return r;
    }
    // Imposes parity(a) ^ parity(b) == p; false on contradiction.
    bool relate(int a, int b, int p) {
        int pa, pb;
        int ra = find(a, pa), rb = find(b, pb);
        if (ra == rb) return (pa ^ pb) == p;
        parent[ra] = rb;
        parity[ra] = pa ^ pb ^ p;
        return true;
    }
};

}  // namespace scc
