#pragma once

#include <span>
#include <vector>

#include "tvtree/common.hpp"

namespace tvtree {

/// Rooted tree with every edge oriented toward the root. Edges are indexed by
/// their child node: edge(i) = (i, parent[i]) for i != root. `order` lists the
/// nodes children-before-parents (the forward-pass order); the root is last.
struct Tree {
    int n = 0;
    int root = 0;
    std::vector<int> parent;                 // parent[root] == -1
    std::vector<std::vector<int>> children;
    std::vector<int> order;

    /// Validates eagerly: exactly one root, no cycles, connected.
    static Tree from_parents(std::vector<int> parent);
    /// parent(i) = i+1, root = n-1.
    static Tree chain(int n);

    bool is_chain() const;
    int edge_count() const { return n - 1; }
};

/// Convex pairwise terms f_ij(z) = lo*z for z<0, hi*z for z>=0, indexed by
/// child node (unused slot at the root). Symmetric TV weight w corresponds to
/// (lo, hi) = (-w, +w).
struct ConvexEdgeWeights {
    std::vector<double> lo, hi;

    static ConvexEdgeWeights uniform(int n, double w) {
        ConvexEdgeWeights e;
        e.lo.assign(n, -w);
        e.hi.assign(n, w);
        return e;
    }
    void validate(const Tree& t) const;
};

/// Truncated-TV pairwise terms f_ij(z) = min(w*|z|, cap), cap in (0, +inf].
struct TruncEdgeWeights {
    std::vector<double> w, cap;

    static TruncEdgeWeights uniform(int n, double weight, double c) {
        TruncEdgeWeights e;
        e.w.assign(n, weight);
        e.cap.assign(n, c);
        return e;
    }
    void validate(const Tree& t) const;
};

double trunc_edge_cost(double w, double cap, double z);

} // namespace tvtree
