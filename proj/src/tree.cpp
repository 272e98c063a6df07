#include "tvtree/tree.hpp"

#include <algorithm>
#include <cmath>

namespace tvtree {

Tree Tree::from_parents(std::vector<int> parent) {
    Tree t;
    t.n = static_cast<int>(parent.size());
    t.parent = std::move(parent);
    if (t.n == 0) throw InputError("tree: empty");
    t.root = -1;
    for (int i = 0; i < t.n; ++i) {
        int p = t.parent[i];
        if (p == -1 || p == i) {
            if (t.root != -1) throw InputError("tree: more than one root");
            t.root = i;
            t.parent[i] = -1;
        } else if (p < 0 || p >= t.n) {
            throw InputError("tree: parent index out of range");
        }
    }
    if (t.root == -1) throw InputError("tree: no root");
    t.children.assign(t.n, {});
    for (int i = 0; i < t.n; ++i)
        if (i != t.root) t.children[t.parent[i]].push_back(i);
    // BFS from the root; reversing it gives children-before-parents.
    std::vector<int> bfs;
    bfs.reserve(t.n);
    bfs.push_back(t.root);
    for (std::size_t q = 0; q < bfs.size(); ++q)
        for (int c : t.children[bfs[q]]) bfs.push_back(c);
    if (static_cast<int>(bfs.size()) != t.n)
        throw InputError("tree: cycle or disconnected node");
    t.order.assign(bfs.rbegin(), bfs.rend());
    return t;
}

Tree Tree::chain(int n) {
    if (n <= 0) throw InputError("chain: n must be positive");
    std::vector<int> parent(n);
    for (int i = 0; i + 1 < n; ++i) parent[i] = i + 1;
    parent[n - 1] = -1;
    return from_parents(std::move(parent));
}

bool Tree::is_chain() const {
    if (root != n - 1) return false;
    for (int i = 0; i + 1 < n; ++i)
        if (parent[i] != i + 1) return false;
    return true;
}

void ConvexEdgeWeights::validate(const Tree& t) const {
    if (static_cast<int>(lo.size()) != t.n || static_cast<int>(hi.size()) != t.n)
        throw InputError("edge weights: size mismatch");
    for (int i = 0; i < t.n; ++i) {
        if (i == t.root) continue;
        if (!(lo[i] <= hi[i])) throw InputError("edge weights: need w- <= w+");
    }
}

void TruncEdgeWeights::validate(const Tree& t) const {
    if (static_cast<int>(w.size()) != t.n || static_cast<int>(cap.size()) != t.n)
        throw InputError("edge weights: size mismatch");
    for (int i = 0; i < t.n; ++i) {
        if (i == t.root) continue;
        if (!(w[i] >= 0.0)) throw InputError("edge weights: need w >= 0");
        if (!(cap[i] > 0.0)) throw InputError("edge weights: need C > 0");
    }
}

double trunc_edge_cost(double w, double cap, double z) {
    return std::min(w * std::abs(z), cap);
}

} // namespace tvtree
