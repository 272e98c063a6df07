#pragma once

#include <utility>
#include <vector>

#include "tvtree/tree.hpp"

namespace tvtree {

struct DpResult {
    std::vector<double> x;
    double energy = 0.0;
};

/// Generic forward/backward message-passing skeleton. The policy supplies the
/// message representation and the two update steps:
///
///   Message make_node_message(int i, std::vector<Message> kids);
///   Message edge_transform(int child, Message msg);   // records back-pointers
///   std::pair<double,double> root_minimize(const Message&); // (x_r, min)
///   double backtrack(int child, double x_parent);
///
/// Forward pass visits edges leaves-to-root, backward pass assigns
/// x_i from x_parent in the reverse order.
template <class Policy>
DpResult dp_solve(const Tree& t, Policy& policy) {
    using Message = typename Policy::Message;
    std::vector<std::vector<Message>> pending(t.n);
    DpResult res;
    res.x.assign(t.n, 0.0);
    for (int i : t.order) {
        Message m = policy.make_node_message(i, std::move(pending[i]));
        pending[i].clear();
        if (i == t.root) {
            auto [xr, minval] = policy.root_minimize(m);
            res.x[i] = xr;
            res.energy = minval;
        } else {
            pending[t.parent[i]].push_back(policy.edge_transform(i, std::move(m)));
        }
    }
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
        int i = *it;
        if (i == t.root) continue;
        res.x[i] = policy.backtrack(i, res.x[t.parent[i]]);
    }
    return res;
}

} // namespace tvtree
