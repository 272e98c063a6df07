#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tvtree/pwl.hpp"
#include "tvtree/tree.hpp"

namespace tvtree {

/// Argmin mapping of one elementary min-convolution: a sorted list of
/// disjoint intervals, each sending y in [lo, hi] to `target`; outside every
/// interval the mapping is the identity. Covers all three elementary cases
/// (target = lo, target = hi, target = minimizing breakpoint).
struct PiMapping {
    struct Interval {
        double lo, hi, target;
    };
    std::vector<Interval> iv;

    double query(double y) const;
    bool empty() const { return iv.empty(); }
};

struct MinConvResult {
    PwlFunc f;
    PiMapping pi;
};

/// h (x) min-convolved with the one-sided ray (+inf for z<0, w*z for z>=0).
/// Requires h bounded on the left relative to w (s_0 <= w), else throws
/// UnboundedError.
MinConvResult minconv_f1(const PwlFunc& h, double w);

/// Mirror image: +inf for z>0, w*|z| for z<=0.
MinConvResult minconv_f2(const PwlFunc& h, double w);

/// Jump function: 0 at z=0, cap elsewhere. Result is min(h, min h + cap);
/// requires an anchored, bounded-below h.
MinConvResult minconv_f3(const PwlFunc& h, double cap);

/// Composed mapping for a full edge term min(w|z|, cap); queried innermost
/// (f3) first.
struct EdgePi {
    PiMapping p1, p2, p3;
    double query(double y) const { return p1.query(p2.query(p3.query(y))); }
};

/// Min-convolution with f_ij(z) = min(w*|z|, cap), via the consecutive
/// elementary transforms; cap may be +inf.
std::pair<PwlFunc, EdgePi> edge_minconv(PwlFunc h, double w, double cap);

struct NonconvexOptions {
    /// Hard cap on the total number of message breakpoints produced by one
    /// solve; exceeding it throws BudgetError.
    std::size_t breakpoint_budget = 10'000'000;
};

struct NonconvexResult {
    std::vector<double> x;
    double energy = 0.0;
    /// (breakpoints in, breakpoints out) of every edge min-convolution,
    /// in forward-pass order.
    std::vector<std::pair<std::size_t, std::size_t>> edge_breaks;
    std::size_t total_breakpoints = 0;
};

/// Exact global minimization of sum f_i(x_i) + sum min(w|x_j - x_i|, cap) on
/// a tree by message passing with piecewise-linear messages.
NonconvexResult solve_nonconvex(const Tree& tree, std::span<const UnaryPwl> unaries,
                                const TruncEdgeWeights& weights,
                                const NonconvexOptions& opts = {});

/// Energy of an assignment under the same model (shared evaluator).
double energy_nonconvex(const Tree& tree, std::span<const UnaryPwl> unaries,
                        const TruncEdgeWeights& weights, std::span<const double> x);

} // namespace tvtree
