#include "tvtree/nonconvex.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "tvtree/dp.hpp"

namespace tvtree {

double PiMapping::query(double y) const {
    // Intervals are disjoint and sorted; find the first with hi >= y.
    auto it = std::lower_bound(iv.begin(), iv.end(), y,
                               [](const Interval& a, double v) { return a.hi < v; });
    if (it != iv.end() && y >= it->lo) return it->target;
    return y;
}

namespace {

// Values of h at its breakpoints, O(t) from the anchor.
std::vector<double> break_values(const PwlFunc& h) {
    std::vector<double> vals(h.breaks.size());
    if (h.breaks.empty()) return vals;
    vals[0] = eval(h, h.breaks[0]);
    for (std::size_t p = 1; p < h.breaks.size(); ++p)
        vals[p] = vals[p - 1] + h.slopes[p] * (h.breaks[p] - h.breaks[p - 1]);
    return vals;
}

} // namespace

MinConvResult minconv_f1(const PwlFunc& h, double w) {
    if (!(w >= 0)) throw InputError("minconv: weight must be >= 0");
    if (h.slopes.front() > w)
        throw UnboundedError("minconv: message diverges faster than the edge slope");
    const std::size_t t = h.breaks.size();
    if (t == 0) return {h, {}};

    const std::vector<double> vals = break_values(h);
    MinConvResult r;
    r.f.slopes.assign(1, h.slopes[0]);
    r.f.slopes.reserve(t + 1);
    r.f.breaks.reserve(t);

    std::size_t i = 0;
    while (i < t) {
        r.f.breaks.push_back(h.breaks[i]);
        r.f.slopes.push_back(std::min(h.slopes[i + 1], w));
        if (h.slopes[i + 1] >= w) {
            // Ray of slope w through (breaks[i], vals[i]); h re-emerges below
            // it at the first later breakpoint j with h(b_j) < ray(b_j), or on
            // the unbounded last segment, or never.
            std::size_t j = i + 2;
            while (j < t && vals[j] >= vals[i] + w * (h.breaks[j] - h.breaks[i])) ++j;
            const bool dips = j < t || h.slopes[t] < w;
            if (!dips) {
                r.pi.iv.push_back({h.breaks[i], kInf, h.breaks[i]});
                break;
            }
            const std::size_t seg = j; // crossing lies between breaks[j-1] and breaks[j]
            const double segSlope = h.slopes[seg];
            const double x0 = h.breaks[seg - 1];
            const double diff = vals[seg - 1] - (vals[i] + w * (x0 - h.breaks[i]));
            double lam = x0;
            if (w > segSlope) lam = x0 + diff / (w - segSlope);
            r.f.breaks.push_back(lam);
            r.f.slopes.push_back(segSlope);
            r.pi.iv.push_back({h.breaks[i], lam, h.breaks[i]});
            i = j;
        } else {
            ++i;
        }
    }
    if (h.anchor) r.f.anchor = Anchor{r.f.breaks.front(), vals[0]};
    return r;
}

MinConvResult minconv_f2(const PwlFunc& h, double w) {
    MinConvResult rev = minconv_f1(reverse(h), w);
    MinConvResult r;
    r.f = reverse(std::move(rev.f));
    r.pi.iv.reserve(rev.pi.iv.size());
    for (auto it = rev.pi.iv.rbegin(); it != rev.pi.iv.rend(); ++it)
        r.pi.iv.push_back({-it->hi, -it->lo, -it->target});
    return r;
}

MinConvResult minconv_f3(const PwlFunc& h, double cap) {
    if (!(cap > 0)) throw InputError("minconv: cap must be > 0");
    if (!h.anchor) throw InputError("minconv_f3: anchored message required");
    if (!h.bounded_below()) throw UnboundedError("minconv_f3: message unbounded below");
    const std::size_t t = h.breaks.size();
    if (t == 0) return {h, {}}; // constant function, truncation inactive

    const std::vector<double> vals = break_values(h);
    std::size_t qi = 0;
    for (std::size_t p = 1; p < t; ++p)
        if (vals[p] < vals[qi]) qi = p;
    const double level = vals[qi] + cap;
    const double target = h.breaks[qi];
    if (!std::isfinite(level)) return {h, {}};

    MinConvResult r;
    bool above = h.slopes[0] < 0 ? true : vals[0] >= level;
    double aboveStart = -kInf;
    r.f.slopes.push_back(above ? 0.0 : h.slopes[0]);
    double firstBreakValue = 0.0;

    auto emit = [&](double x, double slopeAfter, double value) {
        if (r.f.breaks.empty()) firstBreakValue = value;
        r.f.breaks.push_back(x);
        r.f.slopes.push_back(slopeAfter);
    };

    for (std::size_t p = 0; p <= t; ++p) { // segment index
        const double s = h.slopes[p];
        if (above) {
            const bool rightBelow = p < t && vals[p] < level;
            if (rightBelow) {
                assert(s < 0);
                const double x = h.breaks[p] + (level - vals[p]) / s;
                emit(x, s, level);
                r.pi.iv.push_back({aboveStart, x, target});
                above = false;
            }
        }
        if (!above) {
            const bool rightAbove =
                p == t ? s > 0 : (vals[p] >= level && s > 0);
            if (rightAbove) {
                double x;
                if (p == t)
                    x = h.breaks[t - 1] + (level - vals[t - 1]) / s;
                else
                    x = h.breaks[p] + (level - vals[p]) / s;
                emit(x, 0.0, level);
                aboveStart = x;
                above = true;
            }
        }
        if (p < t && !above) emit(h.breaks[p], h.slopes[p + 1], vals[p]);
    }
    if (above) r.pi.iv.push_back({aboveStart, kInf, target});
    r.f.anchor = Anchor{r.f.breaks.front(), firstBreakValue};
    return r;
}

std::pair<PwlFunc, EdgePi> edge_minconv(PwlFunc h, double w, double cap) {
    if (!(w >= 0)) throw InputError("edge_minconv: weight must be >= 0");
    if (!(cap > 0)) throw InputError("edge_minconv: cap must be > 0");
    EdgePi pi;
    MinConvResult r1 = minconv_f1(h, w);
    pi.p1 = std::move(r1.pi);
    MinConvResult r2 = minconv_f2(r1.f, w);
    pi.p2 = std::move(r2.pi);
    PwlFunc out = std::move(r2.f);
    if (std::isfinite(cap)) {
        MinConvResult r3 = minconv_f3(out, cap);
        pi.p3 = std::move(r3.pi);
        out = std::move(r3.f);
    }
    return {std::move(out), std::move(pi)};
}

namespace {

struct NonconvexPolicy {
    using Message = PwlFunc;

    std::span<const UnaryPwl> unaries;
    const TruncEdgeWeights* weights;
    const NonconvexOptions* opts;
    NonconvexResult* out;
    std::vector<EdgePi> store;
    std::size_t total = 0;

    void charge(std::size_t breaks) {
        total += breaks;
        if (total > opts->breakpoint_budget)
            throw BudgetError("nonconvex solve exceeded the breakpoint budget");
    }

    Message make_node_message(int i, std::vector<Message> kids) {
        if (kids.empty()) return unaries[i].f;
        std::vector<PwlFunc> fs;
        fs.reserve(kids.size() + 1);
        fs.push_back(unaries[i].f);
        for (Message& k : kids) fs.push_back(std::move(k));
        PwlFunc m = sum_many(fs);
        charge(m.breaks.size());
        return m;
    }

    Message edge_transform(int child, Message msg) {
        const std::size_t in = msg.breaks.size();
        auto [f, pi] = edge_minconv(std::move(msg), weights->w[child],
                                    weights->cap[child]);
        store[child] = std::move(pi);
        out->edge_breaks.emplace_back(in, f.breaks.size());
        charge(f.breaks.size());
        return f;
    }

    std::pair<double, double> root_minimize(const Message& m) {
        if (!m.bounded_below())
            throw UnboundedError("energy unbounded below at the root");
        if (m.breaks.empty())
            throw UnboundedError("root message is constant; minimizer unbounded");
        auto [minval, arg] = min_at_breaks(m);
        return {arg, minval};
    }

    double backtrack(int child, double xParent) {
        return store[child].query(xParent);
    }
};

} // namespace

NonconvexResult solve_nonconvex(const Tree& tree, std::span<const UnaryPwl> unaries,
                                const TruncEdgeWeights& weights,
                                const NonconvexOptions& opts) {
    if (static_cast<int>(unaries.size()) != tree.n)
        throw InputError("solve_nonconvex: one unary per node required");
    weights.validate(tree);
    NonconvexResult res;
    NonconvexPolicy policy;
    policy.unaries = unaries;
    policy.weights = &weights;
    policy.opts = &opts;
    policy.out = &res;
    policy.store.resize(tree.n);
    DpResult dp = dp_solve(tree, policy);
    res.x = std::move(dp.x);
    res.energy = dp.energy;
    res.total_breakpoints = policy.total;
    return res;
}

double energy_nonconvex(const Tree& tree, std::span<const UnaryPwl> unaries,
                        const TruncEdgeWeights& weights, std::span<const double> x) {
    double e = 0.0;
    for (int i = 0; i < tree.n; ++i) {
        e += eval(unaries[i].f, x[i]);
        if (i != tree.root)
            e += trunc_edge_cost(weights.w[i], weights.cap[i], x[tree.parent[i]] - x[i]);
    }
    return e;
}

} // namespace tvtree
