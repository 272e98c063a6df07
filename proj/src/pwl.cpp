#include "tvtree/pwl.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace tvtree {

void PwlFunc::validate() const {
    if (slopes.size() != breaks.size() + 1)
        throw InputError("PwlFunc: need len(slopes) == len(breaks)+1");
    if (!std::is_sorted(breaks.begin(), breaks.end()))
        throw InputError("PwlFunc: breakpoints must be non-decreasing");
    for (double s : slopes)
        if (!std::isfinite(s)) throw InputError("PwlFunc: non-finite slope");
    for (double b : breaks)
        if (!std::isfinite(b)) throw InputError("PwlFunc: non-finite breakpoint");
}

UnaryPwl UnaryPwl::vee(double c, double w) {
    return UnaryPwl(PwlFunc({-w, w}, {c}, Anchor{c, 0.0}));
}

UnaryPwl UnaryPwl::zero() {
    return UnaryPwl(PwlFunc({0.0}, {}, Anchor{0.0, 0.0}));
}

UnaryPwl UnaryPwl::from_samples(std::span<const double> xs,
                                std::span<const double> ys, double guard) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw InputError("from_samples: need >= 2 samples");
    std::vector<double> slopes, breaks;
    slopes.push_back(-guard);
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        if (!(xs[k + 1] > xs[k])) throw InputError("from_samples: xs not increasing");
        breaks.push_back(xs[k]);
        slopes.push_back((ys[k + 1] - ys[k]) / (xs[k + 1] - xs[k]));
    }
    breaks.push_back(xs.back());
    slopes.push_back(guard);
    return UnaryPwl(PwlFunc(std::move(slopes), std::move(breaks),
                            Anchor{xs.front(), ys.front()}));
}

double eval(const PwlFunc& f, double x) {
    if (!f.anchor) throw InputError("eval: PwlFunc has no anchor");
    const double x0 = f.anchor->x;
    const double lo = std::min(x0, x), hi = std::max(x0, x);
    double acc = 0.0;
    const std::size_t t = f.breaks.size();
    for (std::size_t p = 0; p <= t; ++p) {
        const double segLo = p == 0 ? lo : std::max(lo, f.breaks[p - 1]);
        const double segHi = p == t ? hi : std::min(hi, f.breaks[p]);
        if (segHi > segLo) acc += f.slopes[p] * (segHi - segLo);
    }
    return f.anchor->value + (x >= x0 ? acc : -acc);
}

PwlFunc add_linear(PwlFunc f, double a) {
    for (double& s : f.slopes) s += a;
    if (f.anchor) f.anchor->value += a * f.anchor->x;
    return f;
}

PwlFunc reverse(PwlFunc f) {
    std::reverse(f.slopes.begin(), f.slopes.end());
    std::reverse(f.breaks.begin(), f.breaks.end());
    for (double& s : f.slopes) s = -s;
    for (double& b : f.breaks) b = -b;
    if (f.anchor) f.anchor->x = -f.anchor->x;
    return f;
}

PwlFunc sum_many(std::span<const PwlFunc> fs) {
    PwlFunc out;
    out.slopes.clear();
    double slope = 0.0;
    bool anchored = true;
    std::size_t total = 0;
    for (const PwlFunc& f : fs) {
        slope += f.slopes.front();
        total += f.breaks.size();
        anchored = anchored && f.anchor.has_value();
    }
    out.slopes.push_back(slope);
    out.breaks.reserve(total);
    out.slopes.reserve(total + 1);

    // (breakpoint value, input index, breakpoint index); min-heap on value,
    // input index second for a deterministic order of coincident breaks.
    using Item = std::tuple<double, std::size_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    for (std::size_t k = 0; k < fs.size(); ++k)
        if (!fs[k].breaks.empty()) heap.emplace(fs[k].breaks[0], k, 0);
    while (!heap.empty()) {
        auto [b, k, j] = heap.top();
        heap.pop();
        slope += fs[k].slopes[j + 1] - fs[k].slopes[j];
        out.breaks.push_back(b);
        out.slopes.push_back(slope);
        if (j + 1 < fs[k].breaks.size()) heap.emplace(fs[k].breaks[j + 1], k, j + 1);
    }
    if (anchored) {
        const double x0 = out.breaks.empty() ? 0.0 : out.breaks.front();
        double v = 0.0;
        for (const PwlFunc& f : fs) v += eval(f, x0);
        out.anchor = Anchor{x0, v};
    }
    return out;
}

PwlFunc normalize(PwlFunc f) {
    PwlFunc out;
    out.slopes.clear();
    out.anchor = f.anchor;
    out.slopes.push_back(f.slopes.front());
    for (std::size_t p = 0; p < f.breaks.size(); ++p) {
        if (f.slopes[p + 1] == out.slopes.back()) continue;
        out.breaks.push_back(f.breaks[p]);
        out.slopes.push_back(f.slopes[p + 1]);
    }
    return out;
}

bool is_convex(const PwlFunc& f) {
    return std::is_sorted(f.slopes.begin(), f.slopes.end());
}

std::pair<double, double> min_at_breaks(const PwlFunc& f) {
    if (f.breaks.empty()) throw InputError("min_at_breaks: no breakpoints");
    if (!f.anchor) throw InputError("min_at_breaks: no anchor");
    double best = eval(f, f.breaks[0]);
    double arg = f.breaks[0];
    double v = best;
    for (std::size_t p = 1; p < f.breaks.size(); ++p) {
        v += f.slopes[p] * (f.breaks[p] - f.breaks[p - 1]);
        if (v < best) {
            best = v;
            arg = f.breaks[p];
        }
    }
    return {best, arg};
}

} // namespace tvtree
