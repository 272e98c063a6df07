#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tvtree/common.hpp"

namespace tvtree {

struct Anchor {
    double x = 0.0;
    double value = 0.0;
};

/// Continuous piecewise-linear function stored as the sequence
/// (s_0, x_1, s_1, ..., x_t, s_t): t+1 segment slopes and t non-decreasing
/// breakpoints. Without an anchor the function is defined only up to an
/// additive constant. Coincident breakpoints are legal and are never merged
/// implicitly.
struct PwlFunc {
    std::vector<double> slopes{0.0};
    std::vector<double> breaks;
    std::optional<Anchor> anchor;

    PwlFunc() = default;
    PwlFunc(std::vector<double> s, std::vector<double> b,
            std::optional<Anchor> a = std::nullopt)
        : slopes(std::move(s)), breaks(std::move(b)), anchor(a) {}

    std::size_t breakpoint_count() const { return breaks.size(); }

    /// True iff the function does not diverge to -inf on either side.
    bool bounded_below() const {
        return slopes.front() <= 0.0 && slopes.back() >= 0.0;
    }

    /// Throws InputError if the slope/breakpoint shape is inconsistent.
    void validate() const;
};

/// Unary term: an anchored PwlFunc (absolute values matter for energies).
struct UnaryPwl {
    PwlFunc f;

    UnaryPwl() { f.anchor = Anchor{}; }
    explicit UnaryPwl(PwlFunc fn) : f(std::move(fn)) {
        if (!f.anchor) throw InputError("UnaryPwl requires an anchor");
    }

    bool bounded_below() const { return f.bounded_below(); }

    /// |x - c| scaled by `w`.
    static UnaryPwl vee(double c, double w = 1.0);
    /// Zero function.
    static UnaryPwl zero();
    /// Interpolates samples (xs[k], ys[k]) and continues beyond both ends
    /// with slope +-guard.
    static UnaryPwl from_samples(std::span<const double> xs,
                                 std::span<const double> ys, double guard);
};

/// f(x) via the anchor: anchor.value plus the integral of the slope.
double eval(const PwlFunc& f, double x);

/// f(x) + a*x (slopes shifted by a; anchor value adjusted accordingly).
PwlFunc add_linear(PwlFunc f, double a);

/// f^rev with f^rev(z) = f(-z).
PwlFunc reverse(PwlFunc f);

/// Sum of sorted piecewise-linear functions; the output breakpoint multiset
/// is the k-way merge of the inputs' breakpoints (O(t log k) via a heap).
/// The result carries an anchor iff every input does.
PwlFunc sum_many(std::span<const PwlFunc> fs);

/// Merges adjacent segments with bitwise-equal slopes. Never called
/// implicitly by any algorithm.
PwlFunc normalize(PwlFunc f);

bool is_convex(const PwlFunc& f);

/// Value and first position of the minimum over the breakpoints (which is the
/// global minimum for bounded-below f with t >= 1).
std::pair<double, double> min_at_breaks(const PwlFunc& f);

} // namespace tvtree
