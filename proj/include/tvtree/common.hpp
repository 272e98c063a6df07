#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace tvtree {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad file, invalid parameter, non-convex data where
/// convexity is required, ...
struct InputError : Error {
    using Error::Error;
};

/// The energy (or its lowest minimizer) is unbounded.
struct UnboundedError : Error {
    using Error::Error;
};

/// A configurable resource cap was exceeded (message breakpoint budget).
struct BudgetError : Error {
    using Error::Error;
};

inline double clip(double v, double lo, double hi) {
    return v < lo ? lo : (v > hi ? hi : v);
}

} // namespace tvtree
