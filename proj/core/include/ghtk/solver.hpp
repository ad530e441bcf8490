#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ghtk/correspondence.hpp"
#include "ghtk/metric_space.hpp"

namespace ghtk {

enum class Method {
    search,
    shortcut_delta1,
    shortcut_scaling,
    shortcut_borsuk,
    shortcut_equal,
};

const char* method_name(Method m);

/// Exact GH distance with a certifying witness: distortion(witness) equals
/// 2 * value, and lower <= value <= upper holds for the diameter bounds.
struct GHResult {
    double value = 0.0;
    std::optional<Correspondence> witness;
    Method method = Method::search;
    double lower = 0.0;
    double upper = 0.0;
};

struct SolverOptions {
    std::size_t max_points = 10;
    bool allow_shortcuts = true;
    unsigned worker_count = 1;
};

/// (|diam X - diam Y| / 2, max(diam X, diam Y) / 2).
std::pair<double, double> gh_bounds(const FiniteMetricSpace& x,
                                    const FiniteMetricSpace& y);

/// Closed-form results when a hypothesis is verified: one side a point,
/// exact matrix proportionality, or a supplied Borsuk number of Y with
/// #X < beta(Y) and diam X <= diam Y. Returns nothing otherwise.
std::optional<GHResult> gh_shortcut(const FiniteMetricSpace& x,
                                    const FiniteMetricSpace& y,
                                    std::optional<std::size_t> beta_y = {});

/// Exact GH distance: half the minimum distortion over all irreducible
/// correspondences, found by depth-first branch and bound over the
/// canonical enumeration. Throws TooLarge beyond opts.max_points.
GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const SolverOptions& opts = {});

/// Result for (lambda X, lambda Y) derived from the result for (X, Y):
/// the value scales linearly and the same pair set stays optimal.
GHResult gh_scaled(const GHResult& base, double lambda);

}  // namespace ghtk
