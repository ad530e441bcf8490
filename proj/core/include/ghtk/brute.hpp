#pragma once

#include <cstdint>
#include <optional>

#include "ghtk/metric_space.hpp"

namespace ghtk::brute {

// Exhaustive reference computations, deliberately independent of the
// correspondence machinery and the branch-and-bound solver. They exist to
// cross-check the fast paths and are only feasible at desk scale.

/// d_GH by enumerating every correspondence (each x mapped to a nonempty
/// subset of Y, both projections covering) and taking half the minimal
/// distortion computed straight from the definition. Returns nothing when
/// the enumeration would exceed max_leaves.
std::optional<double> gh_distance(const FiniteMetricSpace& x,
                                  const FiniteMetricSpace& y,
                                  std::uint64_t max_leaves = 5'000'000);

/// Number of correspondences between index sets of the given sizes
/// (subset enumeration; requires nx * ny <= 24).
std::uint64_t count_correspondences(std::size_t nx, std::size_t ny);

/// Number of irreducible correspondences, by filtering the subset
/// enumeration with the singleton-image-or-preimage test.
std::uint64_t count_irreducible(std::size_t nx, std::size_t ny);

/// Borsuk number by exhaustive search over all set partitions, using the
/// strict-diameter criterion directly (no diameter-graph reduction).
std::size_t borsuk_number(const FiniteMetricSpace& x);

}  // namespace ghtk::brute
