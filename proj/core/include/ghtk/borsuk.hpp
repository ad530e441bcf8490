#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ghtk/metric_space.hpp"
#include "ghtk/solver.hpp"

namespace ghtk {

/// Graph on the points of a finite space whose edges are the diametrical
/// pairs: diam X - dist <= eps_eq * diam X.
struct DiameterGraph {
    std::size_t n = 0;
    double diam = 0.0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::uint64_t> adj;  // adjacency bitmask per vertex (n <= 64)
};

DiameterGraph diameter_graph(const FiniteMetricSpace& x);
DiameterGraph diameter_graph(const FiniteMetricSpace& x, const ToleranceConfig& tol);

/// beta(X) with a witness partition into parts of strictly smaller
/// diameter and the epsilon certifying the strictness.
struct BorsukResult {
    std::size_t number = 0;
    PartitionOf witness;
    double epsilon = 0.0;
    double diam = 0.0;
};

/// The Borsuk number: the least m such that X partitions into m parts of
/// strictly smaller diameter. For finite X this is the chromatic number of
/// the diameter graph, computed exactly.
BorsukResult borsuk_number(const FiniteMetricSpace& x);

/// Generalized Borsuk Problem for a concrete m: true iff the diameter
/// graph is m-colorable, with a witness partition of exactly m parts.
std::pair<bool, std::optional<PartitionOf>> can_partition_smaller(
    const FiniteMetricSpace& x, std::size_t m);

/// Both sides of the partition-vs-distance dichotomy, evaluated on one
/// instance: the partition decision and 2 d_GH(lambda Delta_m, X).
struct ConsistencyReport {
    std::size_t m = 0;
    double lambda = 0.0;
    double diam = 0.0;
    bool partition_exists = false;
    double two_d_gh = 0.0;
    bool biconditional_holds = false;
    /// Meaningful only when no partition exists: 2 d_GH = diam X within eps.
    std::optional<bool> equality_holds;
};

ConsistencyReport generalized_borsuk_via_gh(const FiniteMetricSpace& x,
                                            std::size_t m, double lambda,
                                            const SolverOptions& opts = {});

/// For finite spaces a dLS_n space is exactly one with beta(X) > n: every
/// cover by at most n closed sets keeps a diametrical pair together.
bool is_dls_n(const FiniteMetricSpace& x, std::size_t n);

}  // namespace ghtk
