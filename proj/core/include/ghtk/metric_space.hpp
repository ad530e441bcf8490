#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ghtk/error.hpp"

namespace ghtk {

/// Absolute tolerances used when validating and comparing distances.
/// eps_tri is the slack granted to the triangle inequality, eps_eq the
/// tolerance for equality decisions (including diametrical-pair tests).
struct ToleranceConfig {
    double eps_tri = 0.0;
    double eps_eq = 0.0;

    static constexpr double kRelativeDefault = 1e-9;

    /// Default tolerances, relative to the largest matrix entry.
    static ToleranceConfig relative_to(double max_entry) {
        const double e = kRelativeDefault * (max_entry > 0 ? max_entry : 1.0);
        return ToleranceConfig{e, e};
    }
};

using IndexSet = std::vector<std::size_t>;
using Matrix = std::vector<std::vector<double>>;

/// A validated finite metric space: point labels plus a symmetric,
/// non-degenerate distance matrix satisfying the triangle inequality
/// (within the configured tolerance). Immutable after construction.
class FiniteMetricSpace {
public:
    std::size_t size() const noexcept { return n_; }
    double dist(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    double diameter() const noexcept { return diam_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const ToleranceConfig& tol() const noexcept { return tol_; }

    Matrix matrix() const;

    /// Trusted constructor for values that are metrics by construction
    /// (scaling, generators). Computes the diameter, skips axiom checks.
    static FiniteMetricSpace unchecked(std::vector<double> flat, std::size_t n,
                                       std::vector<std::string> labels,
                                       ToleranceConfig tol);

private:
    FiniteMetricSpace() = default;

    std::size_t n_ = 0;
    std::vector<double> d_;  // row-major n x n
    std::vector<std::string> labels_;
    double diam_ = 0.0;
    ToleranceConfig tol_;
};

/// Checks all metric axioms and returns the validated space. Throws an
/// Error naming the first violated axiom with the witnessing indices:
/// NonzeroDiagonal, NegativeDistance, Asymmetric, DegeneratePair,
/// TriangleViolation(i,j,k).
FiniteMetricSpace validate_metric(const Matrix& matrix,
                                  std::vector<std::string> labels,
                                  ToleranceConfig tol);

/// Same, with default tolerances relative to the largest entry.
FiniteMetricSpace validate_metric(const Matrix& matrix,
                                  std::vector<std::string> labels = {});

double diameter(const FiniteMetricSpace& x);

/// lambda * X; for lambda = 0 the one-point space Delta_1.
FiniteMetricSpace scale(const FiniteMetricSpace& x, double lambda);

/// The single-distance space Delta_m: m points, all nonzero distances
/// equal to lambda. m = 1 yields Delta_1 (lambda ignored).
FiniteMetricSpace delta_simplex(std::size_t m, double lambda = 1.0);

struct BlockRange {
    double inf;
    double sup;
};

/// (min, max) of dist over A x B. For A = B this is (0, diam A).
BlockRange block_distances(const FiniteMetricSpace& x, const IndexSet& a,
                           const IndexSet& b);

/// Hausdorff distance between nonempty subsets of one space, in the
/// max-of-directed-sup-inf form.
double hausdorff_distance(const FiniteMetricSpace& x, const IndexSet& a,
                          const IndexSet& b);

/// A partition of {0,...,n-1} into disjoint nonempty blocks.
class PartitionOf {
public:
    PartitionOf(std::size_t parent_size, std::vector<IndexSet> blocks);

    std::size_t parent_size() const noexcept { return n_; }
    const std::vector<IndexSet>& blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }

private:
    std::size_t n_;
    std::vector<IndexSet> blocks_;
};

/// max over blocks of the block diameter.
double partition_diameter(const FiniteMetricSpace& x, const PartitionOf& d);

}  // namespace ghtk
