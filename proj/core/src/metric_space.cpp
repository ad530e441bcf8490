#include "ghtk/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ghtk {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
    return labels;
}

double max_entry(const Matrix& m) {
    double v = 0.0;
    for (const auto& row : m)
        for (double d : row) v = std::max(v, std::abs(d));
    return v;
}

}  // namespace

Matrix FiniteMetricSpace::matrix() const {
    Matrix m(n_, std::vector<double>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m[i][j] = dist(i, j);
    return m;
}

FiniteMetricSpace FiniteMetricSpace::unchecked(std::vector<double> flat,
                                               std::size_t n,
                                               std::vector<std::string> labels,
                                               ToleranceConfig tol) {
    FiniteMetricSpace x;
    x.n_ = n;
    x.d_ = std::move(flat);
    x.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
    x.tol_ = tol;
    x.diam_ = 0.0;
    for (double v : x.d_) x.diam_ = std::max(x.diam_, v);
    return x;
}

FiniteMetricSpace validate_metric(const Matrix& matrix,
                                  std::vector<std::string> labels,
                                  ToleranceConfig tol) {
    const std::size_t n = matrix.size();
    if (n == 0) fail("EmptyMatrix", "distance matrix must have at least one row");
    for (std::size_t i = 0; i < n; ++i)
        if (matrix[i].size() != n)
            fail("NotSquare", "row " + std::to_string(i) + " has " +
                                  std::to_string(matrix[i].size()) +
                                  " entries, expected " + std::to_string(n));
    if (!labels.empty() && labels.size() != n)
        fail("LabelMismatch", "got " + std::to_string(labels.size()) +
                                  " labels for " + std::to_string(n) + " points");
    if (tol.eps_tri < 0 || tol.eps_eq < 0)
        fail("NegativeTolerance", "tolerances must be non-negative");

    for (std::size_t i = 0; i < n; ++i)
        if (matrix[i][i] != 0.0)
            fail("NonzeroDiagonal",
                 "dist[" + std::to_string(i) + "][" + std::to_string(i) +
                     "] = " + std::to_string(matrix[i][i]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (matrix[i][j] < 0.0)
                fail("NegativeDistance", "dist[" + std::to_string(i) + "][" +
                                             std::to_string(j) + "] < 0");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (matrix[i][j] != matrix[j][i])
                fail("Asymmetric", "dist[" + std::to_string(i) + "][" +
                                       std::to_string(j) + "] != dist[" +
                                       std::to_string(j) + "][" +
                                       std::to_string(i) + "]");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (matrix[i][j] == 0.0)
                fail("DegeneratePair", "distinct points " + std::to_string(i) +
                                           " and " + std::to_string(j) +
                                           " are at distance 0");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (matrix[i][j] > matrix[i][k] + matrix[k][j] + tol.eps_tri) {
                    std::ostringstream msg;
                    msg << "TriangleViolation(" << i << "," << j << "," << k
                        << "): dist[" << i << "][" << j << "] = " << matrix[i][j]
                        << " > " << matrix[i][k] + matrix[k][j];
                    fail("TriangleViolation", msg.str());
                }

    std::vector<double> flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = matrix[i][j];
    return FiniteMetricSpace::unchecked(std::move(flat), n, std::move(labels), tol);
}

FiniteMetricSpace validate_metric(const Matrix& matrix,
                                  std::vector<std::string> labels) {
    return validate_metric(matrix, std::move(labels),
                           ToleranceConfig::relative_to(max_entry(matrix)));
}

double diameter(const FiniteMetricSpace& x) { return x.diameter(); }

FiniteMetricSpace scale(const FiniteMetricSpace& x, double lambda) {
    if (lambda < 0) fail("NegativeScale", "scale factor must be >= 0");
    if (lambda == 0) return delta_simplex(1);
    const std::size_t n = x.size();
    std::vector<double> flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = lambda * x(i, j);
    ToleranceConfig tol{x.tol().eps_tri * lambda, x.tol().eps_eq * lambda};
    return FiniteMetricSpace::unchecked(std::move(flat), n, x.labels(), tol);
}

FiniteMetricSpace delta_simplex(std::size_t m, double lambda) {
    if (m == 0) fail("EmptyMatrix", "delta_simplex requires m >= 1");
    if (m >= 2 && lambda <= 0)
        fail("NonpositiveLambda", "delta_simplex requires lambda > 0 for m >= 2");
    if (m == 1) lambda = 1.0;  // unused, keep tolerances sane
    std::vector<double> flat(m * m, lambda);
    for (std::size_t i = 0; i < m; ++i) flat[i * m + i] = 0.0;
    return FiniteMetricSpace::unchecked(std::move(flat), m, {},
                                        ToleranceConfig::relative_to(lambda));
}

namespace {

void check_subset(const FiniteMetricSpace& x, const IndexSet& a,
                  const char* which) {
    if (a.empty()) fail("EmptySet", std::string(which) + " index set is empty");
    for (std::size_t i : a)
        if (i >= x.size())
            fail("IndexOutOfRange", std::string(which) + " contains index " +
                                        std::to_string(i) + " >= n");
}

}  // namespace

BlockRange block_distances(const FiniteMetricSpace& x, const IndexSet& a,
                           const IndexSet& b) {
    check_subset(x, a, "A");
    check_subset(x, b, "B");
    BlockRange r{x(a[0], b[0]), x(a[0], b[0])};
    for (std::size_t i : a)
        for (std::size_t j : b) {
            r.inf = std::min(r.inf, x(i, j));
            r.sup = std::max(r.sup, x(i, j));
        }
    return r;
}

double hausdorff_distance(const FiniteMetricSpace& x, const IndexSet& a,
                          const IndexSet& b) {
    check_subset(x, a, "A");
    check_subset(x, b, "B");
    double result = 0.0;
    for (std::size_t i : a) {
        double to_b = x(i, b[0]);
        for (std::size_t j : b) to_b = std::min(to_b, x(i, j));
        result = std::max(result, to_b);
    }
    for (std::size_t j : b) {
        double to_a = x(a[0], j);
        for (std::size_t i : a) to_a = std::min(to_a, x(i, j));
        result = std::max(result, to_a);
    }
    return result;
}

PartitionOf::PartitionOf(std::size_t parent_size, std::vector<IndexSet> blocks)
    : n_(parent_size), blocks_(std::move(blocks)) {
    std::vector<char> seen(n_, 0);
    std::size_t covered = 0;
    for (const auto& block : blocks_) {
        if (block.empty()) fail("EmptyBlock", "partition block is empty");
        for (std::size_t i : block) {
            if (i >= n_)
                fail("IndexOutOfRange",
                     "partition block index " + std::to_string(i) + " >= n");
            if (seen[i])
                fail("OverlappingBlocks",
                     "index " + std::to_string(i) + " appears in two blocks");
            seen[i] = 1;
            ++covered;
        }
    }
    if (covered != n_)
        fail("IncompletePartition", "blocks cover " + std::to_string(covered) +
                                        " of " + std::to_string(n_) + " points");
}

double partition_diameter(const FiniteMetricSpace& x, const PartitionOf& d) {
    if (d.parent_size() != x.size())
        fail("SizeMismatch", "partition parent size does not match the space");
    double result = 0.0;
    for (const auto& block : d.blocks())
        result = std::max(result, block_distances(x, block, block).sup);
    return result;
}

}  // namespace ghtk
