#include "ghtk/brute.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <vector>

namespace ghtk::brute {

namespace {

struct PairList {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

// Assigns each x a nonempty subset of Y, keeping the incremental distortion,
// and checks Y coverage at the leaves.
struct CorrespondenceScan {
    const FiniteMetricSpace& x;
    const FiniteMetricSpace& y;
    std::uint32_t ny_mask;
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

    void scan(std::uint32_t xi, std::uint32_t covered, double dis) {
        if (xi == x.size()) {
            if (covered == ny_mask) best = std::min(best, dis);
            return;
        }
        for (std::uint32_t subset = 1; subset <= ny_mask; ++subset) {
            double d = dis;
            std::size_t added = 0;
            for (std::uint32_t yj = 0; yj < y.size(); ++yj) {
                if (!(subset >> yj & 1)) continue;
                for (const auto& [px, py] : pairs)
                    d = std::max(d, std::abs(x(xi, px) - y(yj, py)));
                pairs.push_back({xi, yj});
                ++added;
            }
            scan(xi + 1, covered | subset, d);
            for (; added > 0; --added) pairs.pop_back();
        }
    }
};

double pow_u64_capped(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (v > cap / base) return static_cast<double>(cap) + 1.0;
        v *= base;
    }
    return static_cast<double>(v);
}

}  // namespace

std::optional<double> gh_distance(const FiniteMetricSpace& x,
                                  const FiniteMetricSpace& y,
                                  std::uint64_t max_leaves) {
    if (y.size() > 24) return std::nullopt;
    const std::uint64_t subsets = (std::uint64_t{1} << y.size()) - 1;
    if (pow_u64_capped(subsets, x.size(), max_leaves) >
        static_cast<double>(max_leaves))
        return std::nullopt;
    CorrespondenceScan s{x, y, static_cast<std::uint32_t>(subsets)};
    s.scan(0, 0, 0.0);
    return s.best / 2.0;
}

namespace {

bool subset_is_correspondence(std::uint32_t bits, std::size_t nx, std::size_t ny) {
    for (std::size_t i = 0; i < nx; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < ny && !any; ++j)
            any = bits >> (i * ny + j) & 1;
        if (!any) return false;
    }
    for (std::size_t j = 0; j < ny; ++j) {
        bool any = false;
        for (std::size_t i = 0; i < nx && !any; ++i)
            any = bits >> (i * ny + j) & 1;
        if (!any) return false;
    }
    return true;
}

bool subset_is_irreducible(std::uint32_t bits, std::size_t nx, std::size_t ny) {
    std::vector<int> row(nx, 0), col(ny, 0);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j)
            if (bits >> (i * ny + j) & 1) {
                ++row[i];
                ++col[j];
            }
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j)
            if ((bits >> (i * ny + j) & 1) && row[i] > 1 && col[j] > 1)
                return false;
    return true;
}

}  // namespace

std::uint64_t count_correspondences(std::size_t nx, std::size_t ny) {
    if (nx * ny > 24) fail("TooLarge", "subset enumeration requires nx*ny <= 24");
    std::uint64_t count = 0;
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << (nx * ny)); ++bits)
        if (subset_is_correspondence(bits, nx, ny)) ++count;
    return count;
}

std::uint64_t count_irreducible(std::size_t nx, std::size_t ny) {
    if (nx * ny > 24) fail("TooLarge", "subset enumeration requires nx*ny <= 24");
    std::uint64_t count = 0;
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << (nx * ny)); ++bits)
        if (subset_is_correspondence(bits, nx, ny) &&
            subset_is_irreducible(bits, nx, ny))
            ++count;
    return count;
}

namespace {

// Restricted-growth-string recursion over all set partitions; a partition is
// admissible when every block's diameter stays strictly below diam X (with
// the same tolerance rule the diameter graph uses).
struct PartitionScan {
    const FiniteMetricSpace& x;
    double cutoff;  // largest admissible within-block distance
    std::vector<std::uint32_t> assign;
    std::size_t best = 0;

    bool blocks_ok(std::size_t point, std::uint32_t block) const {
        for (std::size_t other = 0; other < point; ++other)
            if (assign[other] == block && x(other, point) >= cutoff) return false;
        return true;
    }

    void scan(std::size_t point, std::uint32_t max_block) {
        const std::size_t used = max_block + 1;
        if (used >= best) return;  // cannot improve
        if (point == x.size()) {
            best = used;
            return;
        }
        for (std::uint32_t b = 0; b <= max_block + 1; ++b) {
            if (!blocks_ok(point, b)) continue;
            assign[point] = b;
            scan(point + 1, std::max(max_block, b));
        }
    }
};

}  // namespace

std::size_t borsuk_number(const FiniteMetricSpace& x) {
    if (x.size() < 2) fail("SinglePoint", "need >= 2 points");
    const double diam = x.diameter();
    PartitionScan s{x, diam - x.tol().eps_eq * diam,
                    std::vector<std::uint32_t>(x.size(), 0), x.size() + 1};
    s.assign[0] = 0;
    s.scan(1, 0);
    return s.best;
}

}  // namespace ghtk::brute
