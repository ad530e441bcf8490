#include "ghtk/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

namespace ghtk {

const char* method_name(Method m) {
    switch (m) {
        case Method::search: return "search";
        case Method::shortcut_delta1: return "shortcut-delta1";
        case Method::shortcut_scaling: return "shortcut-scaling";
        case Method::shortcut_borsuk: return "shortcut-borsuk";
        case Method::shortcut_equal: return "shortcut-equal";
    }
    return "unknown";
}

std::pair<double, double> gh_bounds(const FiniteMetricSpace& x,
                                    const FiniteMetricSpace& y) {
    const double dx = x.diameter(), dy = y.diameter();
    return {std::abs(dx - dy) / 2.0, std::max(dx, dy) / 2.0};
}

namespace {

// One singleton block per X point, the last one absorbing the Y tail.
// Irreducible, and its distortion never exceeds max(diam X, diam Y).
std::vector<IndexPair> chain_pairs(std::size_t nx, std::size_t ny) {
    std::vector<IndexPair> pairs;
    pairs.reserve(ny);
    for (std::uint32_t i = 0; i + 1 < nx; ++i) pairs.push_back({i, i});
    for (std::uint32_t j = static_cast<std::uint32_t>(nx) - 1; j < ny; ++j)
        pairs.push_back({static_cast<std::uint32_t>(nx) - 1, j});
    return pairs;
}

double pair_list_distortion(const FiniteMetricSpace& a,
                            const FiniteMetricSpace& b,
                            const std::vector<IndexPair>& pairs) {
    double dis = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            dis = std::max(dis, std::abs(a(pairs[i].first, pairs[j].first) -
                                         b(pairs[i].second, pairs[j].second)));
    return dis;
}

void atomic_min(std::atomic<double>& target, double v) {
    double cur = target.load(std::memory_order_relaxed);
    while (v < cur &&
           !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

// Depth-first search over the canonical irreducible-correspondence tree
// (A is the side with nx <= ny; Y indices of B are assigned in order).
// Phase 1 minimizes the distortion, pruning branches whose partial
// distortion already reaches the shared incumbent. Phase 2 re-walks the
// tree with the known optimum as threshold and returns the first leaf
// attaining it, which makes the witness independent of the worker count.
struct BranchAndBound {
    const FiniteMetricSpace& a;
    const FiniteMetricSpace& b;
    std::size_t nx;
    std::size_t ny;

    std::atomic<double>* best = nullptr;  // phase 1 incumbent (shared)
    bool find_witness = false;            // phase 2 mode
    double threshold = std::numeric_limits<double>::infinity();
    std::vector<IndexPair> witness;

    unsigned worker_id = 0;  // phase 1 top-level branch filter
    unsigned stride = 1;

    std::vector<IndexPair> pairs;
    std::vector<std::uint32_t> extensible;  // singleton X side of open blocks
    std::uint64_t used_x = 0;
    std::size_t top_counter = 0;

    bool mine(std::uint32_t depth) {
        if (depth != 0 || stride == 1) return true;
        return top_counter++ % stride == worker_id;
    }

    double extended(double partial, std::uint32_t x, std::uint32_t y) const {
        for (const auto& [px, py] : pairs)
            partial = std::max(partial, std::abs(a(x, px) - b(y, py)));
        return partial;
    }

    bool prune(double partial) const {
        if (find_witness) return partial > threshold;
        return partial >= best->load(std::memory_order_relaxed);
    }

    // Returns false to unwind once a phase-2 witness is found.
    bool dfs(std::uint32_t y, double partial) {
        if (y == ny) {
            if (std::popcount(used_x) != static_cast<int>(nx)) return true;
            if (find_witness) {
                witness = pairs;
                std::sort(witness.begin(), witness.end());
                return false;
            }
            atomic_min(*best, partial);
            return true;
        }
        const bool all_used = std::popcount(used_x) == static_cast<int>(nx);
        if (all_used && extensible.empty()) return true;

        for (std::size_t k = 0; k < extensible.size(); ++k) {
            if (!mine(y)) continue;
            const std::uint32_t x = extensible[k];
            const double p = extended(partial, x, y);
            if (prune(p)) continue;
            pairs.push_back({x, y});
            const bool go = dfs(y + 1, p);
            pairs.pop_back();
            if (!go) return false;
        }

        std::vector<std::uint32_t> unused;
        for (std::uint32_t x = 0; x < nx; ++x)
            if (!(used_x >> x & 1)) unused.push_back(x);

        for (std::uint32_t x : unused) {
            if (!mine(y)) continue;
            const double p = extended(partial, x, y);
            if (prune(p)) continue;
            pairs.push_back({x, y});
            extensible.push_back(x);
            used_x |= std::uint64_t{1} << x;
            const bool go = dfs(y + 1, p);
            used_x &= ~(std::uint64_t{1} << x);
            extensible.pop_back();
            pairs.pop_back();
            if (!go) return false;
        }

        for (std::uint64_t mask = 3; mask < (std::uint64_t{1} << unused.size());
             ++mask) {
            if (std::popcount(mask) < 2) continue;
            if (!mine(y)) continue;
            double p = partial;
            std::size_t added = 0;
            bool cut = false;
            for (std::size_t k = 0; k < unused.size(); ++k) {
                if (!(mask >> k & 1)) continue;
                p = extended(p, unused[k], y);
                if (prune(p)) {
                    cut = true;
                    break;
                }
                pairs.push_back({unused[k], y});
                used_x |= std::uint64_t{1} << unused[k];
                ++added;
            }
            const bool go = cut || dfs(y + 1, p);
            for (; added > 0; --added) {
                used_x &= ~(std::uint64_t{1} << pairs.back().first);
                pairs.pop_back();
            }
            if (!go) return false;
        }
        return true;
    }
};

struct SearchOutcome {
    double distortion;
    std::vector<IndexPair> pairs;  // sorted, oriented as (A index, B index)
};

SearchOutcome search_min_distortion(const FiniteMetricSpace& a,
                                    const FiniteMetricSpace& b,
                                    unsigned workers) {
    const std::size_t nx = a.size(), ny = b.size();
    const auto seed_pairs = chain_pairs(nx, ny);
    std::atomic<double> best{pair_list_distortion(a, b, seed_pairs)};

    if (workers <= 1) {
        BranchAndBound bnb{a, b, nx, ny};
        bnb.best = &best;
        bnb.dfs(0, 0.0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                BranchAndBound bnb{a, b, nx, ny};
                bnb.best = &best;
                bnb.worker_id = w;
                bnb.stride = workers;
                bnb.dfs(0, 0.0);
            });
        for (auto& t : pool) t.join();
    }

    BranchAndBound finder{a, b, nx, ny};
    finder.find_witness = true;
    finder.threshold = best.load();
    finder.dfs(0, 0.0);
    if (finder.witness.empty()) {
        // The optimum is the seed chain itself (everything else was pruned
        // at equality); it is a leaf of the tree, so this cannot happen
        // unless the threshold was never attained.
        fail("SearchFailure", "no witness found at the optimal distortion");
    }
    return {best.load(), std::move(finder.witness)};
}

GHResult make_result(double value, Correspondence witness, Method method,
                     std::pair<double, double> bounds) {
    return GHResult{value, std::move(witness), method, bounds.first,
                    bounds.second};
}

}  // namespace

std::optional<GHResult> gh_shortcut(const FiniteMetricSpace& x,
                                    const FiniteMetricSpace& y,
                                    std::optional<std::size_t> beta_y) {
    const auto bounds = gh_bounds(x, y);
    const double eps = std::max(x.tol().eps_eq, y.tol().eps_eq);

    if (x.size() == 1 || y.size() == 1) {
        const double value = std::max(x.diameter(), y.diameter()) / 2.0;
        return make_result(value, Correspondence::full(x.size(), y.size()),
                           Method::shortcut_delta1, bounds);
    }

    if (x.size() == y.size()) {
        const std::size_t n = x.size();
        bool equal = true;
        for (std::size_t i = 0; i < n && equal; ++i)
            for (std::size_t j = 0; j < n && equal; ++j)
                equal = x(i, j) == y(i, j);
        if (equal)
            return make_result(0.0, Correspondence::identity(n),
                               Method::shortcut_equal, bounds);

        const double c = y(0, 1) / x(0, 1);
        bool proportional = c > 0;
        for (std::size_t i = 0; i < n && proportional; ++i)
            for (std::size_t j = 0; j < n && proportional; ++j)
                proportional = std::abs(y(i, j) - c * x(i, j)) <= eps;
        if (proportional) {
            const double value = std::abs(1.0 - c) * x.diameter() / 2.0;
            return make_result(value, Correspondence::identity(n),
                               Method::shortcut_scaling, bounds);
        }
    }

    if (beta_y && x.size() < *beta_y && x.diameter() <= y.diameter() + eps) {
        // With fewer X points than beta(Y), every irreducible correspondence
        // forces a Y-block of full diameter, so 2 d_GH = diam Y; the chain
        // realizes it.
        return make_result(y.diameter() / 2.0,
                           Correspondence(x.size(), y.size(),
                                          chain_pairs(x.size(), y.size())),
                           Method::shortcut_borsuk, bounds);
    }
    return std::nullopt;
}

GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const SolverOptions& opts) {
    if (x.size() > opts.max_points || y.size() > opts.max_points)
        fail("TooLarge", "instance exceeds max_points = " +
                             std::to_string(opts.max_points) +
                             "; only gh_bounds applies");
    if (opts.allow_shortcuts)
        if (auto shortcut = gh_shortcut(x, y)) return *shortcut;

    const bool swapped = x.size() > y.size();
    const FiniteMetricSpace& a = swapped ? y : x;
    const FiniteMetricSpace& b = swapped ? x : y;

    SearchOutcome outcome = search_min_distortion(a, b, opts.worker_count);
    std::vector<IndexPair> pairs = std::move(outcome.pairs);
    if (swapped) {
        for (auto& p : pairs) std::swap(p.first, p.second);
        std::sort(pairs.begin(), pairs.end());
    }
    return make_result(outcome.distortion / 2.0,
                       Correspondence(x.size(), y.size(), std::move(pairs)),
                       Method::search, gh_bounds(x, y));
}

GHResult gh_scaled(const GHResult& base, double lambda) {
    if (lambda < 0) fail("NegativeScale", "scale factor must be >= 0");
    GHResult out = base;
    out.value *= lambda;
    out.lower *= lambda;
    out.upper *= lambda;
    return out;
}

}  // namespace ghtk
