#include "ghtk/borsuk.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace ghtk {

DiameterGraph diameter_graph(const FiniteMetricSpace& x,
                             const ToleranceConfig& tol) {
    if (x.size() < 2) fail("SinglePoint", "diameter graph needs >= 2 points");
    if (x.size() > 64) fail("TooLarge", "diameter graph supports n <= 64");
    DiameterGraph g;
    g.n = x.size();
    g.diam = x.diameter();
    g.adj.assign(g.n, 0);
    const double cutoff = tol.eps_eq * g.diam;
    for (std::uint32_t i = 0; i < g.n; ++i)
        for (std::uint32_t j = i + 1; j < g.n; ++j)
            if (g.diam - x(i, j) <= cutoff) {
                g.edges.push_back({i, j});
                g.adj[i] |= std::uint64_t{1} << j;
                g.adj[j] |= std::uint64_t{1} << i;
            }
    return g;
}

DiameterGraph diameter_graph(const FiniteMetricSpace& x) {
    return diameter_graph(x, x.tol());
}

namespace {

// Greedy clique on a highest-degree-first ordering; a lower bound for the
// chromatic number.
std::size_t clique_bound(const DiameterGraph& g) {
    std::vector<std::uint32_t> order(g.n);
    for (std::uint32_t i = 0; i < g.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const int da = std::popcount(g.adj[a]), db = std::popcount(g.adj[b]);
        return da != db ? da > db : a < b;
    });
    std::uint64_t clique = 0;
    std::size_t size = 0;
    for (std::uint32_t v : order)
        if ((clique & ~g.adj[v]) == 0) {
            clique |= std::uint64_t{1} << v;
            ++size;
        }
    return size;
}

// Backtracking k-colorability with saturation-degree vertex selection and
// color-symmetry breaking (a new color may only be opened in order).
bool color_rec(const DiameterGraph& g, std::size_t k, std::vector<int>& color,
               std::size_t colored, std::size_t used) {
    if (colored == g.n) return true;

    std::uint32_t pick = 0;
    int best_sat = -1, best_deg = -1;
    for (std::uint32_t v = 0; v < g.n; ++v) {
        if (color[v] >= 0) continue;
        std::uint64_t neighbor_colors = 0;
        for (std::uint32_t u = 0; u < g.n; ++u)
            if ((g.adj[v] >> u & 1) && color[u] >= 0)
                neighbor_colors |= std::uint64_t{1} << color[u];
        const int sat = std::popcount(neighbor_colors);
        const int deg = std::popcount(g.adj[v]);
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
            best_sat = sat;
            best_deg = deg;
            pick = v;
        }
    }

    const std::size_t limit = std::min(k, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
        bool ok = true;
        for (std::uint32_t u = 0; u < g.n && ok; ++u)
            if ((g.adj[pick] >> u & 1) && color[u] == static_cast<int>(c))
                ok = false;
        if (!ok) continue;
        color[pick] = static_cast<int>(c);
        if (color_rec(g, k, color, colored + 1, std::max(used, c + 1)))
            return true;
        color[pick] = -1;
    }
    return false;
}

std::optional<std::vector<int>> k_coloring(const DiameterGraph& g, std::size_t k) {
    std::vector<int> color(g.n, -1);
    if (color_rec(g, k, color, 0, 0)) return color;
    return std::nullopt;
}

PartitionOf classes_to_partition(std::size_t n, const std::vector<int>& color,
                                 std::size_t k) {
    std::vector<IndexSet> blocks(k);
    for (std::size_t v = 0; v < n; ++v) blocks[color[v]].push_back(v);
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const IndexSet& b) { return b.empty(); }),
                 blocks.end());
    return PartitionOf(n, blocks);
}

}  // namespace

BorsukResult borsuk_number(const FiniteMetricSpace& x) {
    const DiameterGraph g = diameter_graph(x);
    const std::size_t lb = std::max<std::size_t>(2, clique_bound(g));
    for (std::size_t k = lb; k <= g.n; ++k) {
        auto color = k_coloring(g, k);
        if (!color) continue;
        PartitionOf witness = classes_to_partition(g.n, *color, k);
        const double inner = partition_diameter(x, witness);
        return BorsukResult{witness.block_count(), std::move(witness),
                            g.diam - inner, g.diam};
    }
    fail("SearchFailure", "no proper coloring found up to n colors");
}

std::pair<bool, std::optional<PartitionOf>> can_partition_smaller(
    const FiniteMetricSpace& x, std::size_t m) {
    if (x.size() < 2) fail("SinglePoint", "need >= 2 points");
    if (m < 2 || m > x.size())
        fail("CardinalOutOfRange",
             "m must satisfy 2 <= m <= #X, got " + std::to_string(m));
    BorsukResult beta = borsuk_number(x);
    if (m < beta.number) return {false, std::nullopt};

    // Split witness blocks into singletons until exactly m parts remain
    // "strictly smaller"; subsets of valid blocks stay valid.
    std::vector<IndexSet> blocks = beta.witness.blocks();
    while (blocks.size() < m) {
        auto big = std::find_if(blocks.begin(), blocks.end(),
                                [](const IndexSet& b) { return b.size() > 1; });
        IndexSet peeled{big->back()};
        big->pop_back();
        blocks.push_back(std::move(peeled));
    }
    return {true, PartitionOf(x.size(), blocks)};
}

ConsistencyReport generalized_borsuk_via_gh(const FiniteMetricSpace& x,
                                            std::size_t m, double lambda,
                                            const SolverOptions& opts) {
    if (x.size() < 2) fail("SinglePoint", "need >= 2 points");
    if (m < 2 || m > x.size())
        fail("CardinalOutOfRange",
             "m must satisfy 2 <= m <= #X, got " + std::to_string(m));
    if (!(lambda > 0) || !(lambda < x.diameter()))
        fail("LambdaOutOfRange", "need 0 < lambda < diam X");

    ConsistencyReport report;
    report.m = m;
    report.lambda = lambda;
    report.diam = x.diameter();
    report.partition_exists = can_partition_smaller(x, m).first;

    const FiniteMetricSpace simplex = delta_simplex(m, lambda);
    report.two_d_gh = 2.0 * gh_exact(simplex, x, opts).value;

    const double eps = x.tol().eps_eq;
    const bool strictly_less = report.two_d_gh < report.diam - eps;
    report.biconditional_holds = report.partition_exists == strictly_less;
    if (!report.partition_exists)
        report.equality_holds = std::abs(report.two_d_gh - report.diam) <= eps;
    return report;
}

bool is_dls_n(const FiniteMetricSpace& x, std::size_t n) {
    if (x.size() < 2) fail("SinglePoint", "need >= 2 points");
    if (n < 1) fail("CardinalOutOfRange", "n must be >= 1");
    return borsuk_number(x).number > n;
}

}  // namespace ghtk
