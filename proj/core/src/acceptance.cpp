#include "ghtk/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ghtk/borsuk.hpp"
#include "ghtk/brute.hpp"
#include "ghtk/correspondence.hpp"
#include "ghtk/generators.hpp"
#include "ghtk/io.hpp"
#include "ghtk/metric_space.hpp"
#include "ghtk/solver.hpp"

namespace ghtk::accept {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

SolverOptions search_opts(const SuiteOptions& opts) {
    SolverOptions s;
    s.allow_shortcuts = false;  // the criteria exercise the search path
    s.worker_count = opts.workers;
    return s;
}

std::uint64_t trial_seed(const SuiteOptions& opts, int criterion, int trial) {
    return rng::derive(opts.seed, static_cast<std::uint64_t>(criterion) * 100003 +
                                      static_cast<std::uint64_t>(trial));
}

/// Mixed-generator random space with n in [nmin, nmax].
FiniteMetricSpace random_space(std::uint64_t seed, std::size_t nmin,
                               std::size_t nmax) {
    rng::SplitMix64 gen(seed);
    GenSpec s;
    s.n = nmin + gen.below(nmax - nmin + 1);
    s.scale = gen.uniform(0.5, 2.0);
    s.seed = gen.next();
    switch (gen.below(5)) {
        case 0: s.kind = GenKind::euclidean; s.dim = 2; break;
        case 1: s.kind = GenKind::euclidean; s.dim = 3; break;
        case 2: s.kind = GenKind::synthetic; break;
        case 3: s.kind = GenKind::sphere_sample; break;
        default: s.kind = GenKind::polygon; break;
    }
    return generate(s);
}

/// A space with Borsuk number >= 3 and n <= nmax: random draws filtered by
/// beta, falling back to a scaled simplex (beta(Delta_k) = k) so supply is
/// guaranteed.
FiniteMetricSpace space_with_beta3(std::uint64_t seed, std::size_t nmax,
                                   std::size_t* beta_out) {
    rng::SplitMix64 gen(seed);
    if (gen.below(2) == 0) {
        const std::size_t k = 3 + gen.below(nmax - 3 + 1);
        FiniteMetricSpace y = delta_simplex(k, gen.uniform(0.5, 2.0));
        *beta_out = k;
        return y;
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        FiniteMetricSpace y = random_space(gen.next(), 3, nmax);
        const std::size_t beta = borsuk_number(y).number;
        if (beta >= 3) {
            *beta_out = beta;
            return y;
        }
    }
    FiniteMetricSpace y = delta_simplex(3, gen.uniform(0.5, 2.0));
    *beta_out = 3;
    return y;
}

/// Rescales x so diam x <= ceiling (no-op for one-point spaces).
FiniteMetricSpace shrink_below(const FiniteMetricSpace& x, double ceiling,
                               rng::SplitMix64& gen) {
    if (x.size() == 1 || x.diameter() == 0.0) return x;
    return scale(x, ceiling / x.diameter() * gen.uniform(0.3, 0.95));
}

struct Check {
    bool pass = true;
    std::size_t trials = 0;
    double worst = 0.0;
    std::string failure;

    void within(double err, double tol, const std::string& what) {
        ++trials;
        worst = std::max(worst, err);
        if (err > tol && pass) {
            pass = false;
            failure = what + " (err " + fmt(err) + " > " + fmt(tol) + ")";
        }
    }
    void require(bool ok, const std::string& what) {
        ++trials;
        if (!ok && pass) {
            pass = false;
            failure = what;
        }
    }
    CriterionResult done(const std::string& id, const std::string& alias,
                         const std::string& note = "") const {
        std::string detail = pass ? note.empty() ? "max err " + fmt(worst)
                                                 : note + "; max err " + fmt(worst)
                                  : failure;
        return CriterionResult{id, alias, pass, trials, detail};
    }
};

int trial_count(const SuiteOptions& opts, int fallback) {
    return opts.trials > 0 ? opts.trials : fallback;
}

// A1: gh_exact(Delta_1, X) = diam X / 2.
CriterionResult a1(const SuiteOptions& opts) {
    Check c;
    const FiniteMetricSpace point = delta_simplex(1);
    const int n = trial_count(opts, 200);
    for (int t = 0; t < n; ++t) {
        const FiniteMetricSpace x = random_space(trial_seed(opts, 1, t), 1, 7);
        const GHResult r = gh_exact(point, x, search_opts(opts));
        c.within(std::abs(r.value - x.diameter() / 2.0), 1e-12,
                 "one-point law failed at trial " + std::to_string(t));
    }
    return c.done("a1", "example1");
}

// A2: two-point spaces: gh = |a-b|/2 exactly, against the 7-correspondence
// exhaustive oracle.
CriterionResult a2(const SuiteOptions& opts) {
    Check c;
    const int n = trial_count(opts, 100);
    for (int t = 0; t < n; ++t) {
        rng::SplitMix64 gen(trial_seed(opts, 2, t));
        const double a = gen.uniform(0.1, 3.0), b = gen.uniform(0.1, 3.0);
        const FiniteMetricSpace x = delta_simplex(2, a), y = delta_simplex(2, b);
        const GHResult r = gh_exact(x, y, search_opts(opts));
        const double oracle = *brute::gh_distance(x, y);
        c.require(r.value == std::abs(a - b) / 2.0 && r.value == oracle,
                  "two-point law failed at trial " + std::to_string(t));
    }
    return c.done("a2", "twopoint");
}

// A3: gh_bounds sandwich with zero tolerance.
CriterionResult a3(const SuiteOptions& opts) {
    Check c;
    const int n = trial_count(opts, 200);
    for (int t = 0; t < n; ++t) {
        const FiniteMetricSpace x = random_space(trial_seed(opts, 3, 2 * t), 1, 6);
        const FiniteMetricSpace y =
            random_space(trial_seed(opts, 3, 2 * t + 1), 1, 6);
        const auto [lo, hi] = gh_bounds(x, y);
        const GHResult r = gh_exact(x, y, search_opts(opts));
        c.require(lo <= r.value && r.value <= hi,
                  "bounds violated at trial " + std::to_string(t));
    }
    return c.done("a3", "bounds");
}

// A4: symmetry (exact) and the triangle inequality of d_GH.
CriterionResult a4(const SuiteOptions& opts) {
    Check c;
    const int n = trial_count(opts, 50);
    for (int t = 0; t < n; ++t) {
        const FiniteMetricSpace x = random_space(trial_seed(opts, 4, 3 * t), 1, 5);
        const FiniteMetricSpace y =
            random_space(trial_seed(opts, 4, 3 * t + 1), 1, 5);
        const FiniteMetricSpace z =
            random_space(trial_seed(opts, 4, 3 * t + 2), 1, 5);
        const SolverOptions so = search_opts(opts);
        const double dxy = gh_exact(x, y, so).value;
        const double dyx = gh_exact(y, x, so).value;
        const double dxz = gh_exact(x, z, so).value;
        const double dyz = gh_exact(y, z, so).value;
        c.require(dxy == dyx, "symmetry failed at trial " + std::to_string(t));
        c.within(std::max(0.0, dxz - dxy - dyz), 1e-9,
                 "triangle inequality failed at trial " + std::to_string(t));
    }
    return c.done("a4", "pseudometric");
}

// A5: gh(lambda X, lambda Y) = lambda gh(X, Y).
CriterionResult a5(const SuiteOptions& opts) {
    Check c;
    const int n = trial_count(opts, 50);
    for (int t = 0; t < n; ++t) {
        const FiniteMetricSpace x = random_space(trial_seed(opts, 5, 2 * t), 1, 5);
        const FiniteMetricSpace y =
            random_space(trial_seed(opts, 5, 2 * t + 1), 1, 5);
        const SolverOptions so = search_opts(opts);
        const double base = gh_exact(x, y, so).value;
        for (double lambda : {0.5, 2.0, 3.0}) {
            const double scaled =
                gh_exact(scale(x, lambda), scale(y, lambda), so).value;
            c.within(std::abs(scaled - lambda * base), 1e-9,
                     "scaling equivariance failed at trial " + std::to_string(t));
        }
    }
    return c.done("a5", "scaling");
}

// A6: gh(lambda X, mu X) = |lambda - mu| diam X / 2.
CriterionResult a6(const SuiteOptions& opts) {
    Check c;
    const int n = trial_count(opts, 30);
    const double factors[] = {0.0, 0.5, 1.0, 2.0};
    for (int t = 0; t < n; ++t) {
        const FiniteMetricSpace x = random_space(trial_seed(opts, 6, t), 1, 5);
        const SolverOptions so = search_opts(opts);
        for (double lambda : factors)
            for (double mu : factors) {
                const double got =
                    gh_exact(scale(x, lambda), scale(x, mu), so).value;
                c.within(std::abs(got - std::abs(lambda - mu) * x.diameter() / 2.0),
                         1e-9, "dilation law failed at trial " + std::to_string(t));
            }
    }
    return c.done("a6", "example4");
}

// A7: #X < beta(Y), diam X <= diam Y  =>  2 gh(X, Y) = diam Y.
CriterionResult a7(const SuiteOptions& opts) {
    Check c;
    const int n = trial_count(opts, 100);
    for (int t = 0; t < n; ++t) {
        rng::SplitMix64 gen(trial_seed(opts, 7, t));
        std::size_t beta = 0;
        const FiniteMetricSpace y = space_with_beta3(gen.next(), 7, &beta);
        const std::size_t nx = 1 + gen.below(beta - 1);
        const FiniteMetricSpace x =
            shrink_below(random_space(gen.next(), nx, nx), y.diameter(), gen);
        const GHResult r = gh_exact(x, y, search_opts(opts));
        c.within(std::abs(r.value - y.diameter() / 2.0), 1e-12,
                 "borsuk-regime law failed at trial " + std::to_string(t));
    }
    return c.done("a7", "thm4");
}

// A8: partition dichotomy against 2 gh(lambda Delta_m, X).
CriterionResult a8(const SuiteOptions& opts) {
    Check c;
    const int n = trial_count(opts, 100);
    for (int t = 0; t < n; ++t) {
        rng::SplitMix64 gen(trial_seed(opts, 8, t));
        const FiniteMetricSpace x = random_space(gen.next(), 2, 7);
        const std::size_t m = 2 + gen.below(x.size() - 1);
        const double lambda = x.diameter() * gen.uniform(0.1, 0.9);
        const bool partition = can_partition_smaller(x, m).first;
        const double two =
            2.0 * gh_exact(delta_simplex(m, lambda), x, search_opts(opts)).value;
        c.require(partition == (two < x.diameter() - 1e-12),
                  "dichotomy failed at trial " + std::to_string(t));
        if (!partition)
            c.within(std::abs(two - x.diameter()), 1e-12,
                     "equality clause failed at trial " + std::to_string(t));
    }
    return c.done("a8", "thm3");
}

// A9: diameter-graph reduction vs exhaustive partition search.
CriterionResult a9(const SuiteOptions& opts) {
    Check c;
    const int n = trial_count(opts, 50);
    for (int t = 0; t < n; ++t) {
        const FiniteMetricSpace x = random_space(trial_seed(opts, 9, t), 2, 7);
        c.require(borsuk_number(x).number == brute::borsuk_number(x),
                  "reduction mismatch at trial " + std::to_string(t));
    }
    return c.done("a9", "borsuk-oracle");
}

// A10: beta(Delta_m) = m.
CriterionResult a10(const SuiteOptions& opts) {
    Check c;
    (void)opts;
    for (std::size_t m = 2; m <= 8; ++m)
        c.require(borsuk_number(delta_simplex(m, 1.0)).number == m,
                  "beta(Delta_" + std::to_string(m) + ") != " + std::to_string(m));
    return c.done("a10", "simplex");
}

// A11: 2 gh(lambda Delta_m, Y) = diam Y propagates to any smaller X.
CriterionResult a11(const SuiteOptions& opts) {
    Check c;
    const int n = trial_count(opts, 30);
    for (int t = 0; t < n; ++t) {
        rng::SplitMix64 gen(trial_seed(opts, 11, t));
        std::size_t beta = 0;
        const FiniteMetricSpace y = space_with_beta3(gen.next(), 6, &beta);
        const std::size_t m = 2 + (beta > 3 ? gen.below(beta - 2) : 0);  // < beta
        const double lambda = y.diameter() * gen.uniform(0.1, 0.9);
        const SolverOptions so = search_opts(opts);
        const double premise =
            2.0 * gh_exact(delta_simplex(m, lambda), y, so).value;
        c.within(std::abs(premise - y.diameter()), 1e-12,
                 "premise failed at trial " + std::to_string(t));
        const std::size_t nx = 1 + gen.below(m - 1);
        const FiniteMetricSpace x =
            shrink_below(random_space(gen.next(), nx, nx), y.diameter(), gen);
        c.within(std::abs(2.0 * gh_exact(x, y, so).value - y.diameter()), 1e-12,
                 "conclusion failed at trial " + std::to_string(t));
    }
    return c.done("a11", "cor4");
}

// A12: gh(X, lambda Delta_{#X+1}) = lambda / 2 for lambda >= diam X; the
// printed closed form in the source material says lambda, off by 2.
CriterionResult a12(const SuiteOptions& opts) {
    Check c;
    const int n = trial_count(opts, 20);
    std::size_t oracle_hits = 0;
    for (int t = 0; t < n; ++t) {
        rng::SplitMix64 gen(trial_seed(opts, 12, t));
        const FiniteMetricSpace x = random_space(gen.next(), 2, 5);
        const std::size_t m = x.size() + 1;
        for (double lambda : {x.diameter(), 2.0 * x.diameter()}) {
            const FiniteMetricSpace simplex = delta_simplex(m, lambda);
            const GHResult r = gh_exact(x, simplex, search_opts(opts));
            c.within(std::abs(r.value - lambda / 2.0), 1e-12,
                     "half-lambda law failed at trial " + std::to_string(t));
            if (auto oracle = brute::gh_distance(x, simplex, 1'000'000)) {
                ++oracle_hits;
                c.require(*oracle == r.value,
                          "exhaustive oracle disagrees at trial " +
                              std::to_string(t));
            }
        }
    }
    return c.done("a12", "cor1",
                  "value is lambda/2, factor 2 below the printed closed form; "
                  "oracle cross-checked " + std::to_string(oracle_hits) +
                      " instances");
}

std::uint64_t choose(std::size_t n, std::size_t k) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

// Leaf counts of the canonical enumeration tree, used to draw uniformly
// random irreducible correspondences.
std::uint64_t decomposition_count(std::size_t unused, std::size_t remaining,
                                  std::size_t extensible,
                                  std::map<std::uint64_t, std::uint64_t>& memo) {
    if (remaining == 0) return unused == 0 ? 1 : 0;
    const std::uint64_t key =
        (static_cast<std::uint64_t>(unused) << 32) |
        (static_cast<std::uint64_t>(remaining) << 16) | extensible;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total =
        extensible * decomposition_count(unused, remaining - 1, extensible, memo);
    if (unused >= 1)
        total += unused *
                 decomposition_count(unused - 1, remaining - 1, extensible + 1, memo);
    for (std::size_t s = 2; s <= unused; ++s)
        total += choose(unused, s) *
                 decomposition_count(unused - s, remaining - 1, extensible, memo);
    memo[key] = total;
    return total;
}

BlockDecomposition random_irreducible(std::size_t nx, std::size_t ny,
                                      rng::SplitMix64& gen) {
    std::map<std::uint64_t, std::uint64_t> memo;
    std::vector<Block> blocks;
    std::vector<std::size_t> extensible;
    std::vector<std::uint32_t> unused(nx);
    for (std::uint32_t i = 0; i < nx; ++i) unused[i] = i;

    for (std::uint32_t y = 0; y < ny; ++y) {
        const std::size_t remaining = ny - y;
        std::uint64_t ticket = gen.below(decomposition_count(
            unused.size(), remaining, extensible.size(), memo));
        bool placed = false;

        const std::uint64_t w_attach = decomposition_count(
            unused.size(), remaining - 1, extensible.size(), memo);
        for (std::size_t bi : extensible) {
            if (ticket < w_attach) {
                blocks[bi].ys.push_back(y);
                placed = true;
                break;
            }
            ticket -= w_attach;
        }
        if (placed) continue;

        const std::uint64_t w_open = decomposition_count(
            unused.size() - 1, remaining - 1, extensible.size() + 1, memo);
        for (std::size_t k = 0; k < unused.size() && !placed; ++k) {
            if (ticket < w_open) {
                blocks.push_back(Block{{unused[k]}, {y}});
                extensible.push_back(blocks.size() - 1);
                unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(k));
                placed = true;
                break;
            }
            ticket -= w_open;
        }
        if (placed) continue;

        for (std::size_t s = 2; s <= unused.size() && !placed; ++s) {
            const std::uint64_t w_block = decomposition_count(
                unused.size() - s, remaining - 1, extensible.size(), memo);
            const std::uint64_t w_size = choose(unused.size(), s) * w_block;
            if (ticket >= w_size) {
                ticket -= w_size;
                continue;
            }
            // Uniform s-subset of the unused x's.
            Block b{{}, {y}};
            std::vector<std::uint32_t> pool = unused;
            for (std::size_t pick = 0; pick < s; ++pick) {
                const std::size_t at = gen.below(pool.size());
                b.xs.push_back(pool[at]);
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
            }
            std::sort(b.xs.begin(), b.xs.end());
            for (std::uint32_t used : b.xs)
                unused.erase(std::find(unused.begin(), unused.end(), used));
            blocks.push_back(std::move(b));
            placed = true;
        }
        if (!placed) fail("SearchFailure", "random decomposition draw failed");
    }
    return BlockDecomposition(nx, ny, std::move(blocks));
}

// A13: block-formula distortion equals the pair-set distortion, exactly.
CriterionResult a13(const SuiteOptions& opts) {
    Check c;
    const int n = trial_count(opts, 500);
    for (int t = 0; t < n; ++t) {
        rng::SplitMix64 gen(trial_seed(opts, 13, t));
        const FiniteMetricSpace x = random_space(gen.next(), 1, 6);
        const FiniteMetricSpace y = random_space(gen.next(), 1, 6);
        const BlockDecomposition b = random_irreducible(x.size(), y.size(), gen);
        c.require(block_distortion(x, y, b) == distortion(x, y, b.induced()),
                  "block formula mismatch at trial " + std::to_string(t));
    }
    return c.done("a13", "prop4");
}

// A14: values and witnesses are identical for 1 and 4 workers, and the JSON
// verify report is byte-identical for identical seeds.
CriterionResult a14(const SuiteOptions& opts) {
    Check c;
    SolverOptions one = search_opts(opts);
    one.worker_count = 1;
    SolverOptions four = search_opts(opts);
    four.worker_count = 4;

    const int n = trial_count(opts, 15);
    for (int t = 0; t < n; ++t) {
        rng::SplitMix64 gen(trial_seed(opts, 14, t));
        const FiniteMetricSpace x = random_space(gen.next(), 1, 6);
        FiniteMetricSpace y = random_space(gen.next(), 1, 6);
        if (t % 3 == 0 && x.diameter() > 0)  // tie-heavy simplex instances
            y = delta_simplex(x.size() + 1, x.diameter());
        const GHResult r1 = gh_exact(x, y, one);
        const GHResult r4 = gh_exact(x, y, four);
        c.require(r1.value == r4.value,
                  "value differs across workers at trial " + std::to_string(t));
        c.require(r1.witness->pairs() == r4.witness->pairs(),
                  "witness differs across workers at trial " + std::to_string(t));
    }

    SuiteOptions sub = opts;
    sub.trials = 10;
    const std::string r1 = report_to_json(run_suite("a5", sub), sub);
    const std::string r2 = report_to_json(run_suite("a5", sub), sub);
    c.require(r1 == r2, "verify report not byte-identical across reruns");
    return c.done("a14", "determinism");
}

struct Entry {
    const char* id;
    const char* alias;
    CriterionResult (*run)(const SuiteOptions&);
};

constexpr Entry kEntries[] = {
    {"a1", "example1", a1},   {"a2", "twopoint", a2},
    {"a3", "bounds", a3},     {"a4", "pseudometric", a4},
    {"a5", "scaling", a5},    {"a6", "example4", a6},
    {"a7", "thm4", a7},       {"a8", "thm3", a8},
    {"a9", "borsuk-oracle", a9}, {"a10", "simplex", a10},
    {"a11", "cor4", a11},     {"a12", "cor1", a12},
    {"a13", "prop4", a13},    {"a14", "determinism", a14},
};

}  // namespace

std::vector<std::string> criterion_ids() {
    std::vector<std::string> ids;
    for (const auto& e : kEntries) ids.push_back(e.id);
    return ids;
}

std::vector<CriterionResult> run_suite(const std::string& name,
                                       const SuiteOptions& opts) {
    std::vector<CriterionResult> results;
    if (name == "all") {
        for (const auto& e : kEntries) results.push_back(e.run(opts));
        return results;
    }
    for (const auto& e : kEntries)
        if (name == e.id || name == e.alias) {
            results.push_back(e.run(opts));
            return results;
        }
    fail("UnknownSuite", "no verification suite named '" + name + "'");
}

std::string report_to_json(const std::vector<CriterionResult>& results,
                           const SuiteOptions& opts) {
    nlohmann::json doc;
    doc["seed"] = opts.seed;
    doc["workers"] = opts.workers;
    doc["trials"] = opts.trials;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json item;
        item["id"] = r.id;
        item["alias"] = r.alias;
        item["pass"] = r.pass;
        item["trials"] = r.trials;
        item["detail"] = r.detail;
        list.push_back(std::move(item));
    }
    doc["criteria"] = std::move(list);
    return doc.dump(2) + "\n";
}

std::string report_to_text(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    for (const auto& r : results)
        out << r.id << " (" << r.alias << "): " << (r.pass ? "PASS" : "FAIL")
            << " [" << r.trials << " checks] " << r.detail << "\n";
    return out.str();
}

}  // namespace ghtk::accept
