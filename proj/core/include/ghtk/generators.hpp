#pragma once

#include <cstdint>
#include <string>

#include "ghtk/metric_space.hpp"

namespace ghtk {

enum class GenKind { euclidean, synthetic, polygon, sphere_sample, simplex };

const char* gen_kind_name(GenKind k);

/// Deterministic test-space recipe. CLI string form:
/// kind:n[:dim][:scale][:seed] (dim only for euclidean / sphere-sample).
struct GenSpec {
    GenKind kind = GenKind::euclidean;
    std::size_t n = 1;
    std::size_t dim = 3;
    double scale = 1.0;
    std::uint64_t seed = 0;
};

GenSpec parse_gen_spec(const std::string& text);
std::string gen_spec_to_string(const GenSpec& spec);

/// Deterministic for a fixed spec; the output always passes validate_metric.
FiniteMetricSpace generate(const GenSpec& spec);

namespace rng {

/// splitmix64: portable, seedable, splittable by rehashing. All randomized
/// paths in the project draw from this generator for cross-platform
/// reproducibility.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Bounded integer via rejection-free scaling (bias negligible here).
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

/// Derives an independent stream from a seed and a stream tag.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) {
    SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
    mix.next();
    return mix.next();
}

}  // namespace rng

}  // namespace ghtk
