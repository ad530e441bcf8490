#include "ghtk/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace ghtk {

const char* gen_kind_name(GenKind k) {
    switch (k) {
        case GenKind::euclidean: return "euclidean";
        case GenKind::synthetic: return "synthetic";
        case GenKind::polygon: return "polygon";
        case GenKind::sphere_sample: return "sphere-sample";
        case GenKind::simplex: return "simplex";
    }
    return "unknown";
}

namespace {

GenKind kind_from_name(const std::string& name) {
    if (name == "euclidean") return GenKind::euclidean;
    if (name == "synthetic") return GenKind::synthetic;
    if (name == "polygon") return GenKind::polygon;
    if (name == "sphere-sample" || name == "sphere") return GenKind::sphere_sample;
    if (name == "simplex") return GenKind::simplex;
    fail("InvalidSpec", "unknown generator kind '" + name + "'");
}

bool has_dim(GenKind k) {
    return k == GenKind::euclidean || k == GenKind::sphere_sample;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, sep)) out.push_back(field);
    return out;
}

FiniteMetricSpace from_points(const std::vector<std::vector<double>>& points,
                              double scale) {
    const std::size_t n = points.size();
    std::vector<double> flat(n * n, 0.0);
    double max_d = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double sq = 0.0;
            for (std::size_t k = 0; k < points[i].size(); ++k) {
                const double d = points[i][k] - points[j][k];
                sq += d * d;
            }
            const double d = scale * std::sqrt(sq);
            flat[i * n + j] = flat[j * n + i] = d;
            max_d = std::max(max_d, d);
        }
    return FiniteMetricSpace::unchecked(std::move(flat), n, {},
                                        ToleranceConfig::relative_to(max_d));
}

FiniteMetricSpace gen_euclidean(const GenSpec& s) {
    rng::SplitMix64 gen(rng::derive(s.seed, 11));
    std::vector<std::vector<double>> points(s.n, std::vector<double>(s.dim));
    for (auto& p : points)
        for (auto& c : p) c = gen.uniform01();
    return from_points(points, s.scale);
}

FiniteMetricSpace gen_sphere(const GenSpec& s) {
    rng::SplitMix64 gen(rng::derive(s.seed, 13));
    const std::size_t n = s.n;
    std::vector<std::vector<double>> points(n, std::vector<double>(3));
    for (auto& p : points) {
        // Gaussian via Box-Muller, then normalize onto the unit 2-sphere.
        double norm = 0.0;
        do {
            for (std::size_t k = 0; k < 3; k += 2) {
                const double u1 = std::max(gen.uniform01(), 1e-300);
                const double u2 = gen.uniform01();
                const double r = std::sqrt(-2.0 * std::log(u1));
                p[k] = r * std::cos(2.0 * std::numbers::pi * u2);
                if (k + 1 < 3) p[k + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
            }
            norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        } while (norm < 1e-9);
        for (auto& c : p) c /= norm;
    }
    std::vector<double> flat(n * n, 0.0);
    double max_d = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < 3; ++k) dot += points[i][k] * points[j][k];
            const double d = s.scale * std::acos(std::clamp(dot, -1.0, 1.0));
            flat[i * n + j] = flat[j * n + i] = d;
            max_d = std::max(max_d, d);
        }
    return FiniteMetricSpace::unchecked(std::move(flat), n, {},
                                        ToleranceConfig::relative_to(max_d));
}

FiniteMetricSpace gen_synthetic(const GenSpec& s) {
    rng::SplitMix64 gen(rng::derive(s.seed, 17));
    const std::size_t n = s.n;
    Matrix m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m[i][j] = gen.uniform(0.5, 1.5) * s.scale;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            m[i][j] = m[j][i] = (m[i][j] + m[j][i]) / 2.0;
    // All-pairs shortest-path closure repairs the triangle inequality.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = std::min(m[i][j], m[i][k] + m[k][j]);
    std::vector<double> flat(n * n);
    double max_d = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            flat[i * n + j] = m[i][j];
            max_d = std::max(max_d, m[i][j]);
        }
    return FiniteMetricSpace::unchecked(std::move(flat), n, {},
                                        ToleranceConfig::relative_to(max_d));
}

FiniteMetricSpace gen_polygon(const GenSpec& s) {
    const std::size_t n = s.n;
    if (n == 1) return delta_simplex(1);
    if (n == 2) return delta_simplex(2, s.scale);
    // Regular n-gon with side length = scale; chord metric.
    const double radius = s.scale / (2.0 * std::sin(std::numbers::pi / n));
    std::vector<std::vector<double>> points(n, std::vector<double>(2));
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / n;
        points[i][0] = radius * std::cos(angle);
        points[i][1] = radius * std::sin(angle);
    }
    return from_points(points, 1.0);
}

}  // namespace

GenSpec parse_gen_spec(const std::string& text) {
    const auto fields = split(text, ':');
    if (fields.size() < 2) fail("InvalidSpec", "expected kind:n[:dim][:scale][:seed]");
    GenSpec s;
    s.kind = kind_from_name(fields[0]);
    try {
        std::size_t at = 1;
        s.n = std::stoull(fields[at++]);
        if (has_dim(s.kind) && at < fields.size()) s.dim = std::stoull(fields[at++]);
        if (at < fields.size()) s.scale = std::stod(fields[at++]);
        if (at < fields.size()) s.seed = std::stoull(fields[at++]);
        if (at < fields.size()) fail("InvalidSpec", "too many fields in '" + text + "'");
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail("InvalidSpec", "malformed generator spec '" + text + "'");
    }
    if (s.n < 1) fail("InvalidSpec", "n must be >= 1");
    if (has_dim(s.kind) && s.dim < 1) fail("InvalidSpec", "dim must be >= 1");
    if (!(s.scale > 0)) fail("InvalidSpec", "scale must be > 0");
    return s;
}

std::string gen_spec_to_string(const GenSpec& spec) {
    std::ostringstream out;
    out << gen_kind_name(spec.kind) << ':' << spec.n;
    if (has_dim(spec.kind)) out << ':' << spec.dim;
    out << ':' << spec.scale << ':' << spec.seed;
    return out.str();
}

FiniteMetricSpace generate(const GenSpec& spec) {
    if (spec.n < 1) fail("InvalidSpec", "n must be >= 1");
    if (spec.n == 1) return delta_simplex(1);
    switch (spec.kind) {
        case GenKind::euclidean: return gen_euclidean(spec);
        case GenKind::synthetic: return gen_synthetic(spec);
        case GenKind::polygon: return gen_polygon(spec);
        case GenKind::sphere_sample: return gen_sphere(spec);
        case GenKind::simplex: return delta_simplex(spec.n, spec.scale);
    }
    fail("InvalidSpec", "unhandled generator kind");
}

}  // namespace ghtk
