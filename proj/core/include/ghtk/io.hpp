#pragma once

#include <optional>
#include <string>

#include "ghtk/borsuk.hpp"
#include "ghtk/correspondence.hpp"
#include "ghtk/metric_space.hpp"
#include "ghtk/solver.hpp"

namespace ghtk::io {

/// JSON document: { "labels": [...], "dist": [[...], ...] } (labels optional).
FiniteMetricSpace parse_matrix_json(const std::string& text,
                                    std::optional<ToleranceConfig> tol = {});

/// CSV: n lines of n comma-separated numbers, optional label header line.
FiniteMetricSpace parse_matrix_csv(const std::string& text,
                                   std::optional<ToleranceConfig> tol = {});

/// Loads by extension (.json / .csv); anything else tries JSON, then CSV.
FiniteMetricSpace load_space(const std::string& path,
                             std::optional<ToleranceConfig> tol = {});

std::string matrix_to_json(const FiniteMetricSpace& x);
std::string matrix_to_csv(const FiniteMetricSpace& x);

/// JSON array of [i, j] pairs, sorted lexicographically.
std::string correspondence_to_json(const Correspondence& r);

/// { "value", "method", "lower", "upper", "witness" }.
std::string gh_result_to_json(const GHResult& r);

/// { "beta", "witness", "epsilon", "diam" }.
std::string borsuk_result_to_json(const BorsukResult& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ghtk::io
