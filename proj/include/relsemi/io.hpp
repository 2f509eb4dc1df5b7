// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "relsemi/relation.hpp"

namespace relsemi::io {

using Json = nlohmann::ordered_json;

/// {ambient_dim, field, basis_real, basis_imag, rank_tol}; arrays are
/// column-major flattenings of the basis.
Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

/// {state_dim, field, graph}. On input, {state_dim, matrix_real[, matrix_imag]}
/// (row-major, or a list of rows) is also accepted and read as graph(matrix).
Json to_json(const LinearRelation& a);
LinearRelation relation_from_json(const Json& j);

/// Plain number array, or {real: [...], imag: [...]}.
Vector vector_from_json(const Json& j);

/// A list of rows, or {real: rows, imag: rows}.
Matrix matrix_from_json(const Json& j);

/// "a:step:b" (inclusive of b up to rounding) or a single number. Throws
/// ConfigError on a malformed or empty grid.
std::vector<double> parse_grid(const std::string& spec);

/// Parses a file; throws ConfigError with the path and parser message.
Json read_json(const std::filesystem::path& path);

/// Writes `content` to a temporary sibling and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Deterministic number formatting (17 significant digits, "inf", "nan").
std::string fmt(double v);

/// CSV text: a '#'-prefixed schema line, a header row, then the rows.
std::string csv(const std::string& schema, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Static SVG line chart with labeled axes; `log_y` plots log10 of positive values.
std::string svg_line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<Series>& series, bool log_y = false);

}  // namespace relsemi::io
