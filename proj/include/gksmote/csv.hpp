/*
 * Copyright 2026 The gksmote authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gksmote/dataset.hpp"
#include "gksmote/error.hpp"

// CSV ingestion and export. Dialect: comma-separated, optional header row
// auto-detected by a non-numeric first row. Export appends a `label` column
// (0 = majority, 1 = minority) and an `origin` column (real/synthetic); the
// loader recognizes a column named `origin` and reads it back as metadata.

namespace gksmote {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::optional<double> parse_double(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

/// Shortest lossless-enough fixed formatting: 17 significant digits
/// round-trips any double, so rerunning a manifest reproduces files byte
/// for byte.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  std::stringstream ss(line);
  while (std::getline(ss, cur, ',')) cells.push_back(trim(cur));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace detail

struct LoadOptions {
  // Column name, 0-based index, "last", or "auto" (a header column named
  // `label` when present, the last column otherwise).
  std::string label_column = "auto";
  std::string minority_value;  // empty -> least frequent label value
  bool normalize = true;       // min-max scale features to [0, 1]
  std::string name;            // defaults to the file stem
};

inline Dataset load_csv(const std::string& path, const LoadOptions& opts = {}) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");

  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    rows.push_back(detail::split_row(line));
  }
  if (rows.empty()) throw SchemaError("'" + path + "' has no rows");

  const std::size_t arity = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != arity) {
      throw SchemaError("row " + std::to_string(r + 1) + " has " +
                        std::to_string(rows[r].size()) + " cells, expected " +
                        std::to_string(arity));
    }
  }
  if (arity < 2) throw SchemaError("need at least one feature column and a label column");

  // Resolve the label column: a name forces header mode; an integer or
  // "last" selects by position; "auto" prefers a header column named
  // `label` and falls back to the last column.
  std::optional<std::size_t> label_idx;
  bool name_mode = false;
  if (opts.label_column == "auto") {
    label_idx = arity - 1;
    for (std::size_t c = 0; c < arity; ++c) {
      if (rows[0][c] == "label") {
        label_idx = c;
        break;
      }
    }
  } else if (opts.label_column == "last") {
    label_idx = arity - 1;
  } else if (auto as_int = detail::parse_double(opts.label_column);
             as_int && *as_int >= 0 && *as_int == std::floor(*as_int)) {
    label_idx = static_cast<std::size_t>(*as_int);
    if (*label_idx >= arity) {
      throw SchemaError("label column index " + opts.label_column +
                        " out of range for " + std::to_string(arity) + " columns");
    }
  } else {
    name_mode = true;
  }

  bool has_header = false;
  if (name_mode) {
    for (std::size_t c = 0; c < arity; ++c) {
      if (rows[0][c] == opts.label_column) {
        label_idx = c;
        break;
      }
    }
    if (!label_idx) {
      throw SchemaError("label column '" + opts.label_column + "' not found in header");
    }
    has_header = true;
  } else {
    for (std::size_t c = 0; c < arity; ++c) {
      if (c == *label_idx) continue;
      if (!detail::parse_double(rows[0][c])) {
        has_header = true;
        break;
      }
    }
  }

  std::optional<std::size_t> origin_idx;
  std::vector<std::string> feature_names;
  if (has_header) {
    for (std::size_t c = 0; c < arity; ++c) {
      if (c == *label_idx) continue;
      if (rows[0][c] == "origin") {
        origin_idx = c;
      } else {
        feature_names.push_back(rows[0][c]);
      }
    }
  }
  const std::size_t first_data = has_header ? 1 : 0;
  if (first_data >= rows.size()) throw SchemaError("'" + path + "' has a header but no data rows");

  // Pick the minority label value when the caller did not name one: least
  // frequent, ties to the lexicographically smaller value.
  std::string minority_value = opts.minority_value;
  if (minority_value.empty()) {
    std::map<std::string, std::size_t> counts;
    for (std::size_t r = first_data; r < rows.size(); ++r) ++counts[rows[r][*label_idx]];
    if (counts.size() < 2) throw EmptyClassError("label column holds a single value");
    minority_value = counts.begin()->first;
    for (const auto& [value, count] : counts) {
      if (count < counts.at(minority_value)) minority_value = value;
    }
  }

  std::vector<LabeledPoint> points;
  std::size_t n_minority = 0;
  for (std::size_t r = first_data; r < rows.size(); ++r) {
    LabeledPoint p;
    for (std::size_t c = 0; c < arity; ++c) {
      if (c == *label_idx) continue;
      if (origin_idx && c == *origin_idx) {
        const std::string& cell = rows[r][c];
        if (cell == "synthetic") {
          p.origin = Origin::synthetic;
        } else if (cell == "real") {
          p.origin = Origin::real;
        } else {
          throw ParseError("row " + std::to_string(r + 1) + ", column " +
                           std::to_string(c + 1) + ": origin value '" + cell +
                           "' is neither 'real' nor 'synthetic'");
        }
        continue;
      }
      auto v = detail::parse_double(rows[r][c]);
      if (!v || !std::isfinite(*v)) {
        throw ParseError("row " + std::to_string(r + 1) + ", column " +
                         std::to_string(c + 1) + ": cannot parse '" + rows[r][c] +
                         "' as a finite number");
      }
      p.features.push_back(*v);
    }
    p.label = (rows[r][*label_idx] == minority_value) ? Label::minority : Label::majority;
    if (p.label == Label::minority) ++n_minority;
    points.push_back(std::move(p));
  }

  if (n_minority == 0) throw EmptyClassError("no row carries the minority value '" + minority_value + "'");
  if (n_minority == points.size()) throw EmptyClassError("every row carries the minority value '" + minority_value + "'");

  DatasetMeta meta;
  meta.feature_names = std::move(feature_names);
  // Loader convention: the less frequent class is `minority`. If the caller
  // designated the more frequent one, swap and flag it.
  if (2 * n_minority > points.size()) {
    for (auto& p : points) {
      p.label = (p.label == Label::minority) ? Label::majority : Label::minority;
    }
    meta.labels_swapped = true;
  }

  if (opts.normalize) {
    const std::size_t dim = points.front().features.size();
    std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
    std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
    for (const auto& p : points) {
      for (std::size_t c = 0; c < dim; ++c) {
        lo[c] = std::min(lo[c], p.features[c]);
        hi[c] = std::max(hi[c], p.features[c]);
      }
    }
    for (auto& p : points) {
      for (std::size_t c = 0; c < dim; ++c) {
        double range = hi[c] - lo[c];
        p.features[c] = range > 0.0 ? (p.features[c] - lo[c]) / range : 0.0;
      }
    }
    meta.normalized = true;
  }

  std::string name = opts.name.empty() ? std::filesystem::path(path).stem().string() : opts.name;
  return Dataset(std::move(points), std::move(name), std::move(meta));
}

inline Dataset load_csv(const std::string& path, const std::string& label_column,
                        const std::string& minority_value) {
  LoadOptions opts;
  opts.label_column = label_column;
  opts.minority_value = minority_value;
  return load_csv(path, opts);
}

inline void save_csv(const Dataset& d, std::ostream& os) {
  const auto& names = d.meta().feature_names;
  for (std::size_t c = 0; c < d.dim(); ++c) {
    os << (c < names.size() ? names[c] : "f" + std::to_string(c)) << ',';
  }
  os << "label,origin\n";
  for (const auto& p : d.points()) {
    for (double v : p.features) os << detail::format_double(v) << ',';
    os << (p.label == Label::minority ? '1' : '0') << ','
       << (p.origin == Origin::synthetic ? "synthetic" : "real") << '\n';
  }
}

inline void save_csv(const Dataset& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  save_csv(d, out);
}

}  // namespace gksmote
