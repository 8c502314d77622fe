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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gksmote/error.hpp"
#include "gksmote/rng.hpp"

namespace gksmote {

enum class Label : std::uint8_t { majority = 0, minority = 1 };
enum class Origin : std::uint8_t { real = 0, synthetic = 1 };

/// One feature vector with its binary class tag.
struct LabeledPoint {
  std::vector<double> features;
  Label label = Label::majority;
  Origin origin = Origin::real;
};

/// Loader-level metadata carried along with a dataset.
struct DatasetMeta {
  std::vector<std::string> feature_names;  // empty -> unnamed columns
  bool labels_swapped = false;  // minority_value named the more frequent class
  bool normalized = false;      // features min-max scaled to [0, 1]
};

/// Immutable ordered collection of LabeledPoints with a fixed dimension and
/// nonempty minority (P) and majority (Q) partitions. Operations never mutate
/// a Dataset in place; they build new ones.
class Dataset {
 public:
  Dataset() = default;

  explicit Dataset(std::vector<LabeledPoint> points, std::string name = {},
                   DatasetMeta meta = {})
      : points_(std::move(points)), name_(std::move(name)), meta_(std::move(meta)) {
    if (points_.empty()) throw EmptyClassError("dataset '" + name_ + "' has no points");
    dim_ = points_.front().features.size();
    if (dim_ == 0) throw SchemaError("dataset '" + name_ + "' has zero feature columns");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const auto& p = points_[i];
      if (p.features.size() != dim_) {
        throw SchemaError("point " + std::to_string(i) + " has dimension " +
                          std::to_string(p.features.size()) + ", expected " +
                          std::to_string(dim_));
      }
      for (double v : p.features) {
        if (!std::isfinite(v)) {
          throw ParseError("non-finite feature value at point " + std::to_string(i));
        }
      }
      (p.label == Label::minority ? minority_ : majority_).push_back(i);
    }
    if (minority_.empty()) throw EmptyClassError("minority class is empty");
    if (majority_.empty()) throw EmptyClassError("majority class is empty");
  }

  const std::vector<LabeledPoint>& points() const { return points_; }
  const LabeledPoint& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const DatasetMeta& meta() const { return meta_; }

  /// Indices of minority-labeled points in dataset order.
  const std::vector<std::size_t>& minority_indices() const { return minority_; }
  const std::vector<std::size_t>& majority_indices() const { return majority_; }
  std::size_t minority_count() const { return minority_.size(); }
  std::size_t majority_count() const { return majority_.size(); }

 private:
  std::vector<LabeledPoint> points_;
  std::size_t dim_ = 0;
  std::string name_;
  DatasetMeta meta_;
  std::vector<std::size_t> minority_;
  std::vector<std::size_t> majority_;
};

/// |Q| / |P|.
inline double imbalance_ratio(const Dataset& d) {
  return static_cast<double>(d.majority_count()) /
         static_cast<double>(d.minority_count());
}

/// Round half up; split and noise counts use this consistently.
inline std::size_t round_half_up(double x) {
  return static_cast<std::size_t>(std::floor(x + 0.5));
}

struct SplitSpec {
  double test_fraction = 0.25;
  std::uint64_t seed = 0;
};

struct NoiseSpec {
  double rate = 0.0;  // fraction of each class whose labels are flipped
  std::uint64_t seed = 0;
};

struct SplitResult {
  Dataset train;
  Dataset test;
};

/// Splits each class separately: round(test_fraction * class_size) points go
/// to the test side, at least one and at most class_size - 1. The shuffle is
/// seed-deterministic; both outputs keep dataset order.
inline SplitResult stratified_split(const Dataset& d, const SplitSpec& spec) {
  if (spec.test_fraction <= 0.0 || spec.test_fraction >= 1.0) {
    throw RateError("test_fraction must be in (0, 1), got " +
                    std::to_string(spec.test_fraction));
  }
  SeededRng rng(spec.seed);
  std::vector<bool> to_test(d.size(), false);
  for (const auto* cls : {&d.minority_indices(), &d.majority_indices()}) {
    if (cls->size() < 2) {
      throw TooSmallError("a class with " + std::to_string(cls->size()) +
                          " point(s) cannot yield both a train and a test point");
    }
    std::size_t n_test = round_half_up(spec.test_fraction * static_cast<double>(cls->size()));
    n_test = std::clamp<std::size_t>(n_test, 1, cls->size() - 1);
    std::vector<std::size_t> order = *cls;
    rng.shuffle(order);
    for (std::size_t i = 0; i < n_test; ++i) to_test[order[i]] = true;
  }
  std::vector<LabeledPoint> train, test;
  for (std::size_t i = 0; i < d.size(); ++i) {
    (to_test[i] ? test : train).push_back(d[i]);
  }
  return {Dataset(std::move(train), d.name() + "/train", d.meta()),
          Dataset(std::move(test), d.name() + "/test", d.meta())};
}

/// Flips round(rate * |P|) minority labels and round(rate * |Q|) majority
/// labels, seed-deterministic, features untouched. Returns a new Dataset.
inline Dataset inject_label_noise(const Dataset& d, const NoiseSpec& spec) {
  if (!(spec.rate >= 0.0 && spec.rate <= 0.5)) {
    throw RateError("noise rate must lie in [0, 0.5], got " + std::to_string(spec.rate));
  }
  std::vector<LabeledPoint> points = d.points();
  SeededRng rng(spec.seed);
  for (const auto* cls : {&d.minority_indices(), &d.majority_indices()}) {
    std::size_t n_flip = round_half_up(spec.rate * static_cast<double>(cls->size()));
    std::vector<std::size_t> order = *cls;
    rng.shuffle(order);
    for (std::size_t i = 0; i < n_flip; ++i) {
      Label& l = points[order[i]].label;
      l = (l == Label::minority) ? Label::majority : Label::minority;
    }
  }
  return Dataset(std::move(points), d.name(), d.meta());
}

}  // namespace gksmote
