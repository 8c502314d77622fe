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
#include <cstddef>
#include <numeric>
#include <vector>

#include "gksmote/error.hpp"

// Confusion-matrix metrics for binary classification with the minority class
// as the positive class.

namespace gksmote {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
};

/// Matthews correlation coefficient. Returns 0 when any denominator factor is
/// zero (the formula is undefined there).
inline double mcc(const ConfusionCounts& c) {
  const double tp = static_cast<double>(c.tp), fp = static_cast<double>(c.fp);
  const double tn = static_cast<double>(c.tn), fn = static_cast<double>(c.fn);
  const double denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
  if (denom == 0.0) return 0.0;
  return (tp * tn - fp * fn) / std::sqrt(denom);
}

/// Mean of the per-class recalls.
inline double balanced_accuracy(const ConfusionCounts& c) {
  if (c.tp + c.fn == 0 || c.tn + c.fp == 0) {
    throw EmptyClassError("balanced accuracy needs evaluated members of both classes");
  }
  const double recall_pos = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  const double recall_neg = static_cast<double>(c.tn) / static_cast<double>(c.tn + c.fp);
  return 0.5 * (recall_pos + recall_neg);
}

/// Area under the precision-recall curve as average precision: rank by score
/// descending with pessimistic ties (negatives ahead of positives at equal
/// score), then average the precision at each positive rank. The tie rule
/// makes the value a deterministic lower bound.
inline double auprc(const std::vector<int>& labels, const std::vector<double>& scores) {
  if (labels.size() != scores.size()) {
    throw ShapeError("labels and scores differ in length");
  }
  const std::size_t n_pos = static_cast<std::size_t>(
      std::count_if(labels.begin(), labels.end(), [](int l) { return l != 0; }));
  if (n_pos == 0) throw NoPositiveError("average precision needs at least one positive label");

  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return (labels[a] != 0) < (labels[b] != 0);  // negatives first at ties
  });

  double sum_precision = 0.0;
  std::size_t hits = 0;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (labels[order[rank]] != 0) {
      ++hits;
      sum_precision += static_cast<double>(hits) / static_cast<double>(rank + 1);
    }
  }
  return sum_precision / static_cast<double>(n_pos);
}

}  // namespace gksmote
