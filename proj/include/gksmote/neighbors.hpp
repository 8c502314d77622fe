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
#include <optional>
#include <vector>

#include "gksmote/dataset.hpp"
#include "gksmote/error.hpp"

// Exact brute-force k-nearest-neighbor search. O(n d) per query, no spatial
// index; ties broken by lower pool index so results are reproducible.

namespace gksmote {

inline double euclidean_distance(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

struct Neighbor {
  std::size_t index;  // position in the searched pool
  double distance;
};

struct NeighborList {
  std::optional<std::size_t> query_index;  // set when the query is a pool member
  std::vector<Neighbor> entries;           // ascending (distance, index)
};

/// Core selection: `feature_at(i)` yields the i-th pool point. When
/// `self_index` is set that entry is skipped.
template <typename FeatureAt>
NeighborList knn_select(std::size_t pool_size, FeatureAt&& feature_at,
                        const std::vector<double>& query, std::size_t k,
                        std::optional<std::size_t> self_index = std::nullopt) {
  const std::size_t available = pool_size - (self_index ? 1 : 0);
  if (k == 0) throw PoolTooSmallError("k must be positive");
  if (k > available) {
    throw PoolTooSmallError("k=" + std::to_string(k) + " exceeds the " +
                            std::to_string(available) + " available candidates");
  }
  std::vector<Neighbor> all;
  all.reserve(available);
  for (std::size_t i = 0; i < pool_size; ++i) {
    if (self_index && i == *self_index) continue;
    all.push_back({i, euclidean_distance(query, feature_at(i))});
  }
  auto closer = [](const Neighbor& a, const Neighbor& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.index < b.index;
  };
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k),
                    all.end(), closer);
  all.resize(k);
  return {self_index, std::move(all)};
}

inline NeighborList knn(const std::vector<std::vector<double>>& pool,
                        const std::vector<double>& query, std::size_t k,
                        std::optional<std::size_t> self_index = std::nullopt) {
  return knn_select(pool.size(), [&](std::size_t i) -> const std::vector<double>& {
    return pool[i];
  }, query, k, self_index);
}

/// k nearest neighbors of the dataset member at `query_index`, self excluded.
/// Returned indices are dataset positions.
inline NeighborList knn(const Dataset& d, std::size_t query_index, std::size_t k) {
  return knn_select(d.size(), [&](std::size_t i) -> const std::vector<double>& {
    return d[i].features;
  }, d[query_index].features, k, query_index);
}

/// k nearest neighbors of an external query point over the whole dataset.
inline NeighborList knn(const Dataset& d, const std::vector<double>& query,
                        std::size_t k) {
  return knn_select(d.size(), [&](std::size_t i) -> const std::vector<double>& {
    return d[i].features;
  }, query, k);
}

/// Number of majority-labeled points among the k nearest neighbors of the
/// dataset member at `query_index` (searched over both classes, self excluded).
inline std::size_t majority_neighbor_count(const Dataset& d,
                                           std::size_t query_index,
                                           std::size_t k) {
  NeighborList list = knn(d, query_index, k);
  std::size_t m = 0;
  for (const Neighbor& n : list.entries) {
    if (d[n.index].label == Label::majority) ++m;
  }
  return m;
}

}  // namespace gksmote
