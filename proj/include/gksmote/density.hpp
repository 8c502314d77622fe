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

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gksmote/error.hpp"
#include "gksmote/neighbors.hpp"

// Gaussian KDE over k-NN neighborhoods. The density of a point is the mean
// of a normalized 1-D Gaussian kernel applied to the distances to its k
// nearest neighbors in the full dataset (both classes, self excluded):
//
//   f(p) = (1/k) * sum_q (1 / (h sqrt(2 pi))) exp(-d(p,q)^2 / (2 h^2))
//
// Only relative densities drive the sampler, so the normalization constant
// is harmless. The bandwidth h is either fixed or chosen by Silverman's rule
// over the pooled neighbor distances of all retained minority samples.

namespace gksmote {

struct BandwidthPolicy {
  enum class Mode { silverman, fixed };
  Mode mode = Mode::silverman;
  double fixed_value = 1.0;

  static BandwidthPolicy silverman() { return {}; }
  static BandwidthPolicy fixed(double h) { return {Mode::fixed, h}; }
};

/// Lower clamp for the bandwidth; an all-equal distance sample (sigma = 0)
/// lands here instead of failing.
inline constexpr double min_bandwidth = 1e-6;

/// Silverman's rule 1.06 * sigma * n^(-1/5) over a sample of distances,
/// where sigma is the sample standard deviation. Fixed mode passes through.
inline double select_bandwidth(const std::vector<double>& values,
                               const BandwidthPolicy& policy) {
  if (policy.mode == BandwidthPolicy::Mode::fixed) {
    if (!(policy.fixed_value > 0.0)) {
      throw RateError("fixed bandwidth must be positive, got " +
                      std::to_string(policy.fixed_value));
    }
    return policy.fixed_value;
  }
  if (values.empty()) throw EmptyInputError("bandwidth selection needs at least one distance");
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  double sigma = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  double h = 1.06 * sigma * std::pow(n, -0.2);
  return std::max(h, min_bandwidth);
}

inline double gaussian_kernel(double t, double h) {
  constexpr double inv_sqrt_two_pi = 0.3989422804014327;
  return inv_sqrt_two_pi / h * std::exp(-(t * t) / (2.0 * h * h));
}

/// Mean kernel over a neighbor-distance list. Floored at the smallest
/// positive double so the "density > 0" invariant survives kernel underflow
/// at extreme distance/bandwidth ratios.
inline double kde_from_distances(const std::vector<double>& distances, double h) {
  if (distances.empty()) throw EmptyInputError("density needs at least one neighbor distance");
  double sum = 0.0;
  for (double t : distances) sum += gaussian_kernel(t, h);
  return std::max(sum / static_cast<double>(distances.size()),
                  std::numeric_limits<double>::min());
}

/// KDE density of the dataset member at `point_index` with explicit bandwidth.
inline double kde_density(const Dataset& d, std::size_t point_index,
                          std::size_t k, double h) {
  NeighborList list = knn(d, point_index, k);
  std::vector<double> distances;
  distances.reserve(list.entries.size());
  for (const Neighbor& n : list.entries) distances.push_back(n.distance);
  return kde_from_distances(distances, h);
}

/// Pools the k-NN distances of every retained minority sample (those with
/// fewer than k majority neighbors) and runs the bandwidth policy on them.
/// Computed once per run; every density in that run shares the result.
inline double resolve_bandwidth(const Dataset& d, std::size_t k,
                                const BandwidthPolicy& policy) {
  if (policy.mode == BandwidthPolicy::Mode::fixed) return select_bandwidth({}, policy);
  std::vector<double> pooled;
  for (std::size_t idx : d.minority_indices()) {
    NeighborList list = knn(d, idx, k);
    std::size_t m = 0;
    for (const Neighbor& n : list.entries) {
      if (d[n.index].label == Label::majority) ++m;
    }
    if (m == k) continue;  // noisy, filtered before the density pass
    for (const Neighbor& n : list.entries) pooled.push_back(n.distance);
  }
  if (pooled.empty()) {
    throw AllNoiseError("every minority sample has an all-majority neighborhood");
  }
  return select_bandwidth(pooled, policy);
}

inline double kde_density(const Dataset& d, std::size_t point_index,
                          std::size_t k, const BandwidthPolicy& policy) {
  return kde_density(d, point_index, k, resolve_bandwidth(d, k, policy));
}

enum class Verdict : std::uint8_t { noisy, borderline, safe, pending };
enum class ClusterId : std::uint8_t { none, a, b };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::noisy: return "noisy";
    case Verdict::borderline: return "borderline";
    case Verdict::safe: return "safe";
    default: return "pending";
  }
}

inline const char* to_string(ClusterId c) {
  switch (c) {
    case ClusterId::a: return "A";
    case ClusterId::b: return "B";
    default: return "none";
  }
}

/// Per-minority-sample taxonomy entry. `sample_index` counts within the
/// minority ordering P; `dataset_index` locates the point in the dataset.
/// Noisy samples carry no density and never get a cluster; the others stay
/// `pending` until the clustering step stamps them borderline (A) or safe (B).
struct DensityRecord {
  std::size_t sample_index = 0;
  std::size_t dataset_index = 0;
  std::size_t majority_count = 0;
  std::optional<double> density;
  Verdict verdict = Verdict::pending;
  ClusterId cluster = ClusterId::none;
};

/// Step 1 of the pipeline: per minority sample, count majority neighbors m,
/// mark m = k as noisy, and compute the KDE density of everything retained.
inline std::vector<DensityRecord> categorize(const Dataset& d, std::size_t k,
                                             double h) {
  std::vector<DensityRecord> records;
  records.reserve(d.minority_count());
  const auto& minority = d.minority_indices();
  for (std::size_t i = 0; i < minority.size(); ++i) {
    DensityRecord rec;
    rec.sample_index = i;
    rec.dataset_index = minority[i];
    rec.majority_count = majority_neighbor_count(d, minority[i], k);
    if (rec.majority_count == k) {
      rec.verdict = Verdict::noisy;
    } else {
      rec.density = kde_density(d, minority[i], k, h);
    }
    records.push_back(rec);
  }
  return records;
}

inline std::vector<DensityRecord> categorize(const Dataset& d, std::size_t k,
                                             const BandwidthPolicy& policy) {
  return categorize(d, k, resolve_bandwidth(d, k, policy));
}

/// Homogeneous/heterogeneous neighbor split of a minority point: among its k
/// nearest neighbors, HON holds minority members with density >= the query's,
/// HEN majority members with strictly greater density. Provided for
/// inspection; the sampling pipeline itself never consumes these sets.
struct NeighborPartition {
  std::vector<std::size_t> hon;  // dataset indices
  std::vector<std::size_t> hen;
};

inline NeighborPartition partition_neighbors(const Dataset& d,
                                             std::size_t minority_dataset_index,
                                             std::size_t k,
                                             const BandwidthPolicy& policy) {
  const double h = resolve_bandwidth(d, k, policy);
  const double own = kde_density(d, minority_dataset_index, k, h);
  NeighborPartition out;
  for (const Neighbor& n : knn(d, minority_dataset_index, k).entries) {
    const double theirs = kde_density(d, n.index, k, h);
    if (d[n.index].label == Label::minority) {
      if (theirs >= own) out.hon.push_back(n.index);
    } else if (theirs > own) {
      out.hen.push_back(n.index);
    }
  }
  return out;
}

}  // namespace gksmote
