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
#include <limits>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "gksmote/dataset.hpp"
#include "gksmote/density.hpp"
#include "gksmote/error.hpp"
#include "gksmote/rng.hpp"

// The GK-SMOTE pipeline: filter minority samples whose entire k-neighborhood
// is majority, estimate a KDE density for the rest, 2-means-cluster the
// density vector into a borderline (A) and a safe (B) group, apportion the
// synthesis quota by cluster size and per-sample weights (k - m) / k, and
// interpolate each parent toward its nearest minority neighbors.

namespace gksmote {

struct SamplerConfig {
  double target_ir = 1.0;  // expected |Q| / |P| after resampling
  std::size_t k = 5;
  BandwidthPolicy bandwidth{};
  std::uint64_t seed = 0;
  std::size_t max_cluster_iters = 100;
  double cluster_tol = 1e-9;
};

/// N = floor(|Q| / IR) - |P|, clamped at zero. Uses the unfiltered minority
/// count.
inline std::size_t compute_total_quota(std::size_t majority_count,
                                       std::size_t minority_count,
                                       double target_ir) {
  if (!(target_ir >= 1.0)) {
    throw RateError("target IR must be >= 1, got " + std::to_string(target_ir));
  }
  double ideal = std::floor(static_cast<double>(majority_count) / target_ir);
  double n = ideal - static_cast<double>(minority_count);
  return n > 0.0 ? static_cast<std::size_t>(n) : 0;
}

inline std::size_t compute_total_quota(const Dataset& d, double target_ir) {
  return compute_total_quota(d.majority_count(), d.minority_count(), target_ir);
}

struct FilterResult {
  std::vector<std::size_t> retained;         // positions within the minority ordering
  std::vector<std::size_t> majority_counts;  // m per minority sample, |P| entries
};

/// Drops every minority sample whose k nearest neighbors are all majority.
inline FilterResult filter_noise(const Dataset& d, std::size_t k) {
  FilterResult out;
  const auto& minority = d.minority_indices();
  out.majority_counts.reserve(minority.size());
  for (std::size_t i = 0; i < minority.size(); ++i) {
    std::size_t m = majority_neighbor_count(d, minority[i], k);
    out.majority_counts.push_back(m);
    if (m < k) out.retained.push_back(i);
  }
  if (out.retained.empty()) {
    throw AllNoiseError("every minority sample has an all-majority neighborhood");
  }
  return out;
}

struct ClusterResult {
  std::vector<ClusterId> assignments;  // per input value
  double centroid_a = 0.0;             // centroid_a <= centroid_b
  double centroid_b = 0.0;
  std::size_t iterations = 0;
  bool degenerate = false;  // all values equal: everything lands in B
};

/// Scalar 2-means. Seeds from the exhaustive minimum-SSE threshold split
/// (exact in one dimension), then runs assignment/update rounds until the
/// centroids settle. The plain min/max seeding can converge to a worse local
/// optimum, which the optimal seed rules out.
inline ClusterResult cluster_densities(const std::vector<double>& densities,
                                       const SamplerConfig& cfg = {}) {
  if (densities.size() < 2) {
    throw SingleSampleError("2-means needs at least two values, got " +
                            std::to_string(densities.size()));
  }
  for (double v : densities) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw DegenerateError("densities must be positive finite");
    }
  }
  ClusterResult res;
  const auto [lo_it, hi_it] = std::minmax_element(densities.begin(), densities.end());
  if (*lo_it == *hi_it) {
    res.assignments.assign(densities.size(), ClusterId::b);
    res.centroid_a = res.centroid_b = *lo_it;
    res.degenerate = true;
    return res;
  }

  std::vector<double> sorted = densities;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  std::vector<double> prefix(n + 1, 0.0), prefix_sq(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    prefix[i + 1] = prefix[i] + sorted[i];
    prefix_sq[i + 1] = prefix_sq[i] + sorted[i] * sorted[i];
  }
  auto sse = [&](std::size_t begin, std::size_t end) {
    double cnt = static_cast<double>(end - begin);
    double sum = prefix[end] - prefix[begin];
    return (prefix_sq[end] - prefix_sq[begin]) - sum * sum / cnt;
  };
  std::size_t best_split = 1;
  double best_sse = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < n; ++j) {
    if (sorted[j - 1] == sorted[j]) continue;  // equal values may not straddle
    double total = sse(0, j) + sse(j, n);
    if (total < best_sse) {
      best_sse = total;
      best_split = j;
    }
  }
  double ca = prefix[best_split] / static_cast<double>(best_split);
  double cb = (prefix[n] - prefix[best_split]) / static_cast<double>(n - best_split);

  std::vector<ClusterId> assign(densities.size());
  auto assign_by_midpoint = [&](double a, double b) {
    double mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < densities.size(); ++i) {
      assign[i] = densities[i] <= mid ? ClusterId::a : ClusterId::b;
    }
  };
  for (std::size_t it = 0; it < std::max<std::size_t>(cfg.max_cluster_iters, 1); ++it) {
    ++res.iterations;
    assign_by_midpoint(ca, cb);
    double sum_a = 0.0, sum_b = 0.0;
    std::size_t n_a = 0, n_b = 0;
    for (std::size_t i = 0; i < densities.size(); ++i) {
      if (assign[i] == ClusterId::a) {
        sum_a += densities[i];
        ++n_a;
      } else {
        sum_b += densities[i];
        ++n_b;
      }
    }
    if (n_a == 0 || n_b == 0) break;
    double na = sum_a / static_cast<double>(n_a);
    double nb = sum_b / static_cast<double>(n_b);
    double movement = std::max(std::abs(na - ca), std::abs(nb - cb));
    ca = na;
    cb = nb;
    if (movement < cfg.cluster_tol) break;
  }
  res.assignments = std::move(assign);
  res.centroid_a = ca;
  res.centroid_b = cb;
  return res;
}

namespace detail {

/// Integer apportionment by largest remainder: quotas are proportional to
/// the weights, sum exactly to `total`, ties go to the lower index.
inline std::vector<std::size_t> largest_remainder(const std::vector<double>& weights,
                                                  std::size_t total) {
  std::vector<std::size_t> quotas(weights.size(), 0);
  double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (weights.empty() || sum <= 0.0 || total == 0) return quotas;
  std::vector<double> remainders(weights.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    double share = weights[i] / sum * static_cast<double>(total);
    quotas[i] = static_cast<std::size_t>(std::floor(share));
    remainders[i] = share - std::floor(share);
    assigned += quotas[i];
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainders[a] > remainders[b];
  });
  for (std::size_t i = 0; assigned < total && i < order.size(); ++i, ++assigned) {
    ++quotas[order[i]];
  }
  return quotas;
}

}  // namespace detail

struct PlanEntry {
  std::size_t sample_index = 0;  // position within the minority ordering
  ClusterId cluster = ClusterId::none;
  double weight = 0.0;  // (k - m) / k, normalized within the cluster
  std::size_t quota = 0;
};

struct SynthesisPlan {
  std::size_t total = 0;  // N
  std::size_t cluster_a_quota = 0;
  std::size_t cluster_b_quota = 0;
  std::vector<PlanEntry> entries;  // retained samples, minority order
  bool quota_zero = false;
  bool single_sample_fallback = false;
  bool degenerate_densities = false;
};

/// Splits N across the clusters by size (largest remainder), then across each
/// cluster's samples by normalized weight (k - m) / k. Both levels conserve
/// the quota exactly.
inline SynthesisPlan build_plan(const std::vector<std::size_t>& retained,
                                const std::vector<std::size_t>& majority_counts,
                                const std::vector<ClusterId>& clusters,
                                std::size_t total_quota, std::size_t k) {
  if (clusters.size() != retained.size()) {
    throw ShapeError("cluster assignments do not cover the retained set");
  }
  SynthesisPlan plan;
  plan.total = total_quota;
  plan.quota_zero = total_quota == 0;

  std::vector<std::size_t> members_a, members_b;  // positions into `retained`
  for (std::size_t i = 0; i < retained.size(); ++i) {
    (clusters[i] == ClusterId::a ? members_a : members_b).push_back(i);
  }
  auto cluster_quotas = detail::largest_remainder(
      {static_cast<double>(members_a.size()), static_cast<double>(members_b.size())},
      total_quota);
  plan.cluster_a_quota = cluster_quotas[0];
  plan.cluster_b_quota = cluster_quotas[1];

  plan.entries.resize(retained.size());
  for (const auto& [members, cluster_id, cluster_quota] :
       {std::tuple{&members_a, ClusterId::a, cluster_quotas[0]},
        std::tuple{&members_b, ClusterId::b, cluster_quotas[1]}}) {
    std::vector<double> weights;
    weights.reserve(members->size());
    double total_weight = 0.0;
    for (std::size_t pos : *members) {
      // m < k after filtering, so every raw weight is at least 1/k.
      double w = static_cast<double>(k - majority_counts[retained[pos]]) /
                 static_cast<double>(k);
      weights.push_back(w);
      total_weight += w;
    }
    auto quotas = detail::largest_remainder(weights, cluster_quota);
    for (std::size_t j = 0; j < members->size(); ++j) {
      PlanEntry& e = plan.entries[(*members)[j]];
      e.sample_index = retained[(*members)[j]];
      e.cluster = cluster_id;
      e.weight = total_weight > 0.0 ? weights[j] / total_weight : 0.0;
      e.quota = quotas[j];
    }
  }
  return plan;
}

struct SynthTrace {
  std::size_t parent;    // dataset index of the interpolation base x
  std::size_t neighbor;  // dataset index of the chosen minority neighbor
  double u;              // interpolation coefficient in [0, 1)
};

struct PopulateResult {
  std::vector<LabeledPoint> samples;
  std::vector<SynthTrace> trace;
};

/// SMOTE-style generation: each synthetic point is x + u * (x_nn - x) with
/// x_nn drawn from the min(k, |pool| - 1) nearest minority neighbors of x
/// inside the retained pool. A pool holding only the parent duplicates it.
inline PopulateResult populate(const Dataset& d, std::size_t parent_dataset_index,
                               const std::vector<std::size_t>& pool_dataset_indices,
                               std::size_t quota, std::size_t k, SeededRng& rng) {
  PopulateResult out;
  if (quota == 0) return out;

  std::vector<std::size_t> narray;  // dataset indices of candidate neighbors
  std::optional<std::size_t> self;
  for (std::size_t i = 0; i < pool_dataset_indices.size(); ++i) {
    if (pool_dataset_indices[i] == parent_dataset_index) self = i;
  }
  if (pool_dataset_indices.size() - (self ? 1 : 0) == 0) {
    narray.push_back(parent_dataset_index);
  } else {
    std::size_t kk = std::min(k, pool_dataset_indices.size() - (self ? 1 : 0));
    NeighborList list = knn_select(
        pool_dataset_indices.size(),
        [&](std::size_t i) -> const std::vector<double>& {
          return d[pool_dataset_indices[i]].features;
        },
        d[parent_dataset_index].features, kk, self);
    for (const Neighbor& n : list.entries) narray.push_back(pool_dataset_indices[n.index]);
  }

  const auto& x = d[parent_dataset_index].features;
  for (std::size_t q = 0; q < quota; ++q) {
    double u = rng.uniform();
    std::size_t nn = narray[rng.uniform_index(narray.size())];
    const auto& xn = d[nn].features;
    LabeledPoint s;
    s.label = Label::minority;
    s.origin = Origin::synthetic;
    s.features.resize(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) {
      s.features[c] = x[c] + u * (xn[c] - x[c]);
    }
    out.samples.push_back(std::move(s));
    out.trace.push_back({parent_dataset_index, nn, u});
  }
  return out;
}

struct GkSmoteResult {
  Dataset resampled;  // Q + retained minority + synthetic, original order first
  SynthesisPlan plan;
  std::vector<DensityRecord> records;
  double bandwidth = 0.0;
  std::vector<SynthTrace> trace;  // one entry per synthetic point
};

inline GkSmoteResult gk_smote(const Dataset& d, const SamplerConfig& cfg) {
  if (cfg.k == 0) throw RateError("k must be positive");
  const std::size_t quota = compute_total_quota(d, cfg.target_ir);

  // One neighbor pass per minority sample feeds the filter, the pooled
  // bandwidth sample, and the density estimates.
  const auto& minority = d.minority_indices();
  std::vector<std::vector<double>> neighbor_distances(minority.size());
  std::vector<std::size_t> majority_counts(minority.size());
  std::vector<std::size_t> retained;
  std::vector<double> pooled;
  for (std::size_t i = 0; i < minority.size(); ++i) {
    NeighborList list = knn(d, minority[i], cfg.k);
    std::size_t m = 0;
    for (const Neighbor& n : list.entries) {
      neighbor_distances[i].push_back(n.distance);
      if (d[n.index].label == Label::majority) ++m;
    }
    majority_counts[i] = m;
    if (m < cfg.k) {
      retained.push_back(i);
      pooled.insert(pooled.end(), neighbor_distances[i].begin(),
                    neighbor_distances[i].end());
    }
  }
  if (retained.empty()) {
    throw AllNoiseError("every minority sample has an all-majority neighborhood");
  }

  GkSmoteResult result;
  result.bandwidth = cfg.bandwidth.mode == BandwidthPolicy::Mode::fixed
                         ? select_bandwidth({}, cfg.bandwidth)
                         : select_bandwidth(pooled, cfg.bandwidth);

  result.records.reserve(minority.size());
  std::vector<double> densities;  // per retained sample
  densities.reserve(retained.size());
  for (std::size_t i = 0; i < minority.size(); ++i) {
    DensityRecord rec;
    rec.sample_index = i;
    rec.dataset_index = minority[i];
    rec.majority_count = majority_counts[i];
    if (majority_counts[i] == cfg.k) {
      rec.verdict = Verdict::noisy;
    } else {
      rec.density = kde_from_distances(neighbor_distances[i], result.bandwidth);
      densities.push_back(*rec.density);
    }
    result.records.push_back(rec);
  }

  std::vector<ClusterId> clusters(retained.size(), ClusterId::b);
  bool single_sample = retained.size() == 1;  // lone retained sample: treat as safe
  bool degenerate = false;
  if (!single_sample) {
    ClusterResult cr = cluster_densities(densities, cfg);
    clusters = cr.assignments;
    degenerate = cr.degenerate;
  }
  for (std::size_t j = 0; j < retained.size(); ++j) {
    DensityRecord& rec = result.records[retained[j]];
    rec.cluster = clusters[j];
    rec.verdict = clusters[j] == ClusterId::a ? Verdict::borderline : Verdict::safe;
  }

  result.plan = build_plan(retained, majority_counts, clusters, quota, cfg.k);
  result.plan.single_sample_fallback = single_sample;
  result.plan.degenerate_densities = degenerate;

  std::vector<std::size_t> retained_dataset_indices;
  retained_dataset_indices.reserve(retained.size());
  for (std::size_t pos : retained) retained_dataset_indices.push_back(minority[pos]);

  std::vector<LabeledPoint> points;
  points.reserve(d.size() + quota);
  std::vector<bool> noisy(d.size(), false);
  for (const auto& rec : result.records) {
    if (rec.verdict == Verdict::noisy) noisy[rec.dataset_index] = true;
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!noisy[i]) points.push_back(d[i]);
  }
  for (const PlanEntry& e : result.plan.entries) {
    if (e.quota == 0) continue;
    SeededRng rng(derive_seed(cfg.seed, e.sample_index));
    PopulateResult gen = populate(d, minority[e.sample_index],
                                  retained_dataset_indices, e.quota, cfg.k, rng);
    for (auto& s : gen.samples) points.push_back(std::move(s));
    result.trace.insert(result.trace.end(), gen.trace.begin(), gen.trace.end());
  }
  result.resampled = Dataset(std::move(points), d.name(), d.meta());
  return result;
}

}  // namespace gksmote
