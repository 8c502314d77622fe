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

#include <optional>
#include <vector>

#include "gksmote/gk_smote.hpp"

// Classic SMOTE baseline: interpolate between a uniformly drawn minority
// parent and one of its k nearest minority neighbors. No filtering, no
// clustering, no weighting. Parents are drawn uniformly per synthetic point
// (instead of the original per-sample multiplier) so any quota N is
// reachable; the quota formula matches gk_smote for fair comparisons.

namespace gksmote {

struct SmoteResult {
  Dataset resampled;  // all original points followed by the synthetic ones
  std::vector<SynthTrace> trace;
};

inline SmoteResult smote(const Dataset& d, const SamplerConfig& cfg) {
  if (cfg.k == 0) throw RateError("k must be positive");
  if (d.minority_count() < 2) {
    throw PoolTooSmallError("SMOTE needs at least two minority samples");
  }
  const std::size_t quota = compute_total_quota(d, cfg.target_ir);
  const auto& minority = d.minority_indices();

  // Neighbor lists are fetched lazily; heavy parents are rare under uniform draws.
  std::vector<std::optional<std::vector<std::size_t>>> neighbor_cache(minority.size());
  auto minority_neighbors = [&](std::size_t pos) -> const std::vector<std::size_t>& {
    if (!neighbor_cache[pos]) {
      std::size_t kk = std::min(cfg.k, minority.size() - 1);
      NeighborList list = knn_select(
          minority.size(),
          [&](std::size_t i) -> const std::vector<double>& {
            return d[minority[i]].features;
          },
          d[minority[pos]].features, kk, pos);
      std::vector<std::size_t> out;
      out.reserve(list.entries.size());
      for (const Neighbor& n : list.entries) out.push_back(minority[n.index]);
      neighbor_cache[pos] = std::move(out);
    }
    return *neighbor_cache[pos];
  };

  SeededRng rng(cfg.seed);
  std::vector<LabeledPoint> points = d.points();
  points.reserve(d.size() + quota);
  SmoteResult result{Dataset{}, {}};
  for (std::size_t q = 0; q < quota; ++q) {
    std::size_t parent_pos = rng.uniform_index(minority.size());
    double u = rng.uniform();
    const auto& narray = minority_neighbors(parent_pos);
    std::size_t nn = narray[rng.uniform_index(narray.size())];
    const auto& x = d[minority[parent_pos]].features;
    const auto& xn = d[nn].features;
    LabeledPoint s;
    s.label = Label::minority;
    s.origin = Origin::synthetic;
    s.features.resize(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) {
      s.features[c] = x[c] + u * (xn[c] - x[c]);
    }
    points.push_back(std::move(s));
    result.trace.push_back({minority[parent_pos], nn, u});
  }
  result.resampled = Dataset(std::move(points), d.name(), d.meta());
  return result;
}

}  // namespace gksmote
