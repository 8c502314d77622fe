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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gksmote/dataset.hpp"
#include "gksmote/rng.hpp"

namespace gksmote {

/// Two isotropic 2-D Gaussian blobs, majority first. The stock desk-scale
/// benchmark for experiments and examples.
inline Dataset make_gaussian_blobs(std::size_t majority_n, std::size_t minority_n,
                                   std::pair<double, double> majority_mean,
                                   std::pair<double, double> minority_mean,
                                   double stddev, std::uint64_t seed,
                                   std::string name = "blobs") {
  SeededRng rng(seed);
  std::vector<LabeledPoint> points;
  points.reserve(majority_n + minority_n);
  for (std::size_t i = 0; i < majority_n; ++i) {
    points.push_back({{majority_mean.first + stddev * rng.normal(),
                       majority_mean.second + stddev * rng.normal()},
                      Label::majority,
                      Origin::real});
  }
  for (std::size_t i = 0; i < minority_n; ++i) {
    points.push_back({{minority_mean.first + stddev * rng.normal(),
                       minority_mean.second + stddev * rng.normal()},
                      Label::minority,
                      Origin::real});
  }
  return Dataset(std::move(points), std::move(name));
}

}  // namespace gksmote
