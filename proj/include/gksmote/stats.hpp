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

// Rank statistics across methods and datasets: Friedman chi-square test with
// average-rank ties and the Nemenyi post-hoc critical difference.

namespace gksmote {

/// scores[method][dataset]; ranks share the shape, 1 = best per dataset,
/// ties averaged.
struct RankMatrix {
  std::vector<std::vector<double>> scores;
  std::vector<std::vector<double>> ranks;
};

inline RankMatrix make_rank_matrix(const std::vector<std::vector<double>>& scores) {
  if (scores.size() < 2) throw ShapeError("ranking needs at least 2 methods");
  const std::size_t datasets = scores.front().size();
  if (datasets < 1) throw ShapeError("ranking needs at least 1 dataset");
  for (const auto& row : scores) {
    if (row.size() != datasets) throw ShapeError("score matrix rows differ in length");
  }
  RankMatrix r;
  r.scores = scores;
  r.ranks.assign(scores.size(), std::vector<double>(datasets, 0.0));
  for (std::size_t col = 0; col < datasets; ++col) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return scores[a][col] > scores[b][col];  // higher score = better rank
    });
    std::size_t i = 0;
    while (i < order.size()) {
      std::size_t j = i;
      while (j + 1 < order.size() &&
             scores[order[j + 1]][col] == scores[order[i]][col]) {
        ++j;
      }
      double avg_rank = 0.5 * static_cast<double>(i + j) + 1.0;
      for (std::size_t t = i; t <= j; ++t) r.ranks[order[t]][col] = avg_rank;
      i = j + 1;
    }
  }
  return r;
}

namespace detail {

// Regularized incomplete gamma, series and continued-fraction routes; the
// split at x < a + 1 keeps both convergent.
inline double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 1000; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double gamma_q_contfrac(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace detail

/// Upper tail of the chi-square distribution with `dof` degrees of freedom.
inline double chi_squared_upper_tail(double x, std::size_t dof) {
  if (dof == 0) throw RangeError("degrees of freedom must be positive");
  if (!(x >= 0.0)) throw RangeError("chi-square statistic must be nonnegative");
  if (x == 0.0) return 1.0;
  const double a = static_cast<double>(dof) / 2.0;
  const double half_x = x / 2.0;
  return half_x < a + 1.0 ? 1.0 - detail::gamma_p_series(a, half_x)
                          : detail::gamma_q_contfrac(a, half_x);
}

struct FriedmanResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// chi^2 = 12 D / (M (M + 1)) * sum_j (Rbar_j - (M + 1) / 2)^2 over M methods
/// and D datasets; p from the chi-square tail with M - 1 degrees of freedom.
inline FriedmanResult friedman_test(const RankMatrix& r) {
  const std::size_t methods = r.ranks.size();
  if (methods < 2) throw ShapeError("Friedman test needs at least 2 methods");
  const std::size_t datasets = methods > 0 ? r.ranks.front().size() : 0;
  if (datasets < 2) throw ShapeError("Friedman test needs at least 2 datasets");
  for (const auto& row : r.ranks) {
    if (row.size() != datasets) throw ShapeError("rank matrix rows differ in length");
  }
  const double m = static_cast<double>(methods);
  const double d = static_cast<double>(datasets);
  double sum_sq = 0.0;
  for (const auto& row : r.ranks) {
    double mean_rank = std::accumulate(row.begin(), row.end(), 0.0) / d;
    double dev = mean_rank - (m + 1.0) / 2.0;
    sum_sq += dev * dev;
  }
  FriedmanResult out;
  out.statistic = 12.0 * d / (m * (m + 1.0)) * sum_sq;
  out.p_value = chi_squared_upper_tail(out.statistic, methods - 1);
  return out;
}

namespace detail {

// Studentized-range constants q_alpha for the two-tailed Nemenyi test,
// methods m = 2..20.
inline constexpr double nemenyi_q_05[] = {
    1.960, 2.343, 2.569, 2.728, 2.850, 2.949, 3.031, 3.102, 3.164, 3.219,
    3.268, 3.313, 3.354, 3.391, 3.426, 3.458, 3.489, 3.517, 3.544};
inline constexpr double nemenyi_q_10[] = {
    1.645, 2.052, 2.291, 2.459, 2.589, 2.693, 2.780, 2.855, 2.920, 2.978,
    3.030, 3.077, 3.120, 3.159, 3.196, 3.230, 3.261, 3.291, 3.319};

}  // namespace detail

/// CD = q_alpha(m) * sqrt(m (m + 1) / (6 d)); two methods differ
/// significantly iff their average-rank gap exceeds this.
inline double nemenyi_cd(std::size_t methods, std::size_t datasets, double alpha) {
  if (methods < 2 || methods > 20) {
    throw RangeError("Nemenyi table covers 2..20 methods, got " + std::to_string(methods));
  }
  if (datasets < 1) throw RangeError("Nemenyi needs at least 1 dataset");
  const double* table = nullptr;
  if (alpha == 0.05) {
    table = detail::nemenyi_q_05;
  } else if (alpha == 0.10) {
    table = detail::nemenyi_q_10;
  } else {
    throw UnsupportedAlphaError("alpha must be 0.05 or 0.10");
  }
  const double m = static_cast<double>(methods);
  return table[methods - 2] * std::sqrt(m * (m + 1.0) / (6.0 * static_cast<double>(datasets)));
}

}  // namespace gksmote
