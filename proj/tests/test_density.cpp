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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "gksmote/density.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace gksmote;

TEST_CASE("select_bandwidth fixed mode passes through") {
  CHECK(select_bandwidth({1.0, 2.0}, BandwidthPolicy::fixed(0.5)) == 0.5);
  CHECK_THROWS_AS(select_bandwidth({1.0}, BandwidthPolicy::fixed(-1.0)), RateError);
}

TEST_CASE("select_bandwidth clamps degenerate samples") {
  CHECK(select_bandwidth({0.7, 0.7, 0.7}, BandwidthPolicy::silverman()) == 1e-6);
}

TEST_CASE("select_bandwidth evaluates Silverman's rule") {
  std::vector<double> values{1, 2, 3, 4, 5};
  // 1.06 * sqrt(2.5) * 5^(-1/5), frozen from a direct evaluation.
  double h = select_bandwidth(values, BandwidthPolicy::silverman());
  CHECK_THAT(h, Catch::Matchers::WithinAbs(1.2147359056659339, 1e-12));
  CHECK_THAT(h, Catch::Matchers::WithinAbs(
                    1.06 * std::sqrt(2.5) * std::pow(5.0, -0.2), 1e-15));
}

TEST_CASE("select_bandwidth rejects empty input") {
  CHECK_THROWS_AS(select_bandwidth({}, BandwidthPolicy::silverman()), EmptyInputError);
}

TEST_CASE("kde value at zero distance with unit bandwidth") {
  // All k neighbors at distance zero: f = K_1(0) = 1/sqrt(2 pi).
  CHECK_THAT(kde_from_distances({0.0, 0.0, 0.0}, 1.0),
             Catch::Matchers::WithinAbs(0.3989422804014327, 1e-15));
}

TEST_CASE("kde of distances {0, h} with h = 1") {
  CHECK_THAT(kde_from_distances({0.0, 1.0}, 1.0),
             Catch::Matchers::WithinAbs(0.32045650246028801, 1e-15));
}

TEST_CASE("kde depends only on the distance multiset") {
  // Two duplicated minority points share every neighbor distance.
  std::vector<LabeledPoint> pts{
      {{0.0, 0.0}, Label::minority},
      {{0.0, 0.0}, Label::minority},
      {{1.0, 0.0}, Label::majority},
      {{0.0, 1.0}, Label::majority},
  };
  Dataset d(pts, "dups");
  CHECK(kde_density(d, 0, 3, 0.7) == kde_density(d, 1, 3, 0.7));
}

TEST_CASE("kde_density matches the full-sort oracle") {
  SeededRng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n_min = 3 + rng.uniform_index(20);
    std::size_t n_maj = 5 + rng.uniform_index(70);
    Dataset d = testing_support::random_2d(n_min, n_maj, 1000 + trial);
    std::size_t k = 1 + rng.uniform_index(5);
    double h = 0.05 + rng.uniform();
    for (std::size_t idx = 0; idx < d.size(); idx += 7) {
      double got = kde_density(d, idx, k, h);
      double want = oracle::kde_full_sort(d, idx, k, h);
      CHECK_THAT(got, Catch::Matchers::WithinRel(want, 1e-9));
    }
  }
}

TEST_CASE("kde_density is invariant under rigid motions") {
  SeededRng rng(88);
  Dataset d = testing_support::random_2d(15, 40, 55);
  double angle = rng.uniform() * 6.28;
  double c = std::cos(angle), s = std::sin(angle);
  double tx = rng.uniform() * 10 - 5, ty = rng.uniform() * 10 - 5;
  std::vector<LabeledPoint> moved;
  for (const auto& p : d.points()) {
    moved.push_back({{c * p.features[0] - s * p.features[1] + tx,
                      s * p.features[0] + c * p.features[1] + ty},
                     p.label,
                     p.origin});
  }
  Dataset d2(moved, "moved");
  for (std::size_t idx = 0; idx < d.size(); idx += 5) {
    CHECK_THAT(kde_density(d2, idx, 4, 0.3),
               Catch::Matchers::WithinRel(kde_density(d, idx, 4, 0.3), 1e-9));
  }
}

TEST_CASE("kde_density is monotone in dominated distance lists") {
  Dataset d = testing_support::random_2d(20, 60, 31);
  const std::size_t k = 5;
  const double h = 0.4;
  std::vector<std::vector<double>> dists(d.size());
  std::vector<double> dens(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (const Neighbor& n : knn(d, i, k).entries) dists[i].push_back(n.distance);
    dens[i] = kde_density(d, i, k, h);
  }
  for (std::size_t p = 0; p < d.size(); ++p) {
    for (std::size_t q = 0; q < d.size(); ++q) {
      bool dominates = true;
      for (std::size_t j = 0; j < k; ++j) dominates &= dists[p][j] <= dists[q][j];
      if (dominates) CHECK(dens[p] >= dens[q]);
    }
  }
}

TEST_CASE("categorize marks noisy exactly when every neighbor is majority") {
  for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
    Dataset d = testing_support::random_2d(12, 48, seed);
    auto records = categorize(d, 4, 0.2);
    REQUIRE(records.size() == d.minority_count());
    for (const auto& rec : records) {
      bool brute = oracle::all_neighbors_majority(d, rec.dataset_index, 4);
      CHECK((rec.verdict == Verdict::noisy) == brute);
      CHECK((rec.majority_count == 4) == brute);
      if (rec.verdict == Verdict::noisy) {
        CHECK_FALSE(rec.density.has_value());
        CHECK(rec.cluster == ClusterId::none);
      } else {
        REQUIRE(rec.density.has_value());
        CHECK(*rec.density > 0.0);
        CHECK(rec.verdict == Verdict::pending);
      }
    }
  }
}

TEST_CASE("categorize on a dataset with an isolated minority point") {
  // Sample at 50 sits inside the majority mass; samples near 0 are clustered.
  Dataset d = testing_support::dataset_1d({0.0, 0.1, 0.2, 0.3, 50.0},
                                          {49.0, 50.5, 51.0, 52.0});
  auto records = categorize(d, 3, BandwidthPolicy::silverman());
  CHECK(records[4].verdict == Verdict::noisy);
  CHECK(records[0].verdict == Verdict::pending);
  CHECK(records[0].majority_count == 0);
  REQUIRE(records[0].density.has_value());
  REQUIRE(records[1].density.has_value());
  CHECK(*records[0].density > 0.0);
}

TEST_CASE("resolve_bandwidth fails when everything is noisy") {
  Dataset d = testing_support::dataset_1d({0.0}, {0.1, 0.2, 0.3, 0.4});
  CHECK_THROWS_AS(resolve_bandwidth(d, 3, BandwidthPolicy::silverman()), AllNoiseError);
}

TEST_CASE("partition_neighbors of the global density maximum is empty") {
  // Dense minority cluster; its center has the highest density around.
  std::vector<LabeledPoint> pts{
      {{0.0, 0.0}, Label::minority},  {{0.1, 0.0}, Label::minority},
      {{-0.1, 0.0}, Label::minority}, {{0.0, 0.1}, Label::minority},
      {{0.0, -0.1}, Label::minority}, {{5.0, 5.0}, Label::majority},
      {{6.0, 5.0}, Label::majority},  {{5.0, 6.0}, Label::majority},
  };
  Dataset d(pts, "peak");
  double h = 0.5;
  std::size_t best = 0;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (kde_density(d, i, 3, h) > kde_density(d, best, 3, h)) best = i;
  }
  REQUIRE(d[best].label == Label::minority);
  auto part = partition_neighbors(d, best, 3, BandwidthPolicy::fixed(h));
  CHECK(part.hon.empty());
  CHECK(part.hen.empty());
}

TEST_CASE("partition_neighbors includes equal-density minority neighbors") {
  // Two coincident minority points have identical distance multisets, hence
  // exactly equal densities; the >= rule must include the twin.
  std::vector<LabeledPoint> pts{
      {{0.0, 0.0}, Label::minority},
      {{0.0, 0.0}, Label::minority},
      {{0.4, 0.0}, Label::minority},
      {{2.0, 0.0}, Label::majority},
      {{0.0, 2.0}, Label::majority},
      {{-2.0, 0.0}, Label::majority},
  };
  Dataset d(pts, "twin");
  auto part = partition_neighbors(d, 0, 2, BandwidthPolicy::fixed(0.5));
  CHECK(std::count(part.hon.begin(), part.hon.end(), 1) == 1);
}

TEST_CASE("partition_neighbors matches brute-force predicate evaluation") {
  // Three clustered minority, three spread majority.
  Dataset d = testing_support::dataset_1d({0.0, 0.1, 0.2}, {1.0, 3.0, 5.0});
  const std::size_t k = 3;
  const double h = 0.5;
  for (std::size_t mi = 0; mi < 3; ++mi) {
    auto part = partition_neighbors(d, mi, k, BandwidthPolicy::fixed(h));
    std::vector<std::size_t> want_hon, want_hen;
    double own = oracle::kde_full_sort(d, mi, k, h);
    for (const Neighbor& n : knn(d, mi, k).entries) {
      double theirs = oracle::kde_full_sort(d, n.index, k, h);
      if (d[n.index].label == Label::minority && theirs >= own) {
        want_hon.push_back(n.index);
      } else if (d[n.index].label == Label::majority && theirs > own) {
        want_hen.push_back(n.index);
      }
    }
    CHECK(part.hon == want_hon);
    CHECK(part.hen == want_hen);
  }
}
