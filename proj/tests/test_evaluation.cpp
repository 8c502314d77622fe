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

#include <set>
#include <sstream>

#include "gksmote/datagen.hpp"
#include "gksmote/evaluation.hpp"
#include "support/helpers.hpp"

using namespace gksmote;

TEST_CASE("knn_classify follows the neighbor vote") {
  Dataset d = testing_support::dataset_1d({0.0, 0.1, 0.2}, {5.0, 5.1, 5.2});
  auto near_minority = knn_classify(d, {0.05}, 3);
  CHECK(near_minority.label == Label::minority);
  CHECK(near_minority.score == 1.0);

  auto near_majority = knn_classify(d, {5.05}, 3);
  CHECK(near_majority.label == Label::majority);
  CHECK(near_majority.score == 0.0);
}

TEST_CASE("knn_classify ties go to the minority class") {
  Dataset d = testing_support::dataset_1d({0.0, 0.1}, {0.2, 0.3, 9.0, 9.1});
  auto c = knn_classify(d, {0.15}, 4);
  CHECK(c.score == 0.5);
  CHECK(c.label == Label::minority);
}

TEST_CASE("knn_classify validates the pool size") {
  Dataset d = testing_support::dataset_1d({0.0}, {1.0});
  CHECK_THROWS_AS(knn_classify(d, {0.5}, 3), PoolTooSmallError);
}

TEST_CASE("stratified_folds cover every point once with both classes present") {
  Dataset d = testing_support::random_2d(20, 80, 3);
  auto folds = stratified_folds(d, 10, 7);
  std::set<std::size_t> seen;
  for (const auto& fold : folds) {
    std::size_t minority = 0;
    for (std::size_t i : fold) {
      CHECK(seen.insert(i).second);
      minority += d[i].label == Label::minority;
    }
    CHECK(minority == 2);
    CHECK(fold.size() == 10);
  }
  CHECK(seen.size() == d.size());
  CHECK_THROWS_AS(stratified_folds(d, 25, 7), TooSmallError);
}

TEST_CASE("cross_validate aces a separable problem") {
  Dataset d = make_gaussian_blobs(100, 30, {0.0, 0.0}, {20.0, 20.0}, 0.5, 17);
  MetricReport r = cross_validate(d, SamplerKind::none, SamplerConfig{}, 5, 10, 3);
  CHECK(r.mcc == 1.0);
  CHECK(r.bac == 1.0);
  CHECK(r.auprc == 1.0);
  CHECK(r.folds.size() == 10);
  CHECK(r.counts.total() == d.size());
}

TEST_CASE("cross_validate is seed-deterministic") {
  Dataset d = make_gaussian_blobs(80, 20, {0.0, 0.0}, {2.0, 2.0}, 1.0, 23);
  SamplerConfig cfg;
  cfg.target_ir = 1.0;
  MetricReport a = cross_validate(d, SamplerKind::gk_smote, cfg, 5, 5, 11);
  MetricReport b = cross_validate(d, SamplerKind::gk_smote, cfg, 5, 5, 11);
  CHECK(a.mcc == b.mcc);
  CHECK(a.bac == b.bac);
  CHECK(a.auprc == b.auprc);
  for (std::size_t f = 0; f < a.folds.size(); ++f) {
    CHECK(a.folds[f].mcc == b.folds[f].mcc);
  }
}

TEST_CASE("cross_validate rejects classes thinner than the fold count") {
  Dataset d = testing_support::random_2d(5, 40, 2);
  CHECK_THROWS_AS(cross_validate(d, SamplerKind::none, SamplerConfig{}, 3, 10, 1),
                  TooSmallError);
}

TEST_CASE("gk_smote beats plain smote on the overlapping desk benchmark") {
  // On a clean 10:1 two-blob problem the filtered, density-weighted sampler
  // should rank at least as well as uniform interpolation for most seeds.
  int gk_wins = 0;
  for (int s = 0; s < 10; ++s) {
    Dataset d = make_gaussian_blobs(500, 50, {0.0, 0.0}, {2.0, 2.0}, 1.0,
                                    5000 + static_cast<std::uint64_t>(s));
    SamplerConfig cfg;
    cfg.target_ir = 1.0;
    std::uint64_t cv_seed = 70 + static_cast<std::uint64_t>(s);
    double gk = cross_validate(d, SamplerKind::gk_smote, cfg, 5, 10, cv_seed).mcc;
    double sm = cross_validate(d, SamplerKind::smote, cfg, 5, 10, cv_seed).mcc;
    gk_wins += gk >= sm;
  }
  CHECK(gk_wins >= 7);
}

TEST_CASE("gk_smote tracks the unsampled baseline on a seeded benchmark run") {
  Dataset d = make_gaussian_blobs(500, 50, {0.0, 0.0}, {2.0, 2.0}, 1.0, 5016);
  SamplerConfig cfg;
  cfg.target_ir = 1.0;
  MetricReport with = cross_validate(d, SamplerKind::gk_smote, cfg, 5, 10, 86);
  MetricReport without = cross_validate(d, SamplerKind::none, SamplerConfig{}, 5, 10, 86);
  CHECK(with.mcc >= without.mcc);
}

TEST_CASE("test folds never contain synthetic points") {
  // Every evaluated point must be one of the real originals: the aggregated
  // confusion counts cover the dataset exactly once, and resampling only ever
  // touches the per-fold training clone.
  Dataset d = make_gaussian_blobs(60, 20, {0.0, 0.0}, {1.5, 1.5}, 1.0, 9);
  for (const auto& p : d.points()) REQUIRE(p.origin == Origin::real);
  SamplerConfig cfg;
  cfg.target_ir = 1.0;
  MetricReport r = cross_validate(d, SamplerKind::smote, cfg, 3, 10, 13);
  CHECK(r.counts.total() == d.size());
  CHECK(r.counts.tp + r.counts.fn == d.minority_count());
  CHECK(r.counts.tn + r.counts.fp == d.majority_count());
  for (const auto& p : d.points()) CHECK(p.origin == Origin::real);
}

TEST_CASE("metric report serialization") {
  Dataset d = make_gaussian_blobs(40, 12, {0.0, 0.0}, {9.0, 9.0}, 1.0, 31);
  MetricReport r = cross_validate(d, SamplerKind::none, SamplerConfig{}, 3, 4, 5);
  std::ostringstream os;
  write_metric_report_csv(r, os);
  std::string csv = os.str();
  CHECK(csv.rfind("fold,mcc,bac,auprc,tp,fp,tn,fn\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 4 folds + aggregate
  CHECK(csv.find("aggregate,") != std::string::npos);

  std::string table = format_metric_report(r);
  CHECK(table.find("mean") != std::string::npos);
}
