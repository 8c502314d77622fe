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

#include <cmath>

#include "gksmote/metrics.hpp"
#include "gksmote/rng.hpp"
#include "support/oracles.hpp"

using namespace gksmote;

TEST_CASE("mcc at the extremes") {
  CHECK(mcc({10, 0, 10, 0}) == 1.0);
  CHECK(mcc({0, 10, 0, 10}) == -1.0);
}

TEST_CASE("mcc hand evaluation") {
  // tp=4, fp=1, fn=2, tn=3: (12 - 2) / sqrt(5*6*4*5) = 10 / sqrt(600).
  ConfusionCounts c{4, 1, 3, 2};
  CHECK_THAT(mcc(c), Catch::Matchers::WithinAbs(0.40824829046386302, 1e-15));
}

TEST_CASE("mcc zero-denominator convention") {
  CHECK(mcc({0, 0, 5, 5}) == 0.0);   // no predicted positives
  CHECK(mcc({3, 2, 0, 0}) == 0.0);   // no actual negatives
}

TEST_CASE("mcc is symmetric under class swap") {
  SeededRng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    ConfusionCounts c{rng.uniform_index(20), rng.uniform_index(20),
                      rng.uniform_index(20), rng.uniform_index(20)};
    ConfusionCounts swapped{c.tn, c.fn, c.tp, c.fp};
    CHECK_THAT(mcc(c), Catch::Matchers::WithinAbs(mcc(swapped), 1e-12));
  }
}

TEST_CASE("balanced_accuracy hand evaluations") {
  CHECK(balanced_accuracy({10, 0, 10, 0}) == 1.0);
  CHECK_THAT(balanced_accuracy({5, 10, 90, 5}), Catch::Matchers::WithinAbs(0.7, 1e-15));
  CHECK_THROWS_AS(balanced_accuracy({0, 0, 10, 0}), EmptyClassError);
}

TEST_CASE("balanced_accuracy of the always-majority classifier is one half") {
  for (std::size_t p : {1u, 7u, 50u}) {
    for (std::size_t q : {3u, 11u, 90u}) {
      CHECK(balanced_accuracy({0, 0, q, p}) == 0.5);
    }
  }
}

TEST_CASE("balanced_accuracy of a fair coin approaches one half") {
  SeededRng rng(2718);
  double sum = 0.0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    ConfusionCounts c;
    for (int i = 0; i < 20; ++i) {
      bool actual_minority = i < 10;
      bool predicted_minority = rng.uniform() < 0.5;
      if (actual_minority) {
        (predicted_minority ? c.tp : c.fn)++;
      } else {
        (predicted_minority ? c.fp : c.tn)++;
      }
    }
    if (c.tp + c.fn == 0 || c.tn + c.fp == 0) continue;
    sum += balanced_accuracy(c);
  }
  CHECK_THAT(sum / trials, Catch::Matchers::WithinAbs(0.5, 0.05));
}

TEST_CASE("auprc of a perfect ranking is one") {
  CHECK(auprc({1, 1, 0, 0}, {0.9, 0.8, 0.2, 0.1}) == 1.0);
}

TEST_CASE("auprc of a single trailing positive") {
  CHECK(auprc({0, 0, 0, 1}, {0.9, 0.8, 0.7, 0.1}) == 0.25);
}

TEST_CASE("auprc breaks score ties pessimistically") {
  // Equal scores: the negative outranks the positive, precision@2 = 1/2.
  CHECK(auprc({1, 0}, {0.5, 0.5}) == 0.5);
  // Three-way tie {+,+,-}: p@2 + p@3 over 2 positives = (1/2 + 2/3)/2.
  CHECK_THAT(auprc({1, 1, 0}, {0.5, 0.5, 0.5}),
             Catch::Matchers::WithinAbs((0.5 + 2.0 / 3.0) / 2.0, 1e-15));
}

TEST_CASE("auprc requires a positive label") {
  CHECK_THROWS_AS(auprc({0, 0}, {0.4, 0.2}), NoPositiveError);
  CHECK_THROWS_AS(auprc({1, 0}, {0.4}), ShapeError);
}

TEST_CASE("auprc matches the threshold-sweep oracle") {
  SeededRng rng(515);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng.uniform_index(49);
    std::vector<int> labels(n);
    std::vector<double> scores(n);
    bool any_positive = false;
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = rng.uniform() < 0.4 ? 1 : 0;
      any_positive |= labels[i] == 1;
      // A small score alphabet forces plenty of ties.
      scores[i] = static_cast<double>(rng.uniform_index(8)) / 8.0;
    }
    if (!any_positive) labels[rng.uniform_index(n)] = 1;
    // The two summation orders are algebraically identical and agree to
    // floating-point rounding.
    CHECK_THAT(auprc(labels, scores),
               Catch::Matchers::WithinAbs(oracle::auprc_step_integration(labels, scores),
                                          1e-12));
  }
}

TEST_CASE("auprc is invariant under monotone score transforms") {
  SeededRng rng(626);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 3 + rng.uniform_index(30);
    std::vector<int> labels(n);
    std::vector<double> scores(n), warped(n);
    labels[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) labels[i] = rng.uniform() < 0.5 ? 1 : 0;
      scores[i] = static_cast<double>(rng.uniform_index(6)) / 6.0;
      warped[i] = std::exp(3.0 * scores[i]) - 0.5;  // strictly increasing
    }
    CHECK(auprc(labels, scores) == auprc(labels, warped));
  }
}
