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

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "gksmote/dataset.hpp"
#include "gksmote/gk_smote.hpp"
#include "gksmote/metrics.hpp"
#include "gksmote/neighbors.hpp"
#include "gksmote/smote.hpp"

// Built-in k-NN classifier and stratified k-fold cross-validation. The
// sampler is fit and applied to the training portion of each fold only; test
// folds stay untouched originals.

namespace gksmote {

struct Classification {
  Label label;
  double score;  // fraction of minority labels among the k nearest
};

/// Majority vote over the k nearest training points, ties to minority.
inline Classification knn_classify(const Dataset& train,
                                   const std::vector<double>& query,
                                   std::size_t k) {
  NeighborList list = knn(train, query, k);
  std::size_t minority_votes = 0;
  for (const Neighbor& n : list.entries) {
    if (train[n.index].label == Label::minority) ++minority_votes;
  }
  double score = static_cast<double>(minority_votes) / static_cast<double>(k);
  return {score >= 0.5 ? Label::minority : Label::majority, score};
}

/// Sanity baseline that predicts majority with score 0 for every query.
inline Classification always_majority_classify(const Dataset&,
                                               const std::vector<double>&) {
  return {Label::majority, 0.0};
}

enum class SamplerKind { none, smote, gk_smote };

inline const char* to_string(SamplerKind s) {
  switch (s) {
    case SamplerKind::smote: return "smote";
    case SamplerKind::gk_smote: return "gksmote";
    default: return "none";
  }
}

struct FoldMetrics {
  double mcc = 0.0;
  double bac = 0.0;
  double auprc = 0.0;
  ConfusionCounts counts;
};

struct MetricReport {
  double mcc = 0.0;    // means over folds
  double bac = 0.0;
  double auprc = 0.0;
  ConfusionCounts counts;  // summed over folds
  std::vector<FoldMetrics> folds;
};

/// Per class: shuffle the member indices with the given seed and deal them
/// into `folds` nearly equal slices, so every fold holds members of both
/// classes whenever each class has at least `folds` of them.
inline std::vector<std::vector<std::size_t>> stratified_folds(const Dataset& d,
                                                              std::size_t folds,
                                                              std::uint64_t seed) {
  if (folds < 2) throw TooSmallError("cross-validation needs at least 2 folds");
  SeededRng rng(seed);
  std::vector<std::vector<std::size_t>> out(folds);
  for (const auto* cls : {&d.minority_indices(), &d.majority_indices()}) {
    if (cls->size() < folds) {
      throw TooSmallError("a class with " + std::to_string(cls->size()) +
                          " members cannot fill " + std::to_string(folds) + " folds");
    }
    std::vector<std::size_t> order = *cls;
    rng.shuffle(order);
    for (std::size_t f = 0; f < folds; ++f) {
      std::size_t begin = f * order.size() / folds;
      std::size_t end = (f + 1) * order.size() / folds;
      for (std::size_t i = begin; i < end; ++i) out[f].push_back(order[i]);
    }
  }
  return out;
}

/// Applies the chosen sampler to a training set.
inline Dataset apply_sampler(const Dataset& train, SamplerKind kind,
                             SamplerConfig cfg, std::uint64_t seed) {
  cfg.seed = seed;
  switch (kind) {
    case SamplerKind::smote: return smote(train, cfg).resampled;
    case SamplerKind::gk_smote: return gk_smote(train, cfg).resampled;
    default: return train;
  }
}

inline MetricReport cross_validate(const Dataset& d, SamplerKind sampler,
                                   const SamplerConfig& sampler_cfg,
                                   std::size_t k_clf, std::size_t folds,
                                   std::uint64_t seed) {
  auto fold_indices = stratified_folds(d, folds, derive_seed(seed, 0));
  MetricReport report;
  for (std::size_t f = 0; f < folds; ++f) {
    std::vector<bool> in_test(d.size(), false);
    for (std::size_t i : fold_indices[f]) in_test[i] = true;
    std::vector<LabeledPoint> train_points;
    train_points.reserve(d.size() - fold_indices[f].size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!in_test[i]) train_points.push_back(d[i]);
    }
    Dataset train(std::move(train_points), d.name(), d.meta());
    Dataset fitted = apply_sampler(train, sampler, sampler_cfg, derive_seed(seed, 1 + f));

    FoldMetrics fold;
    std::vector<int> labels;
    std::vector<double> scores;
    for (std::size_t i : fold_indices[f]) {
      Classification c = knn_classify(fitted, d[i].features, k_clf);
      bool actual_minority = d[i].label == Label::minority;
      bool predicted_minority = c.label == Label::minority;
      if (actual_minority) {
        (predicted_minority ? fold.counts.tp : fold.counts.fn)++;
      } else {
        (predicted_minority ? fold.counts.fp : fold.counts.tn)++;
      }
      labels.push_back(actual_minority ? 1 : 0);
      scores.push_back(c.score);
    }
    fold.mcc = mcc(fold.counts);
    fold.bac = balanced_accuracy(fold.counts);
    fold.auprc = auprc(labels, scores);
    report.folds.push_back(fold);
  }
  for (const FoldMetrics& f : report.folds) {
    report.mcc += f.mcc;
    report.bac += f.bac;
    report.auprc += f.auprc;
    report.counts.tp += f.counts.tp;
    report.counts.fp += f.counts.fp;
    report.counts.tn += f.counts.tn;
    report.counts.fn += f.counts.fn;
  }
  const double n = static_cast<double>(report.folds.size());
  report.mcc /= n;
  report.bac /= n;
  report.auprc /= n;
  return report;
}

namespace detail {
inline std::string format_metric(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}
}  // namespace detail

/// Flat CSV: one row per fold plus an aggregate row.
inline void write_metric_report_csv(const MetricReport& r, std::ostream& os) {
  os << "fold,mcc,bac,auprc,tp,fp,tn,fn\n";
  for (std::size_t f = 0; f < r.folds.size(); ++f) {
    const FoldMetrics& m = r.folds[f];
    os << f << ',' << detail::format_metric(m.mcc) << ',' << detail::format_metric(m.bac)
       << ',' << detail::format_metric(m.auprc) << ',' << m.counts.tp << ','
       << m.counts.fp << ',' << m.counts.tn << ',' << m.counts.fn << '\n';
  }
  os << "aggregate," << detail::format_metric(r.mcc) << ',' << detail::format_metric(r.bac)
     << ',' << detail::format_metric(r.auprc) << ',' << r.counts.tp << ',' << r.counts.fp
     << ',' << r.counts.tn << ',' << r.counts.fn << '\n';
}

/// Human-readable fold table.
inline std::string format_metric_report(const MetricReport& r) {
  std::string out = "fold        mcc      bac    auprc\n";
  char line[96];
  for (std::size_t f = 0; f < r.folds.size(); ++f) {
    std::snprintf(line, sizeof(line), "%4zu   %8.4f %8.4f %8.4f\n", f, r.folds[f].mcc,
                  r.folds[f].bac, r.folds[f].auprc);
    out += line;
  }
  std::snprintf(line, sizeof(line), "mean   %8.4f %8.4f %8.4f\n", r.mcc, r.bac, r.auprc);
  out += line;
  return out;
}

}  // namespace gksmote
