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

#include <ostream>
#include <string>
#include <vector>

#include "gksmote/csv.hpp"
#include "gksmote/dataset.hpp"
#include "gksmote/evaluation.hpp"
#include "gksmote/stats.hpp"

// Benchmark sweep: for every (dataset, method, noise rate, seed) cell, split
// 75/25, inject label noise into both splits, cross-validate the sampler on
// the training split, and score a model fit on the whole training split
// against the held-out test split. Per-cell failures land in the row's error
// column instead of aborting the sweep.

namespace gksmote {

struct BenchConfig {
  std::vector<SamplerKind> methods{SamplerKind::gk_smote, SamplerKind::smote};
  std::vector<double> noise_rates{0.0};
  std::vector<std::uint64_t> seeds{1};
  std::size_t folds = 10;
  std::size_t k = 5;      // sampler neighbor count
  std::size_t k_clf = 5;  // classifier neighbor count
  double target_ir = 1.0;
  BandwidthPolicy bandwidth{};
  double test_fraction = 0.25;
};

struct BenchRow {
  std::string dataset;
  SamplerKind method = SamplerKind::none;
  double noise_rate = 0.0;
  std::uint64_t seed = 0;
  MetricReport cv;
  double test_mcc = 0.0;
  double test_bac = 0.0;
  double test_auprc = 0.0;
  std::string error;  // empty on success

  bool failed() const { return !error.empty(); }
};

inline BenchRow run_bench_cell(const Dataset& d, SamplerKind method,
                               double noise_rate, std::uint64_t seed,
                               const BenchConfig& cfg) {
  BenchRow row;
  row.dataset = d.name();
  row.method = method;
  row.noise_rate = noise_rate;
  row.seed = seed;
  try {
    SplitResult split = stratified_split(d, {cfg.test_fraction, derive_seed(seed, 101)});
    Dataset train = inject_label_noise(split.train, {noise_rate, derive_seed(seed, 102)});
    Dataset test = inject_label_noise(split.test, {noise_rate, derive_seed(seed, 103)});

    SamplerConfig scfg;
    scfg.target_ir = cfg.target_ir;
    scfg.k = cfg.k;
    scfg.bandwidth = cfg.bandwidth;
    row.cv = cross_validate(train, method, scfg, cfg.k_clf, cfg.folds,
                            derive_seed(seed, 104));

    Dataset fitted = apply_sampler(train, method, scfg, derive_seed(seed, 105));
    ConfusionCounts counts;
    std::vector<int> labels;
    std::vector<double> scores;
    for (const auto& p : test.points()) {
      Classification c = knn_classify(fitted, p.features, cfg.k_clf);
      bool actual_minority = p.label == Label::minority;
      bool predicted_minority = c.label == Label::minority;
      if (actual_minority) {
        (predicted_minority ? counts.tp : counts.fn)++;
      } else {
        (predicted_minority ? counts.fp : counts.tn)++;
      }
      labels.push_back(actual_minority ? 1 : 0);
      scores.push_back(c.score);
    }
    row.test_mcc = mcc(counts);
    row.test_bac = balanced_accuracy(counts);
    row.test_auprc = auprc(labels, scores);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

/// Cells run in key order (dataset, method, rate, seed), so the output order
/// is fixed regardless of how the work would be scheduled.
inline std::vector<BenchRow> run_bench(const std::vector<Dataset>& datasets,
                                       const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  for (const Dataset& d : datasets) {
    for (SamplerKind method : cfg.methods) {
      for (double rate : cfg.noise_rates) {
        for (std::uint64_t seed : cfg.seeds) {
          rows.push_back(run_bench_cell(d, method, rate, seed, cfg));
        }
      }
    }
  }
  return rows;
}

struct MetricStats {
  std::string metric;
  std::size_t n_methods = 0;
  std::size_t n_blocks = 0;  // complete (dataset, rate, seed) blocks
  double friedman_chi2 = 0.0;
  double p_value = 1.0;
  double cd_05 = 0.0;
  double cd_10 = 0.0;
  std::vector<std::pair<std::string, double>> mean_ranks;  // per method
};

/// Friedman/Nemenyi across methods, one block per (dataset, rate, seed) cell
/// where every method succeeded, on the held-out test metrics.
inline std::vector<MetricStats> compute_bench_stats(const std::vector<BenchRow>& rows,
                                                    const BenchConfig& cfg) {
  std::vector<MetricStats> out;
  if (cfg.methods.size() < 2) return out;

  struct MetricAccessor {
    const char* name;
    double (*get)(const BenchRow&);
  };
  const MetricAccessor accessors[] = {
      {"mcc", [](const BenchRow& r) { return r.test_mcc; }},
      {"bac", [](const BenchRow& r) { return r.test_bac; }},
      {"auprc", [](const BenchRow& r) { return r.test_auprc; }},
  };

  // rows are in (dataset, method, rate, seed) order; regroup per block.
  std::size_t cells_per_method = cfg.noise_rates.size() * cfg.seeds.size();
  std::size_t cells_per_dataset = cfg.methods.size() * cells_per_method;
  std::size_t n_datasets = cfg.methods.empty() ? 0 : rows.size() / cells_per_dataset;

  for (const MetricAccessor& acc : accessors) {
    std::vector<std::vector<double>> scores(cfg.methods.size());
    for (std::size_t ds = 0; ds < n_datasets; ++ds) {
      for (std::size_t cell = 0; cell < cells_per_method; ++cell) {
        bool complete = true;
        std::vector<double> column(cfg.methods.size());
        for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
          const BenchRow& row = rows[ds * cells_per_dataset + mi * cells_per_method + cell];
          if (row.failed()) {
            complete = false;
            break;
          }
          column[mi] = acc.get(row);
        }
        if (!complete) continue;
        for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
          scores[mi].push_back(column[mi]);
        }
      }
    }
    MetricStats ms;
    ms.metric = acc.name;
    ms.n_methods = cfg.methods.size();
    ms.n_blocks = scores.front().size();
    if (ms.n_blocks >= 2) {
      RankMatrix rm = make_rank_matrix(scores);
      FriedmanResult fr = friedman_test(rm);
      ms.friedman_chi2 = fr.statistic;
      ms.p_value = fr.p_value;
      ms.cd_05 = nemenyi_cd(ms.n_methods, ms.n_blocks, 0.05);
      ms.cd_10 = nemenyi_cd(ms.n_methods, ms.n_blocks, 0.10);
      for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
        double mean = 0.0;
        for (double v : rm.ranks[mi]) mean += v;
        mean /= static_cast<double>(ms.n_blocks);
        ms.mean_ranks.emplace_back(to_string(cfg.methods[mi]), mean);
      }
    }
    out.push_back(std::move(ms));
  }
  return out;
}

namespace detail {
inline std::string format_rate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}
}  // namespace detail

inline void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& os) {
  os << "dataset,method,noise_rate,seed,cv_mcc,cv_bac,cv_auprc,"
        "test_mcc,test_bac,test_auprc,error\n";
  for (const BenchRow& r : rows) {
    os << r.dataset << ',' << to_string(r.method) << ',' << detail::format_rate(r.noise_rate)
       << ',' << r.seed << ',';
    if (r.failed()) {
      std::string msg = r.error;
      for (char& c : msg) {
        if (c == ',' || c == '\n') c = ';';
      }
      os << ",,,,,," << msg << '\n';
    } else {
      os << detail::format_double(r.cv.mcc) << ',' << detail::format_double(r.cv.bac)
         << ',' << detail::format_double(r.cv.auprc) << ','
         << detail::format_double(r.test_mcc) << ',' << detail::format_double(r.test_bac)
         << ',' << detail::format_double(r.test_auprc) << ",\n";
    }
  }
}

inline void write_bench_stats_csv(const std::vector<MetricStats>& stats, std::ostream& os) {
  os << "metric,method,mean_rank,n_methods,n_blocks,friedman_chi2,p_value,"
        "nemenyi_cd_05,nemenyi_cd_10\n";
  for (const MetricStats& ms : stats) {
    for (const auto& [method, rank] : ms.mean_ranks) {
      os << ms.metric << ',' << method << ',' << detail::format_double(rank) << ','
         << ms.n_methods << ',' << ms.n_blocks << ','
         << detail::format_double(ms.friedman_chi2) << ','
         << detail::format_double(ms.p_value) << ',' << detail::format_double(ms.cd_05)
         << ',' << detail::format_double(ms.cd_10) << '\n';
    }
  }
}

}  // namespace gksmote
