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

// Command-line front door: `oversample` rebalances one CSV, `inspect` dumps
// the per-minority-sample taxonomy, `bench` sweeps datasets x methods x
// noise rates x seeds and emits a long-format results table with Friedman /
// Nemenyi statistics. Every output file gets a replayable key=value manifest
// next to it.
//
// Exit codes: 0 success, 1 partial bench failure, 2 usage/config error,
// 3 data error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gksmote/gksmote.hpp"

namespace {

using namespace gksmote;

constexpr int exit_ok = 0;
constexpr int exit_partial = 1;
constexpr int exit_config = 2;
constexpr int exit_data = 3;

BandwidthPolicy parse_bandwidth(const std::string& s) {
  if (s == "silverman") return BandwidthPolicy::silverman();
  if (s.rfind("fixed:", 0) == 0) {
    auto v = detail::parse_double(s.substr(6));
    if (v && *v > 0.0) return BandwidthPolicy::fixed(*v);
  }
  throw RateError("--bandwidth must be 'silverman' or 'fixed:<h>' with h > 0, got '" +
                  s + "'");
}

SamplerKind parse_method(const std::string& s) {
  if (s == "gksmote") return SamplerKind::gk_smote;
  if (s == "smote") return SamplerKind::smote;
  if (s == "none") return SamplerKind::none;
  throw RateError("--method(s) accepts gksmote, smote or none, got '" + s + "'");
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

struct InputFlags {
  std::string label_column = "auto";
  std::string minority_value;
  bool no_normalize = false;

  LoadOptions load_options() const {
    LoadOptions o;
    o.label_column = label_column;
    o.minority_value = minority_value;
    o.normalize = !no_normalize;
    return o;
  }

  void add_to(CLI::App* cmd) {
    cmd->add_option("--label-column", label_column,
                    "Label column: name, 0-based index, 'last', or 'auto'");
    cmd->add_option("--minority-value", minority_value,
                    "Label value of the minority class (default: least frequent)");
    cmd->add_flag("--no-normalize", no_normalize,
                  "Skip the per-feature min-max scaling to [0,1]");
  }

  void record(RunManifest& m) const {
    m.set("label_column", label_column);
    m.set("minority_value", minority_value.empty() ? "auto" : minority_value);
    m.set("normalize", !no_normalize);
  }
};

int run_oversample(const std::string& input, const std::string& method_str,
                   double ir, std::uint64_t k, std::uint64_t seed,
                   const std::string& bandwidth_str, const std::string& out,
                   const InputFlags& in_flags, const std::string& command) {
  SamplerKind method = parse_method(method_str);
  if (method == SamplerKind::none) {
    throw RateError("--method must be gksmote or smote for oversample");
  }
  SamplerConfig cfg;
  cfg.target_ir = ir;
  cfg.k = k;
  cfg.seed = seed;
  cfg.bandwidth = parse_bandwidth(bandwidth_str);
  if (!(cfg.target_ir >= 1.0)) throw RateError("target IR must be >= 1");
  if (cfg.k == 0) throw RateError("--k must be >= 1");

  Dataset d = load_csv(input, in_flags.load_options());
  std::cout << "P=" << d.minority_count() << '\n';
  if (method == SamplerKind::gk_smote) {
    GkSmoteResult res = gk_smote(d, cfg);
    std::cout << "P_prime=" << res.plan.entries.size() << '\n'
              << "N=" << res.plan.total << '\n'
              << "N_A=" << res.plan.cluster_a_quota << '\n'
              << "N_B=" << res.plan.cluster_b_quota << '\n'
              << "bandwidth=" << detail::format_double(res.bandwidth) << '\n';
    save_csv(res.resampled, out);
  } else {
    SmoteResult res = smote(d, cfg);
    std::cout << "P_prime=" << d.minority_count() << '\n'
              << "N=" << res.trace.size() << '\n';
    save_csv(res.resampled, out);
  }

  RunManifest m;
  m.set("command", command);
  m.set("tool_version", version_string);
  m.set("subcommand", "oversample");
  m.set("input", input);
  m.set("out", out);
  m.set("method", method_str);
  m.set("ir", ir);
  m.set("k", k);
  m.set("seed", seed);
  m.set("bandwidth", bandwidth_str);
  in_flags.record(m);
  m.save(out + ".manifest");
  return exit_ok;
}

int run_inspect(const std::string& input, std::uint64_t k,
                const std::string& bandwidth_str, const std::string& out,
                std::string scatter_out, const std::string& scatter_features,
                const InputFlags& in_flags, const std::string& command) {
  if (k == 0) throw RateError("--k must be >= 1");
  BandwidthPolicy policy = parse_bandwidth(bandwidth_str);
  if (scatter_out.empty()) scatter_out = out + ".scatter.csv";

  std::size_t fx = 0, fy = 1;
  {
    std::istringstream ss(scatter_features);
    char comma = 0;
    if (!(ss >> fx >> comma >> fy) || comma != ',') {
      throw RateError("--scatter-features expects 'i,j', got '" + scatter_features + "'");
    }
  }

  Dataset d = load_csv(input, in_flags.load_options());
  if (fx >= d.dim() || fy >= d.dim()) {
    throw RateError("--scatter-features index out of range for dimension " +
                    std::to_string(d.dim()));
  }

  // Full taxonomy: filter + densities + 2-means cluster, no generation.
  SamplerConfig cfg;
  cfg.k = k;
  cfg.bandwidth = policy;
  cfg.target_ir = std::max(1.0, imbalance_ratio(d));  // quota 0: inspect only
  GkSmoteResult res = gk_smote(d, cfg);

  {
    std::ofstream os(out);
    if (!os) throw ParseError("cannot write '" + out + "'");
    os << "index,m,density,verdict,cluster\n";
    for (const DensityRecord& rec : res.records) {
      os << rec.sample_index << ',' << rec.majority_count << ',';
      if (rec.density) os << detail::format_double(*rec.density);
      os << ',' << to_string(rec.verdict) << ',' << to_string(rec.cluster) << '\n';
    }
  }
  {
    std::ofstream os(scatter_out);
    if (!os) throw ParseError("cannot write '" + scatter_out + "'");
    os << "x,y,class,origin\n";
    for (const auto& p : d.points()) {
      os << detail::format_double(p.features[fx]) << ','
         << detail::format_double(p.features[fy]) << ','
         << (p.label == Label::minority ? '1' : '0') << ','
         << (p.origin == Origin::synthetic ? "synthetic" : "real") << '\n';
    }
  }
  std::cout << "records=" << res.records.size() << '\n'
            << "bandwidth=" << detail::format_double(res.bandwidth) << '\n';

  RunManifest m;
  m.set("command", command);
  m.set("tool_version", version_string);
  m.set("subcommand", "inspect");
  m.set("input", input);
  m.set("out", out);
  m.set("scatter_out", scatter_out);
  m.set("scatter_features", scatter_features);
  m.set("k", k);
  m.set("bandwidth", bandwidth_str);
  in_flags.record(m);
  m.save(out + ".manifest");
  return exit_ok;
}

int run_bench(const std::vector<std::string>& inputs,
              const std::vector<std::string>& method_strs,
              const std::vector<double>& noise_rates,
              const std::vector<std::uint64_t>& seeds, std::uint64_t folds,
              std::uint64_t k, std::uint64_t k_clf, double ir,
              const std::string& bandwidth_str, double test_fraction,
              const std::string& out, std::string stats_out,
              const InputFlags& in_flags, const std::string& command) {
  BenchConfig cfg;
  cfg.methods.clear();
  for (const auto& s : method_strs) cfg.methods.push_back(parse_method(s));
  cfg.noise_rates = noise_rates;
  cfg.seeds = seeds;
  cfg.folds = folds;
  cfg.k = k;
  cfg.k_clf = k_clf;
  cfg.target_ir = ir;
  cfg.bandwidth = parse_bandwidth(bandwidth_str);
  cfg.test_fraction = test_fraction;
  if (cfg.methods.empty()) throw RateError("--methods must name at least one method");
  if (cfg.noise_rates.empty()) throw RateError("--noise-rates must hold at least one rate");
  for (double r : cfg.noise_rates) {
    if (!(r >= 0.0 && r <= 0.5)) {
      throw RateError("--noise-rates entries must lie in [0, 0.5]");
    }
  }
  if (cfg.seeds.empty()) throw RateError("--seeds must hold at least one seed");
  if (!(cfg.target_ir >= 1.0)) throw RateError("target IR must be >= 1");
  if (cfg.k == 0 || cfg.k_clf == 0) throw RateError("--k and --k-clf must be >= 1");
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw RateError("--test-fraction must lie in (0, 1)");
  }
  if (stats_out.empty()) stats_out = out + ".stats.csv";

  std::vector<Dataset> datasets;
  for (const auto& path : inputs) datasets.push_back(load_csv(path, in_flags.load_options()));

  std::vector<BenchRow> rows = run_bench(datasets, cfg);
  {
    std::ofstream os(out);
    if (!os) throw ParseError("cannot write '" + out + "'");
    write_bench_csv(rows, os);
  }
  std::vector<MetricStats> stats = compute_bench_stats(rows, cfg);
  {
    std::ofstream os(stats_out);
    if (!os) throw ParseError("cannot write '" + stats_out + "'");
    write_bench_stats_csv(stats, os);
  }

  std::size_t failures = 0;
  for (const BenchRow& r : rows) {
    if (r.failed()) ++failures;
  }
  std::cout << "rows=" << rows.size() << " failures=" << failures << '\n';
  for (const MetricStats& ms : stats) {
    std::cout << ms.metric << ": friedman_chi2=" << detail::format_double(ms.friedman_chi2)
              << " p=" << detail::format_double(ms.p_value)
              << " cd05=" << detail::format_double(ms.cd_05) << '\n';
    for (const auto& [method, rank] : ms.mean_ranks) {
      std::cout << "  rank[" << method << "]=" << detail::format_double(rank) << '\n';
    }
  }

  RunManifest m;
  m.set("command", command);
  m.set("tool_version", version_string);
  m.set("subcommand", "bench");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    m.set("input" + std::to_string(i), inputs[i]);
  }
  m.set("out", out);
  m.set("stats_out", stats_out);
  {
    std::string ms;
    for (const auto& s : method_strs) ms += (ms.empty() ? "" : ",") + s;
    m.set("methods", ms);
    std::string rs;
    for (double r : noise_rates) rs += (rs.empty() ? "" : ",") + detail::format_rate(r);
    m.set("noise_rates", rs);
    std::string ss;
    for (auto s : seeds) ss += (ss.empty() ? "" : ",") + std::to_string(s);
    m.set("seeds", ss);
  }
  m.set("folds", folds);
  m.set("k", k);
  m.set("k_clf", k_clf);
  m.set("ir", ir);
  m.set("bandwidth", bandwidth_str);
  m.set("test_fraction", test_fraction);
  in_flags.record(m);
  m.save(out + ".manifest");
  return failures == 0 ? exit_ok : exit_partial;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GK-SMOTE oversampling and benchmarking for imbalanced binary CSV datasets"};
  app.set_version_flag("--version", gksmote::version_string);
  app.require_subcommand(1);
  const std::string command = join_args(argc, argv);

  // oversample
  auto* over = app.add_subcommand("oversample", "Rebalance a CSV with GK-SMOTE or SMOTE");
  std::string ov_input, ov_method = "gksmote", ov_bandwidth = "silverman", ov_out;
  double ov_ir = 1.0;
  std::uint64_t ov_k = 5, ov_seed = 0;
  InputFlags ov_flags;
  over->add_option("input", ov_input, "Input CSV")->required();
  over->add_option("--method", ov_method, "gksmote or smote");
  over->add_option("--ir", ov_ir, "Target imbalance ratio (>= 1)");
  over->add_option("--k", ov_k, "Neighbor count");
  over->add_option("--seed", ov_seed, "RNG seed");
  over->add_option("--bandwidth", ov_bandwidth, "silverman or fixed:<h>");
  over->add_option("--out", ov_out, "Output CSV")->required();
  ov_flags.add_to(over);

  // inspect
  auto* insp = app.add_subcommand("inspect", "Dump the per-minority-sample taxonomy");
  std::string in_input, in_bandwidth = "silverman", in_out, in_scatter,
              in_features = "0,1";
  std::uint64_t in_k = 5;
  InputFlags in_flags;
  insp->add_option("input", in_input, "Input CSV")->required();
  insp->add_option("--k", in_k, "Neighbor count");
  insp->add_option("--bandwidth", in_bandwidth, "silverman or fixed:<h>");
  insp->add_option("--out", in_out, "Records CSV (index,m,density,verdict,cluster)")->required();
  insp->add_option("--scatter-out", in_scatter, "Scatter CSV (default: <out>.scatter.csv)");
  insp->add_option("--scatter-features", in_features, "Feature pair for the scatter export");
  in_flags.add_to(insp);

  // bench
  auto* bench = app.add_subcommand("bench", "Benchmark methods across noise rates and seeds");
  std::vector<std::string> b_inputs, b_methods{"gksmote", "smote"};
  std::vector<double> b_rates{0.0};
  std::vector<std::uint64_t> b_seeds{1};
  std::uint64_t b_folds = 10, b_k = 5, b_kclf = 5;
  double b_ir = 1.0, b_test_fraction = 0.25;
  std::string b_bandwidth = "silverman", b_out, b_stats_out;
  InputFlags b_flags;
  bench->add_option("inputs", b_inputs, "Input CSVs")->required();
  bench->add_option("--methods", b_methods, "Methods to compare")->delimiter(',');
  bench->add_option("--noise-rates", b_rates, "Label-noise rates in [0, 0.5]")->delimiter(',');
  bench->add_option("--seeds", b_seeds, "Experiment seeds")->delimiter(',');
  bench->add_option("--folds", b_folds, "Cross-validation folds");
  bench->add_option("--k", b_k, "Sampler neighbor count");
  bench->add_option("--k-clf", b_kclf, "Classifier neighbor count");
  bench->add_option("--ir", b_ir, "Target imbalance ratio");
  bench->add_option("--bandwidth", b_bandwidth, "silverman or fixed:<h>");
  bench->add_option("--test-fraction", b_test_fraction, "Held-out split fraction");
  bench->add_option("--out", b_out, "Results CSV")->required();
  bench->add_option("--stats-out", b_stats_out, "Stats CSV (default: <out>.stats.csv)");
  b_flags.add_to(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_config;
  }

  try {
    if (*over) {
      return run_oversample(ov_input, ov_method, ov_ir, ov_k, ov_seed, ov_bandwidth,
                            ov_out, ov_flags, command);
    }
    if (*insp) {
      return run_inspect(in_input, in_k, in_bandwidth, in_out, in_scatter, in_features,
                         in_flags, command);
    }
    if (*bench) {
      return run_bench(b_inputs, b_methods, b_rates, b_seeds, b_folds, b_k, b_kclf,
                       b_ir, b_bandwidth, b_test_fraction, b_out, b_stats_out, b_flags,
                       command);
    }
  } catch (const gksmote::RateError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const gksmote::Error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return exit_data;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_data;
  }
  return exit_ok;
}
