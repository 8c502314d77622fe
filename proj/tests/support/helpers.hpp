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

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gksmote/dataset.hpp"
#include "gksmote/rng.hpp"

namespace testing_support {

/// Writes content to a fresh file under a per-process temp directory and
/// removes it on destruction.
class TempFile {
 public:
  explicit TempFile(const std::string& content, const std::string& suffix = ".csv") {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path() / "gksmote_tests";
    std::filesystem::create_directories(dir);
    path_ = (dir / ("t" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++) + suffix)).string();
    std::ofstream out(path_);
    out << content;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

inline gksmote::LabeledPoint point(std::vector<double> features, gksmote::Label label,
                                   gksmote::Origin origin = gksmote::Origin::real) {
  return {std::move(features), label, origin};
}

/// A 1-D dataset from two value lists, minority first.
inline gksmote::Dataset dataset_1d(const std::vector<double>& minority,
                                   const std::vector<double>& majority,
                                   const std::string& name = "test1d") {
  std::vector<gksmote::LabeledPoint> pts;
  for (double v : minority) pts.push_back(point({v}, gksmote::Label::minority));
  for (double v : majority) pts.push_back(point({v}, gksmote::Label::majority));
  return gksmote::Dataset(std::move(pts), name);
}

/// Random 2-D dataset with the requested class sizes, features uniform in the
/// unit square.
inline gksmote::Dataset random_2d(std::size_t minority_n, std::size_t majority_n,
                                  std::uint64_t seed, const std::string& name = "rand2d") {
  gksmote::SeededRng rng(seed);
  std::vector<gksmote::LabeledPoint> pts;
  for (std::size_t i = 0; i < minority_n; ++i) {
    pts.push_back(point({rng.uniform(), rng.uniform()}, gksmote::Label::minority));
  }
  for (std::size_t i = 0; i < majority_n; ++i) {
    pts.push_back(point({rng.uniform(), rng.uniform()}, gksmote::Label::majority));
  }
  return gksmote::Dataset(std::move(pts), name);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace testing_support
