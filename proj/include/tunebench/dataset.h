// Copyright 2026 The Tunebench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef TUNEBENCH_DATASET_H_
#define TUNEBENCH_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace tunebench {

// Dense feature matrix plus target. Categorical inputs appear as one
// indicator column per level; encoding records which columns each source
// column became (or, for a categorical target, the level behind each code).
struct Dataset {
  Eigen::MatrixXd features;
  Eigen::VectorXd target;
  std::vector<std::string> feature_names;
  std::string target_name;
  std::vector<std::pair<std::string, std::vector<std::string>>> encoding;

  std::size_t rows() const { return static_cast<std::size_t>(features.rows()); }
  Dataset subset(const std::vector<std::size_t>& rows) const;
};

struct CsvOptions {
  std::string target;
  std::vector<std::string> categorical;
  double train_ratio = 0.7;
  bool shuffle = false;
  std::uint64_t seed = 0;
};

// Reads comma-separated text with a header row. Columns listed in
// categorical are one-hot encoded over the levels of the whole file (sorted),
// so both halves share a layout; a categorical target is label encoded
// instead. The first floor(train_ratio * n) rows (after an optional seeded
// shuffle) form the training half. Empty, "NA", "NaN" and "?" cells are
// load errors naming the row and column.
std::pair<Dataset, Dataset> load_csv_dataset(std::istream& in,
                                             const CsvOptions& options);
std::pair<Dataset, Dataset> load_csv_dataset(const std::filesystem::path& path,
                                             const CsvOptions& options);

}  // namespace tunebench

#endif  // TUNEBENCH_DATASET_H_
