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
#include "tunebench/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <set>

#include "tunebench/error.h"
#include "tunebench/rng.h"

namespace tunebench {
namespace {

// Splits one CSV record. Double-quoted fields may contain commas and "".
std::vector<std::string> split_record(const std::string& line,
                                      std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

bool is_missing(const std::string& cell) {
  return cell.empty() || cell == "NA" || cell == "NaN" || cell == "nan" ||
         cell == "?";
}

double parse_number(const std::string& cell, std::size_t line_no,
                    const std::string& column) {
  double v = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  if (!cell.empty() && *begin == '+') ++begin;
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
    throw ParseError(line_no, "non-numeric value '" + cell + "' in column '" +
                                  column + "'");
  }
  return v;
}

}  // namespace

Dataset Dataset::subset(const std::vector<std::size_t>& rows) const {
  Dataset out;
  out.features.resize(static_cast<Eigen::Index>(rows.size()), features.cols());
  out.target.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto src = static_cast<Eigen::Index>(rows[i]);
    const auto dst = static_cast<Eigen::Index>(i);
    out.features.row(dst) = features.row(src);
    out.target[dst] = target[src];
  }
  out.feature_names = feature_names;
  out.target_name = target_name;
  out.encoding = encoding;
  return out;
}

std::pair<Dataset, Dataset> load_csv_dataset(std::istream& in,
                                             const CsvOptions& options) {
  if (!(options.train_ratio > 0.0 && options.train_ratio < 1.0)) {
    throw InvalidArgument("train ratio must lie in (0, 1)");
  }
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> row_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (header.empty()) {
      for (auto& h : split_record(line, line_no)) header.push_back(trim(h));
      continue;
    }
    if (line.empty()) continue;
    auto row = split_record(line, line_no);
    if (row.size() != header.size()) {
      throw ParseError(line_no, "expected " + std::to_string(header.size()) +
                                    " fields, found " +
                                    std::to_string(row.size()));
    }
    for (auto& c : row) c = trim(c);
    cells.push_back(std::move(row));
    row_lines.push_back(line_no);
  }
  if (header.empty()) throw ParseError(1, "missing header row");
  const std::set<std::string> categorical(options.categorical.begin(),
                                          options.categorical.end());
  for (const auto& c : categorical) {
    if (std::find(header.begin(), header.end(), c) == header.end()) {
      throw InvalidArgument("unknown categorical column '" + c + "'");
    }
  }
  const auto target_it = std::find(header.begin(), header.end(), options.target);
  if (target_it == header.end()) {
    throw InvalidArgument("unknown target column '" + options.target + "'");
  }
  const auto target_col = static_cast<std::size_t>(target_it - header.begin());
  const std::size_t n = cells.size();
  if (n < 2) throw InvalidArgument("dataset needs at least two rows");

  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (is_missing(cells[r][c])) {
        throw ParseError(row_lines[r],
                         "missing value in column '" + header[c] + "'");
      }
    }
  }

  Dataset all;
  all.target_name = options.target;
  // Levels from the whole file, sorted.
  std::map<std::size_t, std::vector<std::string>> levels;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (!categorical.contains(header[c])) continue;
    std::set<std::string> seen;
    for (const auto& row : cells) seen.insert(row[c]);
    levels[c].assign(seen.begin(), seen.end());
  }
  std::size_t width = 0;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c == target_col) continue;
    if (levels.contains(c)) {
      std::vector<std::string> names;
      for (const auto& level : levels[c]) {
        names.push_back(header[c] + "=" + level);
        all.feature_names.push_back(names.back());
      }
      all.encoding.emplace_back(header[c], std::move(names));
      width += levels[c].size();
    } else {
      all.feature_names.push_back(header[c]);
      ++width;
    }
  }
  if (width == 0) throw InvalidArgument("dataset has no feature columns");
  if (levels.contains(target_col)) {
    all.encoding.emplace_back(options.target, levels[target_col]);
  }

  all.features = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                       static_cast<Eigen::Index>(width));
  all.target.resize(static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = static_cast<Eigen::Index>(r);
    Eigen::Index col = 0;
    for (std::size_t c = 0; c < header.size(); ++c) {
      const std::string& cell = cells[r][c];
      const auto lv = levels.find(c);
      if (c == target_col) {
        if (lv != levels.end()) {
          const auto pos = std::lower_bound(lv->second.begin(), lv->second.end(), cell);
          all.target[row] = static_cast<double>(pos - lv->second.begin());
        } else {
          all.target[row] = parse_number(cell, row_lines[r], header[c]);
        }
        continue;
      }
      if (lv != levels.end()) {
        const auto pos = std::lower_bound(lv->second.begin(), lv->second.end(), cell);
        all.features(row, col + (pos - lv->second.begin())) = 1.0;
        col += static_cast<Eigen::Index>(lv->second.size());
      } else {
        all.features(row, col++) = parse_number(cell, row_lines[r], header[c]);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (options.shuffle) {
    Rng rng(options.seed);
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  }
  const auto n_train = static_cast<std::size_t>(
      std::floor(options.train_ratio * static_cast<double>(n)));
  if (n_train == 0 || n_train == n) {
    throw InvalidArgument("train ratio leaves one side of the split empty");
  }
  const std::vector<std::size_t> train_rows(order.begin(),
                                            order.begin() + static_cast<std::ptrdiff_t>(n_train));
  const std::vector<std::size_t> test_rows(order.begin() + static_cast<std::ptrdiff_t>(n_train),
                                           order.end());
  return {all.subset(train_rows), all.subset(test_rows)};
}

std::pair<Dataset, Dataset> load_csv_dataset(const std::filesystem::path& path,
                                             const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  return load_csv_dataset(in, options);
}

}  // namespace tunebench
