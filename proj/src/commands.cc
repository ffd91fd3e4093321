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
#include "tunebench/commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "tunebench/cross_validation.h"
#include "tunebench/external_objective.h"
#include "tunebench/synthetic.h"

namespace tunebench {
namespace {

class BuiltinFactory final : public ObjectiveFactory {
 public:
  explicit BuiltinFactory(std::string name) : name_(std::move(name)) {}
  Objective make() override {
    return [name = name_](const ParamPoint& p) {
      return synthetic_objective(name, p);
    };
  }

 private:
  std::string name_;
};

class CsvFactory final : public ObjectiveFactory {
 public:
  explicit CsvFactory(const CsvObjective& spec) : spec_(spec) {
    try {
      data_ = std::make_shared<const std::pair<Dataset, Dataset>>(
          load_csv_dataset(spec.path, spec.csv));
    } catch (const std::exception& e) {
      throw SetupError("cannot load '" + spec.path.string() + "': " + e.what());
    }
    if (data_->first.rows() < spec.folds) {
      throw SetupError("training split has fewer rows than folds");
    }
  }

  Objective make() override {
    return [spec = spec_, data = data_](const ParamPoint& p) {
      return cv_objective(spec.model, data->first, p, spec.folds, spec.cv_seed,
                          spec.metric);
    };
  }

  std::optional<double> test_score(const ParamPoint& p) const override {
    const LinearModel fitted = fit_model(spec_.model, data_->first, p);
    return score_model(spec_.model, fitted, data_->second, spec_.metric);
  }

 private:
  CsvObjective spec_;
  std::shared_ptr<const std::pair<Dataset, Dataset>> data_;
};

class CommandFactory final : public ObjectiveFactory {
 public:
  CommandFactory(const CommandObjective& spec, std::size_t prestart)
      : spec_(spec) {
    for (std::size_t i = 0; i < prestart; ++i) ready_.push_back(start());
  }

  Objective make() override {
    std::shared_ptr<ExternalObjective> worker;
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (!ready_.empty()) {
        worker = std::move(ready_.back());
        ready_.pop_back();
      }
    }
    if (!worker) worker = start();
    return [worker](const ParamPoint& p) { return (*worker)(p); };
  }

 private:
  std::shared_ptr<ExternalObjective> start() const {
    try {
      return std::make_shared<ExternalObjective>(spec_.argv, spec_.timeout_ms);
    } catch (const SpawnError& e) {
      throw SetupError(e.what());
    }
  }

  CommandObjective spec_;
  std::mutex mu_;
  std::vector<std::shared_ptr<ExternalObjective>> ready_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string opt_real(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error("cannot write '" + path.string() + "'");
}

CellResult run_cell(const RunManifest& m, const NamedSampler& sampler,
                    std::uint64_t seed, const Objective& objective,
                    const ObjectiveFactory& factory) {
  CellResult cell;
  cell.sampler = sampler.name;
  cell.seed = seed;
  try {
    StudyConfig config;
    config.direction = m.direction;
    config.budget = m.budget;
    config.seed = seed;
    config.sampler = sampler.config;
    StudyResult result = run_study(objective, m.space, config,
                                   RunOptions{m.record_wall_time});
    cell.trace = save_study(result.study);
    cell.best = result.best;
    cell.n_trials = result.history.size();
    cell.n_failed = result.history.failed_count();
    std::optional<double> running;
    for (const auto& r : result.history) {
      cell.wall_ms += r.wall_ms;
      if (r.ok() && (!running || better(*r.score, *running, m.direction))) {
        running = r.score;
      }
      cell.best_so_far.push_back(running);
    }
    if (!cell.best) {
      cell.error = "no trial succeeded";
      if (!result.history.empty()) {
        cell.error += " (last failure: " + result.history.records().back().failure + ")";
      }
      return cell;
    }
    try {
      cell.test_score = factory.test_score(cell.best->point);
    } catch (const std::exception& e) {
      cell.error = std::string("test scoring failed: ") + e.what();
      return cell;
    }
    cell.ok = true;
  } catch (const std::exception& e) {
    cell.ok = false;
    cell.error = e.what();
  }
  return cell;
}

void write_cells_header(std::ostream& out) {
  out << "sampler,seed,status,n_trials,n_failed,best_ordinal,best_score,wall_ms,"
         "error\n";
}

}  // namespace

std::unique_ptr<ObjectiveFactory> make_objective_factory(const RunManifest& m) {
  if (const auto* b = std::get_if<BuiltinObjective>(&m.objective)) {
    return std::make_unique<BuiltinFactory>(b->name);
  }
  if (const auto* c = std::get_if<CsvObjective>(&m.objective)) {
    return std::make_unique<CsvFactory>(*c);
  }
  const std::size_t cells = m.samplers.size() * m.seeds.size();
  return std::make_unique<CommandFactory>(std::get<CommandObjective>(m.objective),
                                          std::min(m.jobs, cells));
}

double quantile(std::span<const double> values, double q) {
  if (values.empty()) throw InvalidArgument("quantile of an empty list");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const double h = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

std::vector<SamplerSummary> summarize(const std::vector<CellResult>& rows,
                                      Direction direction) {
  std::vector<SamplerSummary> out;
  for (const auto& row : rows) {
    auto it = std::find_if(out.begin(), out.end(), [&](const SamplerSummary& s) {
      return s.sampler == row.sampler;
    });
    if (it == out.end()) {
      out.push_back(SamplerSummary{row.sampler});
    }
  }
  std::optional<std::size_t> winner;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<double> scores;
    for (const auto& row : rows) {
      if (row.sampler == out[i].sampler && row.ok) scores.push_back(*row.best->score);
    }
    out[i].n_ok = scores.size();
    if (scores.empty()) continue;
    out[i].median = quantile(scores, 0.5);
    out[i].q1 = quantile(scores, 0.25);
    out[i].q3 = quantile(scores, 0.75);
    out[i].iqr = out[i].q3 - out[i].q1;
    out[i].best = scores.front();
    for (const double s : scores) {
      if (better(s, out[i].best, direction)) out[i].best = s;
    }
    if (!winner || better(out[i].median, out[*winner].median, direction)) {
      winner = i;
    }
  }
  if (winner) out[*winner].winner = true;
  return out;
}

ComparisonReport run_cells(const RunManifest& m, ObjectiveFactory& factory) {
  struct Job {
    const NamedSampler* sampler;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto& s : m.samplers) {
    for (const auto seed : m.seeds) jobs.push_back({&s, seed});
  }
  ComparisonReport report;
  report.direction = m.direction;
  report.rows.resize(jobs.size());

  const std::size_t n_workers = std::min<std::size_t>(m.jobs, jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&](Objective objective) {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      report.rows[i] = run_cell(m, *jobs[i].sampler, jobs[i].seed, objective, factory);
    }
  };
  if (n_workers <= 1) {
    work(factory.make());
  } else {
    // Objectives are created up front so setup failures surface here.
    std::vector<Objective> objectives;
    for (std::size_t w = 0; w < n_workers; ++w) objectives.push_back(factory.make());
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < n_workers; ++w) {
      threads.emplace_back(work, std::move(objectives[w]));
    }
    for (auto& t : threads) t.join();
  }
  report.summary = summarize(report.rows, m.direction);
  return report;
}

std::string tune_summary_csv(const RunManifest& m, const ComparisonReport& r) {
  const bool has_test = std::holds_alternative<CsvObjective>(m.objective);
  std::ostringstream out;
  out << "seed,status,n_trials,n_failed,best_ordinal,best_score";
  if (has_test) out << ",test_score";
  for (const auto& [name, dist] : m.space.entries()) out << ',' << csv_field(name);
  out << ",error\n";
  for (const auto& row : r.rows) {
    out << row.seed << ',' << (row.ok ? "ok" : "failed") << ',' << row.n_trials
        << ',' << row.n_failed << ',';
    if (row.best) out << row.best->ordinal;
    out << ',' << (row.best ? format_real(*row.best->score) : std::string());
    if (has_test) out << ',' << opt_real(row.test_score);
    for (const auto& [name, dist] : m.space.entries()) {
      out << ',';
      if (row.best) out << csv_field(to_string(row.best->point.at(name)));
    }
    out << ',' << csv_field(row.error) << '\n';
  }
  return out.str();
}

std::string report_csv(const ComparisonReport& r) {
  std::ostringstream out;
  write_cells_header(out);
  for (const auto& row : r.rows) {
    out << row.sampler << ',' << row.seed << ',' << (row.ok ? "ok" : "failed")
        << ',' << row.n_trials << ',' << row.n_failed << ',';
    if (row.best) out << row.best->ordinal;
    out << ',' << (row.ok ? format_real(*row.best->score) : std::string()) << ','
        << format_real(row.wall_ms) << ',' << csv_field(row.error) << '\n';
  }
  return out.str();
}

std::string summary_csv(const ComparisonReport& r) {
  std::ostringstream out;
  out << "sampler,direction,n_ok,median,q1,q3,iqr,best,winner\n";
  for (const auto& s : r.summary) {
    out << s.sampler << ',' << to_string(r.direction) << ',' << s.n_ok << ',';
    if (s.n_ok > 0) {
      out << format_real(s.median) << ',' << format_real(s.q1) << ','
          << format_real(s.q3) << ',' << format_real(s.iqr) << ','
          << format_real(s.best);
    } else {
      out << ",,,,";
    }
    out << ',' << (s.winner ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string convergence_csv(const ComparisonReport& r) {
  std::ostringstream out;
  out << "sampler,seed,ordinal,best_so_far\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.best_so_far.size(); ++i) {
      out << row.sampler << ',' << row.seed << ',' << i << ','
          << opt_real(row.best_so_far[i]) << '\n';
    }
  }
  return out.str();
}

ComparisonReport run_tune(const RunManifest& m) {
  if (m.samplers.size() != 1) {
    throw ManifestError("tune takes exactly one sampler; use compare for more");
  }
  auto factory = make_objective_factory(m);
  ComparisonReport report = run_cells(m, *factory);
  for (const auto& row : report.rows) {
    write_file(m.output / ("trace_seed" + std::to_string(row.seed) + ".jsonl"),
               row.trace);
  }
  write_file(m.output / "summary.csv", tune_summary_csv(m, report));
  return report;
}

ComparisonReport run_compare(const RunManifest& m) {
  if (m.samplers.size() < 2) {
    throw ManifestError("compare needs at least two samplers");
  }
  auto factory = make_objective_factory(m);
  ComparisonReport report = run_cells(m, *factory);
  for (const auto& row : report.rows) {
    write_file(m.output / "traces" /
                   (row.sampler + "_seed" + std::to_string(row.seed) + ".jsonl"),
               row.trace);
  }
  write_file(m.output / "report.csv", report_csv(report));
  write_file(m.output / "summary.csv", summary_csv(report));
  write_file(m.output / "convergence.csv", convergence_csv(report));
  return report;
}

namespace {

int guarded(const std::function<void()>& body, std::ostream& err) {
  try {
    body();
    return kExitOk;
  } catch (const ManifestError& e) {
    err << "manifest error: " << e.what() << '\n';
    return kExitManifest;
  } catch (const SetupError& e) {
    err << "objective setup failed: " << e.what() << '\n';
    return kExitSetup;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace

int cmd_tune(const RunManifest& m, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const ComparisonReport r = run_tune(m);
        out << tune_summary_csv(m, r);
      },
      err);
}

int cmd_compare(const RunManifest& m, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const ComparisonReport r = run_compare(m);
        out << summary_csv(r);
      },
      err);
}

}  // namespace tunebench
