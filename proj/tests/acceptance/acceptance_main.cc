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
// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "tunebench/bias_variance.h"
#include "tunebench/commands.h"
#include "tunebench/cross_validation.h"
#include "tunebench/dataset.h"
#include "tunebench/linear_models.h"
#include "tunebench/manifest.h"
#include "tunebench/metrics.h"
#include "tunebench/rng.h"
#include "tunebench/search_space.h"
#include "tunebench/serialization.h"
#include "tunebench/study.h"
#include "tunebench/synthetic.h"
#include "tunebench/tpe.h"

namespace fs = std::filesystem;
using namespace tunebench;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("tunebench_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

// ---------------------------------------------------------------- 1

Outcome bias_variance_identity() {
  Rng rng(101);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> preds(1 + rng.below(100));
    const double scale = std::pow(10.0, 2.0 * rng.uniform() - 1.0);
    for (double& p : preds) p = scale * rng.normal();
    const double truth = scale * rng.normal();
    const BiasVarianceReport r = bias_variance_decompose(preds, truth);
    worst = std::max(worst, std::abs(r.mse - r.bias_sq - r.variance));
  }
  return {worst < 1e-9, "max |mse - bias^2 - variance| = " + fmt(worst)};
}

// ---------------------------------------------------------------- 2

// Independent l(x)/g(x): Gaussian kernels on sorted observations with the
// nearest-neighbour bandwidth rule and a uniform prior share of 1/(n+1).
struct OracleDensity {
  std::vector<std::vector<double>> obs;  // per dimension, sorted
  std::vector<double> low;
  std::vector<double> high;
  double floor_fraction;

  double operator()(const std::vector<double>& x) const {
    double density = 1.0;
    for (std::size_t d = 0; d < obs.size(); ++d) {
      const auto& v = obs[d];
      const std::size_t n = v.size();
      const double span = high[d] - low[d];
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double gap = span;
        if (n > 1) {
          gap = INFINITY;
          if (i > 0) gap = std::min(gap, v[i] - v[i - 1]);
          if (i + 1 < n) gap = std::min(gap, v[i + 1] - v[i]);
        }
        const double h = std::max(gap, floor_fraction * span);
        const double z = (x[d] - v[i]) / h;
        sum += std::exp(-0.5 * z * z) / (h * std::sqrt(2.0 * std::numbers::pi));
      }
      const double w = 1.0 / static_cast<double>(n + 1);
      density *= w / span + (1.0 - w) / static_cast<double>(n) * sum;
    }
    return density;
  }
};

Outcome tpe_argmax_oracle() {
  const SearchSpace space = synthetic_space("sphere", 2);
  StudyConfig config;
  config.budget = 100;
  config.seed = 2026;
  TpeConfig tpe;
  config.sampler = tpe;
  Study study(space, config);
  int checked = 0;
  int mismatches = 0;
  double worst_rel = 0.0;
  while (!study.finished()) {
    const ParamPoint p = study.ask();
    const TpeDecision* log = study.last_tpe_decision();
    if (log != nullptr && !log->startup) {
      ++checked;
      // Rank by score, ties by ordinal.
      std::vector<const TrialRecord*> done;
      for (const auto& r : study.history()) done.push_back(&r);
      std::stable_sort(done.begin(), done.end(), [](auto* a, auto* b) {
        return *a->score < *b->score;
      });
      const std::size_t n = done.size();
      std::size_t n_below =
          static_cast<std::size_t>(std::ceil(tpe.gamma * static_cast<double>(n)));
      n_below = std::max<std::size_t>(1, std::min(n_below, n - 1));
      OracleDensity l{{}, {}, {}, tpe.bandwidth_floor};
      OracleDensity g{{}, {}, {}, tpe.bandwidth_floor};
      for (std::size_t d = 0; d < space.size(); ++d) {
        std::vector<double> below;
        std::vector<double> above;
        for (std::size_t i = 0; i < n; ++i) {
          (i < n_below ? below : above).push_back(done[i]->point.real(space.name(d)));
        }
        std::sort(below.begin(), below.end());
        std::sort(above.begin(), above.end());
        const auto& c = space.dist(d).continuous();
        l.obs.push_back(below);
        g.obs.push_back(above);
        for (auto* e : {&l, &g}) {
          e->low.push_back(c.low);
          e->high.push_back(c.high);
        }
      }
      std::size_t arg = 0;
      double best = -1.0;
      std::vector<double> ratios;
      for (std::size_t i = 0; i < log->candidates.size(); ++i) {
        std::vector<double> x;
        for (std::size_t d = 0; d < space.size(); ++d) {
          x.push_back(log->candidates[i].real(space.name(d)));
        }
        const double li = l(x);
        const double gi = g(x);
        worst_rel = std::max({worst_rel, std::abs(li - log->l_density[i]) / li,
                              std::abs(gi - log->g_density[i]) / gi});
        ratios.push_back(li / gi);
        if (li / gi > best) {
          best = li / gi;
          arg = i;
        }
      }
      if (!(log->candidates[arg] == p) || ratios[log->chosen] != best) ++mismatches;
    }
    study.tell(p, synthetic_objective("sphere", p));
  }
  return {mismatches == 0 && checked == 90,
          std::to_string(checked) + " post-startup suggestions, " +
              std::to_string(mismatches) + " mismatches, max density rel diff " +
              fmt(worst_rel)};
}

// ---------------------------------------------------------------- 3

Outcome ei_monotone() {
  Rng rng(303);
  int mismatches = 0;
  for (int t = 0; t < 10000; ++t) {
    const double gamma = 0.01 + 0.98 * rng.uniform();
    std::size_t by_ei = 0;
    std::size_t by_ratio = 0;
    double best_ei = -1.0;
    double best_ratio = -1.0;
    for (std::size_t i = 0; i < 24; ++i) {
      const double l = std::pow(10.0, 10.0 * rng.uniform() - 5.0);
      const double g = std::pow(10.0, 10.0 * rng.uniform() - 5.0);
      const double ei = ei_ratio_score(l, g, gamma);
      if (ei > best_ei) {
        best_ei = ei;
        by_ei = i;
      }
      if (l / g > best_ratio) {
        best_ratio = l / g;
        by_ratio = i;
      }
    }
    mismatches += by_ei != by_ratio ? 1 : 0;
  }
  return {mismatches == 0,
          "10000 candidate sets of 24, " + std::to_string(mismatches) + " mismatches"};
}

// ---------------------------------------------------------------- 4

// Few rows, many mostly irrelevant features and heavy noise, so some
// shrinkage pays off and the best alpha sits inside the grid.
fs::path write_regression_csv(const fs::path& path) {
  Rng rng(404);
  constexpr int kFeatures = 12;
  std::ofstream out(path);
  for (int j = 0; j < kFeatures; ++j) out << 'f' << j << ',';
  out << "target\n";
  for (int i = 0; i < 45; ++i) {
    double y = 4.0;
    for (int j = 0; j < kFeatures; ++j) {
      const double v = rng.normal();
      y += (j < 3 ? 0.6 : 0.0) * v;
      out << format_real(v) << ',';
    }
    out << format_real(y + 2.0 * rng.normal()) << '\n';
  }
  return path;
}

Outcome grid_optimality() {
  const fs::path dir = work_dir() / "grid";
  fs::create_directories(dir);
  write_regression_csv(dir / "regression.csv");
  RunManifest m = parse_manifest(Json::parse(R"({
      "space": "ridge",
      "objective": {"csv": {"path": "regression.csv", "target": "target",
                            "model": "ridge", "folds": 3, "cv_seed": 7}},
      "sampler": {"kind": "grid", "resolution": 25},
      "budget": 100, "seed": 0})"),
                                 dir);
  m.output = dir / "out";
  std::ostringstream out;
  std::ostringstream err;
  if (cmd_tune(m, out, err) != kExitOk) return {false, "cmd_tune failed: " + err.str()};
  const auto summary = read_csv(dir / "out" / "summary.csv");
  const double reported = std::strtod(summary.at(1).at(5).c_str(), nullptr);
  const std::size_t trials = std::stoul(summary.at(1).at(2));

  CsvOptions opts;
  opts.target = "target";
  const Dataset train = load_csv_dataset(dir / "regression.csv", opts).first;
  double brute = INFINITY;
  double brute_alpha = 0.0;
  for (const ParamValue& alpha : grid_points(preset_space("ridge").dist(0), 25)) {
    const double v = cv_objective(ModelKind::kRidge, train,
                                  ParamPoint{{"alpha", alpha}}, 3, 7, Metric::kRmse);
    if (v < brute) {
      brute = v;
      brute_alpha = std::get<double>(alpha);
    }
  }
  return {trials == 25 && reported == brute,
          std::to_string(trials) + " grid points, tune best " + format_real(reported) +
              ", brute force " + format_real(brute) + " at alpha " +
              format_real(brute_alpha)};
}

// ---------------------------------------------------------------- 5

Outcome convergence() {
  const SearchSpace space = synthetic_space("sphere", 3);
  const std::vector<std::pair<std::string, SamplerConfig>> samplers{
      {"random", RandomConfig{}}, {"tpe", TpeConfig{}}, {"genetic", GaConfig{}}};
  std::map<std::string, std::vector<double>> bests;
  for (const auto& [name, sampler] : samplers) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      StudyConfig config;
      config.budget = 100;
      config.seed = seed;
      config.sampler = sampler;
      const auto r = run_study(
          [](const ParamPoint& p) { return synthetic_objective("sphere", p); }, space,
          config, RunOptions{false});
      bests[name].push_back(*r.best->score);
    }
  }
  bool pass = true;
  std::string detail;
  for (const auto& [name, sampler] : samplers) {
    const auto& v = bests[name];
    const auto hits = std::count_if(v.begin(), v.end(), [](double s) { return s <= 0.5; });
    pass = pass && hits >= 16;
    detail += name + " " + std::to_string(hits) + "/20 median " +
              fmt(quantile(v, 0.5)) + "; ";
  }
  const bool tpe_beats = quantile(bests["tpe"], 0.5) <= quantile(bests["random"], 0.5);
  detail += tpe_beats ? "tpe median <= random median" : "tpe median > random median";
  return {pass && tpe_beats, detail};
}

// ---------------------------------------------------------------- 6

Outcome ga_elitism() {
  const SearchSpace space = synthetic_space("rastrigin", 2);
  GaConfig ga;
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    StudyConfig config;
    config.budget = ga.generations * ga.pop_size;
    config.seed = seed;
    config.sampler = ga;
    const auto r = run_study(
        [](const ParamPoint& p) { return synthetic_objective("rastrigin", p); }, space,
        config, RunOptions{false});
    double previous = INFINITY;
    for (std::size_t g = 0; g < ga.generations; ++g) {
      double gen_best = INFINITY;
      for (std::size_t i = 0; i < ga.pop_size; ++i) {
        gen_best = std::min(gen_best, *r.history[g * ga.pop_size + i].score);
      }
      if (gen_best > previous) ++violations;
      previous = gen_best;
    }
  }
  return {violations == 0, "50 generations x 20 seeds, generation-best increased " +
                               std::to_string(violations) + " times"};
}

// ---------------------------------------------------------------- 7

Outcome metric_values() {
  using L = std::vector<std::int64_t>;
  const double r = rmse(std::vector<double>{0, 0}, std::vector<double>{3, 4});
  const double a = auc(L{1, 0, 1, 0}, std::vector<double>{0.9, 0.8, 0.7, 0.1});
  const double k1 = cohen_kappa(L{0, 1, 1, 0}, L{0, 1, 1, 0});
  const double k2 = cohen_kappa(L{1, 0}, L{0, 1});
  const double k3 = cohen_kappa(L{0, 0, 1, 1}, L{0, 0, 1, 0});
  const bool pass = std::abs(r - 3.53553) < 1e-5 && a == 0.75 && k1 == 1.0 &&
                    k2 == -1.0 && k3 == 0.5;
  return {pass, "rmse " + format_real(r) + ", auc " + format_real(a) + ", kappa " +
                    format_real(k1) + " " + format_real(k2) + " " + format_real(k3)};
}

// ---------------------------------------------------------------- 8

// Normal equations [X 1]^T [X 1] b = [X 1]^T y solved by Gauss-Jordan
// elimination with partial pivoting.
std::vector<double> normal_equation_solve(const Eigen::MatrixXd& x,
                                          const Eigen::VectorXd& y) {
  const int p = static_cast<int>(x.cols()) + 1;
  std::vector<std::vector<double>> a(p, std::vector<double>(p + 1, 0.0));
  auto col = [&](int r, int j) { return j + 1 == p ? 1.0 : x(r, j); };
  for (int r = 0; r < x.rows(); ++r) {
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) a[i][j] += col(r, i) * col(r, j);
      a[i][p] += col(r, i) * y[r];
    }
  }
  for (int c = 0; c < p; ++c) {
    int piv = c;
    for (int r = c + 1; r < p; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    for (int r = 0; r < p; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (int k = c; k <= p; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<double> b(p);
  for (int i = 0; i < p; ++i) b[i] = a[i][p] / a[i][i];
  return b;
}

Outcome linear_oracles() {
  Rng rng(808);
  double worst_ridge = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 20 + static_cast<int>(rng.below(60));
    const int d = 1 + static_cast<int>(rng.below(6));
    Eigen::MatrixXd x(n, d);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < d; ++j) x(i, j) = rng.normal();
      y[i] = 3.0 * rng.normal() + 1.0;
    }
    const LinearModel m = ridge_fit(x, y, 0.0);
    const std::vector<double> ref = normal_equation_solve(x, y);
    double num = 0.0;
    double den = 0.0;
    for (int j = 0; j < d; ++j) {
      num += (m.weights[j] - ref[j]) * (m.weights[j] - ref[j]);
      den += ref[j] * ref[j];
    }
    num += (m.intercept - ref[d]) * (m.intercept - ref[d]);
    den += ref[d] * ref[d];
    worst_ridge = std::max(worst_ridge, std::sqrt(num / den));
  }

  double worst_grad = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 15 + static_cast<int>(rng.below(40));
    const int d = 1 + static_cast<int>(rng.below(5));
    Eigen::MatrixXd x(n, d);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < d; ++j) x(i, j) = rng.normal();
      y[i] = static_cast<double>(rng.below(2));
    }
    Eigen::VectorXd w(d);
    for (int j = 0; j < d; ++j) w[j] = rng.normal();
    const double b = rng.normal();
    const double c = std::pow(10.0, -3.0 * rng.uniform());
    const LogisticLoss at = logistic_loss(x, y, c, w, b);
    for (int j = 0; j <= d; ++j) {
      const double h = 1e-5;
      Eigen::VectorXd wp = w;
      Eigen::VectorXd wm = w;
      double bp = b;
      double bm = b;
      if (j < d) {
        wp[j] += h;
        wm[j] -= h;
      } else {
        bp += h;
        bm -= h;
      }
      const double fd = (logistic_loss(x, y, c, wp, bp).value -
                         logistic_loss(x, y, c, wm, bm).value) / (2.0 * h);
      const double an = j < d ? at.grad_weights[j] : at.grad_intercept;
      worst_grad = std::max(worst_grad, std::abs(fd - an) / std::max(std::abs(an), 1e-3));
    }
  }
  return {worst_ridge < 1e-8 && worst_grad < 1e-4,
          "ridge max rel err " + fmt(worst_ridge) + ", logistic gradient max rel err " +
              fmt(worst_grad)};
}

// ---------------------------------------------------------------- 9

std::map<fs::path, std::string> snapshot(const fs::path& root) {
  std::map<fs::path, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) files[fs::relative(e.path(), root)] = slurp(e.path());
  }
  return files;
}

Outcome determinism() {
  const fs::path dir = work_dir() / "determinism";
  fs::create_directories(dir);
  std::ofstream(dir / "manifest.json") << R"({
    "objective": {"builtin": "branin"},
    "samplers": [{"kind": "random"}, {"kind": "tpe"}, {"kind": "genetic", "pop_size": 10},
                 {"kind": "grid", "resolution": 6}],
    "seeds": [0, 1, 2],
    "budget": 60
  })";
  std::vector<std::map<fs::path, std::string>> runs;
  for (const std::size_t jobs : {1, 1, 4}) {
    RunManifest m = load_manifest(dir / "manifest.json");
    m.output = dir / ("run" + std::to_string(runs.size()));
    m.jobs = jobs;
    std::ostringstream out;
    std::ostringstream err;
    if (cmd_compare(m, out, err) != kExitOk) return {false, err.str()};
    runs.push_back(snapshot(m.output));
  }
  const bool same = runs[0] == runs[1] && runs[0] == runs[2];
  return {same && runs[0].size() == 15,
          std::to_string(runs[0].size()) + " artifacts per run; two serial runs and a " +
              "4-job run " + (same ? "byte-identical" : "DIFFER")};
}

// ---------------------------------------------------------------- 10

fs::path write_classification_csv(const fs::path& path) {
  Rng rng(1010);
  std::ofstream out(path);
  out << "temperature,pressure,grade,defect\n";
  const char* grades[] = {"low", "mid", "high"};
  for (int i = 0; i < 150; ++i) {
    const double t = rng.normal();
    const double p = rng.normal();
    const int g = static_cast<int>(rng.below(3));
    const double z = 1.2 * t - 0.8 * p + 0.6 * g - 0.6 + 0.7 * rng.normal();
    out << format_real(t) << ',' << format_real(p) << ',' << grades[g] << ','
        << (z > 0 ? "yes" : "no") << '\n';
  }
  return path;
}

std::string check_report(const fs::path& out, Direction direction,
                         std::size_t expected_rows, std::string& winner) {
  const auto report = read_csv(out / "report.csv");
  const auto summary = read_csv(out / "summary.csv");
  if (report.size() != expected_rows + 1) return "report has wrong row count";
  std::map<std::string, std::vector<double>> scores;
  for (std::size_t i = 1; i < report.size(); ++i) {
    if (report[i].size() != 9 || report[i][2] != "ok") return "bad report row";
    scores[report[i][0]].push_back(std::strtod(report[i][6].c_str(), nullptr));
  }
  int winners = 0;
  std::string recomputed;
  double best_median = 0.0;
  for (std::size_t i = 1; i < summary.size(); ++i) {
    const auto& row = summary[i];
    if (row.size() != 9 || row[1] != to_string(direction)) return "bad summary row";
    const double median = quantile(scores.at(row[0]), 0.5);
    if (std::strtod(row[3].c_str(), nullptr) != median) return "median mismatch";
    if (recomputed.empty() || better(median, best_median, direction)) {
      recomputed = row[0];
      best_median = median;
    }
    if (row[8] == "1") {
      ++winners;
      winner = row[0];
    }
  }
  if (winners != 1 || winner != recomputed) return "winner not computable";
  return "";
}

Outcome qualitative_report() {
  const fs::path dir = work_dir() / "report";
  fs::create_directories(dir);
  write_regression_csv(dir / "regression.csv");
  write_classification_csv(dir / "classification.csv");
  const std::string samplers =
      R"("samplers": [{"kind": "random"}, {"kind": "tpe"}, {"kind": "genetic", "pop_size": 10}],
         "seeds": [0, 1, 2, 3, 4], "budget": 40)";
  RunManifest lo = parse_manifest(
      Json::parse(R"({"objective": {"csv": {"path": "regression.csv", "target": "target",
                                            "model": "ridge"}}, )" + samplers + "}"),
      dir);
  RunManifest hi = parse_manifest(
      Json::parse(R"({"objective": {"csv": {"path": "classification.csv",
                                            "target": "defect", "model": "logistic",
                                            "categorical": ["grade", "defect"]}}, )" +
                  samplers + "}"),
      dir);
  lo.output = dir / "minimize";
  hi.output = dir / "maximize";
  std::string detail;
  bool pass = lo.direction == Direction::kMinimize && hi.direction == Direction::kMaximize;
  for (const RunManifest* m : {&lo, &hi}) {
    std::ostringstream out;
    std::ostringstream err;
    if (cmd_compare(*m, out, err) != kExitOk) return {false, err.str()};
    std::string winner;
    const std::string problem = check_report(m->output, m->direction, 15, winner);
    pass = pass && problem.empty();
    detail += std::string(to_string(m->direction)) + " winner " +
              (problem.empty() ? winner : problem) + "; ";
  }
  detail += "15 rows each";
  return {pass, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;  // 0 means no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "bias-variance identity", 1.0, bias_variance_identity},
      {2, "TPE argmax oracle", 10.0, tpe_argmax_oracle},
      {3, "EI monotone equivalence", 1.0, ei_monotone},
      {4, "grid search optimality", 5.0, grid_optimality},
      {5, "convergence at budget 100", 30.0, convergence},
      {6, "GA elitism monotonicity", 0.0, ga_elitism},
      {7, "metric unit values", 0.0, metric_values},
      {8, "ridge and logistic oracles", 0.0, linear_oracles},
      {9, "determinism", 0.0, determinism},
      {10, "comparison report", 0.0, qualitative_report},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0.0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += " (runtime limit " + fmt(c.limit_s) + " s exceeded)";
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s [%d] %s: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), o.detail.c_str(), secs);
  }
  std::fflush(stdout);
  fs::remove_all(work_dir());
  return failures == 0 ? 0 : 1;
}
