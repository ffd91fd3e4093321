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
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "tunebench/bias_variance.h"
#include "tunebench/commands.h"
#include "tunebench/error.h"
#include "tunebench/linear_models.h"
#include "tunebench/manifest.h"
#include "tunebench/metrics.h"
#include "tunebench/samplers.h"
#include "tunebench/serialization.h"
#include "tunebench/study.h"
#include "tunebench/synthetic.h"
#include "tunebench/tpe.h"

namespace py = pybind11;
using namespace tunebench;

namespace {

// Python objects cross the boundary as JSON text, which keeps one parser
// for manifests, traces and the bindings.
Json to_json(const py::handle& obj) {
  const auto dumps = py::module_::import("json").attr("dumps");
  return Json::parse(dumps(obj).cast<std::string>());
}

py::object from_json(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object value_to_py(const ParamValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return py::float_(*d);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return py::int_(*i);
  return py::str(std::get<std::string>(v));
}

py::dict point_to_py(const ParamPoint& p) {
  py::dict out;
  for (const auto& [name, value] : p.entries()) out[py::str(name)] = value_to_py(value);
  return out;
}

ParamPoint point_from_py(const py::handle& obj, const SearchSpace& space) {
  try {
    return point_from_json(to_json(obj), space);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("cannot read point: ") + e.what());
  }
}

py::object record_to_py(const TrialRecord& r) {
  py::dict out;
  out["ordinal"] = r.ordinal;
  out["params"] = point_to_py(r.point);
  out["score"] = r.score ? py::object(py::float_(*r.score)) : py::none();
  out["failure"] = r.ok() ? py::object(py::none()) : py::object(py::str(r.failure));
  out["wall_ms"] = r.wall_ms;
  return out;
}

py::list history_to_py(const History& h) {
  py::list out;
  for (const auto& r : h) out.append(record_to_py(r));
  return out;
}

StudyConfig make_config(const py::object& sampler, const std::string& direction,
                        std::uint64_t budget, std::uint64_t seed) {
  StudyConfig c;
  c.sampler = sampler.is_none() ? SamplerConfig{RandomConfig{}}
                                : sampler_from_json(to_json(sampler));
  c.direction = parse_direction(direction);
  c.budget = budget;
  c.seed = seed;
  return c;
}

py::dict decision_to_py(const TpeDecision& d) {
  py::dict out;
  out["point"] = point_to_py(d.point);
  out["startup"] = d.startup;
  py::list candidates;
  for (const auto& c : d.candidates) candidates.append(point_to_py(c));
  out["candidates"] = candidates;
  out["l_density"] = d.l_density;
  out["g_density"] = d.g_density;
  out["ei"] = d.ei;
  out["chosen"] = d.chosen;
  return out;
}

std::vector<std::int64_t> as_labels(const std::vector<double>& v) {
  std::vector<std::int64_t> out;
  for (const double x : v) {
    if (x != std::floor(x)) throw InvalidArgument("labels must be integers");
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

int run_command(const std::filesystem::path& manifest, const py::object& output,
                bool compare) {
  std::ostringstream out;
  std::ostringstream err;
  int code = kExitManifest;
  try {
    RunManifest m = load_manifest(manifest);
    if (!output.is_none()) m.output = output.cast<std::filesystem::path>();
    code = compare ? cmd_compare(m, out, err) : cmd_tune(m, out, err);
  } catch (const ManifestError& e) {
    err << "manifest error: " << e.what() << '\n';
  }
  if (code != kExitOk) py::print(err.str(), py::arg("end") = "",
                                 py::arg("file") = py::module_::import("sys").attr("stderr"));
  return code;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hyperparameter search core: spaces, samplers, studies, metrics.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<SearchSpace>(m, "SearchSpace")
      .def(py::init([](const py::dict& spec) { return space_from_json(to_json(spec)); }),
           py::arg("spec"),
           "Builds a space from {name: {\"kind\": ..., ...}} in declaration order.")
      .def("to_dict", [](const SearchSpace& s) { return from_json(space_to_json(s)); })
      .def("names",
           [](const SearchSpace& s) {
             std::vector<std::string> out;
             for (const auto& [name, dist] : s.entries()) out.push_back(name);
             return out;
           })
      .def("contains",
           [](const SearchSpace& s, const py::dict& p) {
             try {
               return s.contains(point_from_py(p, s));
             } catch (const InvalidArgument&) {
               return false;
             }
           })
      .def("__len__", &SearchSpace::size)
      .def("__eq__", [](const SearchSpace& a, const SearchSpace& b) { return a == b; })
      .def("__repr__", [](const SearchSpace& s) {
        return "SearchSpace(" + space_to_json(s).dump() + ")";
      });

  m.def("preset_names", &preset_names);
  m.def("preset_space", &preset_space, py::arg("name"));
  m.def("synthetic_space", &synthetic_space, py::arg("name"), py::arg("dim") = 2);
  m.def("synthetic_objective",
        [](const std::string& name, const py::dict& point) {
          // Synthetic objectives read coordinates in order; no space needed.
          ParamPoint p;
          for (const auto& [k, v] : point) p.set(py::str(k), v.cast<double>());
          return synthetic_objective(name, p);
        },
        py::arg("name"), py::arg("point"));
  m.def("synthetic_minimum", &synthetic_minimum, py::arg("name"));

  m.def("random_suggest",
        [](const SearchSpace& space, std::uint64_t seed) {
          Rng rng(seed);
          return point_to_py(random_suggest(space, rng));
        },
        py::arg("space"), py::arg("seed"));
  m.def("grid",
        [](const SearchSpace& space, std::size_t resolution) {
          const Grid g(space, resolution);
          py::list out;
          for (std::uint64_t i = 0; i < g.size(); ++i) out.append(point_to_py(g.at(i)));
          return out;
        },
        py::arg("space"), py::arg("resolution"));
  m.def("ei_ratio_score", &ei_ratio_score, py::arg("l_density"), py::arg("g_density"),
        py::arg("gamma"));

  py::class_<Study>(m, "Study")
      .def(py::init([](const SearchSpace& space, const py::object& sampler,
                       const std::string& direction, std::uint64_t budget,
                       std::uint64_t seed) {
             return Study(space, make_config(sampler, direction, budget, seed));
           }),
           py::arg("space"), py::arg("sampler") = py::none(),
           py::arg("direction") = "minimize", py::arg("budget") = 100,
           py::arg("seed") = 0)
      .def("ask", [](Study& s) { return point_to_py(s.ask()); })
      .def("tell",
           [](Study& s, const py::dict& point, double score) {
             return record_to_py(s.tell(point_from_py(point, s.space()), score));
           },
           py::arg("point"), py::arg("score"))
      .def("tell_failure",
           [](Study& s, const py::dict& point, const std::string& reason) {
             return record_to_py(s.tell_failure(point_from_py(point, s.space()), reason));
           },
           py::arg("point"), py::arg("reason"))
      .def("finished", &Study::finished)
      .def_property_readonly("space", &Study::space)
      .def_property_readonly("sampler",
                             [](const Study& s) {
                               return from_json(sampler_to_json(s.config().sampler));
                             })
      .def_property_readonly("best",
                             [](const Study& s) -> py::object {
                               if (!s.best()) return py::none();
                               return record_to_py(*s.best());
                             })
      .def_property_readonly("history",
                             [](const Study& s) { return history_to_py(s.history()); })
      .def("last_tpe_decision",
           [](const Study& s) -> py::object {
             const TpeDecision* d = s.last_tpe_decision();
             if (d == nullptr) return py::none();
             return decision_to_py(*d);
           })
      .def("dumps", [](const Study& s) { return save_study(s); })
      .def_static("loads", [](const std::string& text) { return load_study_text(text); },
                  py::arg("text"));

  m.def(
      "run_study",
      [](const std::function<double(py::dict)>& objective, const SearchSpace& space,
         const py::object& sampler, const std::string& direction, std::uint64_t budget,
         std::uint64_t seed) {
        StudyResult r = run_study(
            [&](const ParamPoint& p) { return objective(point_to_py(p)); }, space,
            make_config(sampler, direction, budget, seed), RunOptions{false});
        return std::move(r.study);
      },
      py::arg("objective"), py::arg("space"), py::arg("sampler") = py::none(),
      py::arg("direction") = "minimize", py::arg("budget") = 100, py::arg("seed") = 0,
      "Runs a full study; objective exceptions mark trials failed.");

  m.def("rmse", [](const std::vector<double>& t, const std::vector<double>& p) {
    return rmse(t, p);
  });
  m.def("auc", [](const std::vector<double>& labels, const std::vector<double>& scores) {
    return auc(as_labels(labels), scores);
  });
  m.def("cohen_kappa", [](const std::vector<double>& t, const std::vector<double>& p) {
    return cohen_kappa(as_labels(t), as_labels(p));
  });
  m.def("bias_variance_decompose",
        [](const std::vector<double>& predictions, double truth) {
          const BiasVarianceReport r = bias_variance_decompose(predictions, truth);
          py::dict out;
          out["bias_sq"] = r.bias_sq;
          out["variance"] = r.variance;
          out["mse"] = r.mse;
          out["mean_prediction"] = r.mean_prediction;
          return out;
        },
        py::arg("predictions"), py::arg("truth"));

  m.def("ridge_fit",
        [](const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double alpha,
           bool fit_intercept) {
          const LinearModel lm = ridge_fit(x, y, alpha, fit_intercept);
          return py::make_tuple(lm.weights, lm.intercept);
        },
        py::arg("x"), py::arg("y"), py::arg("alpha"), py::arg("fit_intercept") = true);
  m.def("logistic_fit",
        [](const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double c,
           std::size_t max_iters, double tol) {
          LogisticOptions opts;
          opts.max_iters = max_iters;
          opts.tol = tol;
          const LinearModel lm = logistic_fit(x, y, c, opts);
          return py::make_tuple(lm.weights, lm.intercept);
        },
        py::arg("x"), py::arg("y"), py::arg("c"), py::arg("max_iters") = 1000,
        py::arg("tol") = 1e-6);

  m.def("tune",
        [](const std::filesystem::path& manifest, const py::object& output) {
          return run_command(manifest, output, false);
        },
        py::arg("manifest"), py::arg("output") = py::none(),
        "Runs the tune command; returns the process exit code.");
  m.def("compare",
        [](const std::filesystem::path& manifest, const py::object& output) {
          return run_command(manifest, output, true);
        },
        py::arg("manifest"), py::arg("output") = py::none(),
        "Runs the compare command; returns the process exit code.");
}
