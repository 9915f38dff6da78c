#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "simplexlab/analysis.hpp"
#include "simplexlab/error.hpp"
#include "simplexlab/experiment.hpp"
#include "simplexlab/generators.hpp"
#include "simplexlab/io.hpp"

namespace py = pybind11;
namespace sl = simplexlab;
using nlohmann::json;

// Structured values cross the boundary as JSON text; the Python side decodes it.
namespace {

sl::StandardFormLP lp_of(const std::string& instance) { return sl::io::lp_from_json(json::parse(instance)); }

sl::Basis initial_of(const sl::StandardFormLP& lp, const json& doc, const std::optional<std::vector<std::size_t>>& initial) {
  if (initial) {
    std::vector<std::size_t> idx;
    for (auto v : *initial) {
      if (v < 1) throw sl::Error(sl::Errc::ParseError, "basis indices are 1-based");
      idx.push_back(v - 1);
    }
    return sl::Basis(lp, std::move(idx));
  }
  if (auto b = sl::io::initial_basis_from_json(lp, doc)) return *b;
  return sl::phase_one(lp);
}

std::string solve(const std::string& instance, const std::string& rule,
                  const std::optional<std::vector<std::size_t>>& initial, std::optional<std::uint64_t> max_iters) {
  const json doc = json::parse(instance);
  const sl::StandardFormLP lp = sl::io::lp_from_json(doc);
  const sl::SolveTrace t = sl::solve(lp, initial_of(lp, doc, initial), sl::PivotRule::parse(rule), max_iters);
  return sl::io::trace_to_json(t, lp.name).dump();
}

std::string analyze(const std::string& instance, const std::string& p,
                    const std::optional<std::vector<std::size_t>>& initial, std::uint64_t budget) {
  const json doc = json::parse(instance);
  const sl::StandardFormLP lp = sl::io::lp_from_json(doc);
  const sl::NormOrder order = sl::NormOrder::parse(p);
  const sl::BfsCatalog catalog = sl::enumerate_bfs(lp, budget);
  json out{{"catalog", sl::io::catalog_summary_to_json(catalog)}};
  if (!catalog.nondegenerate) throw sl::Error(sl::Errc::DegenerateInstance, "bounds need a nondegenerate instance");
  const sl::QReport q = sl::compute_q(lp, catalog, order);
  out["q"] = sl::io::qreport_to_json(q);
  const sl::Rational x0 = sl::basic_solution(lp, initial_of(lp, doc, initial)).objective;
  out["bounds"] = sl::io::bounds_to_json(sl::evaluate_bounds(catalog, &q, lp.m(), lp.n(), order, x0));
  return out.dump();
}

std::string verify(const std::string& instance, const std::string& trace, std::uint64_t budget) {
  const sl::StandardFormLP lp = lp_of(instance);
  const sl::SolveTrace t = sl::io::trace_from_json(lp, json::parse(trace));
  const sl::BfsCatalog catalog = sl::enumerate_bfs(lp, budget);
  std::optional<sl::QReport> q;
  if (t.rule.kind == sl::PivotRule::Kind::PNorm && catalog.nondegenerate) q = sl::compute_q(lp, catalog, t.rule.order);
  const auto rep = sl::verify_trace(lp, t, catalog, q ? &*q : nullptr, sl::dual_solution(lp, catalog.optimal_basis));
  return sl::io::verification_to_json(rep).dump();
}

std::pair<std::string, bool> experiment(const std::string& config, const std::string& base_dir, bool as_csv) {
  const sl::ExperimentConfig cfg = sl::parse_experiment_config(json::parse(config), base_dir);
  const auto rows = sl::run_experiment(cfg);
  bool all = true;
  for (const auto& r : rows) all = all && r.all_checks_pass;
  if (as_csv) {
    std::ostringstream out;
    sl::write_csv(out, rows, cfg.decimal);
    return {out.str(), all};
  }
  return {sl::rows_to_json(rows).dump(), all};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic simplex workbench (native core)";

  // Messages start with the error name, e.g. "ParseError: ...".
  py::register_exception<sl::Error>(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("klee_minty", [](std::size_t dim) { return sl::io::instance_to_json(sl::klee_minty(dim)).dump(); },
        py::arg("m"));
  m.def("random_lp",
        [](std::size_t rows, std::size_t cols, std::uint64_t seed, long lo, long hi) {
          return sl::io::instance_to_json(sl::random_lp(rows, cols, seed, sl::ValueRange{lo, hi})).dump();
        },
        py::arg("m"), py::arg("n"), py::arg("seed"), py::arg("lo") = -9, py::arg("hi") = 9);
  m.def("dmdp",
        [](std::size_t states, std::size_t k, const std::string& theta, std::uint64_t seed) {
          return sl::io::instance_to_json(sl::dmdp_generate(states, k, sl::Rational::parse(theta), seed)).dump();
        },
        py::arg("m"), py::arg("k"), py::arg("theta"), py::arg("seed"));
  m.def("dmdp_bound",
        [](std::size_t states, std::size_t n, const std::string& theta, const std::string& p) {
          return sl::dmdp_bound(states, n, sl::Rational::parse(theta), sl::NormOrder::parse(p)).get_str();
        },
        py::arg("m"), py::arg("n"), py::arg("theta"), py::arg("p"));
  m.def("solve", &solve, py::arg("instance"), py::arg("rule") = "dantzig", py::arg("initial") = std::nullopt,
        py::arg("max_iters") = std::nullopt);
  m.def("analyze", &analyze, py::arg("instance"), py::arg("p") = "2", py::arg("initial") = std::nullopt,
        py::arg("budget") = sl::kDefaultEnumerationBudget);
  m.def("verify", &verify, py::arg("instance"), py::arg("trace"), py::arg("budget") = sl::kDefaultEnumerationBudget);
  m.def("experiment", &experiment, py::arg("config"), py::arg("base_dir") = "", py::arg("as_csv") = true);
}
