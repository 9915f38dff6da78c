// simplexlab command-line front end.
//
// Exit codes:
//   0 success        1 a check failed      2 parse or usage error
//   3 Unbounded      4 Infeasible          5 DegeneratePivot
//   6 IterationLimit 7 DegenerateInstance  8 BudgetExceeded
//   9 any other error

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "simplexlab/analysis.hpp"
#include "simplexlab/error.hpp"
#include "simplexlab/experiment.hpp"
#include "simplexlab/generators.hpp"
#include "simplexlab/io.hpp"
#include "simplexlab/simplex.hpp"

namespace sl = simplexlab;
using nlohmann::json;

namespace {

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kParse = 2,
  kUnbounded = 3,
  kInfeasible = 4,
  kDegeneratePivot = 5,
  kIterationLimit = 6,
  kDegenerateInstance = 7,
  kBudget = 8,
  kOther = 9,
};

int exit_for(sl::Errc code) {
  switch (code) {
    case sl::Errc::ParseError:
    case sl::Errc::InvalidP:
    case sl::Errc::InvalidArgument:
    case sl::Errc::DimensionMismatch:
    case sl::Errc::DegenerateShape:
    case sl::Errc::RankDeficient:
    case sl::Errc::IndexOutOfRange:
    case sl::Errc::InvalidDimension:
    case sl::Errc::InvalidTheta:
      return kParse;
    case sl::Errc::Infeasible:
    case sl::Errc::InfeasibleInitialBasis:
    case sl::Errc::NoFeasibleBasis:
      return kInfeasible;
    case sl::Errc::DegenerateInstance:
      return kDegenerateInstance;
    case sl::Errc::BudgetExceeded:
      return kBudget;
    default:
      return kOther;
  }
}

int exit_for(sl::Outcome outcome) {
  switch (outcome) {
    case sl::Outcome::Optimal: return kOk;
    case sl::Outcome::Unbounded: return kUnbounded;
    case sl::Outcome::DegeneratePivot: return kDegeneratePivot;
    case sl::Outcome::IterationLimit: return kIterationLimit;
  }
  return kOther;
}

void emit(const json& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    sl::io::write_json_file(out, doc);
  }
}

struct Loaded {
  sl::StandardFormLP lp;
  json doc;
};

Loaded load_instance(const std::string& path) {
  json doc = sl::io::read_json_file(path);
  sl::StandardFormLP lp = sl::io::lp_from_json(doc);
  return {std::move(lp), std::move(doc)};
}

// "--initial 1,3" (1-based), else the file's initial_basis, else phase one.
sl::Basis starting_basis(const Loaded& in, const std::vector<std::size_t>& flag) {
  if (!flag.empty()) {
    std::vector<std::size_t> idx;
    for (const auto v : flag) {
      if (v < 1) throw sl::Error(sl::Errc::ParseError, "--initial indices are 1-based");
      idx.push_back(v - 1);
    }
    return sl::Basis(in.lp, std::move(idx));
  }
  if (auto b = sl::io::initial_basis_from_json(in.lp, in.doc)) return *b;
  return sl::phase_one(in.lp);
}

std::string decimal(const sl::Rational& r) { return sl::Interval::exact(r, 128).to_decimal(12); }

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

struct GenerateOpts {
  std::size_t m = 0, n = 0, k = 2;
  std::uint64_t seed = 1;
  long lo = -9, hi = 9;
  std::string theta = "1/2";
  std::string out;
};

struct SolveOpts {
  std::string instance, rule = "dantzig", out;
  std::vector<std::size_t> initial;
  std::optional<std::uint64_t> max_iters;
};

struct AnalyzeOpts {
  std::string instance, p = "2", out;
  std::vector<std::size_t> initial;
  std::uint64_t budget = sl::kDefaultEnumerationBudget;
  bool decimal = false;
};

struct ExperimentOpts {
  std::string config, out, format;
  bool decimal = false;
};

struct VerifyOpts {
  std::string instance, trace, out;
  std::uint64_t budget = sl::kDefaultEnumerationBudget;
};

int run_generate(const std::string& kind, const GenerateOpts& o) {
  json doc;
  if (kind == "kleeminty") {
    doc = sl::io::instance_to_json(sl::klee_minty(o.m));
  } else if (kind == "random") {
    doc = sl::io::instance_to_json(sl::random_lp(o.m, o.n, o.seed, sl::ValueRange{o.lo, o.hi}));
  } else {
    doc = sl::io::instance_to_json(sl::dmdp_generate(o.m, o.k, sl::Rational::parse(o.theta), o.seed));
  }
  emit(doc, o.out);
  return kOk;
}

int run_solve(const SolveOpts& o) {
  const Loaded in = load_instance(o.instance);
  const sl::PivotRule rule = sl::PivotRule::parse(o.rule);
  const sl::Basis initial = starting_basis(in, o.initial);
  const sl::SolveTrace trace = sl::solve(in.lp, initial, rule, o.max_iters);
  if (!o.out.empty()) sl::io::write_json_file(o.out, sl::io::trace_to_json(trace, in.lp.name));

  std::cout << sl::to_string(trace.outcome) << ", " << trace.iterations()
            << (trace.iterations() == 1 ? " iteration" : " iterations");
  if (trace.outcome == sl::Outcome::Optimal) std::cout << ", objective " << trace.final_objective;
  if (trace.unbounded_variable) std::cout << ", unbounded along x" << *trace.unbounded_variable + 1;
  std::cout << '\n';
  return exit_for(trace.outcome);
}

int run_analyze(const AnalyzeOpts& o) {
  const Loaded in = load_instance(o.instance);
  const sl::NormOrder order = sl::NormOrder::parse(o.p);
  const sl::BfsCatalog catalog = sl::enumerate_bfs(in.lp, o.budget);

  json report{{"instance", in.lp.name}, {"catalog", sl::io::catalog_summary_to_json(catalog)}};
  std::cout << "feasible bases: " << catalog.entries.size() << '\n'
            << "z*=" << catalog.z_star;
  if (catalog.z_second) std::cout << " z_second=" << *catalog.z_second;
  std::cout << " nondegenerate=" << (catalog.nondegenerate ? "true" : "false") << '\n';
  if (catalog.gamma) {
    std::cout << "gamma=" << *catalog.gamma << " delta=" << *catalog.delta;
    if (o.decimal) std::cout << " (gamma~" << decimal(*catalog.gamma) << " delta~" << decimal(*catalog.delta) << ')';
    std::cout << '\n';
  }

  auto finish = [&](int code) {
    if (!o.out.empty()) sl::io::write_json_file(o.out, report);
    return code;
  };
  if (!catalog.nondegenerate) {
    std::cerr << "DegenerateInstance: some basic feasible solution has a zero basic entry; bounds are not evaluated\n";
    return finish(kDegenerateInstance);
  }

  const sl::QReport qrep = sl::compute_q(in.lp, catalog, order);
  report["q"] = sl::io::qreport_to_json(qrep);
  std::cout << "p=" << order.to_string() << " q=" << qrep.q_decimal() << " q_powered=" << qrep.q_powered << '\n';

  const sl::Basis initial = starting_basis(in, o.initial);
  const sl::Rational x0 = sl::basic_solution(in.lp, initial).objective;
  const sl::BoundReport bounds = sl::evaluate_bounds(catalog, &qrep, in.lp.m(), in.lp.n(), order, x0);
  report["bounds"] = sl::io::bounds_to_json(bounds);
  std::cout << "thm3=" << *bounds.thm3 << " thm4=" << *bounds.thm4 << " thm5=" << *bounds.thm5
            << " thm6=" << *bounds.thm6 << '\n'
            << "km1=" << bounds.km1 << " km2=" << bounds.km2 << " km3=" << bounds.km3 << '\n';
  return finish(kOk);
}

int run_experiment(const ExperimentOpts& o) {
  const json doc = sl::io::read_json_file(o.config);
  sl::ExperimentConfig cfg = sl::parse_experiment_config(doc, std::filesystem::path(o.config).parent_path());
  if (!o.out.empty()) cfg.output = o.out;
  if (o.format == "json") cfg.format = sl::ExperimentConfig::Format::Json;
  else if (o.format == "csv") cfg.format = sl::ExperimentConfig::Format::Csv;
  if (o.decimal) cfg.decimal = true;

  const auto rows = sl::run_experiment(cfg);
  std::ostringstream text;
  if (cfg.format == sl::ExperimentConfig::Format::Csv) {
    sl::write_csv(text, rows, cfg.decimal);
  } else {
    text << json{{"generated_at", timestamp()}, {"rows", sl::rows_to_json(rows)}}.dump(2) << '\n';
  }
  if (cfg.output.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream(cfg.output, std::ios::binary) << text.str();
  }

  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.all_checks_pass ? 0 : 1;
  std::cerr << rows.size() << " rows, " << failed << " failing\n";
  return failed == 0 ? kOk : kCheckFailed;
}

int run_verify(const VerifyOpts& o) {
  const Loaded in = load_instance(o.instance);
  const sl::SolveTrace trace = sl::io::trace_from_json(in.lp, sl::io::read_json_file(o.trace));
  const sl::BfsCatalog catalog = sl::enumerate_bfs(in.lp, o.budget);
  std::optional<sl::QReport> qrep;
  if (trace.rule.kind == sl::PivotRule::Kind::PNorm && catalog.nondegenerate) {
    qrep = sl::compute_q(in.lp, catalog, trace.rule.order);
  }
  const sl::DualSolution dual_opt = sl::dual_solution(in.lp, catalog.optimal_basis);
  const sl::VerificationReport rep =
      sl::verify_trace(in.lp, trace, catalog, qrep ? &*qrep : nullptr, dual_opt);
  for (const auto& c : rep.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.evaluated << " evaluated)";
    if (!c.pass && !c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << '\n';
  }
  if (!o.out.empty()) sl::io::write_json_file(o.out, sl::io::verification_to_json(rep));
  return rep.all_pass() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic simplex workbench"};
  app.require_subcommand(1);

  GenerateOpts gen;
  auto* generate = app.add_subcommand("generate", "Write a generated instance as JSON");
  generate->require_subcommand(1);
  auto* g_km = generate->add_subcommand("kleeminty", "Klee-Minty cube in standard form");
  g_km->add_option("--m", gen.m, "Dimension")->required();
  g_km->add_option("--out,-o", gen.out, "Output file (default stdout)");
  auto* g_rand = generate->add_subcommand("random", "Random nondegenerate LP with a feasible start");
  g_rand->add_option("--m", gen.m, "Rows")->required();
  g_rand->add_option("--n", gen.n, "Columns")->required();
  g_rand->add_option("--seed", gen.seed, "Seed");
  g_rand->add_option("--lo", gen.lo, "Smallest entry");
  g_rand->add_option("--hi", gen.hi, "Largest entry");
  g_rand->add_option("--out,-o", gen.out, "Output file (default stdout)");
  auto* g_dmdp = generate->add_subcommand("dmdp", "Discounted MDP in LP form");
  g_dmdp->add_option("--m", gen.m, "States")->required();
  g_dmdp->add_option("--k", gen.k, "Actions per state");
  g_dmdp->add_option("--theta", gen.theta, "Discount factor as p/q");
  g_dmdp->add_option("--seed", gen.seed, "Seed");
  g_dmdp->add_option("--out,-o", gen.out, "Output file (default stdout)");

  SolveOpts sol;
  auto* solve = app.add_subcommand("solve", "Run the simplex method and write the trace");
  solve->add_option("instance", sol.instance, "Instance JSON")->required();
  solve->add_option("--rule", sol.rule, "dantzig | best | steepest | pnorm:<k> | pnorm:inf");
  solve->add_option("--initial", sol.initial, "Initial basis, 1-based")->delimiter(',');
  solve->add_option("--max-iters", sol.max_iters, "Iteration limit");
  solve->add_option("--out,-o", sol.out, "Trace file");

  AnalyzeOpts an;
  auto* analyze = app.add_subcommand("analyze", "Enumerate BFSs and evaluate q and the bounds");
  analyze->add_option("instance", an.instance, "Instance JSON")->required();
  analyze->add_option("--p", an.p, "Norm order (integer or inf)");
  analyze->add_option("--initial", an.initial, "Initial basis, 1-based")->delimiter(',');
  analyze->add_option("--budget", an.budget, "Maximum number of column subsets");
  analyze->add_option("--out,-o", an.out, "Report file");
  analyze->add_flag("--decimal", an.decimal, "Also print decimal approximations");

  ExperimentOpts ex;
  auto* experiment = app.add_subcommand("experiment", "Run a batch described by a config file");
  experiment->add_option("config", ex.config, "Experiment config JSON")->required();
  experiment->add_option("--out,-o", ex.out, "Output table (overrides the config)");
  experiment->add_option("--format", ex.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  experiment->add_flag("--decimal", ex.decimal, "Add decimal gamma and delta columns");

  VerifyOpts ver;
  auto* verify = app.add_subcommand("verify", "Check a stored trace against the enumeration oracle");
  verify->add_option("instance", ver.instance, "Instance JSON")->required();
  verify->add_option("trace", ver.trace, "Trace JSON")->required();
  verify->add_option("--budget", ver.budget, "Maximum number of column subsets");
  verify->add_option("--out,-o", ver.out, "Report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*generate) {
      for (auto* sub : {g_km, g_rand, g_dmdp}) {
        if (*sub) return run_generate(sub->get_name(), gen);
      }
    }
    if (*solve) return run_solve(sol);
    if (*analyze) return run_analyze(an);
    if (*experiment) return run_experiment(ex);
    if (*verify) return run_verify(ver);
  } catch (const sl::Error& e) {
    std::cerr << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}
