#include "simplexlab/experiment.hpp"

#include <map>
#include <ostream>

#include "simplexlab/error.hpp"
#include "simplexlab/io.hpp"

namespace simplexlab {

using nlohmann::json;

namespace {

[[noreturn]] void config_fail(const std::string& what) {
  throw Error(Errc::InvalidArgument, "experiment config: " + what);
}

std::vector<json> as_list(const json& j) {
  if (j.is_array()) return std::vector<json>(j.begin(), j.end());
  return {j};
}

std::vector<std::uint64_t> seeds_of(const json& spec) {
  if (!spec.contains("seeds")) return {1};
  const json& s = spec.at("seeds");
  std::vector<std::uint64_t> out;
  if (s.is_object()) {
    const auto from = s.at("from").get<std::uint64_t>();
    const auto to = s.at("to").get<std::uint64_t>();
    for (auto v = from; v <= to; ++v) out.push_back(v);
  } else {
    for (const auto& v : as_list(s)) out.push_back(v.get<std::uint64_t>());
  }
  return out;
}

std::vector<std::size_t> sizes_of(const json& spec, const char* key) {
  if (!spec.contains(key)) config_fail(std::string("generator spec needs '") + key + "'");
  std::vector<std::size_t> out;
  for (const auto& v : as_list(spec.at(key))) out.push_back(v.get<std::size_t>());
  return out;
}

void expand_source(const json& spec, const std::filesystem::path& base_dir, ValueRange range,
                   std::vector<InstanceSource>& out) {
  if (spec.contains("file")) {
    const auto path = base_dir / spec.at("file").get<std::string>();
    const json doc = io::read_json_file(path);
    StandardFormLP lp = io::lp_from_json(doc);
    auto initial = io::initial_basis_from_json(lp, doc);
    std::optional<Rational> theta;
    if (auto dmdp = io::dmdp_params_from_json(doc)) theta = dmdp->second;
    std::string label = lp.name;
    out.push_back(InstanceSource{std::move(label), std::move(lp), std::move(initial), std::move(theta)});
    return;
  }
  const std::string gen = spec.value("generator", std::string());
  if (gen == "random") {
    if (spec.contains("value_range")) {
      range = ValueRange{spec.at("value_range").at(0).get<long>(), spec.at("value_range").at(1).get<long>()};
    }
    for (const auto m : sizes_of(spec, "m")) {
      for (const auto n : sizes_of(spec, "n")) {
        if (n <= m) continue;
        for (const auto seed : seeds_of(spec)) {
          auto inst = random_lp(m, n, seed, range);
          std::string label = inst.lp.name;
          out.push_back(InstanceSource{std::move(label), std::move(inst.lp), std::move(inst.initial), {}});
        }
      }
    }
  } else if (gen == "kleeminty") {
    for (const auto m : sizes_of(spec, "m")) {
      auto inst = klee_minty(m);
      std::string label = inst.lp.name;
      out.push_back(InstanceSource{std::move(label), std::move(inst.lp), std::move(inst.initial), {}});
    }
  } else if (gen == "dmdp") {
    if (!spec.contains("theta")) config_fail("dmdp spec needs 'theta'");
    for (const auto m : sizes_of(spec, "m")) {
      for (const auto k : sizes_of(spec, "k")) {
        for (const auto& t : as_list(spec.at("theta"))) {
          const Rational theta = io::rational_from_json(t);
          for (const auto seed : seeds_of(spec)) {
            auto d = dmdp_generate(m, k, theta, seed);
            std::string label = d.instance.lp.name;
            out.push_back(InstanceSource{std::move(label), std::move(d.instance.lp),
                                         std::move(d.instance.initial), theta});
          }
        }
      }
    }
  } else {
    config_fail("instance entry needs 'file' or a generator in {random, kleeminty, dmdp}");
  }
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string opt_str(const std::optional<Rational>& r) { return r ? r->to_string() : std::string(); }
std::string opt_str(const std::optional<mpz_class>& v) { return v ? v->get_str() : std::string(); }

std::string decimal_of(const std::optional<Rational>& r) {
  return r ? Interval::exact(*r, 128).to_decimal(12) : std::string();
}

}  // namespace

ExperimentConfig parse_experiment_config(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) config_fail("top level must be an object");
  ExperimentConfig cfg;
  try {
    ValueRange range;
    if (j.contains("value_range")) {
      range = ValueRange{j.at("value_range").at(0).get<long>(), j.at("value_range").at(1).get<long>()};
    }
    for (const auto& spec : j.value("instances", json::array())) expand_source(spec, base_dir, range, cfg.instances);
    for (const auto& r : j.value("rules", json::array())) cfg.rules.push_back(PivotRule::parse(r.get<std::string>()));
    if (j.contains("p")) {
      for (const auto& p : as_list(j.at("p"))) {
        const std::string text = p.is_string() ? p.get<std::string>() : std::to_string(p.get<unsigned>());
        cfg.rules.push_back(PivotRule::pnorm(NormOrder::parse(text)));
      }
    }
    if (j.contains("max_iters")) cfg.max_iters = j.at("max_iters").get<std::uint64_t>();
    cfg.budget = j.value("budget", kDefaultEnumerationBudget);
    cfg.output = j.value("output", std::string());
    const std::string format = j.value("format", std::string("csv"));
    if (format == "csv") cfg.format = ExperimentConfig::Format::Csv;
    else if (format == "json") cfg.format = ExperimentConfig::Format::Json;
    else config_fail("format must be csv or json");
    cfg.decimal = j.value("decimal", false);
  } catch (const json::exception& e) {
    config_fail(e.what());
  }
  if (cfg.instances.empty()) config_fail("no instance sources");
  if (cfg.rules.empty()) config_fail("no pivot rules");
  return cfg;
}

std::vector<ExperimentRow> run_instance(const InstanceSource& source, const std::vector<PivotRule>& rules,
                                        std::optional<std::uint64_t> max_iters, std::uint64_t budget) {
  const StandardFormLP& lp = source.lp;
  std::vector<ExperimentRow> rows;
  for (const auto& rule : rules) {
    ExperimentRow row;
    row.instance = source.label;
    row.rule = rule.to_string();
    if (rule.kind == PivotRule::Kind::PNorm) row.p = rule.order.to_string();
    row.m = lp.m();
    row.n = lp.n();
    rows.push_back(std::move(row));
  }
  auto fail_all = [&rows](const std::string& why) {
    for (auto& r : rows) {
      r.all_checks_pass = false;
      r.failure = why;
    }
    return rows;
  };

  std::optional<BfsCatalog> catalog;
  std::optional<Basis> initial;
  try {
    catalog = enumerate_bfs(lp, budget);
    initial = source.initial ? *source.initial : phase_one(lp);
  } catch (const Error& e) {
    return fail_all(e.what());
  }

  // Basic values of every BFS of a DMDP lie in [1, m / (1 - theta)].
  bool dmdp_range_ok = true;
  if (source.dmdp_theta) {
    const Rational upper = Rational(static_cast<long>(lp.m())) / (Rational(1) - *source.dmdp_theta);
    for (const auto& e : catalog->entries) {
      for (const auto& v : e.dict.b_bar) {
        if (v < Rational(1) || v > upper) dmdp_range_ok = false;
      }
    }
  }

  DualSolution dual_opt = dual_solution(lp, catalog->optimal_basis);
  std::map<std::string, std::optional<QReport>> q_cache;

  for (std::size_t r = 0; r < rules.size(); ++r) {
    const PivotRule& rule = rules[r];
    ExperimentRow& row = rows[r];
    std::vector<std::string> failures;
    row.gamma = catalog->gamma;
    row.delta = catalog->delta;
    try {
      const SolveTrace trace = solve(lp, *initial, rule, max_iters);
      row.iterations = trace.iterations();
      row.outcome = to_string(trace.outcome);
      const bool pnorm = rule.kind == PivotRule::Kind::PNorm;
      if (trace.outcome != Outcome::Optimal) {
        failures.push_back(row.outcome);
      } else if (trace.final_objective != catalog->z_star) {
        failures.emplace_back("oracle");
      } else if (!catalog->nondegenerate) {
        failures.emplace_back("DegenerateInstance");
      } else {
        const QReport* qrep = nullptr;
        if (pnorm) {
          auto& slot = q_cache[rule.order.to_string()];
          if (!slot) {
            try {
              slot = compute_q(lp, *catalog, rule.order);
            } catch (const Error& e) {
              if (e.code() != Errc::NoImprovingNonbasis) throw;
            }
          }
          if (slot) {
            qrep = &*slot;
            row.q = qrep->q_decimal();
            row.q_powered = qrep->q_powered;
            if (!qrep->lower_bound_holds) failures.emplace_back("q_lower_bound");
            if (qrep->norm_bounds.violations > 0) failures.emplace_back("norm_bounds");
          }
        }
        if (!pnorm || qrep) {
          const VerificationReport rep = verify_trace(lp, trace, *catalog, qrep, dual_opt);
          for (const auto& c : rep.checks) {
            if (!c.pass) failures.push_back(c.name);
          }
          if (rep.bounds) {
            row.thm3 = rep.bounds->thm3;
            row.thm4 = rep.bounds->thm4;
            row.thm5 = rep.bounds->thm5;
            row.thm6 = rep.bounds->thm6;
            row.km1 = rep.bounds->km1;
            row.km2 = rep.bounds->km2;
            row.km3 = rep.bounds->km3;
          }
        }
        if (pnorm && source.dmdp_theta) {
          row.dmdp_thm7 = dmdp_bound(lp.m(), lp.n(), *source.dmdp_theta, rule.order);
          if (mpz_class(static_cast<unsigned long>(row.iterations)) > *row.dmdp_thm7) {
            failures.emplace_back("dmdp_thm7");
          }
        }
      }
    } catch (const Error& e) {
      failures.emplace_back(e.what());
    }
    if (!dmdp_range_ok) failures.emplace_back("dmdp_basic_range");
    row.all_checks_pass = failures.empty();
    row.failure = join(failures, ';');
  }
  return rows;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  std::vector<ExperimentRow> rows;
  for (const auto& source : config.instances) {
    auto part = run_instance(source, config.rules, config.max_iters, config.budget);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows, bool decimal) {
  out << "instance,rule,p,m,n,gamma,delta,q,iterations,thm3,thm4,thm5,thm6,km1,km2,km3,"
         "all_checks_pass,q_powered,dmdp_thm7,outcome,failure";
  if (decimal) out << ",gamma_decimal,delta_decimal";
  out << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.instance) << ',' << r.rule << ',' << r.p << ',' << r.m << ',' << r.n << ','
        << opt_str(r.gamma) << ',' << opt_str(r.delta) << ',' << r.q << ',' << r.iterations << ','
        << opt_str(r.thm3) << ',' << opt_str(r.thm4) << ',' << opt_str(r.thm5) << ','
        << opt_str(r.thm6) << ',' << opt_str(r.km1) << ',' << opt_str(r.km2) << ','
        << opt_str(r.km3) << ',' << (r.all_checks_pass ? "true" : "false") << ','
        << opt_str(r.q_powered) << ',' << opt_str(r.dmdp_thm7) << ',' << r.outcome << ','
        << csv_field(r.failure);
    if (decimal) out << ',' << decimal_of(r.gamma) << ',' << decimal_of(r.delta);
    out << '\n';
  }
}

json rows_to_json(const std::vector<ExperimentRow>& rows) {
  auto opt_int = [](const std::optional<mpz_class>& v) { return v ? io::integer_to_json(*v) : json(nullptr); };
  auto opt_rat = [](const std::optional<Rational>& v) { return v ? io::rational_to_json(*v) : json(nullptr); };
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back(json{{"instance", r.instance},
                       {"rule", r.rule},
                       {"p", r.p.empty() ? json(nullptr) : json(r.p)},
                       {"m", r.m},
                       {"n", r.n},
                       {"gamma", opt_rat(r.gamma)},
                       {"delta", opt_rat(r.delta)},
                       {"q", r.q.empty() ? json(nullptr) : json(r.q)},
                       {"q_powered", opt_rat(r.q_powered)},
                       {"iterations", r.iterations},
                       {"thm3", opt_int(r.thm3)},
                       {"thm4", opt_int(r.thm4)},
                       {"thm5", opt_int(r.thm5)},
                       {"thm6", opt_int(r.thm6)},
                       {"km1", opt_int(r.km1)},
                       {"km2", opt_int(r.km2)},
                       {"km3", opt_int(r.km3)},
                       {"dmdp_thm7", opt_int(r.dmdp_thm7)},
                       {"outcome", r.outcome},
                       {"all_checks_pass", r.all_checks_pass},
                       {"failure", r.failure}});
  }
  return out;
}

}  // namespace simplexlab
