#include "simplexlab/io.hpp"

#include <fstream>
#include <limits>

#include "simplexlab/error.hpp"

namespace simplexlab::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t to_index(const json& j, std::size_t n) {
  if (!j.is_number_integer()) parse_fail("variable index must be an integer");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > n) parse_fail("variable index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v - 1);
}

Vector vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
  Vector out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

json vector_to_json(const Vector& v, bool as_scalar) {
  json out = json::array();
  for (const auto& e : v) out.push_back(as_scalar ? scalar_to_json(e) : rational_to_json(e));
  return out;
}

json matrix_to_json(const Matrix& m, bool as_scalar) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i), as_scalar));
  return out;
}

json optional_rational(const std::optional<Rational>& r) {
  return r ? rational_to_json(*r) : json(nullptr);
}

json optional_integer(const std::optional<mpz_class>& v) {
  return v ? integer_to_json(*v) : json(nullptr);
}

}  // namespace

json scalar_to_json(const Rational& r) {
  if (r.is_integer()) {
    const mpz_class num = r.numerator();
    if (num.fits_slong_p()) return json(num.get_si());
  }
  return json(r.to_string());
}

json rational_to_json(const Rational& r) { return json(r.to_string()); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  parse_fail("scalar must be an integer or a \"p/q\" string, got " + j.dump());
}

json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json lp_to_json(const StandardFormLP& lp) {
  return json{{"name", lp.name},
              {"m", lp.m()},
              {"n", lp.n()},
              {"A", matrix_to_json(lp.A, true)},
              {"b", vector_to_json(lp.b, true)},
              {"c", vector_to_json(lp.c, true)}};
}

namespace {

StandardFormLP lp_from_json_unchecked(const json& j) {
  if (!j.is_object()) parse_fail("instance must be a JSON object");
  StandardFormLP lp;
  lp.name = j.value("name", std::string("unnamed"));
  const json& rows = require(j, "A");
  if (!rows.is_array()) parse_fail("A must be an array of rows");
  std::vector<Vector> a;
  for (const auto& row : rows) a.push_back(vector_from_json(row, "A row"));
  lp.A = Matrix::from_rows(a);
  lp.b = vector_from_json(require(j, "b"), "b");
  lp.c = vector_from_json(require(j, "c"), "c");
  const json& m = require(j, "m");
  const json& n = require(j, "n");
  if (!m.is_number_integer() || !n.is_number_integer()) parse_fail("m and n must be integers");
  if (m.get<long long>() != static_cast<long long>(lp.A.rows()) ||
      (lp.A.rows() > 0 && n.get<long long>() != static_cast<long long>(lp.A.cols()))) {
    throw Error(Errc::DimensionMismatch, "declared m/n disagree with A");
  }
  if (lp.A.rows() == 0) lp.A = Matrix(0, static_cast<std::size_t>(n.get<long long>()));
  return lp;
}

SolveTrace trace_from_json_unchecked(const StandardFormLP& lp, const json& j);

}  // namespace

StandardFormLP lp_from_json(const json& j) {
  StandardFormLP lp;
  try {
    lp = lp_from_json_unchecked(j);
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed instance: ") + e.what());
  }
  return validate(std::move(lp));
}

SolveTrace trace_from_json(const StandardFormLP& lp, const json& j) {
  try {
    return trace_from_json_unchecked(lp, j);
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed trace: ") + e.what());
  }
}

json basis_to_json(const Basis& basis) {
  json out = json::array();
  for (const auto j : basis.indices()) out.push_back(j + 1);
  return out;
}

Basis basis_from_json(const StandardFormLP& lp, const json& j) {
  if (!j.is_array()) parse_fail("basis must be an array of 1-based variable indices");
  std::vector<std::size_t> idx;
  for (const auto& e : j) idx.push_back(to_index(e, lp.n()));
  return Basis(lp, std::move(idx));
}

json instance_to_json(const GeneratedInstance& inst) {
  json out = lp_to_json(inst.lp);
  out["initial_basis"] = basis_to_json(inst.initial);
  return out;
}

json instance_to_json(const DmdpInstance& inst) {
  json out = instance_to_json(inst.instance);
  out["dmdp"] = json{{"m", inst.m},
                     {"k", inst.k},
                     {"theta", scalar_to_json(inst.theta)},
                     {"P", matrix_to_json(inst.P, true)},
                     {"E", matrix_to_json(inst.E, true)},
                     {"costs", vector_to_json(inst.costs, true)}};
  return out;
}

std::optional<Basis> initial_basis_from_json(const StandardFormLP& lp, const json& j) {
  if (!j.is_object() || !j.contains("initial_basis") || j.at("initial_basis").is_null()) return std::nullopt;
  return basis_from_json(lp, j.at("initial_basis"));
}

std::optional<std::pair<std::size_t, Rational>> dmdp_params_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dmdp")) return std::nullopt;
  const json& d = j.at("dmdp");
  const json& k = require(d, "k");
  if (!k.is_number_integer()) parse_fail("dmdp.k must be an integer");
  return std::make_pair(static_cast<std::size_t>(k.get<long long>()), rational_from_json(require(d, "theta")));
}

json trace_to_json(const SolveTrace& trace, const std::string& instance_name) {
  json records = json::array();
  for (const auto& r : trace.records) {
    records.push_back(json{{"t", r.t},
                           {"basis_before", basis_to_json(r.basis_before)},
                           {"entering", r.entering + 1},
                           {"leaving", r.leaving + 1},
                           {"dantzig_entering", r.dantzig_entering + 1},
                           {"step", rational_to_json(r.step)},
                           {"delta_s", rational_to_json(r.delta_s)},
                           {"delta_d", rational_to_json(r.delta_d)},
                           {"norm_s_powered", rational_to_json(r.norm_s.powered)},
                           {"norm_d_powered", rational_to_json(r.norm_d.powered)},
                           {"objective_before", rational_to_json(r.objective_before)},
                           {"objective_after", rational_to_json(r.objective_after)}});
  }
  return json{{"instance", instance_name.empty() ? json(nullptr) : json(instance_name)},
              {"rule", trace.rule.to_string()},
              {"norm_order", trace.norm_order.to_string()},
              {"outcome", to_string(trace.outcome)},
              {"iterations", trace.iterations()},
              {"initial_basis", basis_to_json(trace.initial_solution.basis)},
              {"initial_objective", rational_to_json(trace.initial_solution.objective)},
              {"final_basis", basis_to_json(trace.final_basis)},
              {"final_objective", rational_to_json(trace.final_objective)},
              {"unbounded_variable",
               trace.unbounded_variable ? json(*trace.unbounded_variable + 1) : json(nullptr)},
              {"records", std::move(records)}};
}

namespace {

SolveTrace trace_from_json_unchecked(const StandardFormLP& lp, const json& j) {
  SolveTrace t;
  t.rule = PivotRule::parse(require(j, "rule").get<std::string>());
  t.norm_order = NormOrder::parse(require(j, "norm_order").get<std::string>());
  const std::string outcome = require(j, "outcome").get<std::string>();
  if (outcome == "Optimal") t.outcome = Outcome::Optimal;
  else if (outcome == "Unbounded") t.outcome = Outcome::Unbounded;
  else if (outcome == "IterationLimit") t.outcome = Outcome::IterationLimit;
  else if (outcome == "DegeneratePivot") t.outcome = Outcome::DegeneratePivot;
  else parse_fail("unknown outcome '" + outcome + "'");

  t.initial_solution = basic_solution(lp, basis_from_json(lp, require(j, "initial_basis")));
  t.final_basis = basis_from_json(lp, require(j, "final_basis"));
  t.final_objective = rational_from_json(require(j, "final_objective"));
  if (j.contains("unbounded_variable") && !j.at("unbounded_variable").is_null()) {
    t.unbounded_variable = to_index(j.at("unbounded_variable"), lp.n());
  }
  for (const auto& r : require(j, "records")) {
    t.records.push_back(IterationRecord{
        static_cast<std::size_t>(require(r, "t").get<long long>()),
        basis_from_json(lp, require(r, "basis_before")),
        to_index(require(r, "entering"), lp.n()),
        to_index(require(r, "leaving"), lp.n()),
        to_index(require(r, "dantzig_entering"), lp.n()),
        rational_from_json(require(r, "step")),
        rational_from_json(require(r, "delta_s")),
        rational_from_json(require(r, "delta_d")),
        ColumnNorm{t.norm_order, rational_from_json(require(r, "norm_s_powered"))},
        ColumnNorm{t.norm_order, rational_from_json(require(r, "norm_d_powered"))},
        rational_from_json(require(r, "objective_before")),
        rational_from_json(require(r, "objective_after"))});
  }
  return t;
}

}  // namespace

json catalog_summary_to_json(const BfsCatalog& c) {
  return json{{"feasible_bases", c.entries.size()},
              {"subsets_examined", c.subsets_examined},
              {"gamma", optional_rational(c.gamma)},
              {"delta", optional_rational(c.delta)},
              {"z_star", rational_to_json(c.z_star)},
              {"z_second", optional_rational(c.z_second)},
              {"gamma_D_prime", optional_rational(c.gamma_D_prime)},
              {"delta_D_prime", optional_rational(c.delta_D_prime)},
              {"nondegenerate", c.nondegenerate},
              {"optimal_basis", basis_to_json(c.optimal_basis)}};
}

json qreport_to_json(const QReport& q) {
  json per = json::array();
  for (const auto& e : q.per_nonbasis) {
    per.push_back(json{{"basis", basis_to_json(e.basis)},
                       {"s", e.s + 1},
                       {"d", e.d + 1},
                       {"q_powered", rational_to_json(e.q_powered)}});
  }
  json violation = nullptr;
  if (q.norm_bounds.first_violation) {
    violation = json{{"basis", basis_to_json(q.norm_bounds.first_violation->first)},
                     {"entering", q.norm_bounds.first_violation->second + 1}};
  }
  return json{{"p", q.order.to_string()},
              {"q", q.q_decimal()},
              {"q_powered", rational_to_json(q.q_powered)},
              {"lower_powered", rational_to_json(q.lower_powered)},
              {"lower_bound_holds", q.lower_bound_holds},
              {"norm_bounds", {{"checked", q.norm_bounds.checked},
                               {"violations", q.norm_bounds.violations},
                               {"first_violation", violation}}},
              {"per_nonbasis", std::move(per)}};
}

json bounds_to_json(const BoundReport& b) {
  return json{{"m", b.m},
              {"n", b.n},
              {"gamma", rational_to_json(b.gamma)},
              {"delta", rational_to_json(b.delta)},
              {"p", b.order ? json(b.order->to_string()) : json(nullptr)},
              {"q_powered", optional_rational(b.q_powered)},
              {"gap0", rational_to_json(b.gap0)},
              {"gap_second", rational_to_json(b.gap_second)},
              {"thm3", optional_integer(b.thm3)},
              {"thm4", optional_integer(b.thm4)},
              {"thm5", optional_integer(b.thm5)},
              {"thm6", optional_integer(b.thm6)},
              {"km1", integer_to_json(b.km1)},
              {"km2", integer_to_json(b.km2)},
              {"km3", integer_to_json(b.km3)},
              {"dmdp_thm7", optional_integer(b.dmdp_thm7)}};
}

json verification_to_json(const VerificationReport& v) {
  json checks = json::array();
  for (const auto& c : v.checks) {
    checks.push_back(json{{"name", c.name},
                          {"pass", c.pass},
                          {"evaluated", c.evaluated},
                          {"first_failure", c.first_failure ? json(*c.first_failure) : json(nullptr)},
                          {"detail", c.detail}});
  }
  return json{{"iterations", v.iterations},
              {"all_pass", v.all_pass()},
              {"checks", std::move(checks)},
              {"bounds", v.bounds ? bounds_to_json(*v.bounds) : json(nullptr)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace simplexlab::io
