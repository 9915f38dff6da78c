#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "simplexlab/analysis.hpp"
#include "simplexlab/generators.hpp"
#include "simplexlab/pivot_rules.hpp"

namespace simplexlab {

struct InstanceSource {
  std::string label;
  StandardFormLP lp;
  std::optional<Basis> initial;  // phase one when absent
  // Present for DMDP instances: discount factor (the bound needs m, n, theta).
  std::optional<Rational> dmdp_theta;
};

struct ExperimentConfig {
  enum class Format { Csv, Json };

  std::vector<InstanceSource> instances;
  std::vector<PivotRule> rules;
  std::optional<std::uint64_t> max_iters;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::string output;
  Format format = Format::Csv;
  bool decimal = false;
};

// Expands generator specs and loads instance files (relative to `base_dir`).
// Throws Error(InvalidArgument) when no instance or no rule is configured.
ExperimentConfig parse_experiment_config(const nlohmann::json& j,
                                         const std::filesystem::path& base_dir = {});

struct ExperimentRow {
  std::string instance;
  std::string rule;
  std::string p;  // empty unless the rule is p-norm
  std::size_t m = 0;
  std::size_t n = 0;
  std::optional<Rational> gamma, delta;
  std::string q;                       // decimal, non-authoritative
  std::optional<Rational> q_powered;   // exact q^p (q for p = inf)
  std::size_t iterations = 0;
  std::optional<mpz_class> thm3, thm4, thm5, thm6, km1, km2, km3, dmdp_thm7;
  std::string outcome;
  bool all_checks_pass = false;
  std::string failure;  // failing checks or the error that stopped the row
};

std::vector<ExperimentRow> run_instance(const InstanceSource& source, const std::vector<PivotRule>& rules,
                                        std::optional<std::uint64_t> max_iters = std::nullopt,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows, bool decimal = false);
nlohmann::json rows_to_json(const std::vector<ExperimentRow>& rows);

}  // namespace simplexlab
