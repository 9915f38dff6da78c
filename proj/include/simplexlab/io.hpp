#pragma once

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "simplexlab/analysis.hpp"
#include "simplexlab/generators.hpp"
#include "simplexlab/lp.hpp"
#include "simplexlab/simplex.hpp"

// JSON schemas. Variable indices are 1-based in every file format.
namespace simplexlab::io {

using nlohmann::json;

// Instance scalars: JSON integer when the value is an integer that fits in
// 64 bits, otherwise a "p/q" string.
json scalar_to_json(const Rational& r);
// Reports and traces: always a string.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);
json integer_to_json(const mpz_class& v);

json lp_to_json(const StandardFormLP& lp);
// Parses and validates. Every failure surfaces as Error(ParseError) except
// the validate() errors (RankDeficient, DimensionMismatch, DegenerateShape).
StandardFormLP lp_from_json(const json& j);

json basis_to_json(const Basis& basis);
Basis basis_from_json(const StandardFormLP& lp, const json& j);

// Instance plus "initial_basis".
json instance_to_json(const GeneratedInstance& inst);
// Instance plus initial basis and the "dmdp" provenance block.
json instance_to_json(const DmdpInstance& inst);
// Reads the optional "initial_basis" key of an instance document.
std::optional<Basis> initial_basis_from_json(const StandardFormLP& lp, const json& j);
// Reads the "dmdp" block (theta, k) of an instance document, if any.
std::optional<std::pair<std::size_t, Rational>> dmdp_params_from_json(const json& j);

json trace_to_json(const SolveTrace& trace, const std::string& instance_name = {});
SolveTrace trace_from_json(const StandardFormLP& lp, const json& j);

json catalog_summary_to_json(const BfsCatalog& catalog);
json qreport_to_json(const QReport& q);
json bounds_to_json(const BoundReport& b);
json verification_to_json(const VerificationReport& v);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace simplexlab::io
