#pragma once

#include <string>

#include "cartansuper/bider.hpp"
#include "cartansuper/model.hpp"

namespace cartansuper {

/// ModelFile text: versioned JSON, integers only, keys in fixed order,
/// structure quadruples (a, b, k, c) for canonical pairs only.  The output
/// is byte-stable: serialize(parse(text)) == text.
std::string serialize_model(const AlgebraModel& model);

/// Inverse of serialize_model.  Shape parameters are revalidated for
/// witt/special kinds; malformed input is a UsageError.  Monomial
/// provenance (basis_data) is not part of the file format and is left
/// empty; every stored field round-trips exactly.
AlgebraModel parse_model(const std::string& text);

void write_model_file(const AlgebraModel& model, const std::string& path);
AlgebraModel read_model_file(const std::string& path);

/// Report serializers used by the CLI.  Wall-time fields can be dropped so
/// that outputs are golden-comparable.
std::string solver_report_json(const SolverReport& report, bool with_wall_time = true);
std::string structure_report_json(const StructureReport& report);
std::string identity_report_json(const IdentityReport& report);
std::string theorem_report_json(const TheoremReport& report, bool with_wall_time = true);

}  // namespace cartansuper
