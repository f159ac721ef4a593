#pragma once

#include <string>

#include <json.hpp>

#include "cliff/reynolds.hpp"

namespace cliff::io {

// ordered_json keeps insertion order, so multivector keys are emitted in
// canonical (grade, then lexicographic) order.
using json = nlohmann::ordered_json;

std::string field_name(Field tag);
Field parse_field(const std::string& name);  // throws ParseError

// Blade keys are comma-separated ascending 1-based indices; "" is e.
BladeMask parse_blade_key(const std::string& key, const Signature& sig);

// Scalars: real-exact as "num/den" (den omitted when 1); complex fields as
// {"re": text, "im": text}. Exact round-trips are bit-exact.
json scalar_to_json(const Scalar& s, const FieldKind& kind);
Scalar scalar_from_json(const json& j, const FieldKind& kind);

json mv_to_json(const Multivector& u);
Multivector mv_from_json(const json& j, const Signature& sig, const FieldKind& kind);

json generator_set_to_json(const GeneratorSet& s);
GeneratorSet generator_set_from_json(const json& j, double tolerance);

struct InstanceFile {
  GeneratorSet gamma;
  GeneratorSet beta;
};

json instance_to_json(const InstanceFile& inst);
// Parses and validates both sets (RelationViolation propagates).
InstanceFile instance_from_json(const json& j, double tolerance);

json solve_result_to_json(const SolveResult& result);

struct SolutionFile {
  int case_id;
  Multivector central;
  Multivector t;
  double residual;
};

SolutionFile solution_from_json(const json& j, const Signature& sig, const FieldKind& kind);

json load_json_file(const std::string& path);             // throws ParseError
void write_json_file(const std::string& path, const json& j);

}  // namespace cliff::io
