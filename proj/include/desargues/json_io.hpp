#pragma once

// JSON encodings of fields, scalars and the geometric types. Scalars are
// exact strings: "n" or "n/d" over Q, residues over GF(p), and [u, v]
// pairs meaning u + v sqrt(d) over an extension. Load errors name the JSON
// path of the offending value.

#include <optional>
#include <string>

#include "json.hpp"

#include "desargues/theorem_harness.hpp"

namespace desargues::io {

using nlohmann::json;

/// Reads and parses a file. Throws ParseError.
json read_file(const std::string& path);

/// "Q" or "gfp:P". Throws InvariantError for p = 2 and composites,
/// SchemaError for anything else.
Field parse_field_flag(const std::string& text);

Field field_from_json(const json& j, const std::string& path = "field");
json to_json(const Field& f);

Scalar scalar_from_json(const json& j, const Field& f, const std::string& path);
json to_json(const Scalar& x);

/// Two-element array of scalars, or "inf".
ProjPoint point_from_json(const json& j, const Field& f, const std::string& path);
json to_json(const ProjPoint& p);

SymForm2 form2_from_json(const json& j, const Field& f, const std::string& path = "");
json to_json(const SymForm2& q);

Involution involution_from_json(const json& j, const Field& f, const std::string& path = "");
json to_json(const Involution& inv);

Vector vector_from_json(const json& j, const Field& f, const std::string& path);
json to_json(const Vector& v);

SymFormN formN_from_json(const json& j, const Field& f, const std::string& path = "");
json to_json(const SymFormN& q);

Pencil pencil_from_json(const json& j, const Field& f, const std::string& path = "");
json to_json(const Pencil& p);

LineInPV line_from_json(const json& j, const Field& f, const std::string& path = "");
json to_json(const LineInPV& line);

/// {"p0", "direction", "marked", "pencil": {"R", "S"},
///  optional "hypothesis_members": [[a, b], ...], optional "members": k}.
AffineConfig affine_config_from_json(const json& j, const Field& f, const std::string& path = "");

json to_json(const Diagnosis& d);
json to_json(const ScenarioReport& r);

/// The field named by a document's "field" key, if it has one.
std::optional<Field> embedded_field(const json& j);

}  // namespace desargues::io
