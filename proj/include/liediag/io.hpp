#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "liediag/diagram.hpp"
#include "liediag/normal_form.hpp"

namespace liediag {

using Json = nlohmann::ordered_json;

/// Graphviz digraph; edge labels are signed linear-form strings.
std::string export_dot(const Diagram& d);

Json algebra_to_json(const LieAlgebra& algebra);
AlgebraPtr algebra_from_json(const Json& j);

Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

/// Lossless text form of a diagram; import_json(export_json(d)) == d.
std::string export_json(const Diagram& d);
/// Throws liediag::ParseError with the byte offset of malformed JSON, or
/// with the path of the offending field for schema errors.
Diagram import_json(std::string_view text);

Json pattern_to_json(const Pattern& p, const Diagram& d);
/// Parses a pattern emitted by pattern_to_json for the same diagram.
Pattern pattern_from_json(const Json& j, const Diagram& d);

/// A JSON array of rationals given as strings ("3/4") or integers.
RatVector parse_vector(std::string_view text);
Json vector_to_json(const RatVector& v);

Json transcript_to_json(const Transcript& t);

/// Parses text as JSON, converting nlohmann errors to ParseError.
Json parse_json(std::string_view text);

}  // namespace liediag
