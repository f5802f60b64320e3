#pragma once

#include <string>

#include <json.hpp>

#include "holo/corpus.hpp"
#include "holo/oracle.hpp"

namespace holo::io {

using Json = nlohmann::json;

/// Parses an instance document. Throws ParseError naming the offending
/// field (e.g. "generators[1].matrix[0][2]"), InvariantViolation when the
/// data parse but do not form a valid representation.
corpus::Instance parse_instance(const Json& doc);
/// Reads and parses a file; JSON syntax errors carry line and column.
corpus::Instance load_instance(const std::string& path);
Json export_instance(const corpus::Instance& instance);

Json to_json(const Rational& q);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const Signature& s);
Json to_json(const DecompositionReport& report);
Json to_json(const ValidityReport& report);
Json to_json(const PhiVerdict& verdict);
Json to_json(const ComparisonReport& report);
Json to_json(const UniquenessResult& result);
Json to_json(const oracle::CrosscheckReport& report);

/// {"schema": 1, "instance": ..., "command": ..., "result": payload}
Json envelope(const std::string& instance, const std::string& command, Json payload);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& doc);

}  // namespace holo::io
