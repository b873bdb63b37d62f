#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lfvo/model.hpp"

namespace lfvo::io {

using Json = nlohmann::ordered_json;

/// On-disk problem instance:
///   {"name", "comment"?, "n", "m",
///    "objectives": [{"a", "alpha", "b", "beta"}],
///    "constraints": {"C", "d"},
///    "points"?, "points_off"?}
/// Every rational is a JSON integer or a string "p" / "p/q" with q > 0.
struct ProblemFile {
  Problem problem;
  std::string comment;
  /// Sample points on the efficient set; classify uses these by default.
  std::vector<Point> points;
  /// Sample feasible points known not to be efficient.
  std::vector<Point> points_off;
};

/// Throws Error(ParseError) on malformed JSON, bad rationals, or shapes
/// that disagree with "n" and "m".
ProblemFile parse_problem_file(std::string_view text);
ProblemFile read_problem_file(const std::string& path);

Json to_json(const ProblemFile& file);
/// Two-space indented JSON followed by a newline.
std::string serialize(const ProblemFile& file);

/// Integers that fit in 64 bits become JSON numbers, everything else "p/q".
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// Always strings, for reports.
Json vector_to_strings(const Vector& v);
Vector vector_from_json(const Json& j);

/// "[1,0]", "1,0" or "1/2, -3" -> rational vector. Throws Error(ParseError).
Vector parse_point(std::string_view text);
/// "[2,0];[3,4]" -> list of points.
std::vector<Point> parse_point_list(std::string_view text);

}  // namespace lfvo::io
