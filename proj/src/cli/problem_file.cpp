#include "lfvo/problem_file.hpp"

#include <fstream>
#include <sstream>

#include "lfvo/error.hpp"

namespace lfvo::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return obj.at(key);
}

Vector vector_of_length(const Json& j, std::size_t n, const std::string& what) {
  Vector v = vector_from_json(j);
  if (v.size() != n) {
    parse_error(what + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  }
  return v;
}

std::vector<Point> points_field(const Json& root, const char* key, std::size_t n) {
  std::vector<Point> out;
  if (!root.contains(key)) return out;
  const Json& list = root.at(key);
  if (!list.is_array()) parse_error(std::string("'") + key + "' must be an array of points");
  for (const auto& p : list) out.push_back(vector_of_length(p, n, std::string(key) + " entry"));
  return out;
}

std::size_t count_field(const Json& root, const char* key) {
  const Json& j = field(root, key);
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    parse_error(std::string("'") + key + "' must be a positive integer");
  }
  return j.get<std::size_t>();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

Json rational_to_json(const Rational& r) {
  if (r.fits_int64()) return r.to_int64();
  return r.str();
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) {
      if (j.is_number_unsigned()) return Rational(j.get<unsigned long>());
      return Rational(j.get<long>());
    }
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    parse_error(e.what());
  }
  parse_error("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json vector_to_strings(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) parse_error("expected an array of rationals, got " + j.dump());
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

ProblemFile parse_problem_file(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) parse_error("problem file must be a JSON object");

  ProblemFile file;
  const std::size_t n = count_field(root, "n");
  const std::size_t m = count_field(root, "m");
  if (root.contains("name")) {
    if (!root.at("name").is_string()) parse_error("'name' must be a string");
    file.problem.name = root.at("name").get<std::string>();
  }
  if (root.contains("comment")) {
    if (!root.at("comment").is_string()) parse_error("'comment' must be a string");
    file.comment = root.at("comment").get<std::string>();
  }

  const Json& objectives = field(root, "objectives");
  if (!objectives.is_array() || objectives.size() != m) {
    parse_error("'objectives' must be an array of m = " + std::to_string(m) + " entries");
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Json& o = objectives[i];
    const std::string tag = "objective " + std::to_string(i + 1);
    LFObjective obj;
    obj.a = vector_of_length(field(o, "a"), n, tag + " a");
    obj.alpha = rational_from_json(field(o, "alpha"));
    obj.b = vector_of_length(field(o, "b"), n, tag + " b");
    obj.beta = rational_from_json(field(o, "beta"));
    file.problem.objectives.push_back(std::move(obj));
  }

  const Json& constraints = field(root, "constraints");
  const Json& rows = field(constraints, "C");
  if (!rows.is_array() || rows.empty()) parse_error("'C' must be a nonempty array of rows");
  for (const auto& row : rows) file.problem.polyhedron.C.push_back(vector_of_length(row, n, "row of C"));
  file.problem.polyhedron.d = vector_of_length(field(constraints, "d"), rows.size(), "d");

  file.points = points_field(root, "points", n);
  file.points_off = points_field(root, "points_off", n);
  return file;
}

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_file(buffer.str());
}

Json to_json(const ProblemFile& file) {
  const auto& p = file.problem;
  Json root;
  root["name"] = p.name;
  if (!file.comment.empty()) root["comment"] = file.comment;
  root["n"] = p.dimension();
  root["m"] = p.criteria();
  auto vec = [](const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rational_to_json(x));
    return out;
  };
  Json objectives = Json::array();
  for (const auto& o : p.objectives) {
    Json obj;
    obj["a"] = vec(o.a);
    obj["alpha"] = rational_to_json(o.alpha);
    obj["b"] = vec(o.b);
    obj["beta"] = rational_to_json(o.beta);
    objectives.push_back(std::move(obj));
  }
  root["objectives"] = std::move(objectives);
  Json rows = Json::array();
  for (const auto& row : p.polyhedron.C) rows.push_back(vec(row));
  root["constraints"] = {{"C", std::move(rows)}, {"d", vec(p.polyhedron.d)}};
  auto points = [&](const std::vector<Point>& list) {
    Json out = Json::array();
    for (const auto& x : list) out.push_back(vec(x));
    return out;
  };
  if (!file.points.empty()) root["points"] = points(file.points);
  if (!file.points_off.empty()) root["points_off"] = points(file.points_off);
  return root;
}

std::string serialize(const ProblemFile& file) { return to_json(file).dump(2) + "\n"; }

Vector parse_point(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') parse_error("unbalanced brackets in point '" + std::string(text) + "'");
    s = trim(s.substr(1, s.size() - 2));
  }
  Vector v;
  if (s.empty()) parse_error("empty point");
  while (true) {
    const auto comma = s.find(',');
    const std::string_view token = trim(s.substr(0, comma));
    try {
      v.push_back(Rational::parse(token));
    } catch (const std::invalid_argument& e) {
      parse_error(e.what());
    }
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return v;
}

std::vector<Point> parse_point_list(std::string_view text) {
  std::vector<Point> out;
  while (!trim(text).empty()) {
    const auto semi = text.find(';');
    const std::string_view token = text.substr(0, semi);
    if (!trim(token).empty()) out.push_back(parse_point(token));
    if (semi == std::string_view::npos) break;
    text = text.substr(semi + 1);
  }
  return out;
}

}  // namespace lfvo::io
