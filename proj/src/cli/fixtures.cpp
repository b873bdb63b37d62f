#include "lfvo/fixtures.hpp"

#include "lfvo/error.hpp"

namespace lfvo::fixtures {

namespace {

Vector v(std::initializer_list<Rational> xs) { return Vector(xs); }

Vector unit(std::size_t n, std::size_t k, const Rational& value = 1) {
  Vector e(n);
  e[k] = value;
  return e;
}

Vector ones(std::size_t n) { return Vector(n, Rational(1)); }

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> list = {"quadrant", "three-criteria", "strip",
                                                "three-rays", "orthant-family"};
  return list;
}

io::ProblemFile quadrant() {
  io::ProblemFile f;
  f.problem.name = "quadrant";
  f.comment = "E = {(x1, 0) : x1 >= 0}; every efficient point is improperly efficient";
  f.problem.objectives = {
      {v({0, -1}), 0, v({0, 0}), 1},
      {v({0, 1}), 0, v({1, 1}), 1},
  };
  f.problem.polyhedron = {identity(2, -1), v({0, 0})};
  f.points = {v({0, 0}), v({1, 0}), v({3, 0})};
  f.points_off = {v({0, 1}), v({1, 1})};
  return f;
}

io::ProblemFile three_criteria() {
  io::ProblemFile f;
  f.problem.name = "three-criteria";
  f.comment = "E = {x : x1 >= 0, x2 >= 0, x2 < x1 + 1}; every efficient point is improperly efficient";
  f.problem.objectives = {
      {v({-1, -1}), 0, v({0, 0}), 1},
      {v({0, 1}), 0, v({1, 1}), 1},
      {v({1, -1}), 0, v({0, 0}), 1},
  };
  f.problem.polyhedron = {identity(2, -1), v({0, 0})};
  f.points = {v({0, 0}), v({1, 1}), v({2, 0})};
  f.points_off = {v({0, 1}), v({1, 2})};
  return f;
}

io::ProblemFile strip() {
  io::ProblemFile f;
  f.problem.name = "strip";
  f.comment = "E = {(x1, 0) : x1 >= 2} u {(x1, 4) : x1 >= 2}; every efficient point is properly efficient";
  f.problem.objectives = {
      {v({-1, 0}), 0, v({1, 1}), -1},
      {v({-1, 0}), 0, v({1, -1}), 3},
  };
  f.problem.polyhedron = {{v({-1, 0}), v({0, -1}), v({0, 1})}, v({-2, 0, 4})};
  f.points = {v({2, 0}), v({3, 4}), v({5, 0})};
  f.points_off = {v({2, 2}), v({3, 1})};
  return f;
}

io::ProblemFile three_rays() {
  io::ProblemFile f;
  f.problem.name = "three-rays";
  f.comment =
      "E = {x1 >= 1, x3 = x2 = x1 - 1} u {x2 >= 1, x3 = x1 = x2 - 1} u {x3 >= 1, x2 = x1 = x3 - 1}; "
      "E equals the properly efficient set";
  const Rational half(1, 2);
  const Rational shift(-3, 4);
  for (std::size_t i = 0; i < 3; ++i) f.problem.objectives.push_back({unit(3, i, -1), half, ones(3), shift});
  f.problem.polyhedron = {{v({1, 1, -2}), v({1, -2, 1}), v({-2, 1, 1}), v({-1, -1, -1})},
                          v({1, 1, 1, -1})};
  f.points = {v({1, 0, 0}), v({2, 1, 1}), v({0, 1, 0})};
  f.points_off = {v({1, 1, 1}), v({Rational(3, 2), 1, 1})};
  return f;
}

io::ProblemFile orthant_family(std::size_t m) {
  if (m < 2 || m > 8) {
    throw Error(ErrorCode::UnknownExample, "orthant-family is bundled for 2 <= m <= 8, got " + std::to_string(m));
  }
  io::ProblemFile f;
  f.problem.name = "orthant-family-m" + std::to_string(m);
  f.comment = "E = union over i of {x_i * e_i : x_i >= 1}; E equals the properly efficient set";
  for (std::size_t i = 0; i < m; ++i) {
    f.problem.objectives.push_back({unit(m, i, -1), Rational(1, 2), ones(m), Rational(-3, 4)});
  }
  Matrix rows = identity(m, -1);
  rows.push_back(Vector(m, Rational(-1)));
  Vector rhs(m);
  rhs.emplace_back(-1);
  f.problem.polyhedron = {std::move(rows), std::move(rhs)};
  f.points = {unit(m, 0), unit(m, 0, 2), unit(m, m - 1)};
  Vector mixed(m);
  mixed[0] = Rational(1, 2);
  mixed[1] = Rational(1, 2);
  f.points_off = {mixed, add_scaled(unit(m, 0), 1, unit(m, 1))};
  return f;
}

io::ProblemFile make(std::string_view name, std::size_t criteria) {
  if (name == "quadrant") return quadrant();
  if (name == "three-criteria") return three_criteria();
  if (name == "strip") return strip();
  if (name == "three-rays") return three_rays();
  if (name == "orthant-family") return orthant_family(criteria);
  throw Error(ErrorCode::UnknownExample, "no bundled example named '" + std::string(name) + "'");
}

}  // namespace lfvo::fixtures
