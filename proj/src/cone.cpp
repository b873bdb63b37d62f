#include "lfvo/cone.hpp"

#include <stdexcept>
#include <utility>

#include "lfvo/ratlp.hpp"

namespace lfvo::cone {

namespace {

struct Constraints {
  Matrix A;
  Vector b;
  Matrix E;
  Vector g;
};

Constraints thresholded(const HomogeneousSystem& sys) {
  Constraints c;
  for (const auto& r : sys.cone_rows) {
    c.A.push_back(r);
    c.b.emplace_back(0);
  }
  for (const auto& s : sys.strictneg_rows) {
    c.A.push_back(s);
    c.b.emplace_back(-1);
  }
  for (const auto& t : sys.strictpos_rows) {
    c.A.push_back(scaled(t, -1));
    c.b.emplace_back(-1);
  }
  for (const auto& z : sys.zero_rows) {
    c.E.push_back(z);
    c.g.emplace_back(0);
  }
  return c;
}

Vector padded(const Vector& row, std::size_t extra, const Rational& fill = 0) {
  Vector out = row;
  out.resize(row.size() + extra, fill);
  return out;
}

// Feasible point of {A v <= b, E v = g} minimizing ||v||_inf, then ||v||_1
// with the max-norm held at its optimum. nullopt when infeasible.
std::optional<Vector> smallest_solution(std::size_t n, const Constraints& c) {
  // Stage 1: variables (v, s), minimize s with -s <= v_l <= s.
  ratlp::LinearProgram inf_norm;
  inf_norm.objective = Vector(n + 1);
  inf_norm.objective[n] = 1;
  for (std::size_t i = 0; i < c.A.size(); ++i) {
    inf_norm.A.push_back(padded(c.A[i], 1));
    inf_norm.b.push_back(c.b[i]);
  }
  for (std::size_t l = 0; l < n; ++l) {
    for (int sign : {1, -1}) {
      Vector row(n + 1);
      row[l] = sign;
      row[n] = -1;
      inf_norm.A.push_back(std::move(row));
      inf_norm.b.emplace_back(0);
    }
  }
  for (std::size_t i = 0; i < c.E.size(); ++i) {
    inf_norm.E.push_back(padded(c.E[i], 1));
    inf_norm.g.push_back(c.g[i]);
  }
  const auto first = ratlp::solve(inf_norm);
  if (first.infeasible()) return std::nullopt;
  if (!first.optimal()) throw std::logic_error("max-norm stage is bounded below by zero");
  const Rational bound = first.value;

  // Stage 2: variables (v, u), minimize sum u with -u <= v <= u, |v_l| <= bound.
  ratlp::LinearProgram one_norm;
  one_norm.objective = Vector(2 * n);
  for (std::size_t l = 0; l < n; ++l) one_norm.objective[n + l] = 1;
  for (std::size_t i = 0; i < c.A.size(); ++i) {
    one_norm.A.push_back(padded(c.A[i], n));
    one_norm.b.push_back(c.b[i]);
  }
  for (std::size_t l = 0; l < n; ++l) {
    for (int sign : {1, -1}) {
      Vector split(2 * n);
      split[l] = sign;
      split[n + l] = -1;
      one_norm.A.push_back(std::move(split));
      one_norm.b.emplace_back(0);

      Vector cap(2 * n);
      cap[l] = sign;
      one_norm.A.push_back(std::move(cap));
      one_norm.b.push_back(bound);
    }
  }
  for (std::size_t i = 0; i < c.E.size(); ++i) {
    one_norm.E.push_back(padded(c.E[i], n));
    one_norm.g.push_back(c.g[i]);
  }
  const auto second = ratlp::solve(one_norm);
  if (!second.optimal()) throw std::logic_error("1-norm stage must be optimal");
  return Vector(second.point.begin(), second.point.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace

bool HomogeneousSystem::satisfied_by(const Vector& v) const {
  if (v.size() != dimension) return false;
  for (const auto& r : cone_rows) {
    if (dot(r, v).sign() > 0) return false;
  }
  for (const auto& z : zero_rows) {
    if (!dot(z, v).is_zero()) return false;
  }
  for (const auto& s : strictneg_rows) {
    if (dot(s, v).sign() >= 0) return false;
  }
  for (const auto& t : strictpos_rows) {
    if (dot(t, v).sign() <= 0) return false;
  }
  return true;
}

Direction Direction::normalized(const Vector& v) {
  std::size_t lead = v.size();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (lead == v.size() || v[k].abs() > v[lead].abs()) lead = k;
  }
  if (lead == v.size()) throw std::invalid_argument("cannot normalize the zero vector");
  return Direction(scaled(v, Rational(1) / v[lead].abs()));
}

HomogeneousSystem recession_cone(const Polyhedron& poly) {
  HomogeneousSystem sys;
  sys.dimension = poly.dimension();
  sys.cone_rows = poly.C;
  return sys;
}

std::optional<Direction> strict_feasible(const HomogeneousSystem& sys) {
  if (!sys.has_strict_rows()) return nontrivial_member(sys);
  const auto v = smallest_solution(sys.dimension, thresholded(sys));
  if (!v) return std::nullopt;
  return Direction::normalized(*v);
}

std::optional<Direction> nontrivial_member(const HomogeneousSystem& sys) {
  if (sys.has_strict_rows()) {
    throw std::invalid_argument("nontrivial_member expects a system without strict rows");
  }
  const std::size_t n = sys.dimension;
  const Constraints base = thresholded(sys);
  for (std::size_t l = 0; l < n; ++l) {
    for (int sign : {1, -1}) {
      Constraints probe = base;
      Vector pin(n);
      pin[l] = 1;
      probe.E.push_back(std::move(pin));
      probe.g.emplace_back(sign);
      if (const auto v = smallest_solution(n, probe)) return Direction::normalized(*v);
    }
  }
  return std::nullopt;
}

DenominatorCheck recession_denominator_check(const Problem& problem) {
  DenominatorCheck check;
  const std::size_t n = problem.dimension();
  for (std::size_t i = 0; i < problem.criteria(); ++i) {
    Constraints c = thresholded(recession_cone(problem.polyhedron));
    c.A.push_back(problem.objectives[i].b);
    c.b.emplace_back(-1);
    if (const auto v = smallest_solution(n, c)) {
      check.passed = false;
      check.criterion = i;
      check.witness = Direction::normalized(*v);
      return check;
    }
  }
  return check;
}

bool is_bounded(const Polyhedron& poly) { return !nontrivial_member(recession_cone(poly)).has_value(); }

}  // namespace lfvo::cone
