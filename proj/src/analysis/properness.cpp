#include <utility>

#include "common.hpp"

namespace lfvo::analysis {

namespace {

std::vector<Vector> gradients(const Problem& problem, const Point& x) {
  std::vector<Vector> out;
  out.reserve(problem.criteria());
  for (const auto& obj : problem.objectives) out.push_back(gradient(obj, x));
  return out;
}

}  // namespace

PropernessVerdict necessary_condition_scan(const ValidatedProblem& vp, const Point& x) {
  const auto& problem = vp.problem();
  detail::require_feasible(problem, x);
  PropernessVerdict verdict;

  // Property (c): b_i^T v = 0 and a_i^T v <= 0. The strict variant is tried
  // first so that a witness with a_i^T v < 0 is preferred when one exists.
  for (std::size_t i = 0; i < vp.criteria(); ++i) {
    const auto& obj = problem.objectives[i];
    auto strict = cone::recession_cone(problem.polyhedron);
    strict.zero_rows.push_back(obj.b);
    strict.strictneg_rows.push_back(obj.a);
    auto v = cone::strict_feasible(strict);

    auto weak = cone::recession_cone(problem.polyhedron);
    weak.zero_rows.push_back(obj.b);
    weak.cone_rows.push_back(obj.a);
    if (!v) v = cone::nontrivial_member(weak);

    if (v) {
      verdict.property = NecessaryProperty::C;
      verdict.criterion = i;
      verdict.direction = std::move(v);
      verdict.c_systems.clear();
      return verdict;
    }
    verdict.c_systems.push_back(std::move(weak));
  }

  // Property (d): <grad f_j(x), v> = 0 for every j.
  auto stationary = cone::recession_cone(problem.polyhedron);
  stationary.zero_rows = gradients(problem, x);
  if (auto v = cone::nontrivial_member(stationary)) {
    verdict.property = NecessaryProperty::D;
    verdict.direction = std::move(v);
    verdict.c_systems.clear();
    return verdict;
  }
  verdict.d_system = std::move(stationary);
  verdict.proper = true;
  return verdict;
}

bool verify_necessary_witness(const Problem& problem, const Point& x,
                              const PropernessVerdict& verdict) {
  if (verdict.proper) return !verdict.direction.has_value();
  if (!verdict.direction || !verdict.property) return false;
  const Vector& v = verdict.direction->vector();
  if (!detail::in_recession_cone(problem, v)) return false;
  if (*verdict.property == NecessaryProperty::C) {
    if (!verdict.criterion || *verdict.criterion >= problem.criteria()) return false;
    const auto& obj = problem.objectives[*verdict.criterion];
    return dot(obj.b, v).is_zero() && dot(obj.a, v).sign() <= 0;
  }
  for (const auto& obj : problem.objectives) {
    if (!directional_derivative(obj, x, v).is_zero()) return false;
  }
  return true;
}

RegularityFlags regularity_conditions(const ValidatedProblem& vp, const Point& x) {
  detail::require_criteria(vp, 2);
  const auto& problem = vp.problem();
  detail::require_feasible(problem, x);
  const auto grads = gradients(problem, x);
  const std::size_t m = vp.criteria();
  const auto base = cone::recession_cone(problem.polyhedron);

  RegularityFlags flags;
  for (std::size_t i = 0; i < m && flags.c1; ++i) {
    for (std::size_t j = i + 1; j < m && flags.c1; ++j) {
      auto sys = base;
      sys.zero_rows = {grads[i], grads[j]};
      if (cone::nontrivial_member(sys)) flags.c1 = false;
    }
  }
  for (std::size_t i = 0; i < m && flags.c2; ++i) {
    for (std::size_t j = 0; j < m && flags.c2; ++j) {
      if (j == i) continue;
      auto sys = base;
      sys.zero_rows.push_back(problem.objectives[i].b);
      sys.cone_rows.push_back(grads[i]);
      sys.strictpos_rows.push_back(grads[j]);
      if (cone::strict_feasible(sys)) flags.c2 = false;
    }
  }
  for (std::size_t i = 0; i < m && flags.c3; ++i) {
    for (std::size_t j = 0; j < m && flags.c3; ++j) {
      for (std::size_t k = 0; k < m && flags.c3; ++k) {
        if (i == j || j == k || i == k) continue;
        auto sys = base;
        sys.strictneg_rows.push_back(grads[i]);
        sys.zero_rows.push_back(grads[j]);
        sys.strictpos_rows.push_back(grads[k]);
        if (cone::strict_feasible(sys)) flags.c3 = false;
      }
    }
  }
  return flags;
}

}  // namespace lfvo::analysis
