#include <stdexcept>
#include <utility>

#include "common.hpp"
#include "lfvo/ratlp.hpp"

namespace lfvo::analysis {

EfficiencyVerdict is_efficient(const ValidatedProblem& vp, const Point& x) {
  const auto& problem = vp.problem();
  detail::require_feasible(problem, x);
  const std::size_t m = vp.criteria();

  // With positive denominators on K, f_j(y) <= r_j is the linear constraint
  // (a_j - r_j b_j)^T y <= r_j beta_j - alpha_j.
  Matrix rows = problem.polyhedron.C;
  Vector rhs = problem.polyhedron.d;
  std::vector<Vector> normals;
  Vector levels;
  for (const auto& obj : problem.objectives) {
    const Rational r = evaluate(obj, x);
    normals.push_back(add_scaled(obj.a, -r, obj.b));
    levels.push_back(r * obj.beta - obj.alpha);
    rows.push_back(normals.back());
    rhs.push_back(levels.back());
  }

  EfficiencyVerdict verdict;
  for (std::size_t i = 0; i < m; ++i) {
    auto slack = [&](const Point& y) { return levels[i] - dot(normals[i], y); };
    const auto out = ratlp::solve({normals[i], rows, rhs, {}, {}});
    if (out.infeasible()) throw std::logic_error("dominance LP excludes its own base point");

    std::optional<Point> witness;
    if (out.unbounded()) {
      for (unsigned k = 0;; ++k) {
        Point y = add_scaled(out.point, pow2(k), out.ray);
        if (slack(y) >= 1) {
          witness = std::move(y);
          break;
        }
      }
    } else if (slack(out.point).sign() > 0) {
      witness = out.point;
    }
    if (witness) {
      verdict.dominator = std::move(witness);
      verdict.improved = i;
      return verdict;
    }
  }
  verdict.efficient = true;
  return verdict;
}

bool dominates(const Problem& problem, const Point& y, const Point& x) {
  if (!problem.polyhedron.contains(y)) return false;
  bool strict = false;
  for (const auto& obj : problem.objectives) {
    const Rational fy = evaluate(obj, y);
    const Rational fx = evaluate(obj, x);
    if (fy > fx) return false;
    if (fy < fx) strict = true;
  }
  return strict;
}

}  // namespace lfvo::analysis
