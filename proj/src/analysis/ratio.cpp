#include <stdexcept>

#include "common.hpp"

namespace lfvo::analysis {

namespace {

void check_ray(const Problem& problem, const Point& x, const Vector& v,
               const std::vector<Rational>& grid) {
  detail::require_feasible(problem, x);
  if (!detail::in_recession_cone(problem, v)) {
    throw Error(ErrorCode::DirectionNotInCone, to_string(v) + " is not a nonzero member of 0+K");
  }
  if (grid.empty()) throw std::invalid_argument("empty t grid");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid[k].sign() <= 0 || (k > 0 && grid[k] <= grid[k - 1])) {
      throw std::invalid_argument("t grid must be positive and strictly increasing");
    }
  }
}

}  // namespace

std::vector<Rational> geometric_grid(unsigned max_exp) {
  std::vector<Rational> grid;
  grid.reserve(max_exp + 1);
  for (unsigned k = 0; k <= max_exp; ++k) grid.push_back(pow2(k));
  return grid;
}

RatioTrace ratio_probe(const ValidatedProblem& vp, const Point& x, const Vector& v,
                       const std::vector<Rational>& grid) {
  const auto& problem = vp.problem();
  check_ray(problem, x, v, grid);
  const std::size_t m = vp.criteria();

  std::optional<std::size_t> loser;
  for (std::size_t i = 0; i < m && !loser; ++i) {
    if (directional_derivative(problem.objectives[i], x, v).sign() < 0) loser = i;
  }
  if (!loser) {
    throw Error(ErrorCode::NoDecreasingCriterion, "no criterion decreases along " + to_string(v));
  }

  RatioTrace trace{x, v, *loser, {}, std::vector<std::optional<Rational>>(m)};
  const Vector base = evaluate(problem, x);
  for (const auto& t : grid) {
    const Vector moved = evaluate(problem, add_scaled(x, t, v));
    RatioSample sample{t, base[*loser] - moved[*loser], add_scaled(moved, -1, base),
                       std::vector<std::optional<Rational>>(m)};
    for (std::size_t j = 0; j < m; ++j) {
      if (j == *loser || sample.gain[j].sign() <= 0) continue;
      Rational ratio = sample.drop / sample.gain[j];
      if (!trace.supremum[j] || ratio > *trace.supremum[j]) trace.supremum[j] = ratio;
      sample.ratio[j] = std::move(ratio);
    }
    trace.samples.push_back(std::move(sample));
  }
  return trace;
}

std::vector<Vector> ray_drops(const ValidatedProblem& vp, const Point& x, const Vector& v,
                              const std::vector<Rational>& grid) {
  const auto& problem = vp.problem();
  check_ray(problem, x, v, grid);
  const Vector base = evaluate(problem, x);
  std::vector<Vector> rows;
  rows.reserve(grid.size());
  for (const auto& t : grid) rows.push_back(add_scaled(base, -1, evaluate(problem, add_scaled(x, t, v))));
  return rows;
}

}  // namespace lfvo::analysis
