#pragma once

#include <string>

#include "lfvo/analysis.hpp"
#include "lfvo/error.hpp"

namespace lfvo::analysis::detail {

inline void require_criteria(const ValidatedProblem& vp, std::size_t minimum) {
  if (vp.criteria() < minimum) {
    throw Error(ErrorCode::TooFewCriteria, "need at least " + std::to_string(minimum) +
                                               " criteria, problem has " +
                                               std::to_string(vp.criteria()));
  }
}

inline void require_feasible(const Problem& problem, const Point& x) {
  if (x.size() != problem.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "point " + to_string(x) + " has wrong length");
  }
  if (!problem.polyhedron.contains(x)) {
    throw Error(ErrorCode::InfeasiblePoint, "point " + to_string(x) + " violates C x <= d");
  }
}

inline bool in_recession_cone(const Problem& problem, const Vector& v) {
  if (v.size() != problem.dimension() || is_zero(v)) return false;
  for (const auto& row : problem.polyhedron.C) {
    if (dot(row, v).sign() > 0) return false;
  }
  return true;
}

}  // namespace lfvo::analysis::detail
