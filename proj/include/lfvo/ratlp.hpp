#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "lfvo/linalg.hpp"

/// Exact rational linear programming: two-phase primal simplex with Bland's
/// rule on a dense tableau. Free variables are split, equalities are turned
/// into pairs of inequalities, and phase one uses explicit artificials.
namespace lfvo::ratlp {

/// minimize objective^T x  s.t.  A x <= b,  E x = g,  x free.
/// The dimension is objective.size().
struct LinearProgram {
  Vector objective;
  Matrix A;
  Vector b;
  Matrix E;
  Vector g;

  [[nodiscard]] std::size_t dimension() const { return objective.size(); }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct LPOutcome {
  Status status = Status::Infeasible;
  /// Optimal: the minimizer. Unbounded: a feasible starting point.
  Vector point;
  /// Optimal value; zero otherwise.
  Rational value;
  /// Unbounded only: A r <= 0, E r = 0, objective^T r < 0.
  Vector ray;

  [[nodiscard]] bool optimal() const { return status == Status::Optimal; }
  [[nodiscard]] bool infeasible() const { return status == Status::Infeasible; }
  [[nodiscard]] bool unbounded() const { return status == Status::Unbounded; }
};

/// Throws Error(DimensionMismatch) on inconsistent shapes.
LPOutcome solve(const LinearProgram& lp);

/// A point satisfying A x <= b and E x = g, or nullopt when the phase-one
/// optimum is positive.
std::optional<Vector> feasible(std::size_t dimension, const Matrix& A, const Vector& b,
                               const Matrix& E = {}, const Vector& g = {});

/// Exact substitution of an outcome's witnesses into the raw program data.
/// Infeasible outcomes carry no witness and always pass.
bool verify(const LinearProgram& lp, const LPOutcome& outcome);

/// Number of simplex solves issued on the calling thread.
std::uint64_t solve_count();

}  // namespace lfvo::ratlp
