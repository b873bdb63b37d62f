#pragma once

#include <cstddef>
#include <optional>

#include "lfvo/linalg.hpp"
#include "lfvo/model.hpp"

namespace lfvo::cone {

/// {v : R v <= 0, Z v = 0, S v < 0, T v > 0}. Invariant under positive
/// scaling of v, which is what lets strict rows be decided by thresholds.
struct HomogeneousSystem {
  std::size_t dimension = 0;
  Matrix cone_rows;
  Matrix zero_rows;
  Matrix strictneg_rows;
  Matrix strictpos_rows;

  [[nodiscard]] bool has_strict_rows() const {
    return !strictneg_rows.empty() || !strictpos_rows.empty();
  }
  /// Exact substitution of v into every block.
  [[nodiscard]] bool satisfied_by(const Vector& v) const;
};

/// Nonzero vector scaled so that its largest absolute component is 1
/// (first such component on ties). Scaling is by a positive factor, so a
/// Direction satisfies the same homogeneous systems as its source vector.
class Direction {
 public:
  /// Throws std::invalid_argument for the zero vector.
  static Direction normalized(const Vector& v);

  [[nodiscard]] const Vector& vector() const { return v_; }
  [[nodiscard]] std::size_t size() const { return v_.size(); }
  const Rational& operator[](std::size_t k) const { return v_[k]; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  explicit Direction(Vector v) : v_(std::move(v)) {}
  Vector v_;
};

/// 0+K = {v : C v <= 0}.
HomogeneousSystem recession_cone(const Polyhedron& poly);

/// A nonzero solution of the full system, or nullopt when none exists.
/// Strict rows become s^T v <= -1 and t^T v >= 1. Without strict rows this
/// defers to nontrivial_member. Among the solutions, the returned one
/// minimizes the max-norm and then the 1-norm before normalization.
std::optional<Direction> strict_feasible(const HomogeneousSystem& sys);

/// A nonzero member of a system without strict rows, or nullopt when the
/// system is {0}. Probes v_l = +1 then v_l = -1 for l = 1..n in order and
/// returns the first hit, refined as in strict_feasible.
/// Throws std::invalid_argument when strict rows are present.
std::optional<Direction> nontrivial_member(const HomogeneousSystem& sys);

struct DenominatorCheck {
  bool passed = true;
  std::optional<std::size_t> criterion;
  std::optional<Direction> witness;
};

/// For every criterion i, {C v <= 0, b_i^T v <= -1} must be empty. A
/// witness here means the problem's denominators are not positive on K.
DenominatorCheck recession_denominator_check(const Problem& problem);

/// True when 0+K = {0}. K is assumed nonempty.
bool is_bounded(const Polyhedron& poly);

}  // namespace lfvo::cone
