#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lfvo/error.hpp"
#include "lfvo/linalg.hpp"

namespace lfvo {

using Point = Vector;

/// One criterion (a^T x + alpha) / (b^T x + beta).
struct LFObjective {
  Vector a;
  Rational alpha;
  Vector b;
  Rational beta;

  [[nodiscard]] std::size_t dimension() const { return a.size(); }
  [[nodiscard]] Rational numerator(const Point& x) const { return dot(a, x) + alpha; }
  [[nodiscard]] Rational denominator(const Point& x) const { return dot(b, x) + beta; }
  /// b == 0.
  [[nodiscard]] bool is_affine() const { return is_zero(b); }
};

/// K = {x : C x <= d}.
struct Polyhedron {
  Matrix C;
  Vector d;

  [[nodiscard]] std::size_t dimension() const { return C.empty() ? 0 : C.front().size(); }
  [[nodiscard]] std::size_t rows() const { return C.size(); }
  [[nodiscard]] bool contains(const Point& x) const;
};

/// Minimize (f_1, ..., f_m) over K.
struct Problem {
  std::string name;
  std::vector<LFObjective> objectives;
  Polyhedron polyhedron;

  [[nodiscard]] std::size_t dimension() const { return polyhedron.dimension(); }
  [[nodiscard]] std::size_t criteria() const { return objectives.size(); }

  /// Throws Error(DimensionMismatch) unless m >= 1, p >= 1, n >= 1 and every
  /// vector has the matching length.
  void check_structure() const;
};

/// Throws Error(ZeroDenominator) when b^T x + beta = 0.
Rational evaluate(const LFObjective& obj, const Point& x);

/// All criteria at x.
Vector evaluate(const Problem& problem, const Point& x);

/// [(b^T x + beta) a - (a^T x + alpha) b] / (b^T x + beta)^2
Vector gradient(const LFObjective& obj, const Point& x);

/// <grad f(x), v> without forming the gradient vector.
Rational directional_derivative(const LFObjective& obj, const Point& x, const Vector& v);

/// [f(y) - f(x)] - [(b^T x + beta) / (b^T y + beta)] <grad f(x), y - x>.
/// Exactly zero whenever both denominators are nonzero.
Rational fractional_identity_residual(const LFObjective& obj, const Point& x, const Point& y);

struct ValidationReport {
  bool valid = false;
  std::optional<ErrorCode> failure;
  std::string message;
  /// Offending criterion for NonpositiveDenominator.
  std::optional<std::size_t> criterion;
  /// A point of K where that denominator is <= 0.
  std::optional<Point> witness;
  /// min over K of b_i^T x + beta_i, filled for every criterion checked.
  std::vector<Rational> denominator_minima;
  bool recession_check_passed = false;
};

/// Checks that K is nonempty and that every denominator has a positive
/// minimum over K, using exact LPs. Never throws for invalid data; the
/// failure is reported instead.
ValidationReport validate(const Problem& problem);

/// A problem that passed validate(). Analysis entry points take this type.
class ValidatedProblem {
 public:
  /// Throws Error with the failure code when validation fails.
  explicit ValidatedProblem(Problem problem);

  [[nodiscard]] const Problem& problem() const { return problem_; }
  [[nodiscard]] const ValidationReport& report() const { return report_; }
  [[nodiscard]] std::size_t dimension() const { return problem_.dimension(); }
  [[nodiscard]] std::size_t criteria() const { return problem_.criteria(); }
  [[nodiscard]] const Polyhedron& polyhedron() const { return problem_.polyhedron; }
  [[nodiscard]] const LFObjective& objective(std::size_t i) const {
    return problem_.objectives.at(i);
  }

 private:
  Problem problem_;
  ValidationReport report_;
};

}  // namespace lfvo
