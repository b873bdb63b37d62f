#include "lfvo/model.hpp"

#include <string>
#include <utility>

#include "lfvo/cone.hpp"
#include "lfvo/ratlp.hpp"

namespace lfvo {

bool Polyhedron::contains(const Point& x) const {
  if (x.size() != dimension()) return false;
  for (std::size_t i = 0; i < C.size(); ++i) {
    if (dot(C[i], x) > d[i]) return false;
  }
  return true;
}

void Problem::check_structure() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::DimensionMismatch, what); };
  if (objectives.empty()) fail("at least one objective is required");
  if (polyhedron.C.empty()) fail("at least one constraint row is required");
  const std::size_t n = dimension();
  if (n == 0) fail("dimension must be positive");
  if (!has_columns(polyhedron.C, n)) fail("constraint rows must all have length " + std::to_string(n));
  if (polyhedron.d.size() != polyhedron.C.size()) fail("d must have one entry per constraint row");
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    if (objectives[i].a.size() != n || objectives[i].b.size() != n) {
      fail("objective " + std::to_string(i + 1) + " must have length " + std::to_string(n));
    }
  }
}

Rational evaluate(const LFObjective& obj, const Point& x) {
  const Rational den = obj.denominator(x);
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator vanishes at " + to_string(x));
  return obj.numerator(x) / den;
}

Vector evaluate(const Problem& problem, const Point& x) {
  Vector out;
  out.reserve(problem.criteria());
  for (const auto& obj : problem.objectives) out.push_back(evaluate(obj, x));
  return out;
}

Vector gradient(const LFObjective& obj, const Point& x) {
  const Rational den = obj.denominator(x);
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator vanishes at " + to_string(x));
  const Rational num = obj.numerator(x);
  const Rational den2 = den * den;
  Vector g(obj.dimension());
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = (den * obj.a[k] - num * obj.b[k]) / den2;
  return g;
}

Rational directional_derivative(const LFObjective& obj, const Point& x, const Vector& v) {
  const Rational den = obj.denominator(x);
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator vanishes at " + to_string(x));
  return (den * dot(obj.a, v) - obj.numerator(x) * dot(obj.b, v)) / (den * den);
}

Rational fractional_identity_residual(const LFObjective& obj, const Point& x, const Point& y) {
  const Rational lhs = evaluate(obj, y) - evaluate(obj, x);
  const Vector step = add_scaled(y, -1, x);
  const Rational rhs = obj.denominator(x) / obj.denominator(y) * dot(gradient(obj, x), step);
  return lhs - rhs;
}

ValidationReport validate(const Problem& problem) {
  ValidationReport report;
  try {
    problem.check_structure();
  } catch (const Error& e) {
    report.failure = e.code();
    report.message = e.what();
    return report;
  }

  const auto& poly = problem.polyhedron;
  const std::size_t n = problem.dimension();
  if (!ratlp::feasible(n, poly.C, poly.d)) {
    report.failure = ErrorCode::EmptyFeasibleSet;
    report.message = "the constraint set is empty";
    return report;
  }

  for (std::size_t i = 0; i < problem.criteria(); ++i) {
    const auto& obj = problem.objectives[i];
    const auto out = ratlp::solve({obj.b, poly.C, poly.d, {}, {}});
    std::optional<Point> witness;
    if (out.unbounded()) {
      // b^T ray < 0, so doubling steps reach a nonpositive denominator.
      for (unsigned k = 0;; ++k) {
        Point x = add_scaled(out.point, pow2(k), out.ray);
        if (obj.denominator(x).sign() <= 0) {
          witness = std::move(x);
          break;
        }
      }
    } else {
      const Rational minimum = out.value + obj.beta;
      report.denominator_minima.push_back(minimum);
      if (minimum.sign() <= 0) witness = out.point;
    }
    if (witness) {
      report.failure = ErrorCode::NonpositiveDenominator;
      report.criterion = i;
      report.message = "denominator of objective " + std::to_string(i + 1) +
                       " is not positive at " + to_string(*witness);
      report.witness = std::move(witness);
      return report;
    }
  }

  const auto recession = cone::recession_denominator_check(problem);
  report.recession_check_passed = recession.passed;
  if (!recession.passed) {
    // Unreachable for exact data: positive denominators on K force
    // b_i^T v >= 0 on the recession cone.
    throw std::logic_error("recession-cone denominator check failed after positive minima");
  }
  report.valid = true;
  return report;
}

ValidatedProblem::ValidatedProblem(Problem problem)
    : problem_(std::move(problem)), report_(validate(problem_)) {
  if (!report_.valid) throw Error(*report_.failure, report_.message);
}

}  // namespace lfvo
