#include <random>
#include <stdexcept>
#include <string>

#include "lfvo/analysis.hpp"

namespace lfvo::analysis {

namespace {

// Raw engine output only: std::mt19937_64 is specified bit-for-bit, the
// standard distributions are not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  /// p/q with p in [lo, hi], q in [1, 4].
  Rational rational(long lo, long hi) { return {integer(lo, hi), integer(1, 4)}; }

  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

Rational sum(const Vector& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

Vector random_vector(Draw& draw, std::size_t n, long lo, long hi) {
  Vector v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) v.push_back(draw.rational(lo, hi));
  return v;
}

// Shifts the last component so that sum(a) <= -margin.
void push_sum_below(Vector& a, const Rational& margin) {
  const Rational s = sum(a);
  if (s > -margin) a.back() -= s + margin;
}

LFObjective affine(Draw& draw, std::size_t n, const Rational& margin) {
  LFObjective obj{random_vector(draw, n, -5, 5), draw.rational(-5, 5), Vector(n), 1};
  push_sum_below(obj.a, margin);
  return obj;
}

LFObjective fractional(Draw& draw, std::size_t n) {
  return {random_vector(draw, n, -5, 5), draw.rational(-5, 5), random_vector(draw, n, 1, 5), 1};
}

}  // namespace

Problem generate_pathological(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 || m < 2) throw std::invalid_argument("generate_pathological needs n >= 2 and m >= 2");
  Draw draw(seed);
  Problem problem;
  problem.name = "generated-n" + std::to_string(n) + "-m" + std::to_string(m) + "-s" +
                 std::to_string(seed);
  problem.polyhedron = {identity(n, -1), Vector(n)};

  problem.objectives.push_back(affine(draw, n, 1));
  problem.objectives.push_back(fractional(draw, n));
  for (std::size_t j = 2; j < m; ++j) {
    const bool make_affine = j == 2 || draw.coin();
    problem.objectives.push_back(make_affine ? affine(draw, n, 0) : fractional(draw, n));
  }
  return problem;
}

}  // namespace lfvo::analysis
