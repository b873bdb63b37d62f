#include "lfvo/linalg.hpp"

#include <stdexcept>

namespace lfvo {

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational acc;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].is_zero() && !b[k].is_zero()) acc += a[k] * b[k];
  }
  return acc;
}

Vector matvec(const Matrix& m, std::span<const Rational> x) {
  Vector out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, x));
  return out;
}

Vector add_scaled(std::span<const Rational> x, const Rational& t, std::span<const Rational> v) {
  if (x.size() != v.size()) throw std::invalid_argument("add_scaled: length mismatch");
  Vector out(x.begin(), x.end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += t * v[k];
  return out;
}

Vector scaled(std::span<const Rational> v, const Rational& t) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * t);
  return out;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool has_columns(const Matrix& m, std::size_t cols) {
  for (const auto& row : m) {
    if (row.size() != cols) return false;
  }
  return true;
}

Matrix identity(std::size_t n, const Rational& diagonal) {
  Matrix m(n, Vector(n));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = diagonal;
  return m;
}

std::string to_string(std::span<const Rational> v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k != 0) out += ", ";
    out += v[k].str();
  }
  return out + "]";
}

std::vector<double> to_doubles(std::span<const Rational> v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

}  // namespace lfvo
