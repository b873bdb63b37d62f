#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lfvo/rational.hpp"

namespace lfvo {

using Vector = std::vector<Rational>;
/// Row-major; every row has the same length.
using Matrix = std::vector<Vector>;

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

Vector matvec(const Matrix& m, std::span<const Rational> x);

/// x + t * v
Vector add_scaled(std::span<const Rational> x, const Rational& t, std::span<const Rational> v);

Vector scaled(std::span<const Rational> v, const Rational& t);

bool is_zero(std::span<const Rational> v);

/// True when every row of `m` has length `cols`.
bool has_columns(const Matrix& m, std::size_t cols);

Matrix identity(std::size_t n, const Rational& diagonal = 1);

/// "[a, b, c]" using Rational::str().
std::string to_string(std::span<const Rational> v);

std::vector<double> to_doubles(std::span<const Rational> v);

}  // namespace lfvo
