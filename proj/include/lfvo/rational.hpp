#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lfvo {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. Every scalar in a certificate is one of these.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
      : q_(std::signed_integral<T> ? mpz_class(static_cast<long>(value))
                                   : mpz_class(static_cast<unsigned long>(value))) {}

  /// Throws std::domain_error when `den` is zero.
  Rational(long num, long den);

  explicit Rational(mpq_class q);

  /// Accepts "p" or "p/q" with an optional leading '-' on p and q > 0.
  /// Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const { return q_.get_d(); }

  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const;
  /// True when the value is an integer that fits in std::int64_t.
  [[nodiscard]] bool fits_int64() const;
  [[nodiscard]] std::int64_t to_int64() const;

  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  [[nodiscard]] const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.q_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.q_, rhs.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.q_, rhs.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 2^k for k >= 0.
Rational pow2(unsigned k);

}  // namespace lfvo
