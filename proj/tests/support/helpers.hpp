#pragma once

#include <initializer_list>
#include <optional>

#include "lfvo/error.hpp"
#include "lfvo/linalg.hpp"

namespace helpers {

inline lfvo::Vector V(std::initializer_list<lfvo::Rational> xs) { return lfvo::Vector(xs); }

inline lfvo::Rational R(long p, long q = 1) { return lfvo::Rational(p, q); }

/// Error code raised by f, or nullopt if it returned normally.
template <class F>
std::optional<lfvo::ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const lfvo::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace helpers
