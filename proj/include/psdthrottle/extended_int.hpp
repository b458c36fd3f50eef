#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "psdthrottle/error.hpp"

namespace psdthrottle {

/// A non-negative integer or +infinity. Used for propagation times, capture
/// times and any search result that is infinite when no valid set exists.
class ExtendedInt {
 public:
  constexpr ExtendedInt() = default;
  constexpr ExtendedInt(int value) : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtendedInt infinity() { return ExtendedInt(kInf); }

  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr bool is_finite() const { return value_ != kInf; }

  int value() const {
    if (is_infinite()) throw PreconditionError("value() called on infinity");
    return value_;
  }

  constexpr auto operator<=>(const ExtendedInt&) const = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  int value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ExtendedInt& x) {
  return os << x.to_string();
}

}  // namespace psdthrottle
