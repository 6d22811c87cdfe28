#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <ostream>
#include <string>

namespace rsrl {

/// A natural number extended with infinity. Used for minimal word lengths
/// (infinite for the empty language) and for word distances (infinite for
/// rejected words).
class Length {
 public:
  constexpr Length() = default;
  constexpr Length(std::size_t value) : value_(value) {}  // NOLINT

  static constexpr Length infinite() {
    Length l;
    l.value_ = kInf;
    return l;
  }

  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr bool is_finite() const { return value_ != kInf; }
  /// Only meaningful when finite.
  constexpr std::size_t value() const { return value_; }

  friend constexpr Length operator+(Length a, Length b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return Length(a.value_ + b.value_);
  }
  friend constexpr auto operator<=>(Length, Length) = default;

  std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(value_);
  }
  friend std::ostream& operator<<(std::ostream& os, Length l) {
    return os << l.to_string();
  }

 private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::size_t value_ = 0;
};

}  // namespace rsrl
