#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace dunkl {

/// Non-negative or negative multiple of 1/2, stored exactly as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger from_int(int n) { return from_twice(2 * n); }

  /// Accepts "3", "1/2", "7/2", "2.5", "0.5". Throws DomainError otherwise.
  static HalfInteger parse(std::string_view text);
  /// Throws DomainError unless x is a multiple of 1/2 (to 1e-12).
  static HalfInteger from_double(double x);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  std::string to_string() const;

  constexpr HalfInteger operator+(HalfInteger o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return from_twice(twice_ - o.twice_); }
  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  int twice_ = 0;
};

}  // namespace dunkl
