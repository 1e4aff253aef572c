#pragma once

#include <cstdlib>
#include <string>

namespace spinbeam {

/// A half-integer nu stored as the exact integer 2*nu.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt integer(int n) { return HalfInt(2 * n); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_half_odd() const { return twice_ % 2 != 0; }
  constexpr double value() const { return 0.5 * twice_; }

  /// Integer value; only meaningful when is_integer().
  constexpr int as_int() const { return twice_ / 2; }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "p/2" for half-odd values, plain "n" for integers.
  std::string str() const;

  /// Accepts "p/2", "n" or a decimal with fractional part .0 or .5.
  static HalfInt parse(const std::string& text);

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

}  // namespace spinbeam
