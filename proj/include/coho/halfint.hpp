#pragma once

#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

#include "coho/errors.hpp"

namespace coho {

/// Exact half-integer k/2, stored as the doubled integer k.
///
/// Everything downstream (rho-shifts, Harish-Chandra parameters, Tate
/// twists, complex-character exponents) lives in (1/2)Z, so the doubled
/// representation keeps the whole calculus in integer arithmetic.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(long long whole) : doubled_(2 * whole) {} // NOLINT: implicit by design

  static constexpr HalfInt from_doubled(long long twice) {
    HalfInt h;
    h.doubled_ = twice;
    return h;
  }

  constexpr long long doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  /// The value, when integral.
  constexpr long long as_integer() const {
    if (!is_integer())
      throw domain_error("half-integer " + std::to_string(doubled_) + "/2 is not integral");
    return doubled_ / 2;
  }

  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    doubled_ += o.doubled_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    doubled_ -= o.doubled_;
    return *this;
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_doubled(a.doubled_ + b.doubled_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_doubled(a.doubled_ - b.doubled_); }
  friend constexpr HalfInt operator*(long long k, HalfInt a) { return from_doubled(k * a.doubled_); }
  friend constexpr HalfInt operator*(HalfInt a, long long k) { return k * a; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
  long long doubled_ = 0;
};

using HalfIntVector = std::vector<HalfInt>;

inline std::string to_string(HalfInt h) {
  if (h.is_integer())
    return std::to_string(h.as_integer());
  return std::to_string(h.doubled()) + "/2";
}

inline std::vector<long long> doubled(const HalfIntVector& v) {
  std::vector<long long> out;
  out.reserve(v.size());
  for (HalfInt h : v)
    out.push_back(h.doubled());
  return out;
}

inline HalfIntVector from_doubled(const std::vector<long long>& twice) {
  HalfIntVector out;
  out.reserve(twice.size());
  for (long long t : twice)
    out.push_back(HalfInt::from_doubled(t));
  return out;
}

} // namespace coho
