#pragma once

namespace pdm {

// Exact multiple of 1/2, stored as twice its value. The shifted angular
// momentum ell_d = ell + (d-3)/2 is half-integer in even dimensions and
// feeds exponents and radicands, so it must not pick up float drift.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int whole) : twice_(2 * whole) {}

  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * static_cast<double>(twice_); }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator+(HalfInt a, int b) { return from_twice(a.twice_ + 2 * b); }
  friend constexpr HalfInt operator-(HalfInt a, int b) { return from_twice(a.twice_ - 2 * b); }
  friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice_ == b.twice_; }
  friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.twice_ < b.twice_; }

 private:
  int twice_ = 0;
};

// l(l+1), exact: with l = n/2 this is n(n+2)/4, a dyadic rational.
constexpr double angular_factor(HalfInt l) {
  const int n = l.twice();
  return static_cast<double>(n * (n + 2)) / 4.0;
}

}  // namespace pdm
