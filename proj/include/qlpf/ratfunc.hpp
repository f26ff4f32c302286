#pragma once

#include <string>

#include "qlpf/multipoly.hpp"

namespace qlpf {

/// Element of F_p(x_1..x_m) kept as a reduced fraction with monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(MultiPoly num);
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc zero(Field f) { return RatFunc(MultiPoly(std::move(f))); }
  static RatFunc one(Field f) { return RatFunc(MultiPoly::constant(std::move(f), 1)); }
  static RatFunc constant(Field f, long long c) { return RatFunc(MultiPoly::constant(std::move(f), c)); }
  static RatFunc variable(Field f, std::size_t i) { return RatFunc(MultiPoly::variable(std::move(f), i)); }

  const Field& field() const noexcept { return num_.field(); }
  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  /// Partial derivative in variable v.
  RatFunc derivative(std::size_t v) const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc inverse() const;
  /// Integer power; negative exponents invert.
  RatFunc pow(long long e) const;

  /// Structural equality of normalized fractions.
  friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// a/b == c/d decided by ad - bc == 0.
  bool cross_equal(const RatFunc& other) const;

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace qlpf
