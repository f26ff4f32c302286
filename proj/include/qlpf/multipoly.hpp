#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qlpf/field.hpp"

namespace qlpf {

/// Exponent vector with cached total degree. Ordered graded-lexicographically
/// (x_1 > x_2 > ... within a degree).
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  static Monomial variable(std::size_t i, std::uint32_t power = 1);

  Monomial operator*(const Monomial& o) const noexcept;
  bool divides(const Monomial& o) const noexcept;
  /// o / *this, requires divides(o).
  Monomial quotient_of(const Monomial& o) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exp == b.exp; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    // larger exponent in an earlier variable means larger monomial
    return a.exp <=> b.exp;
  }
};

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;
};

/// Sparse polynomial over F_p in the field's variables. Terms are kept in
/// strictly decreasing graded-lex order with nonzero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(Field field) : field_(std::move(field)) {}
  MultiPoly(Field field, std::vector<Term> terms);

  static MultiPoly constant(Field field, long long c);
  static MultiPoly variable(Field field, std::size_t i);
  static MultiPoly monomial(Field field, const Monomial& m, std::uint32_t coeff = 1);

  const Field& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0); }
  bool is_one() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::uint32_t total_degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mono.degree; }
  const Term& leading() const { return terms_.front(); }
  std::uint32_t leading_coeff() const noexcept { return terms_.empty() ? 0 : terms_.front().coeff; }

  /// Degree in variable v (0 for the zero polynomial).
  std::uint32_t degree_in(std::size_t v) const noexcept;
  /// Coefficient of x_v^k as a polynomial free of x_v.
  MultiPoly coeff_in(std::size_t v, std::uint32_t k) const;
  /// Componentwise minimum exponent over all terms.
  Monomial monomial_content() const noexcept;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(std::uint32_t c) const;
  MultiPoly times_monomial(const Monomial& m, std::uint32_t c = 1) const;
  /// Exact division by a monomial dividing every term.
  MultiPoly divided_by_monomial(const Monomial& m) const;
  MultiPoly pow(std::uint32_t e) const;
  /// Partial derivative in variable v.
  MultiPoly derivative(std::size_t v) const;
  /// Divide by the leading coefficient.
  MultiPoly monic() const;

  /// Quotient when b divides *this exactly, otherwise nullopt.
  std::optional<MultiPoly> exact_div(const MultiPoly& b) const;
  /// Exact division that throws ArithmeticError if b does not divide.
  MultiPoly div_exact(const MultiPoly& b) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) noexcept;

 private:
  void check_degree() const;

  Field field_;
  std::vector<Term> terms_;
};

/// Monic gcd (graded-lex leading coefficient 1). gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace qlpf
