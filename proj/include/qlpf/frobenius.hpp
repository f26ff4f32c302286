#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qlpf/ratfunc.hpp"

namespace qlpf {

/// Exponent residue vector in {0..p-1}^m.
using Residue = std::array<std::uint16_t, kMaxVars>;

/// Coordinates of an element over the F^p-basis {x^e : e in {0..p-1}^m}:
/// element = sum_e coords[e]^p * x^e. Zero coordinates are omitted.
struct FpCoordinates {
  RatFunc element;
  std::map<Residue, RatFunc> coords;
};

FpCoordinates fp_coordinates(const RatFunc& a);

/// a^p.
RatFunc frobenius_power(const RatFunc& a);
/// r with r^p = a when a lies in F^p.
std::optional<RatFunc> frobenius_root(const RatFunc& a);

/// c * x^e with e in Z^m; the shape every coefficient takes on the fast paths.
struct LaurentMonomial {
  std::uint32_t coeff = 0;
  std::array<std::int32_t, kMaxVars> exp{};

  Residue residue(std::uint32_t p) const noexcept;
};

/// Recognizes unit * monomial / monomial.
std::optional<LaurentMonomial> as_laurent_monomial(const RatFunc& a);
RatFunc to_ratfunc(const Field& f, const LaurentMonomial& m);

}  // namespace qlpf
