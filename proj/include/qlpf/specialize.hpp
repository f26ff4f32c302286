#pragma once

// Evaluation of polynomials at points of a large finite field GF(p^k). A ring
// homomorphism out of F_p[x_1..x_m] cannot create independence, so a nonzero
// specialized minor certifies a nonzero minor over F. The span layer uses this
// to skip exact elimination whenever the answer is already certified.

#include <cstdint>
#include <optional>
#include <vector>

#include "qlpf/ratfunc.hpp"

namespace qlpf {

/// GF(p^k) with p^k around 2^19 to 2^23, elements stored as discrete logarithms;
/// addition goes through a Zech logarithm table.
class ZechField {
 public:
  using Elem = std::int32_t;
  static constexpr Elem kZero = -1;

  /// Shared, lazily built instance per characteristic.
  static const ZechField& get(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  /// Order of the multiplicative group.
  std::int64_t order() const noexcept { return n_; }

  Elem from_int(std::uint32_t c) const noexcept { return log_[c % p_]; }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a < 0 || b < 0) return kZero;
    std::int64_t s = std::int64_t{a} + b;
    return static_cast<Elem>(s >= n_ ? s - n_ : s);
  }
  Elem inv(Elem a) const;
  Elem neg(Elem a) const noexcept {
    if (a < 0) return a;
    std::int64_t s = std::int64_t{a} + neg_one_;
    return static_cast<Elem>(s >= n_ ? s - n_ : s);
  }
  Elem add(Elem a, Elem b) const noexcept {
    if (a < 0) return b;
    if (b < 0) return a;
    std::int64_t d = std::int64_t{b} - a;
    if (d < 0) d += n_;
    const Elem z = zech_[static_cast<std::size_t>(d)];
    if (z < 0) return kZero;
    std::int64_t s = std::int64_t{a} + z;
    return static_cast<Elem>(s >= n_ ? s - n_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

 private:
  explicit ZechField(std::uint32_t p);

  std::uint32_t p_;
  std::uint32_t k_;
  std::int64_t n_;
  std::int64_t neg_one_;
  std::vector<Elem> log_;   // indexed by base-p digit encoding of the element
  std::vector<Elem> zech_;  // log(1 + g^m)
};

/// A random point of GF(p^k)^m with nonzero coordinates.
class PointEvaluator {
 public:
  PointEvaluator(const Field& f, std::uint64_t seed);

  const ZechField& gf() const noexcept { return *gf_; }
  ZechField::Elem eval(const MultiPoly& poly) const;
  /// nullopt when the denominator vanishes at the point.
  std::optional<ZechField::Elem> eval(const RatFunc& a) const;

 private:
  const ZechField* gf_;
  std::vector<std::int64_t> point_;  // logs of the coordinates
};

}  // namespace qlpf
