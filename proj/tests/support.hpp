#pragma once

// Shared helpers for the test suites: random elements and an independent
// finite-field specialization oracle for ranks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qlpf/error.hpp"
#include "qlpf/linalg.hpp"
#include "qlpf/random.hpp"
#include "qlpf/ratfunc.hpp"

namespace qlpf::testing {

inline RatFunc var(const Field& f, const std::string& name) {
  const int i = f->index_of(name);
  if (i < 0) throw UsageError("no variable " + name);
  return RatFunc::variable(f, static_cast<std::size_t>(i));
}

inline RatFunc cst(const Field& f, long long c) { return RatFunc::constant(f, c); }

using qlpf::random_poly;
using qlpf::random_ratfunc;
using qlpf::random_unit_monomial;

/// GF(p^k) built from an irreducible polynomial found by Rabin's test. Used to
/// specialize rational functions at random points.
class ExtensionFiniteField {
 public:
  using Elem = std::vector<std::uint32_t>;  // k coefficients, low degree first

  ExtensionFiniteField(std::uint32_t p, std::size_t k, std::mt19937_64& rng) : p_(p), k_(k) {
    std::uniform_int_distribution<std::uint32_t> c(0, p - 1);
    for (;;) {
      modulus_.assign(k + 1, 0);
      modulus_[k] = 1;
      for (std::size_t i = 0; i < k; ++i) modulus_[i] = c(rng);
      if (modulus_[0] != 0 && irreducible()) break;
    }
  }

  std::size_t degree() const { return k_; }
  Elem zero() const { return Elem(k_, 0); }
  Elem from_int(std::uint32_t a) const {
    Elem e = zero();
    e[0] = a % p_;
    return e;
  }
  Elem random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> c(0, p_ - 1);
    Elem e(k_);
    for (auto& x : e) x = c(rng);
    return e;
  }
  bool is_zero(const Elem& a) const { return std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; }); }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<std::uint64_t> prod(2 * k_, 0);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    for (std::size_t d = 2 * k_ - 1; d >= k_; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= k_; ++i) prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
    Elem r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = from_int(1);
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem inv(const Elem& a) const {
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < k_; ++i) q *= p_;
    return pow(a, q - 2);
  }

  Elem eval(const MultiPoly& f, const std::vector<Elem>& point) const {
    Elem acc = zero();
    for (const auto& t : f.terms()) {
      Elem m = from_int(t.coeff);
      for (std::size_t v = 0; v < point.size(); ++v)
        if (t.mono.exp[v]) m = mul(m, pow(point[v], t.mono.exp[v]));
      acc = add(acc, m);
    }
    return acc;
  }

  /// Rank of a matrix over GF(p^k) by plain Gaussian elimination.
  std::size_t rank(std::vector<std::vector<Elem>> m) const {
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = r;
      while (piv < rows && is_zero(m[piv][c])) ++piv;
      if (piv == rows) continue;
      std::swap(m[piv], m[r]);
      const Elem iv = inv(m[r][c]);
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (is_zero(m[i][c])) continue;
        const Elem fct = mul(m[i][c], iv);
        for (std::size_t j = c; j < cols; ++j) m[i][j] = sub(m[i][j], mul(fct, m[r][j]));
      }
      ++r;
    }
    return r;
  }

 private:
  using Poly = std::vector<std::uint32_t>;

  void trim(Poly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  Poly mod(Poly a, const Poly& b) const {
    trim(a);
    const std::uint32_t lead_inv = inv_int(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p_;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p_ - c) * b[i] % p_) % p_;
      trim(a);
    }
    return a;
  }
  Poly mulmod(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    return mod(r, modulus_);
  }
  std::uint32_t inv_int(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }
  Poly gcd(Poly a, Poly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Poly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }
  // x^(p^j) mod modulus
  Poly frob_iter(std::size_t j) const {
    Poly x{0, 1};
    for (std::size_t t = 0; t < j; ++t) {
      Poly r{1}, base = x;
      for (std::uint32_t e = p_; e; e >>= 1) {
        if (e & 1) r = mulmod(r, base);
        base = mulmod(base, base);
      }
      x = r;
    }
    return x;
  }
  Poly minus_x(Poly a) const {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p_ - 1) % p_;
    trim(a);
    return a;
  }
  bool irreducible() const {
    if (!minus_x(frob_iter(k_)).empty()) return false;
    for (std::size_t r = 2; r <= k_; ++r) {
      if (k_ % r) continue;
      bool prime = true;
      for (std::size_t d = 2; d * d <= r; ++d) prime = prime && (r % d);
      if (!prime) continue;
      if (gcd(minus_x(frob_iter(k_ / r)), modulus_).size() != 1) return false;
    }
    return true;
  }

  std::uint32_t p_;
  std::size_t k_;
  Poly modulus_;
};

/// Rank of a RatFunc matrix after specializing at a random point; returns -1
/// when a denominator vanishes there.
inline long specialized_rank(const RatMatrix& m, const ExtensionFiniteField& gf, std::mt19937_64& rng) {
  std::vector<ExtensionFiniteField::Elem> point;
  for (std::size_t v = 0; v < m.field()->nvars(); ++v) point.push_back(gf.random(rng));
  std::vector<std::vector<ExtensionFiniteField::Elem>> vals(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto den = gf.eval(m(i, j).den(), point);
      if (gf.is_zero(den)) return -1;
      vals[i].push_back(gf.mul(gf.eval(m(i, j).num(), point), gf.inv(den)));
    }
  return static_cast<long>(gf.rank(vals));
}

}  // namespace qlpf::testing
