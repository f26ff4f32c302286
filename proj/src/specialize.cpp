#include "qlpf/specialize.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "qlpf/error.hpp"

namespace qlpf {

namespace {

constexpr std::uint64_t kMinSize = std::uint64_t{1} << 19;

}  // namespace

const ZechField& ZechField::get(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<ZechField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) slot.reset(new ZechField(p));
  return *slot;
}

ZechField::ZechField(std::uint32_t p) : p_(p), k_(0) {
  if (!is_prime(p)) throw UsageError("ZechField: characteristic is not prime");
  std::uint64_t q = 1;
  while (q < kMinSize) {
    q *= p;
    ++k_;
  }
  n_ = static_cast<std::int64_t>(q - 1);
  neg_one_ = p == 2 ? 0 : n_ / 2;

  std::vector<std::uint64_t> pow_p(k_ + 1, 1);
  for (std::uint32_t i = 1; i <= k_; ++i) pow_p[i] = pow_p[i - 1] * p;

  // Search modulus polynomials until x has order q - 1, which makes the quotient
  // ring a field with generator x.
  std::vector<std::uint32_t> modulus(k_, 0);
  std::vector<Elem> exp_table(static_cast<std::size_t>(n_));
  std::mt19937_64 rng(p * 7919u + k_);
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  for (;;) {
    for (auto& c : modulus) c = coeff(rng);
    if (modulus[0] == 0) continue;
    std::vector<std::uint32_t> d(k_, 0);
    d[0] = 1;  // x^0
    bool primitive = true;
    for (std::int64_t i = 0; i < n_; ++i) {
      std::uint64_t code = 0;
      for (std::uint32_t j = k_; j-- > 0;) code = code * p + d[j];
      if (i > 0 && code == 1) {
        primitive = false;
        break;
      }
      exp_table[static_cast<std::size_t>(i)] = static_cast<Elem>(code);
      // multiply by x modulo x^k + sum modulus_j x^j
      const std::uint32_t top = d[k_ - 1];
      for (std::uint32_t j = k_ - 1; j > 0; --j) d[j] = d[j - 1];
      d[0] = 0;
      if (top)
        for (std::uint32_t j = 0; j < k_; ++j) d[j] = (d[j] + (p - top) * modulus[j]) % p;
    }
    if (!primitive) continue;
    std::uint64_t back = 0;
    for (std::uint32_t j = k_; j-- > 0;) back = back * p + d[j];
    if (back == 1) break;
  }
  log_.assign(q, kZero);
  for (std::int64_t i = 0; i < n_; ++i) log_[static_cast<std::size_t>(exp_table[static_cast<std::size_t>(i)])] =
      static_cast<Elem>(i);
  zech_.resize(static_cast<std::size_t>(n_));
  for (std::int64_t m = 0; m < n_; ++m) {
    const auto e = static_cast<std::uint64_t>(exp_table[static_cast<std::size_t>(m)]);
    const std::uint64_t d0 = e % p;
    zech_[static_cast<std::size_t>(m)] = log_[e - d0 + (d0 + 1) % p];
  }
}

ZechField::Elem ZechField::inv(Elem a) const {
  if (a < 0) throw ArithmeticError("inverse of zero in GF(p^k)");
  return a == 0 ? 0 : static_cast<Elem>(n_ - a);
}

PointEvaluator::PointEvaluator(const Field& f, std::uint64_t seed) : gf_(&ZechField::get(f->p())) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, gf_->order() - 1);
  for (std::size_t v = 0; v < f->nvars(); ++v) point_.push_back(pick(rng));
}

ZechField::Elem PointEvaluator::eval(const MultiPoly& poly) const {
  ZechField::Elem acc = ZechField::kZero;
  const std::int64_t n = gf_->order();
  for (const auto& t : poly.terms()) {
    std::int64_t l = gf_->from_int(t.coeff);
    for (std::size_t v = 0; v < point_.size(); ++v)
      if (t.mono.exp[v]) l = (l + point_[v] * t.mono.exp[v]) % n;
    acc = gf_->add(acc, static_cast<ZechField::Elem>(l));
  }
  return acc;
}

std::optional<ZechField::Elem> PointEvaluator::eval(const RatFunc& a) const {
  const ZechField::Elem den = eval(a.den());
  if (den < 0) return std::nullopt;
  return gf_->mul(eval(a.num()), gf_->inv(den));
}

}  // namespace qlpf
