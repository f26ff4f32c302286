#include "qlpf/ratfunc.hpp"

#include "qlpf/error.hpp"

namespace qlpf {

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)) {
  if (!num_.field()) throw UsageError("rational function without a field");
  den_ = MultiPoly::constant(num_.field(), 1);
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_field(num_.field(), den_.field());
  if (den_.is_zero()) throw ArithmeticError("zero denominator");
  normalize();
}

void RatFunc::normalize() {
  const Field& f = num_.field();
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(f, 1);
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.div_exact(g);
      den_ = den_.div_exact(g);
    }
  }
  std::uint32_t lc = den_.leading_coeff();
  if (lc != 1) {
    std::uint32_t inv = f->inv(lc);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.is_polynomial() && b.is_polynomial()) {
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    return r;
  }
  // cross-cancel before multiplying to keep sizes down
  MultiPoly g1 = gcd(a.num_, b.den_);
  MultiPoly g2 = gcd(b.num_, a.den_);
  RatFunc r;
  r.num_ = a.num_.div_exact(g1) * b.num_.div_exact(g2);
  r.den_ = a.den_.div_exact(g2) * b.den_.div_exact(g1);
  std::uint32_t lc = r.den_.leading_coeff();
  if (lc != 1) {
    std::uint32_t inv = r.num_.field()->inv(lc);
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  return RatFunc(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<std::uint32_t>(e));
  r.den_ = den_.pow(static_cast<std::uint32_t>(e));
  return r;
}

bool RatFunc::cross_equal(const RatFunc& other) const {
  require_same_field(field(), other.field());
  return (num_ * other.den_ - other.num_ * den_).is_zero();
}

RatFunc RatFunc::derivative(std::size_t v) const {
  MultiPoly top = num_.derivative(v) * den_ - num_ * den_.derivative(v);
  if (top.is_zero()) return zero(field());
  return RatFunc(std::move(top), den_ * den_);
}

}  // namespace qlpf
