#include "qlpf/multipoly.hpp"

#include <algorithm>
#include <string>

#include "qlpf/error.hpp"

namespace qlpf {

Monomial Monomial::variable(std::size_t i, std::uint32_t power) {
  Monomial m;
  m.exp[i] = static_cast<std::uint16_t>(power);
  m.degree = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] + o.exp[i]);
  r.degree = degree + o.degree;
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (degree > o.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(o.exp[i] - exp[i]);
  r.degree = o.degree - degree;
  return r;
}

namespace {

void sort_and_combine(const FieldDescriptor& f, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::uint32_t c = 0;
    std::size_t j = i;
    for (; j < terms.size() && terms[j].mono == terms[i].mono; ++j) c = f.add(c, terms[j].coeff);
    if (c != 0) {
      terms[out] = terms[i];
      terms[out].coeff = c;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// a + sign*b over sorted term lists
std::vector<Term> merge(const FieldDescriptor& f, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = a[i].mono <=> b[j].mono;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (subtract) t.coeff = f.neg(t.coeff);
      out.push_back(t);
    } else {
      std::uint32_t s = subtract ? f.sub(a[i].coeff, b[j].coeff) : f.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Term t = b[j];
    if (subtract) t.coeff = f.neg(t.coeff);
    out.push_back(t);
  }
  return out;
}

const Field& pick_field(const MultiPoly& a, const MultiPoly& b) {
  if (a.field() && b.field()) {
    require_same_field(a.field(), b.field());
    return a.field();
  }
  if (a.field()) return a.field();
  if (b.field()) return b.field();
  throw UsageError("polynomial without a field");
}

}  // namespace

MultiPoly::MultiPoly(Field field, std::vector<Term> terms) : field_(std::move(field)), terms_(std::move(terms)) {
  if (!field_) throw UsageError("polynomial without a field");
  for (auto& t : terms_) {
    t.coeff %= field_->p();
    std::uint32_t d = 0;
    for (auto e : t.mono.exp) d += e;
    t.mono.degree = d;
  }
  sort_and_combine(*field_, terms_);
  check_degree();
}

MultiPoly MultiPoly::constant(Field field, long long c) {
  MultiPoly r(field);
  auto v = field->reduce(c);
  if (v != 0) r.terms_.push_back({Monomial{}, v});
  return r;
}

MultiPoly MultiPoly::variable(Field field, std::size_t i) {
  if (i >= field->nvars()) throw UsageError("variable index out of range");
  return monomial(std::move(field), Monomial::variable(i));
}

MultiPoly MultiPoly::monomial(Field field, const Monomial& m, std::uint32_t coeff) {
  MultiPoly r(field);
  coeff %= field->p();
  if (coeff != 0) r.terms_.push_back({m, coeff});
  r.check_degree();
  return r;
}

bool MultiPoly::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].mono.degree == 0 && terms_[0].coeff == 1;
}

void MultiPoly::check_degree() const {
  if (field_ && total_degree() > field_->max_degree())
    throw ResourceError("polynomial degree " + std::to_string(total_degree()) + " exceeds the degree cap " +
                        std::to_string(field_->max_degree()));
}

std::uint32_t MultiPoly::degree_in(std::size_t v) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max<std::uint32_t>(d, t.mono.exp[v]);
  return d;
}

MultiPoly MultiPoly::coeff_in(std::size_t v, std::uint32_t k) const {
  MultiPoly r(field_);
  for (const auto& t : terms_) {
    if (t.mono.exp[v] != k) continue;
    Term u = t;
    u.mono.exp[v] = 0;
    u.mono.degree -= k;
    r.terms_.push_back(u);
  }
  // removing x_v^k from every term keeps the order except among equal-degree
  // ties, so re-sort
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  return r;
}

Monomial MultiPoly::monomial_content() const noexcept {
  Monomial m;
  if (terms_.empty()) return m;
  m = terms_[0].mono;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = std::min(m.exp[i], t.mono.exp[i]);
  m.degree = 0;
  for (auto e : m.exp) m.degree += e;
  return m;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = field_->neg(t.coeff);
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  const Field& f = pick_field(a, b);
  MultiPoly r(f);
  r.terms_ = merge(*f, a.terms_, b.terms_, false);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  const Field& f = pick_field(a, b);
  MultiPoly r(f);
  r.terms_ = merge(*f, a.terms_, b.terms_, true);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const Field& f = pick_field(a, b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(f);
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.total_degree() + b.total_degree() > f->max_degree())
    throw ResourceError("product degree " + std::to_string(a.total_degree() + b.total_degree()) +
                        " exceeds the degree cap " + std::to_string(f->max_degree()));
  MultiPoly r(f);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) r.terms_.push_back({s.mono * t.mono, f->mul(s.coeff, t.coeff)});
  sort_and_combine(*f, r.terms_);
  return r;
}

MultiPoly MultiPoly::scaled(std::uint32_t c) const {
  c %= field_->p();
  if (c == 0) return MultiPoly(field_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = field_->mul(t.coeff, c);
  return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, std::uint32_t c) const {
  c %= field_->p();
  if (c == 0 || is_zero()) return MultiPoly(field_);
  MultiPoly r(field_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_->mul(t.coeff, c)});
  r.check_degree();
  return r;
}

MultiPoly MultiPoly::divided_by_monomial(const Monomial& m) const {
  MultiPoly r(field_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.mono)) throw ArithmeticError("monomial does not divide polynomial");
    r.terms_.push_back({m.quotient_of(t.mono), t.coeff});
  }
  return r;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  if (static_cast<std::uint64_t>(total_degree()) * e > field_->max_degree())
    throw ResourceError("power degree exceeds the degree cap " + std::to_string(field_->max_degree()));
  MultiPoly result = constant(field_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading_coeff()));
}

std::optional<MultiPoly> MultiPoly::exact_div(const MultiPoly& b) const {
  const Field& f = pick_field(*this, b);
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (is_zero()) return MultiPoly(f);
  if (b.terms_.size() == 1) {
    const Monomial& m = b.terms_[0].mono;
    for (const auto& t : terms_)
      if (!m.divides(t.mono)) return std::nullopt;
    return divided_by_monomial(m).scaled(f->inv(b.terms_[0].coeff));
  }
  const Term& lb = b.terms_.front();
  const std::uint32_t lb_inv = f->inv(lb.coeff);
  std::vector<Term> quotient;
  std::vector<Term> rem = terms_;
  std::vector<Term> tmp;
  while (!rem.empty()) {
    const Term& lr = rem.front();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Term q{lb.mono.quotient_of(lr.mono), f->mul(lr.coeff, lb_inv)};
    quotient.push_back(q);
    // rem -= q * b; the leading terms cancel
    tmp.clear();
    tmp.reserve(rem.size() + b.terms_.size());
    std::size_t i = 1, j = 1;
    while (i < rem.size() && j < b.terms_.size()) {
      Monomial bm = b.terms_[j].mono * q.mono;
      auto c = rem[i].mono <=> bm;
      if (c > 0) {
        tmp.push_back(rem[i++]);
      } else if (c < 0) {
        tmp.push_back({bm, f->neg(f->mul(b.terms_[j].coeff, q.coeff))});
        ++j;
      } else {
        std::uint32_t s = f->sub(rem[i].coeff, f->mul(b.terms_[j].coeff, q.coeff));
        if (s != 0) tmp.push_back({bm, s});
        ++i;
        ++j;
      }
    }
    for (; i < rem.size(); ++i) tmp.push_back(rem[i]);
    for (; j < b.terms_.size(); ++j)
      tmp.push_back({b.terms_[j].mono * q.mono, f->neg(f->mul(b.terms_[j].coeff, q.coeff))});
    rem.swap(tmp);
    if (!rem.empty() && rem.front().mono.degree < lb.mono.degree) return std::nullopt;
  }
  MultiPoly r(f);
  r.terms_ = std::move(quotient);
  return r;
}

MultiPoly MultiPoly::div_exact(const MultiPoly& b) const {
  auto q = exact_div(b);
  if (!q) throw ArithmeticError("inexact polynomial division");
  return *q;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) noexcept {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// gcd: monomial content stripping, then recursion on the smallest variable with
// content/primitive-part splitting and a primitive pseudo-remainder sequence.

namespace {

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

int lowest_variable(const MultiPoly& a) {
  int best = -1;
  for (const auto& t : a.terms())
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.mono.exp[i] != 0) {
        if (best < 0 || static_cast<int>(i) < best) best = static_cast<int>(i);
        break;
      }
  return best;
}

MultiPoly content_in(const MultiPoly& a, std::size_t v) {
  const auto d = a.degree_in(v);
  MultiPoly g(a.field());
  for (std::uint32_t k = 0; k <= d; ++k) {
    MultiPoly c = a.coeff_in(v, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_rec(g, c);
    if (g.is_one()) break;
  }
  return g;
}

MultiPoly primitive_in(const MultiPoly& a, std::size_t v) {
  if (a.is_zero()) return a;
  MultiPoly c = content_in(a, v);
  return c.is_one() ? a : a.div_exact(c);
}

MultiPoly prem(const MultiPoly& a, const MultiPoly& b, std::size_t v) {
  const auto db = b.degree_in(v);
  const MultiPoly lcb = b.coeff_in(v, db);
  MultiPoly r = a;
  while (!r.is_zero()) {
    const auto dr = r.degree_in(v);
    if (dr < db) break;
    MultiPoly lcr = r.coeff_in(v, dr);
    r = lcb * r - lcr * b.times_monomial(Monomial::variable(v, dr - db));
  }
  return r;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  const Field& f = a.field();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(f, 1);
  if (a == b) return a.monic();

  // monomial content
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  Monomial mc;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    mc.exp[i] = std::min(ma.exp[i], mb.exp[i]);
    mc.degree += mc.exp[i];
  }
  if (a.is_monomial() || b.is_monomial()) return MultiPoly::monomial(f, mc);
  MultiPoly a1 = ma.degree ? a.divided_by_monomial(ma) : a;
  MultiPoly b1 = mb.degree ? b.divided_by_monomial(mb) : b;
  MultiPoly core = [&]() -> MultiPoly {
    if (a1.is_constant() || b1.is_constant()) return MultiPoly::constant(f, 1);
    int va = lowest_variable(a1), vb = lowest_variable(b1);
    std::size_t v = static_cast<std::size_t>(std::min(va, vb));
    bool in_a = a1.degree_in(v) > 0, in_b = b1.degree_in(v) > 0;
    if (!in_a) return gcd_rec(a1, content_in(b1, v));
    if (!in_b) return gcd_rec(content_in(a1, v), b1);
    MultiPoly ca = content_in(a1, v), cb = content_in(b1, v);
    MultiPoly c = gcd_rec(ca, cb);
    MultiPoly p = ca.is_one() ? a1 : a1.div_exact(ca);
    MultiPoly q = cb.is_one() ? b1 : b1.div_exact(cb);
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    while (true) {
      MultiPoly r = prem(p, q, v);
      if (r.is_zero()) break;
      if (r.degree_in(v) == 0) {
        q = MultiPoly::constant(f, 1);
        break;
      }
      p = std::move(q);
      q = primitive_in(r, v);
    }
    return (c * primitive_in(q, v)).monic();
  }();
  return (core.times_monomial(mc)).monic();
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && b.is_zero()) return a;
  return gcd_rec(a, b);
}

MultiPoly MultiPoly::derivative(std::size_t v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const std::uint32_t e = t.mono.exp[v];
    if (e % field_->p() == 0) continue;
    Term d = t;
    d.coeff = static_cast<std::uint32_t>(std::uint64_t{t.coeff} * e % field_->p());
    d.mono.exp[v] = static_cast<std::uint16_t>(e - 1);
    out.push_back(d);
  }
  return MultiPoly(field_, std::move(out));
}

}  // namespace qlpf
