#include "qlpf/frobenius.hpp"

#include "qlpf/error.hpp"

namespace qlpf {

namespace {

// Split numerator by exponent residues mod p and take p-th roots of each part.
// Coefficients stay put since Frobenius is the identity on F_p.
std::map<Residue, std::vector<Term>> split_roots(const MultiPoly& n, std::uint32_t p) {
  std::map<Residue, std::vector<Term>> parts;
  for (const auto& t : n.terms()) {
    Residue r{};
    Term root{};
    root.coeff = t.coeff;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r[i] = static_cast<std::uint16_t>(t.mono.exp[i] % p);
      root.mono.exp[i] = static_cast<std::uint16_t>(t.mono.exp[i] / p);
      root.mono.degree += root.mono.exp[i];
    }
    parts[r].push_back(root);
  }
  return parts;
}

}  // namespace

FpCoordinates fp_coordinates(const RatFunc& a) {
  FpCoordinates out{a, {}};
  if (a.is_zero()) return out;
  const Field& f = a.field();
  const std::uint32_t p = f->p();
  MultiPoly numer(f);
  MultiPoly root_den(f);
  if (a.den().is_monomial()) {
    // f / x^t = (f * x^s) / (x^q)^p with q = ceil(t/p), s = pq - t
    const Monomial& t = a.den().leading().mono;
    Monomial s, q;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      std::uint32_t qi = (t.exp[i] + p - 1) / p;
      q.exp[i] = static_cast<std::uint16_t>(qi);
      q.degree += qi;
      s.exp[i] = static_cast<std::uint16_t>(p * qi - t.exp[i]);
      s.degree += s.exp[i];
    }
    numer = a.num().times_monomial(s, f->inv(a.den().leading_coeff()));
    root_den = MultiPoly::monomial(f, q);
  } else {
    numer = a.num() * a.den().pow(p - 1);
    root_den = a.den();
  }
  for (auto& [res, terms] : split_roots(numer, p))
    out.coords.emplace(res, RatFunc(MultiPoly(f, std::move(terms)), root_den));
  return out;
}

RatFunc frobenius_power(const RatFunc& a) {
  if (a.is_zero()) return a;
  const Field& f = a.field();
  const std::uint32_t p = f->p();
  auto lift = [&](const MultiPoly& poly) {
    if (static_cast<std::uint64_t>(poly.total_degree()) * p > f->max_degree())
      throw ResourceError("Frobenius power exceeds the degree cap");
    std::vector<Term> terms;
    terms.reserve(poly.size());
    for (const auto& t : poly.terms()) {
      Term u = t;
      for (auto& e : u.mono.exp) e = static_cast<std::uint16_t>(e * p);
      u.mono.degree *= p;
      terms.push_back(u);
    }
    return MultiPoly(f, std::move(terms));
  };
  return RatFunc(lift(a.num()), lift(a.den()));
}

std::optional<RatFunc> frobenius_root(const RatFunc& a) {
  if (a.is_zero()) return a;
  FpCoordinates c = fp_coordinates(a);
  if (c.coords.size() != 1) return std::nullopt;
  const auto& [res, r] = *c.coords.begin();
  for (auto e : res)
    if (e != 0) return std::nullopt;
  return r;
}

Residue LaurentMonomial::residue(std::uint32_t p) const noexcept {
  Residue r{};
  const auto ip = static_cast<std::int32_t>(p);
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::int32_t v = exp[i] % ip;
    r[i] = static_cast<std::uint16_t>(v < 0 ? v + ip : v);
  }
  return r;
}

std::optional<LaurentMonomial> as_laurent_monomial(const RatFunc& a) {
  if (!a.num().is_monomial() || !a.den().is_monomial()) return std::nullopt;
  LaurentMonomial m;
  const auto& n = a.num().leading();
  const auto& d = a.den().leading();
  m.coeff = a.field()->mul(n.coeff, a.field()->inv(d.coeff));
  for (std::size_t i = 0; i < kMaxVars; ++i)
    m.exp[i] = static_cast<std::int32_t>(n.mono.exp[i]) - static_cast<std::int32_t>(d.mono.exp[i]);
  return m;
}

RatFunc to_ratfunc(const Field& f, const LaurentMonomial& m) {
  Monomial num, den;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m.exp[i] >= 0) {
      num.exp[i] = static_cast<std::uint16_t>(m.exp[i]);
      num.degree += num.exp[i];
    } else {
      den.exp[i] = static_cast<std::uint16_t>(-m.exp[i]);
      den.degree += den.exp[i];
    }
  }
  return RatFunc(MultiPoly::monomial(f, num, m.coeff), MultiPoly::monomial(f, den));
}

}  // namespace qlpf
