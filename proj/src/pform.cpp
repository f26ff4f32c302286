#include "qlpf/pform.hpp"

#include "qlpf/error.hpp"

namespace qlpf {

QuasiPForm::QuasiPForm(Field field, std::vector<RatFunc> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) require_same_field(field_, c.field());
}

RatFunc QuasiPForm::evaluate(const RatVector& v) const {
  if (v.size() != coeffs_.size()) throw UsageError("vector length does not match form dimension");
  RatFunc acc = RatFunc::zero(field_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero() && !coeffs_[i].is_zero()) acc += coeffs_[i] * frobenius_power(v[i]);
  return acc;
}

QuasiPForm compose(ComposeKind kind, const QuasiPForm& phi, const QuasiPForm& psi) {
  return kind == ComposeKind::orthogonal_sum ? orthogonal_sum(phi, psi) : tensor(phi, psi);
}

QuasiPForm orthogonal_sum(const QuasiPForm& phi, const QuasiPForm& psi) {
  require_same_field(phi.field(), psi.field());
  std::vector<RatFunc> c = phi.coefficients();
  c.insert(c.end(), psi.coefficients().begin(), psi.coefficients().end());
  return QuasiPForm(phi.field(), std::move(c));
}

QuasiPForm tensor(const QuasiPForm& phi, const QuasiPForm& psi) {
  require_same_field(phi.field(), psi.field());
  std::vector<RatFunc> c;
  c.reserve(phi.dim() * psi.dim());
  for (const auto& a : phi.coefficients())
    for (const auto& b : psi.coefficients()) c.push_back(a * b);
  return QuasiPForm(phi.field(), std::move(c));
}

QuasiPForm scale(const RatFunc& c, const QuasiPForm& phi) {
  require_same_field(phi.field(), c.field());
  if (c.is_zero()) throw UsageError("scaling a form by zero");
  std::vector<RatFunc> out;
  out.reserve(phi.dim());
  for (const auto& a : phi.coefficients()) out.push_back(c * a);
  return QuasiPForm(phi.field(), std::move(out));
}

QuasiPForm quasi_pfister(const Field& f, std::span<const RatFunc> gens) {
  QuasiPForm out(f, {RatFunc::one(f)});
  for (const auto& a : gens) {
    require_same_field(f, a.field());
    if (a.is_zero()) throw UsageError("quasi-Pfister generator is zero");
    std::vector<RatFunc> powers{RatFunc::one(f)};
    for (std::uint32_t i = 1; i < f->p(); ++i) powers.push_back(powers.back() * a);
    out = tensor(out, QuasiPForm(f, std::move(powers)));
  }
  return out;
}

RepresentedSpace::RepresentedSpace(Field field, std::vector<RatFunc> basis)
    : field_(std::move(field)), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if (b.is_zero()) throw UsageError("represented-space basis contains zero");
  if (analyze_span(field_, basis_).rank != basis_.size())
    throw UsageError("represented-space basis is not F^p-independent");
  if (basis_.empty()) return;
  std::vector<RatFunc> ratios;
  for (std::size_t i = 1; i < basis_.size(); ++i) ratios.push_back(basis_[i] / basis_[0]);
  for (auto i : differential_pivots(field_, ratios)) gens_.push_back(ratios[i]);
  std::size_t full = 1;
  for (std::size_t i = 0; i < gens_.size() && full <= basis_.size(); ++i) full *= field_->p();
  field_shaped_ = full == basis_.size();
}

RepresentedSpace RepresentedSpace::spanned_by(Field field, std::span<const RatFunc> elems) {
  SpanAnalysis a = analyze_span(field, elems);
  std::vector<RatFunc> basis;
  for (auto i : a.independent) basis.push_back(elems[i]);
  return RepresentedSpace(std::move(field), std::move(basis));
}

bool RepresentedSpace::contains(const RatFunc& d) const {
  require_same_field(field_, d.field());
  if (field_shaped_ && !d.is_zero()) {
    std::vector<RatFunc> with = gens_;
    with.push_back(d / basis_[0]);
    return differential_pivots(field_, with).size() == gens_.size();
  }
  return represent_in_independent(field_, basis_, d).has_value();
}

bool RepresentedSpace::contains(const RepresentedSpace& other) const {
  require_same_field(field_, other.field_);
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

bool RepresentedSpace::same_subspace(const RepresentedSpace& other) const {
  return dimension() == other.dimension() && contains(other);
}

namespace {

Decomposition from_analysis(const QuasiPForm& phi, SpanAnalysis a) {
  std::vector<RatFunc> kept;
  for (auto i : a.independent) kept.push_back(phi[i]);
  Decomposition d{QuasiPForm(phi.field(), std::move(kept)), phi.dim() - a.rank, std::move(a.relations),
                  std::move(a.independent)};
  for (const auto& v : d.isotropy_witnesses) verify(phi.evaluate(v).is_zero(), "isotropy witness does not vanish");
  return d;
}

}  // namespace

Decomposition decompose_general(const QuasiPForm& phi, Exec exec) {
  return from_analysis(phi, analyze_span_general(phi.field(), phi.coefficients(), exec));
}

Decomposition decompose_monomial(const QuasiPForm& phi) {
  return from_analysis(phi, analyze_span_monomial(phi.field(), phi.coefficients()));
}

Decomposition decompose(const QuasiPForm& phi, Exec exec) {
  return from_analysis(phi, analyze_span(phi.field(), phi.coefficients(), exec));
}

bool is_anisotropic(const QuasiPForm& phi) {
  return analyze_span_pivots(phi.field(), phi.coefficients()).rank == phi.dim();
}

std::optional<RatVector> represents(const QuasiPForm& phi, const RatFunc& d) {
  auto v = represent_in_span(phi.field(), phi.coefficients(), d);
  if (v) verify(phi.evaluate(*v) == d, "representation vector does not reproduce the value");
  return v;
}

RepresentedSpace represented_space(const QuasiPForm& phi) {
  std::vector<RatFunc> basis;
  for (auto i : analyze_span_pivots(phi.field(), phi.coefficients()).independent) basis.push_back(phi[i]);
  return RepresentedSpace(phi.field(), std::move(basis));
}

bool is_isometric(const QuasiPForm& phi, const QuasiPForm& psi) {
  require_same_field(phi.field(), psi.field());
  return phi.dim() == psi.dim() && represented_space(phi).same_subspace(represented_space(psi));
}

bool is_subform(const QuasiPForm& sigma, const QuasiPForm& phi) {
  require_same_field(sigma.field(), phi.field());
  if (!is_anisotropic(sigma)) throw UsageError("is_subform: the candidate subform is isotropic");
  RepresentedSpace d = represented_space(phi);
  if (sigma.dim() > d.dimension()) return false;
  for (const auto& c : sigma.coefficients())
    if (!d.contains(c)) return false;
  return true;
}

bool is_similar_with(const QuasiPForm& phi, const QuasiPForm& psi, const RatFunc& c) {
  if (c.is_zero()) throw UsageError("similarity factor is zero");
  return is_isometric(scale(c, phi), psi);
}

}  // namespace qlpf
