#include "qlpf/span.hpp"

#include <algorithm>
#include <map>

#include "qlpf/error.hpp"
#include "qlpf/specialize.hpp"

namespace qlpf {

RatMatrix coordinate_matrix(const Field& f, std::span<const RatFunc> elems, std::vector<Residue>* row_keys) {
  std::vector<FpCoordinates> coords;
  coords.reserve(elems.size());
  std::map<Residue, std::size_t> rows;
  for (const auto& a : elems) {
    require_same_field(f, a.field());
    coords.push_back(fp_coordinates(a));
    for (const auto& [res, r] : coords.back().coords) rows.emplace(res, 0);
  }
  std::size_t k = 0;
  for (auto& [res, idx] : rows) idx = k++;
  RatMatrix m(f, rows.size(), elems.size());
  for (std::size_t j = 0; j < coords.size(); ++j)
    for (const auto& [res, r] : coords[j].coords) m(rows[res], j) = r;
  if (row_keys) {
    row_keys->clear();
    for (const auto& [res, idx] : rows) row_keys->push_back(res);
  }
  return m;
}

bool all_unit_monomials(std::span<const RatFunc> elems) {
  for (const auto& a : elems)
    if (!a.is_zero() && !as_laurent_monomial(a)) return false;
  return true;
}

SpanAnalysis analyze_span_general(const Field& f, std::span<const RatFunc> elems, Exec exec) {
  RankKernel rk = matrix_rank_kernel(coordinate_matrix(f, elems), exec);
  return {rk.rank, std::move(rk.pivot_columns), std::move(rk.kernel)};
}

namespace {

using Elem = ZechField::Elem;
constexpr std::uint64_t kSeedBase = 0x5eed0f11;
constexpr int kAttempts = 3;

// Column-major specialization of a matrix; nullopt if a denominator vanishes.
std::optional<std::vector<std::vector<Elem>>> specialize(const RatMatrix& m, const PointEvaluator& ev) {
  std::vector<std::vector<Elem>> cols(m.cols(), std::vector<Elem>(m.rows(), ZechField::kZero));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j).is_zero()) continue;
      auto v = ev.eval(m(i, j));
      if (!v) return std::nullopt;
      cols[j][i] = *v;
    }
  return cols;
}

// Incremental column echelon over GF(p^k). Basis vector k is 1 at pivot_rows[k]
// and 0 at every earlier pivot row.
class SpecEchelon {
 public:
  SpecEchelon(const ZechField& gf, std::size_t rows) : gf_(gf), rows_(rows) {}

  bool add(std::vector<Elem> v) {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Elem c = v[pivot_rows_[k]];
      if (c == ZechField::kZero) continue;
      for (std::size_t i = 0; i < rows_; ++i)
        if (basis_[k][i] != ZechField::kZero) v[i] = gf_.sub(v[i], gf_.mul(c, basis_[k][i]));
    }
    std::size_t piv = rows_;
    for (std::size_t i = 0; i < rows_ && piv == rows_; ++i)
      if (v[i] != ZechField::kZero) piv = i;
    if (piv == rows_) return false;
    const Elem inv = gf_.inv(v[piv]);
    for (auto& x : v) x = gf_.mul(x, inv);
    basis_.push_back(std::move(v));
    pivot_rows_.push_back(piv);
    return true;
  }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<std::size_t>& pivot_rows() const noexcept { return pivot_rows_; }

 private:
  const ZechField& gf_;
  std::size_t rows_;
  std::vector<std::vector<Elem>> basis_;
  std::vector<std::size_t> pivot_rows_;
};

RatMatrix pivot_block(const RatMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  RatMatrix b(m.field(), rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t c = 0; c < cols.size(); ++c) b(a, c) = m(rows[a], cols[c]);
  return b;
}

bool annihilates(const RatMatrix& m, const RatVector& w) {
  for (const auto& e : m.apply(w))
    if (!e.is_zero()) return false;
  return true;
}

// One attempt at a certified classification; nullopt when a certificate fails.
std::optional<SpanAnalysis> certified_attempt(const RatMatrix& m, const PointEvaluator& ev, bool want_relations,
                                              Exec exec) {
  auto spec = specialize(m, ev);
  if (!spec) return std::nullopt;
  const std::size_t rows = m.rows(), n = m.cols();
  SpecEchelon ech(ev.gf(), rows);
  SpanAnalysis out;
  std::vector<std::size_t> exact;  // dependent columns needing an exact certificate
  for (std::size_t j = 0; j < n; ++j) {
    if (ech.add(std::move((*spec)[j]))) {
      out.independent.push_back(j);
      continue;
    }
    // a column after full row rank is dependent without further proof
    if (want_relations || ech.rank() < rows) exact.push_back(j);
  }
  out.rank = out.independent.size();
  if (exact.empty()) return out;

  const Field& f = m.field();
  const std::vector<std::size_t>& prow = ech.pivot_rows();
  std::vector<RatVector> rhs;
  for (auto j : exact) {
    RatVector r;
    for (auto i : prow) r.push_back(-m(i, j));
    rhs.push_back(std::move(r));
  }
  std::vector<RatVector> sols;
  if (out.rank == 0)
    sols.assign(exact.size(), RatVector{});
  else
    sols = solve_square_many(pivot_block(m, prow, out.independent), rhs, exec);
  for (std::size_t k = 0; k < exact.size(); ++k) {
    const std::size_t j = exact[k];
    RatVector w(n, RatFunc::zero(f));
    w[j] = RatFunc::one(f);
    for (std::size_t t = 0; t < out.rank; ++t) {
      // first-come: the relation may only use pivots before j
      if (out.independent[t] > j && !sols[k][t].is_zero()) return std::nullopt;
      w[out.independent[t]] = sols[k][t];
    }
    if (!annihilates(m, w)) return std::nullopt;
    if (want_relations) out.relations.push_back(std::move(w));
  }
  return out;
}

}  // namespace

SpanAnalysis analyze_span_certified(const Field& f, std::span<const RatFunc> elems, bool want_relations, Exec exec) {
  RatMatrix m = coordinate_matrix(f, elems);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    PointEvaluator ev(f, kSeedBase + static_cast<std::uint64_t>(attempt));
    if (auto out = certified_attempt(m, ev, want_relations, exec)) return std::move(*out);
  }
  RankKernel rk = matrix_rank_kernel(m, exec);
  SpanAnalysis out{rk.rank, std::move(rk.pivot_columns), {}};
  if (want_relations) out.relations = std::move(rk.kernel);
  return out;
}

SpanAnalysis analyze_span_monomial(const Field& f, std::span<const RatFunc> elems) {
  const std::uint32_t p = f->p();
  SpanAnalysis out;
  std::map<Residue, std::size_t> first;  // residue class -> index of first element
  for (std::size_t j = 0; j < elems.size(); ++j) {
    RatVector v;
    if (elems[j].is_zero()) {
      v.assign(elems.size(), RatFunc::zero(f));
      v[j] = RatFunc::one(f);
      out.relations.push_back(std::move(v));
      continue;
    }
    auto mj = as_laurent_monomial(elems[j]);
    if (!mj) throw UsageError("analyze_span_monomial: element is not a unit monomial");
    Residue res = mj->residue(p);
    auto [it, inserted] = first.emplace(res, j);
    if (inserted) {
      out.independent.push_back(j);
      continue;
    }
    // c_j = (u_j/u_i) x^{p t} c_i  =>  v_i = -(u_j/u_i) x^t, v_j = 1
    const std::size_t i = it->second;
    auto mi = *as_laurent_monomial(elems[i]);
    LaurentMonomial w;
    w.coeff = f->neg(f->mul(mj->coeff, f->inv(mi.coeff)));
    const auto ip = static_cast<std::int32_t>(p);
    for (std::size_t k = 0; k < kMaxVars; ++k) w.exp[k] = (mj->exp[k] - mi.exp[k]) / ip;
    v.assign(elems.size(), RatFunc::zero(f));
    v[i] = to_ratfunc(f, w);
    v[j] = RatFunc::one(f);
    out.relations.push_back(std::move(v));
  }
  out.rank = out.independent.size();
  return out;
}

SpanAnalysis analyze_span(const Field& f, std::span<const RatFunc> elems, Exec exec) {
  if (all_unit_monomials(elems)) return analyze_span_monomial(f, elems);
  return analyze_span_certified(f, elems, true, exec);
}

SpanAnalysis analyze_span_pivots(const Field& f, std::span<const RatFunc> elems, Exec exec) {
  if (all_unit_monomials(elems)) {
    SpanAnalysis out = analyze_span_monomial(f, elems);
    out.relations.clear();
    return out;
  }
  return analyze_span_certified(f, elems, false, exec);
}

namespace {

std::optional<RatVector> monomial_representation(const Field& f, std::span<const RatFunc> elems,
                                                 const LaurentMonomial& md) {
  const std::uint32_t p = f->p();
  const Residue rd = md.residue(p);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].is_zero()) continue;
    auto mi = *as_laurent_monomial(elems[i]);
    if (mi.residue(p) != rd) continue;
    LaurentMonomial w;
    w.coeff = f->mul(md.coeff, f->inv(mi.coeff));
    for (std::size_t k = 0; k < kMaxVars; ++k) w.exp[k] = (md.exp[k] - mi.exp[k]) / static_cast<std::int32_t>(p);
    RatVector v(elems.size(), RatFunc::zero(f));
    v[i] = to_ratfunc(f, w);
    return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RatVector> represent_in_independent(const Field& f, std::span<const RatFunc> basis, const RatFunc& d,
                                                  Exec exec) {
  require_same_field(f, d.field());
  if (d.is_zero()) return RatVector(basis.size(), RatFunc::zero(f));
  if (auto md = as_laurent_monomial(d); md && all_unit_monomials(basis)) return monomial_representation(f, basis, *md);
  std::vector<RatFunc> all(basis.begin(), basis.end());
  all.push_back(d);
  RatMatrix full = coordinate_matrix(f, all);
  const std::size_t n = basis.size();
  // d = sum v_i^p a_i  <=>  coords(d) = M v
  RatMatrix m(f, full.rows(), n);
  RatVector b(full.rows(), RatFunc::zero(f));
  for (std::size_t i = 0; i < full.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = full(i, j);
    b[i] = full(i, n);
  }
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    PointEvaluator ev(f, kSeedBase + static_cast<std::uint64_t>(attempt));
    auto spec = specialize(full, ev);
    if (!spec) continue;
    SpecEchelon ech(ev.gf(), full.rows());
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = ech.add(std::move((*spec)[j]));
    if (!ok) continue;  // unlucky point: the basis must specialize to full rank
    if (ech.add(std::move((*spec)[n]))) return std::nullopt;
    RatVector rhs;
    for (auto i : ech.pivot_rows()) rhs.push_back(b[i]);
    RatVector v = n == 0 ? RatVector{} : solve_square_many(pivot_block(m, ech.pivot_rows(), [&] {
                                                              std::vector<std::size_t> c(n);
                                                              for (std::size_t j = 0; j < n; ++j) c[j] = j;
                                                              return c;
                                                            }()),
                                                            {rhs}, exec)
                                             .front();
    // the candidate is unique because the basis is independent
    if (m.apply(v) != b) return std::nullopt;
    return v;
  }
  return solve_linear(m, b, exec);
}

std::optional<RatVector> represent_in_span(const Field& f, std::span<const RatFunc> elems, const RatFunc& d,
                                           Exec exec) {
  require_same_field(f, d.field());
  if (d.is_zero()) return RatVector(elems.size(), RatFunc::zero(f));
  if (auto md = as_laurent_monomial(d); md && all_unit_monomials(elems)) return monomial_representation(f, elems, *md);
  SpanAnalysis a = analyze_span_pivots(f, elems, exec);
  std::vector<RatFunc> basis;
  for (auto i : a.independent) basis.push_back(elems[i]);
  auto v = represent_in_independent(f, basis, d, exec);
  if (!v) return std::nullopt;
  RatVector out(elems.size(), RatFunc::zero(f));
  for (std::size_t k = 0; k < a.independent.size(); ++k) out[a.independent[k]] = (*v)[k];
  return out;
}

std::vector<std::size_t> differential_pivots(const Field& f, std::span<const RatFunc> elems, Exec exec) {
  RatMatrix j(f, f->nvars(), elems.size());
  for (std::size_t c = 0; c < elems.size(); ++c) {
    require_same_field(f, elems[c].field());
    for (std::size_t v = 0; v < f->nvars(); ++v) j(v, c) = elems[c].derivative(v);
  }
  return matrix_rank_kernel(j, exec).pivot_columns;
}

Residue ResidueRowSpace::reduce(Residue r) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint32_t c = r[pivots_[k]];
    if (c == 0) continue;
    for (std::size_t v = 0; v < nvars_; ++v)
      r[v] = static_cast<std::uint16_t>((r[v] + (p_ - c) * rows_[k][v]) % p_);
  }
  return r;
}

bool ResidueRowSpace::contains(const Residue& r) const {
  Residue x = reduce(r);
  for (std::size_t v = 0; v < nvars_; ++v)
    if (x[v] % p_) return false;
  return true;
}

bool ResidueRowSpace::add(const Residue& r) {
  Residue x = reduce(r);
  std::size_t piv = nvars_;
  for (std::size_t v = 0; v < nvars_; ++v) {
    x[v] = static_cast<std::uint16_t>(x[v] % p_);
    if (piv == nvars_ && x[v]) piv = v;
  }
  if (piv == nvars_) return false;
  // normalize the pivot to 1 (Fermat inverse)
  std::uint32_t inv = 1, base = x[piv];
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) inv = inv * base % p_;
    base = base * base % p_;
  }
  for (std::size_t v = 0; v < nvars_; ++v) x[v] = static_cast<std::uint16_t>(x[v] * inv % p_);
  for (auto& row : rows_) {
    const std::uint32_t c = row[piv];
    if (c == 0) continue;
    for (std::size_t v = 0; v < nvars_; ++v) row[v] = static_cast<std::uint16_t>((row[v] + (p_ - c) * x[v]) % p_);
  }
  rows_.push_back(x);
  pivots_.push_back(piv);
  return true;
}

std::vector<Residue> ResidueRowSpace::canonical() const {
  std::vector<std::pair<std::size_t, Residue>> order;
  for (std::size_t k = 0; k < rows_.size(); ++k) order.emplace_back(pivots_[k], rows_[k]);
  std::sort(order.begin(), order.end());
  std::vector<Residue> out;
  for (auto& [piv, row] : order) out.push_back(row);
  return out;
}

std::uint64_t SpanBuilder::code(const Residue& r) const noexcept {
  std::uint64_t out = 0;
  for (std::size_t v = field_->nvars(); v-- > 0;) out = out * field_->p() + r[v];
  return out;
}

bool SpanBuilder::contains(const RatFunc& d) const {
  if (d.is_zero()) return true;
  if (monomial_mode_) {
    if (auto md = as_laurent_monomial(d)) return classes_.count(code(md->residue(field_->p()))) > 0;
  }
  return represent_in_independent(field_, basis_, d, exec_).has_value();
}

bool SpanBuilder::add(const RatFunc& d) {
  if (contains(d)) return false;
  add_independent(d);
  return true;
}

void SpanBuilder::add_independent(const RatFunc& d) {
  basis_.push_back(d);
  if (!monomial_mode_) return;
  if (auto md = as_laurent_monomial(d))
    classes_.insert(code(md->residue(field_->p())));
  else
    monomial_mode_ = false;
}

}  // namespace qlpf
