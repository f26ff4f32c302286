#include "qlpf/extension.hpp"

#include <algorithm>
#include <map>

#include "qlpf/error.hpp"

namespace qlpf {

ExtensionSpec::ExtensionSpec(Field field, std::vector<Generator> adjoined)
    : field_(std::move(field)), adjoined_(std::move(adjoined)) {
  for (const auto& [a, n] : adjoined_) {
    require_same_field(field_, a.field());
    if (a.is_zero()) throw UsageError("extension generator is zero");
    if (n == 0) throw UsageError("extension exponent must be at least 1");
  }
}

std::vector<RatFunc> ExtensionSpec::elements() const {
  std::vector<RatFunc> out;
  for (const auto& g : adjoined_) out.push_back(g.first);
  return out;
}

std::uint32_t ExtensionSpec::exponent() const noexcept {
  std::uint32_t e = 0;
  for (const auto& g : adjoined_) e = std::max(e, g.second);
  return e;
}

ExtensionSpec reduce_to_exponent_one(const ExtensionSpec& spec) {
  std::vector<ExtensionSpec::Generator> out;
  for (const auto& g : spec.adjoined()) out.emplace_back(g.first, 1);
  return ExtensionSpec(spec.field(), std::move(out));
}

RelativeValueSpace::RelativeValueSpace(Field field, std::vector<RatFunc> pbasis, Exec exec)
    : field_(std::move(field)), pbasis_(std::move(pbasis)), exec_(exec) {
  monomials_ = quasi_pfister(field_, pbasis_).coefficients();
  block_size_ = monomials_.size();
  monomial_ = all_unit_monomials(pbasis_);
  if (monomial_) {
    const std::uint32_t p = field_->p();
    for (const auto& m : monomials_) offsets_.push_back(as_laurent_monomial(m)->residue(p));
  }
}

std::uint64_t RelativeValueSpace::code(const Residue& r) const noexcept {
  std::uint64_t out = 0;
  for (std::size_t v = field_->nvars(); v-- > 0;) out = out * field_->p() + r[v];
  return out;
}

std::vector<RatFunc> RelativeValueSpace::expand_blocks() const {
  std::vector<RatFunc> out;
  out.reserve(dimension());
  for (const auto& u : blocks_)
    for (const auto& m : monomials_) out.push_back(u * m);
  return out;
}

bool RelativeValueSpace::contains(const RatFunc& d) const {
  require_same_field(field_, d.field());
  if (d.is_zero()) return true;
  if (monomial_) {
    if (auto md = as_laurent_monomial(d)) return codes_.count(code(md->residue(field_->p()))) > 0;
    return represent_in_independent(field_, expand_blocks(), d, exec_).has_value();
  }
  if (field_shaped_) {
    std::vector<RatFunc> with = gens_;
    with.push_back(d / elems_.front());
    return differential_pivots(field_, with, exec_).size() == gens_.size();
  }
  return represent_in_independent(field_, elems_, d, exec_).has_value();
}

void RelativeValueSpace::track_shape(std::size_t from) {
  for (std::size_t i = std::max<std::size_t>(from, 1); i < elems_.size(); ++i) {
    std::vector<RatFunc> with = gens_;
    with.push_back(elems_[i] / elems_.front());
    if (differential_pivots(field_, with, exec_).size() > gens_.size()) gens_.push_back(with.back());
  }
  std::size_t full = 1;
  for (std::size_t i = 0; i < gens_.size() && full <= elems_.size(); ++i) full *= field_->p();
  field_shaped_ = full == elems_.size();
}

void RelativeValueSpace::add_block(const RatFunc& u) {
  require_same_field(field_, u.field());
  if (u.is_zero()) throw UsageError("add_block: zero element");
  blocks_.push_back(u);
  if (monomial_) {
    if (auto mu = as_laurent_monomial(u)) {
      const std::uint32_t p = field_->p();
      const Residue ru = mu->residue(p);
      for (const auto& off : offsets_) {
        Residue r{};
        for (std::size_t v = 0; v < field_->nvars(); ++v) r[v] = static_cast<std::uint16_t>((ru[v] + off[v]) % p);
        codes_.insert(code(r));
      }
      return;
    }
    monomial_ = false;
    blocks_.pop_back();
    elems_ = expand_blocks();
    blocks_.push_back(u);
    codes_.clear();
    track_shape(0);
  }
  const std::size_t from = elems_.size();
  for (const auto& m : monomials_) elems_.push_back(u * m);
  track_shape(from);
}

std::size_t tensor_formula_defect(const QuasiPForm& phi, std::span<const RatFunc> pbasis, Exec exec) {
  const Field& f = phi.field();
  const std::uint32_t p = f->p();
  std::size_t block = 1;
  for (std::size_t i = 0; i < pbasis.size(); ++i) block *= p;
  std::size_t rank = 0;
  if (all_unit_monomials(phi.coefficients()) && all_unit_monomials(pbasis)) {
    std::vector<Residue> base, gens;
    for (const auto& c : phi.coefficients())
      if (!c.is_zero()) base.push_back(as_laurent_monomial(c)->residue(p));
    for (const auto& c : pbasis) gens.push_back(as_laurent_monomial(c)->residue(p));
    rank = tensor_residue_rank(base, gens, p, f->nvars(), exec);
  } else {
    QuasiPForm t = tensor(phi, quasi_pfister(f, pbasis));
    rank = analyze_span_pivots(f, t.coefficients(), exec).rank;
  }
  const std::size_t iql = phi.dim() * block - rank;
  verify(iql % block == 0, "tensor-formula defect is not divisible by p^s");
  return iql / block;
}

RelativeDecomposition extended_core(const QuasiPForm& phi, const ExtensionSpec& spec, Exec exec) {
  const Field& f = phi.field();
  require_same_field(f, spec.field());
  ExtensionSpec one = reduce_to_exponent_one(spec);
  RelativeDecomposition out;
  out.pbasis_used = extract_p_basis(one.elements());

  const std::size_t defect_tensor = tensor_formula_defect(phi, out.pbasis_used, exec);

  auto space = std::make_shared<RelativeValueSpace>(f, out.pbasis_used, exec);
  for (std::size_t i = 0; i < phi.dim(); ++i) {
    const RatFunc& u = phi[i];
    if (u.is_zero() || space->contains(u)) continue;
    out.representatives.push_back(u);
    out.representative_indices.push_back(i);
    space->add_block(u);
  }
  out.anisotropic_dim = out.representatives.size();
  out.defect = phi.dim() - out.anisotropic_dim;
  out.value_space = std::move(space);
  verify(out.defect == defect_tensor, "extended_core: tensor formula and greedy K^p-rank disagree");
  return out;
}

RepresentedSpace values_over_simple_ext(const QuasiPForm& phi, const RatFunc& a) {
  require_same_field(phi.field(), a.field());
  if (a.is_zero() || frobenius_root(a)) throw UsageError("values_over_simple_ext: generator lies in F^p");
  std::vector<RatFunc> g{a};
  return represented_space(tensor(quasi_pfister(phi.field(), g), phi));
}

std::size_t direct_defect_modular(const QuasiPForm& phi, const ExtensionSpec& spec, Exec exec) {
  const Field& f = phi.field();
  require_same_field(f, spec.field());
  const std::vector<RatFunc> a = spec.elements();
  if (!is_p_independent(a)) throw UsageError("direct_defect_modular: adjoined elements are p-dependent");
  const std::uint32_t p = f->p();
  const std::size_t r = a.size();

  // beta_i^{p^{n_i}} = a_i; L has F-basis beta^g with 0 <= g_i < p^{n_i}
  std::vector<std::uint64_t> period(r, 1);
  std::uint64_t degree = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::uint32_t k = 0; k < spec.adjoined()[i].second; ++k) period[i] *= p;
    degree *= period[i];
    if (degree > (std::uint64_t{1} << 20)) throw ResourceError("direct_defect_modular: [L:F] too large");
  }
  auto decode = [&](std::uint64_t idx) {
    std::vector<std::uint64_t> g(r);
    for (std::size_t i = 0; i < r; ++i) {
      g[i] = idx % period[i];
      idx /= period[i];
    }
    return g;
  };
  auto encode = [&](const std::vector<std::uint64_t>& g) {
    std::uint64_t idx = 0;
    for (std::size_t i = r; i-- > 0;) idx = idx * period[i] + g[i];
    return idx;
  };

  // Unknown mu_j = sum_f m_{j,f} beta^f. Then mu_j^p c_j = sum_f m_{j,f}^p c_j a^{q(f)} beta^{g(f)}
  // with p f_i = q_i p^{n_i} + g_i. Every equation lives at one beta^g, so the
  // unknowns split into independent groups keyed by g.
  std::map<std::uint64_t, std::vector<RatFunc>> groups;
  for (std::uint64_t idx = 0; idx < degree; ++idx) {
    const auto fexp = decode(idx);
    std::vector<std::uint64_t> g(r);
    RatFunc lift = RatFunc::one(f);
    for (std::size_t i = 0; i < r; ++i) {
      const std::uint64_t e = p * fexp[i];
      g[i] = e % period[i];
      lift *= a[i].pow(static_cast<long long>(e / period[i]));
    }
    auto& cols = groups[encode(g)];
    for (const auto& c : phi.coefficients()) cols.push_back(c * lift);
  }

  std::vector<std::pair<std::vector<RatFunc>, std::size_t>> cache;
  std::size_t kernel = 0;
  for (const auto& [g, cols] : groups) {
    std::size_t rank = 0;
    auto hit = std::find_if(cache.begin(), cache.end(), [&](const auto& e) { return e.first == cols; });
    if (hit != cache.end()) {
      rank = hit->second;
    } else {
      rank = matrix_rank_kernel(coordinate_matrix(f, cols), exec).rank;
      cache.emplace_back(cols, rank);
    }
    kernel += cols.size() - rank;
  }
  verify(kernel % degree == 0, "direct_defect_modular: kernel dimension is not a multiple of [L:F]");
  return kernel / degree;
}

}  // namespace qlpf
