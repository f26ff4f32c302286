#include "qlpf/pindep.hpp"

#include "qlpf/error.hpp"

namespace qlpf {

namespace {

void require_nonzero(std::span<const RatFunc> s, const char* what) {
  for (const auto& a : s)
    if (a.is_zero()) throw UsageError(std::string(what) + ": zero element");
}

}  // namespace

std::vector<std::size_t> extract_p_basis_indices(std::span<const RatFunc> s) {
  require_nonzero(s, "extract_p_basis");
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  const Field& f = s.front().field();
  if (all_unit_monomials(s)) {
    ResidueRowSpace rows(f->p(), f->nvars());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (rows.add(as_laurent_monomial(s[i])->residue(f->p()))) out.push_back(i);
    return out;
  }
  return differential_pivots(f, s);
}

std::vector<RatFunc> extract_p_basis(std::span<const RatFunc> s) {
  std::vector<RatFunc> out;
  for (auto i : extract_p_basis_indices(s)) out.push_back(s[i]);
  return out;
}

bool is_p_independent(std::span<const RatFunc> s) { return extract_p_basis_indices(s).size() == s.size(); }

bool in_pfield(const Field& f, std::span<const RatFunc> pbasis, const RatFunc& a) {
  require_same_field(f, a.field());
  if (a.is_zero()) return true;
  std::vector<RatFunc> with(pbasis.begin(), pbasis.end());
  with.push_back(a);
  return differential_pivots(f, with).size() == extract_p_basis_indices(pbasis).size();
}

NormData norm_data(const QuasiPForm& phi) {
  const Field& f = phi.field();
  QuasiPForm an = decompose(phi).anisotropic_part;
  if (an.dim() == 0) throw UsageError("norm_data: the form has no anisotropic part");
  NormData out{an[0], {}, 0, QuasiPForm(f)};
  std::vector<RatFunc> ratios;
  for (std::size_t i = 1; i < an.dim(); ++i) ratios.push_back(an[i] / out.base);
  out.generators = extract_p_basis(ratios);
  out.norm_degree_exponent = out.generators.size();
  out.norm_form = quasi_pfister(f, out.generators);
  const std::size_t n = out.norm_degree_exponent;
  verify(n + 1 <= an.dim() && an.dim() <= out.norm_form.dim(), "norm degree bounds violated");
  return out;
}

bool is_minimal(const QuasiPForm& phi) {
  if (!is_anisotropic(phi)) throw UsageError("is_minimal: the form is isotropic");
  if (phi.dim() == 0) throw UsageError("is_minimal: zero-dimensional form");
  return norm_data(phi).norm_degree_exponent + 1 == phi.dim();
}

QuasiPForm minimal_subform(const QuasiPForm& phi) {
  NormData nd = norm_data(phi);
  if (nd.norm_degree_exponent == 0) throw UsageError("minimal_subform: norm degree is 1");
  std::vector<RatFunc> c{RatFunc::one(phi.field())};
  c.insert(c.end(), nd.generators.begin(), nd.generators.end());
  QuasiPForm out = scale(nd.base, QuasiPForm(phi.field(), std::move(c)));
  verify(is_subform(out, phi), "minimal_subform: result is not a subform");
  return out;
}

ProductAnisotropy product_anisotropy(const QuasiPForm& phi, const QuasiPForm& psi) {
  if (!is_anisotropic(phi) || !is_anisotropic(psi)) throw UsageError("product_anisotropy: isotropic input");
  if (phi.dim() == 0 || psi.dim() == 0) throw UsageError("product_anisotropy: zero-dimensional input");
  QuasiPForm prod = tensor(phi, psi);
  ProductAnisotropy out;
  out.criterion_holds = norm_data(prod).norm_degree_exponent ==
                        norm_data(phi).norm_degree_exponent + norm_data(psi).norm_degree_exponent;
  out.product_anisotropic = is_anisotropic(prod);
  verify(!out.criterion_holds || out.product_anisotropic, "norm degree criterion holds but the product is isotropic");
  return out;
}

RepresentedSpace subspace_intersection(const RepresentedSpace& a, const RepresentedSpace& b) {
  require_same_field(a.field(), b.field());
  const Field& f = a.field();
  std::vector<RatFunc> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  // (u, w) in the kernel gives sum u_i^p a_i = -sum w_j^p b_j in A and B
  RankKernel rk = matrix_rank_kernel(coordinate_matrix(f, all));
  std::vector<RatFunc> common;
  for (const auto& v : rk.kernel) {
    RatFunc x = RatFunc::zero(f);
    for (std::size_t i = 0; i < a.dimension(); ++i)
      if (!v[i].is_zero()) x += frobenius_power(v[i]) * a.basis()[i];
    common.push_back(x);
  }
  RepresentedSpace out = RepresentedSpace::spanned_by(f, common);
  verify(out.dimension() == a.dimension() + b.dimension() - rk.rank, "intersection dimension mismatch");
  return out;
}

BigInt degree_over_fp(std::span<const RatFunc> s) {
  require_nonzero(s, "degree_over_fp");
  if (s.empty()) return 1;
  BigInt out = 1;
  const std::size_t n = extract_p_basis_indices(s).size();
  for (std::size_t i = 0; i < n; ++i) out *= s.front().field()->p();
  return out;
}

}  // namespace qlpf
