#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "qlpf/pform.hpp"

namespace qlpf {

using BigInt = boost::multiprecision::cpp_int;

struct NormData {
  /// First coefficient of phi_an; the ratios are taken against it.
  RatFunc base;
  /// p-basis of N_F(phi) over F^p, drawn from the ratios a_i / a_0.
  std::vector<RatFunc> generators;
  /// n with ndeg_F(phi) = p^n.
  std::size_t norm_degree_exponent = 0;
  QuasiPForm norm_form;
};

/// Zero elements are a UsageError.
bool is_p_independent(std::span<const RatFunc> s);
/// Greedy first-come p-basis of F^p(S) over F^p.
std::vector<RatFunc> extract_p_basis(std::span<const RatFunc> s);
/// Index form of extract_p_basis.
std::vector<std::size_t> extract_p_basis_indices(std::span<const RatFunc> s);
/// Whether a lies in F^p(B) for a p-independent B.
bool in_pfield(const Field& f, std::span<const RatFunc> pbasis, const RatFunc& a);

NormData norm_data(const QuasiPForm& phi);
bool is_minimal(const QuasiPForm& phi);
QuasiPForm minimal_subform(const QuasiPForm& phi);

struct ProductAnisotropy {
  bool criterion_holds = false;
  bool product_anisotropic = false;
};
ProductAnisotropy product_anisotropy(const QuasiPForm& phi, const QuasiPForm& psi);

RepresentedSpace subspace_intersection(const RepresentedSpace& a, const RepresentedSpace& b);

/// [F^p(S) : F^p] as an exact integer.
BigInt degree_over_fp(std::span<const RatFunc> s);

}  // namespace qlpf
