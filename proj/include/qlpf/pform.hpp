#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qlpf/span.hpp"

namespace qlpf {

/// Diagonal quasilinear p-form <c_1, ..., c_n> over F; phi(v) = sum c_i v_i^p.
class QuasiPForm {
 public:
  explicit QuasiPForm(Field field, std::vector<RatFunc> coefficients = {});

  const Field& field() const noexcept { return field_; }
  const std::vector<RatFunc>& coefficients() const noexcept { return coeffs_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }
  const RatFunc& operator[](std::size_t i) const { return coeffs_.at(i); }

  RatFunc evaluate(const RatVector& v) const;

  friend bool operator==(const QuasiPForm& a, const QuasiPForm& b) noexcept { return a.coeffs_ == b.coeffs_; }

 private:
  Field field_;
  std::vector<RatFunc> coeffs_;
};

enum class ComposeKind { orthogonal_sum, tensor };

QuasiPForm compose(ComposeKind kind, const QuasiPForm& phi, const QuasiPForm& psi);
QuasiPForm orthogonal_sum(const QuasiPForm& phi, const QuasiPForm& psi);
/// Row-major: a_1 <b_1..b_m> (+) ... (+) a_n <b_1..b_m>.
QuasiPForm tensor(const QuasiPForm& phi, const QuasiPForm& psi);
/// Throws UsageError for c = 0.
QuasiPForm scale(const RatFunc& c, const QuasiPForm& phi);
/// <<a_1..a_n>> = <1,a_1,..,a_1^{p-1}> (x) ... ; the empty list gives <1>.
QuasiPForm quasi_pfister(const Field& f, std::span<const RatFunc> gens);

/// F^p-subspace of F with an F^p-independent basis.
class RepresentedSpace {
 public:
  /// Checks independence; throws UsageError otherwise.
  RepresentedSpace(Field field, std::vector<RatFunc> basis);
  /// Greedy basis of the span of arbitrary elements.
  static RepresentedSpace spanned_by(Field field, std::span<const RatFunc> elems);

  const Field& field() const noexcept { return field_; }
  const std::vector<RatFunc>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }

  bool contains(const RatFunc& d) const;
  bool contains(const RepresentedSpace& other) const;
  bool same_subspace(const RepresentedSpace& other) const;

 private:
  Field field_;
  std::vector<RatFunc> basis_;
  // Set when the space is basis_[0] * F^p(gens_), which makes membership a
  // p-dependence test.
  bool field_shaped_ = false;
  std::vector<RatFunc> gens_;
};

struct Decomposition {
  QuasiPForm anisotropic_part;
  std::size_t defect = 0;
  /// Vectors v with phi(v) = 0 spanning the maximal isotropic subspace.
  std::vector<RatVector> isotropy_witnesses;
  /// Indices of the coefficients kept in the anisotropic part.
  std::vector<std::size_t> kept;
};

Decomposition decompose(const QuasiPForm& phi, Exec exec = Exec::parallel);
Decomposition decompose_general(const QuasiPForm& phi, Exec exec = Exec::parallel);
/// Requires every coefficient to be zero or a unit Laurent monomial.
Decomposition decompose_monomial(const QuasiPForm& phi);

bool is_anisotropic(const QuasiPForm& phi);

/// v with phi(v) = d, or nullopt when d is not represented.
std::optional<RatVector> represents(const QuasiPForm& phi, const RatFunc& d);
RepresentedSpace represented_space(const QuasiPForm& phi);

bool is_isometric(const QuasiPForm& phi, const QuasiPForm& psi);
/// sigma must be anisotropic (UsageError otherwise).
bool is_subform(const QuasiPForm& sigma, const QuasiPForm& phi);
/// c phi isometric to psi; c = 0 is a UsageError.
bool is_similar_with(const QuasiPForm& phi, const QuasiPForm& psi, const RatFunc& c);

}  // namespace qlpf
