#pragma once

#include <memory>
#include <unordered_set>
#include <utility>

#include "qlpf/pindep.hpp"

namespace qlpf {

/// E = F(a_1^{1/p^{n_1}}, ..., a_r^{1/p^{n_r}}).
class ExtensionSpec {
 public:
  using Generator = std::pair<RatFunc, std::uint32_t>;

  explicit ExtensionSpec(Field field, std::vector<Generator> adjoined = {});

  const Field& field() const noexcept { return field_; }
  const std::vector<Generator>& adjoined() const noexcept { return adjoined_; }
  std::size_t size() const noexcept { return adjoined_.size(); }
  bool empty() const noexcept { return adjoined_.empty(); }
  std::vector<RatFunc> elements() const;
  std::uint32_t exponent() const noexcept;

  friend bool operator==(const ExtensionSpec& a, const ExtensionSpec& b) noexcept {
    return a.adjoined_ == b.adjoined_;
  }

 private:
  Field field_;
  std::vector<Generator> adjoined_;
};

ExtensionSpec reduce_to_exponent_one(const ExtensionSpec& spec);

/// F-side model of D_K(phi) for K = F(c_1^{1/p}, ..., c_s^{1/p}): the F^p-span of
/// u c^e over added blocks u and e in {0..p-1}^s. Unit-monomial data is tracked
/// by residue codes; anything else falls back to explicit span membership.
class RelativeValueSpace {
 public:
  RelativeValueSpace(Field field, std::vector<RatFunc> pbasis, Exec exec = Exec::parallel);

  bool contains(const RatFunc& d) const;
  /// Adds the block u c^e; the caller guarantees u is outside the current span.
  void add_block(const RatFunc& u);
  std::size_t dimension() const noexcept { return blocks_.size() * block_size_; }

 private:
  std::uint64_t code(const Residue& r) const noexcept;
  std::vector<RatFunc> expand_blocks() const;

  Field field_;
  std::vector<RatFunc> pbasis_;
  Exec exec_;
  std::size_t block_size_ = 1;
  bool monomial_ = true;
  std::vector<Residue> offsets_;
  std::vector<RatFunc> blocks_;
  std::unordered_set<std::uint64_t> codes_;
  std::vector<RatFunc> monomials_;  // c^e
  std::vector<RatFunc> elems_;      // explicit u c^e once monomial_ is false
  // Ratios elems_[i] / elems_[0] reduced to a p-basis; when p^|gens_| equals
  // the dimension the span is elems_[0] * F^p(gens_).
  std::vector<RatFunc> gens_;
  bool field_shaped_ = false;

  void track_shape(std::size_t from);
};

struct RelativeDecomposition {
  std::size_t defect = 0;
  std::size_t anisotropic_dim = 0;
  /// Coefficients of phi forming a K^p-basis of D_K(phi), first-come.
  std::vector<RatFunc> representatives;
  std::vector<std::size_t> representative_indices;
  /// The p-independent generators c_1..c_s actually used.
  std::vector<RatFunc> pbasis_used;
  /// F-side model of D_K(phi): the F^p-span of u c^e over the representatives.
  std::shared_ptr<const RelativeValueSpace> value_space;

  bool represents(const RatFunc& d) const { return value_space->contains(d); }
};

/// Defect of phi over E through F-side linear algebra only. Two independent
/// routes (the tensor formula and a greedy K^p-rank) are computed and must agree.
RelativeDecomposition extended_core(const QuasiPForm& phi, const ExtensionSpec& spec, Exec exec = Exec::parallel);

/// Tensor-formula defect only: iql(phi (x) <<c>>) / p^s.
std::size_t tensor_formula_defect(const QuasiPForm& phi, std::span<const RatFunc> pbasis, Exec exec = Exec::parallel);

/// D_{F(a^{1/p})}(phi) modeled as D_F(<<a>> (x) phi). Requires a outside F^p.
RepresentedSpace values_over_simple_ext(const QuasiPForm& phi, const RatFunc& a);

/// Defect over a modular extension L computed in the beta-monomial basis of L
/// over F, without exponent reduction. Throws UsageError unless the adjoined
/// elements are p-independent.
std::size_t direct_defect_modular(const QuasiPForm& phi, const ExtensionSpec& spec, Exec exec = Exec::parallel);

}  // namespace qlpf
