#pragma once

#include <map>
#include <set>
#include <string>

#include "qlpf/extension.hpp"

namespace qlpf {

struct TowerStage {
  ExtensionSpec spec;
  std::size_t defect = 0;
  std::size_t anisotropic_dim = 0;
  std::vector<RatFunc> representatives;
};

struct TowerReport {
  /// The norm-field p-basis a_1..a_m of the scaled form; stage i adjoins a_1..a_i.
  std::vector<RatFunc> generators;
  std::vector<TowerStage> stages;
};

/// Tower E_0 = F, E_i = F(a_1^{1/p}, ..., a_i^{1/p}) over the norm generators of
/// the form scaled to represent 1. Throws UsageError for isotropic or zero forms.
TowerReport insep_tower(const QuasiPForm& phi, Exec exec = Exec::parallel);

enum class SplitMethod { closed_form, search, both };

struct SplittingReport {
  std::set<std::size_t> dims;
  std::map<std::size_t, ExtensionSpec> witnesses;
  SplitMethod method = SplitMethod::search;
  /// True for the closed-form families where pisp = fsp is proven; search
  /// results on other forms are labeled pisp.
  bool is_fsp = false;
  /// False when the search stopped at its candidate budget.
  bool complete = true;
};

struct SearchBudget {
  /// Largest number of adjoined elements per candidate; 0 means m + 1.
  std::size_t max_generators = 0;
  /// Extra candidate generators beyond the monomial pool.
  std::vector<RatFunc> extra;
  std::size_t max_candidates = 200000;
};

/// Exponent-one splitting search over monomials in the norm generators (plus
/// budget.extra). Candidates generating the same K^p are visited once.
SplittingReport pisp_search(const QuasiPForm& phi, const SearchBudget& budget = {}, Exec exec = Exec::parallel);

SplittingReport fsp_minimal(const QuasiPForm& phi, Exec exec = Exec::parallel);
/// fsp of <<gens>>; the generators must be p-independent.
SplittingReport fsp_quasi_pfister(std::span<const RatFunc> gens, Exec exec = Exec::parallel);

/// phi = <<a_1..a_n>> (+) d <1, a_1, ..., a_s>, checked anisotropic.
class NeighborInput {
 public:
  NeighborInput(std::vector<RatFunc> pfister_gens, std::size_t sigma_prefix, RatFunc d);

  const Field& field() const noexcept { return d_.field(); }
  const std::vector<RatFunc>& pfister_gens() const noexcept { return gens_; }
  std::size_t n() const noexcept { return gens_.size(); }
  std::size_t s() const noexcept { return s_; }
  const RatFunc& d() const noexcept { return d_; }

  QuasiPForm pi() const;
  QuasiPForm sigma() const;
  QuasiPForm phi() const;

 private:
  std::vector<RatFunc> gens_;
  std::size_t s_;
  RatFunc d_;
};

enum class NeighborCase { d_represented, d_not_represented };

struct NeighborSplit {
  NeighborCase which = NeighborCase::d_not_represented;
  std::size_t anisotropic_dim = 0;
  std::size_t defect = 0;
};

NeighborSplit neighbor_split(const NeighborInput& input, const ExtensionSpec& spec, Exec exec = Exec::parallel);

/// One witness of the neighbor theorem: dim (phi_E)_an = p^k + l.
struct NeighborCell {
  std::size_t k = 0;
  std::size_t l = 0;
  char family = 'D';  // D, E or G
  ExtensionSpec spec;
  /// Closed-form anisotropic part <<pfister_part>> (+) d <d_part> over the
  /// witness field; d_part is empty when sigma vanishes entirely.
  std::vector<RatFunc> pfister_part;
  std::vector<RatFunc> d_part;
  QuasiPForm expected;
  std::size_t dim = 0;
};

/// Whether (k, l) satisfies the theorem's constraints for the given p, n, s.
bool neighbor_pair_live(std::uint32_t p, std::size_t n, std::size_t s, std::size_t k, std::size_t l);

/// All witness cells of the theorem, each verified through extended_core:
/// achieved dimension, anisotropy of the expected form over the witness field,
/// and containment of its values in D_E(phi).
std::vector<NeighborCell> neighbor_cells(const NeighborInput& input, Exec exec = Exec::parallel);

SplittingReport fsp_neighbor(const NeighborInput& input, Exec exec = Exec::parallel);

struct LowerBoundCheck {
  std::size_t norm_exponent = 0;
  std::size_t achieved = 0;
  bool holds = false;
};

LowerBoundCheck pisp_lower_bound_check(const QuasiPForm& phi, Exec exec = Exec::parallel);

/// The example neighbor <<a1,a2,a3,a4>> (+) d<1,a1,a2,a3> over F_p(a1,a2,a3,a4,d).
NeighborInput table1_input(std::uint32_t p);

}  // namespace qlpf
