#pragma once

// F^p-linear algebra on finite lists of elements of F. An element a is viewed
// through its Frobenius coordinates; sum_i v_i^p a_i = 0 over F is exactly an
// F-linear relation among the coordinate columns, so everything reduces to
// matrix_rank_kernel. Lists made of unit monomials take a residue-class fast
// path that must agree with the general route.

#include <optional>
#include <unordered_set>
#include <span>
#include <vector>

#include "qlpf/frobenius.hpp"
#include "qlpf/linalg.hpp"

namespace qlpf {

struct SpanAnalysis {
  std::size_t rank = 0;
  /// Greedy first-come F^p-independent subset (indices into the input).
  std::vector<std::size_t> independent;
  /// For every other index j, a vector v with v_j = 1, supported on
  /// `independent` plus j, satisfying sum_i v_i^p a_i = 0.
  std::vector<RatVector> relations;
};

/// Rows indexed by the union of residues, one column per element.
RatMatrix coordinate_matrix(const Field& f, std::span<const RatFunc> elems, std::vector<Residue>* row_keys = nullptr);

bool all_unit_monomials(std::span<const RatFunc> elems);

/// Monomial fast path when it applies, otherwise analyze_span_certified.
SpanAnalysis analyze_span(const Field& f, std::span<const RatFunc> elems, Exec exec = Exec::parallel);
/// Same classification without the relation vectors.
SpanAnalysis analyze_span_pivots(const Field& f, std::span<const RatFunc> elems, Exec exec = Exec::parallel);
/// Reference route: exact fraction-free elimination of the whole coordinate matrix.
SpanAnalysis analyze_span_general(const Field& f, std::span<const RatFunc> elems, Exec exec = Exec::parallel);
/// Classification guided by a random specialization. Independence is certified
/// by the specialized minors; dependence by full row rank or by an exact solve
/// of the small pivot system checked against every row. Falls back to
/// analyze_span_general when a certificate fails. Results equal the reference.
SpanAnalysis analyze_span_certified(const Field& f, std::span<const RatFunc> elems, bool want_relations,
                                    Exec exec = Exec::parallel);
/// Requires all_unit_monomials (zeros allowed).
SpanAnalysis analyze_span_monomial(const Field& f, std::span<const RatFunc> elems);

/// v with sum_i v_i^p elems[i] = d, or nullopt when d is outside the span.
std::optional<RatVector> represent_in_span(const Field& f, std::span<const RatFunc> elems, const RatFunc& d,
                                           Exec exec = Exec::parallel);
/// As represent_in_span, for elements already known to be F^p-independent.
std::optional<RatVector> represent_in_independent(const Field& f, std::span<const RatFunc> basis, const RatFunc& d,
                                                  Exec exec = Exec::parallel);

/// Row space over F_p of residue vectors, kept in reduced echelon form. For unit
/// monomials, p-independence is linear independence of the residues.
class ResidueRowSpace {
 public:
  ResidueRowSpace(std::uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}

  bool contains(const Residue& r) const;
  /// Adds r; returns true when the dimension grew.
  bool add(const Residue& r);
  std::size_t dimension() const noexcept { return rows_.size(); }
  /// Canonical reduced echelon rows; equal spaces give equal keys.
  std::vector<Residue> canonical() const;

 private:
  Residue reduce(Residue r) const;

  std::uint32_t p_;
  std::size_t nvars_;
  std::vector<Residue> rows_;
  std::vector<std::size_t> pivots_;
};

/// Greedy p-independent subset of nonzero elements, by rank of differentials:
/// elements are p-independent exactly when their partial-derivative columns are
/// F-linearly independent.
std::vector<std::size_t> differential_pivots(const Field& f, std::span<const RatFunc> elems, Exec exec = Exec::parallel);

/// Incrementally grown F^p-subspace of F supporting membership queries.
class SpanBuilder {
 public:
  explicit SpanBuilder(Field f, Exec exec = Exec::parallel) : field_(std::move(f)), exec_(exec) {}

  bool contains(const RatFunc& d) const;
  /// Adds d; returns true when the dimension grew.
  bool add(const RatFunc& d);
  /// Adds d without a membership test; the caller guarantees d is outside the span.
  void add_independent(const RatFunc& d);
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<RatFunc>& basis() const noexcept { return basis_; }

 private:
  Field field_;
  Exec exec_;
  std::vector<RatFunc> basis_;
  // residue classes of the basis while every basis element is a unit monomial
  bool monomial_mode_ = true;
  std::unordered_set<std::uint64_t> classes_;

  std::uint64_t code(const Residue& r) const noexcept;
};

}  // namespace qlpf
