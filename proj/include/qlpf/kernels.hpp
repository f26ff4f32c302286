#pragma once

// Data-parallel kernels. Each kernel has a serial reference implementation and
// an OpenMP version; the two must return identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qlpf/frobenius.hpp"
#include "qlpf/multipoly.hpp"

namespace qlpf {

enum class Exec { serial, parallel };

/// Row-major dense polynomial matrix.
class PolyMatrix {
 public:
  PolyMatrix(Field field, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void swap_rows(std::size_t a, std::size_t b);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<MultiPoly> data_;
};

/// Fraction-free reduced row echelon form. Rows [0, rank) hold the pivot rows;
/// row t has the common value `pivot` at column pivot_cols[t] and zero at every
/// other pivot column. Pivot columns are chosen first-come in column order.
struct FractionFreeRref {
  PolyMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  MultiPoly pivot;
};

FractionFreeRref fraction_free_rref_serial(PolyMatrix m);
FractionFreeRref fraction_free_rref_parallel(PolyMatrix m);
FractionFreeRref fraction_free_rref(PolyMatrix m, Exec exec = Exec::parallel);

/// Number of distinct residue classes among base[i] + sum_k e_k * gens[k] (mod p)
/// for e in {0..p-1}^|gens|: the F^p-dimension of the value space of
/// <base monomials> (x) <<gens>> when every coefficient is a unit monomial.
std::size_t tensor_residue_rank_serial(std::span<const Residue> base, std::span<const Residue> gens,
                                       std::uint32_t p, std::size_t nvars);
std::size_t tensor_residue_rank_parallel(std::span<const Residue> base, std::span<const Residue> gens,
                                         std::uint32_t p, std::size_t nvars);
std::size_t tensor_residue_rank(std::span<const Residue> base, std::span<const Residue> gens, std::uint32_t p,
                                std::size_t nvars, Exec exec = Exec::parallel);

int max_threads() noexcept;

}  // namespace qlpf
