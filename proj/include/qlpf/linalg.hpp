#pragma once

#include <optional>
#include <vector>

#include "qlpf/kernels.hpp"
#include "qlpf/ratfunc.hpp"

namespace qlpf {

using RatVector = std::vector<RatFunc>;

/// Dense matrix over F_p(x_1..x_m).
class RatMatrix {
 public:
  RatMatrix(Field field, std::size_t rows, std::size_t cols);
  /// Throws UsageError on ragged input.
  static RatMatrix from_rows(Field field, const std::vector<RatVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector apply(const RatVector& v) const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<RatFunc> data_;
};

struct RankKernel {
  std::size_t rank = 0;
  /// First-come independent columns.
  std::vector<std::size_t> pivot_columns;
  /// One vector per non-pivot column j, with entry 1 at j and zeros at the
  /// other non-pivot columns.
  std::vector<RatVector> kernel;
};

/// Exact rank and kernel: denominators are cleared row by row, then the
/// polynomial matrix goes through fraction-free Gauss-Jordan elimination.
RankKernel matrix_rank_kernel(const RatMatrix& m, Exec exec = Exec::parallel);

/// Some v with M v = b, or nullopt when the system is inconsistent. The answer
/// is checked by substitution.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b, Exec exec = Exec::parallel);

/// Solutions of B x = rhs_k for a nonsingular square B, one elimination for all
/// right-hand sides. Throws ArithmeticError when B is singular. Solutions are
/// not re-checked here; callers verify against the systems they care about.
std::vector<RatVector> solve_square_many(const RatMatrix& b, const std::vector<RatVector>& rhs,
                                         Exec exec = Exec::parallel);

}  // namespace qlpf
