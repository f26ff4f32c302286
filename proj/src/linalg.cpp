#include "qlpf/linalg.hpp"

#include "qlpf/error.hpp"

namespace qlpf {

RatMatrix::RatMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, RatFunc::zero(field_)) {}

RatMatrix RatMatrix::from_rows(Field field, const std::vector<RatVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw UsageError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      require_same_field(field, rows[i][j].field());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw UsageError("shape mismatch in matrix-vector product");
  RatVector out(rows_, RatFunc::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

namespace {

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return (a * b.div_exact(gcd(a, b))).monic();
}

// Multiply each row by the lcm of its denominators. Kernel is unchanged.
PolyMatrix clear_denominators(const RatMatrix& m, std::size_t extra_cols = 0) {
  PolyMatrix out(m.field(), m.rows(), m.cols() + extra_cols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    MultiPoly l = MultiPoly::constant(m.field(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) l = lcm(l, m(i, j).den());
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out(i, j) = m(i, j).num() * l.div_exact(m(i, j).den());
  }
  return out;
}

}  // namespace

RankKernel matrix_rank_kernel(const RatMatrix& m, Exec exec) {
  FractionFreeRref e = fraction_free_rref(clear_denominators(m), exec);
  RankKernel out;
  out.rank = e.rank;
  out.pivot_columns = e.pivot_cols;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  const RatFunc pivot(e.pivot);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    RatVector v(m.cols(), RatFunc::zero(m.field()));
    v[j] = RatFunc::one(m.field());
    for (std::size_t t = 0; t < e.rank; ++t) {
      const MultiPoly& x = e.reduced(t, j);
      if (!x.is_zero()) v[e.pivot_cols[t]] = -RatFunc(x, e.pivot.is_zero() ? MultiPoly::constant(m.field(), 1) : e.pivot);
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b, Exec exec) {
  if (b.size() != m.rows()) throw UsageError("shape mismatch in linear system");
  RatMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    require_same_field(m.field(), b[i].field());
    aug(i, m.cols()) = b[i];
  }
  FractionFreeRref e = fraction_free_rref(clear_denominators(aug), exec);
  const std::size_t bc = m.cols();
  for (auto c : e.pivot_cols)
    if (c == bc) return std::nullopt;
  RatVector v(m.cols(), RatFunc::zero(m.field()));
  for (std::size_t t = 0; t < e.rank; ++t) {
    const MultiPoly& x = e.reduced(t, bc);
    if (!x.is_zero()) v[e.pivot_cols[t]] = RatFunc(x, e.pivot);
  }
  RatVector check = m.apply(v);
  for (std::size_t i = 0; i < check.size(); ++i)
    verify(check[i] == b[i], "solve_linear: substitution check failed");
  return v;
}

std::vector<RatVector> solve_square_many(const RatMatrix& b, const std::vector<RatVector>& rhs, Exec exec) {
  const std::size_t n = b.rows();
  if (b.cols() != n) throw UsageError("solve_square_many: matrix is not square");
  RatMatrix aug(b.field(), n, n + rhs.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = b(i, j);
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    if (rhs[k].size() != n) throw UsageError("solve_square_many: right-hand side has the wrong length");
    for (std::size_t i = 0; i < n; ++i) aug(i, n + k) = rhs[k][i];
  }
  // rows are scaled independently, which leaves every solution unchanged
  FractionFreeRref e = fraction_free_rref(clear_denominators(aug), exec);
  if (e.rank < n || (n > 0 && e.pivot_cols.back() != n - 1)) throw ArithmeticError("solve_square_many: singular matrix");
  std::vector<RatVector> out;
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    RatVector x(n, RatFunc::zero(b.field()));
    for (std::size_t t = 0; t < n; ++t) {
      const MultiPoly& v = e.reduced(t, n + k);
      if (!v.is_zero()) x[e.pivot_cols[t]] = RatFunc(v, e.pivot);
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace qlpf
