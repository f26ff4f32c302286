#include "qlpf/kernels.hpp"

#include <algorithm>
#include <exception>
#include <utility>

#include "qlpf/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qlpf {

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, MultiPoly(field_)) {}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
}

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// Pivot candidate cost: prefer short, low-degree entries to limit growth.
std::pair<std::size_t, std::uint32_t> pivot_cost(const MultiPoly& p) { return {p.size(), p.total_degree()}; }

// row_i <- (P * row_i - a_ij * row_r) / prev, for every column except j.
void eliminate_row(PolyMatrix& a, std::size_t i, std::size_t r, std::size_t j, const MultiPoly& pivot,
                   const MultiPoly& prev) {
  const MultiPoly factor = a(i, j);
  const bool unit_prev = prev.is_one();
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (c == j) continue;
    MultiPoly& x = a(i, c);
    const MultiPoly& y = a(r, c);
    if (x.is_zero() && (factor.is_zero() || y.is_zero())) continue;
    MultiPoly v = pivot * x;
    if (!factor.is_zero() && !y.is_zero()) v = v - factor * y;
    x = unit_prev ? std::move(v) : v.div_exact(prev);
  }
  a(i, j) = MultiPoly(a.field());
}

std::size_t choose_pivot(const PolyMatrix& a, std::size_t r, std::size_t j) {
  std::size_t best = a.rows();
  for (std::size_t k = r; k < a.rows(); ++k) {
    if (a(k, j).is_zero()) continue;
    if (best == a.rows() || pivot_cost(a(k, j)) < pivot_cost(a(best, j))) best = k;
  }
  return best;
}

template <bool Parallel>
FractionFreeRref rref_impl(PolyMatrix a) {
  const Field f = a.field();
  MultiPoly prev = MultiPoly::constant(f, 1);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
    std::size_t k = choose_pivot(a, r, j);
    if (k == a.rows()) continue;
    a.swap_rows(k, r);
    const MultiPoly pivot = a(r, j);
    const auto n = static_cast<std::ptrdiff_t>(a.rows());
    if constexpr (Parallel) {
      std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (n > 4)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (static_cast<std::size_t>(i) == r) continue;
        try {
          eliminate_row(a, static_cast<std::size_t>(i), r, j, pivot, prev);
        } catch (...) {
#pragma omp critical(qlpf_rref_error)
          if (!err) err = std::current_exception();
        }
      }
      if (err) std::rethrow_exception(err);
    } else {
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (static_cast<std::size_t>(i) == r) continue;
        eliminate_row(a, static_cast<std::size_t>(i), r, j, pivot, prev);
      }
    }
    prev = pivot;
    pivots.push_back(j);
    ++r;
  }
  FractionFreeRref out{std::move(a), r, std::move(pivots), std::move(prev)};
  return out;
}

std::uint64_t class_count(std::uint32_t p, std::size_t nvars) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < nvars; ++i) n *= p;
  return n;
}

// Residue code of base + sum_k e_k gens[k], with e decoded from `index`.
std::uint64_t tensor_code(const Residue& base, std::span<const Residue> gens, std::uint64_t index, std::uint32_t p,
                          std::size_t nvars) {
  std::array<std::uint32_t, kMaxVars> acc{};
  for (std::size_t v = 0; v < nvars; ++v) acc[v] = base[v];
  for (const auto& g : gens) {
    const auto e = static_cast<std::uint32_t>(index % p);
    index /= p;
    if (e == 0) continue;
    for (std::size_t v = 0; v < nvars; ++v) acc[v] += e * g[v];
  }
  std::uint64_t code = 0;
  for (std::size_t v = nvars; v-- > 0;) code = code * p + acc[v] % p;
  return code;
}

constexpr std::uint64_t kBitmapLimit = std::uint64_t{1} << 24;

std::size_t count_by_sorting(std::span<const Residue> base, std::span<const Residue> gens, std::uint32_t p,
                             std::size_t nvars, std::uint64_t span, bool parallel) {
  const auto total = static_cast<std::int64_t>(base.size() * span);
  std::vector<std::uint64_t> codes(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static) if (parallel && total > 4096)
  for (std::int64_t t = 0; t < total; ++t)
    codes[static_cast<std::size_t>(t)] = tensor_code(base[static_cast<std::uint64_t>(t) / span], gens,
                                                     static_cast<std::uint64_t>(t) % span, p, nvars);
  std::sort(codes.begin(), codes.end());
  return static_cast<std::size_t>(std::unique(codes.begin(), codes.end()) - codes.begin());
}

}  // namespace

FractionFreeRref fraction_free_rref_serial(PolyMatrix m) { return rref_impl<false>(std::move(m)); }
FractionFreeRref fraction_free_rref_parallel(PolyMatrix m) { return rref_impl<true>(std::move(m)); }

FractionFreeRref fraction_free_rref(PolyMatrix m, Exec exec) {
  return exec == Exec::parallel ? fraction_free_rref_parallel(std::move(m)) : fraction_free_rref_serial(std::move(m));
}

std::size_t tensor_residue_rank_serial(std::span<const Residue> base, std::span<const Residue> gens,
                                       std::uint32_t p, std::size_t nvars) {
  const std::uint64_t classes = class_count(p, nvars);
  std::uint64_t span = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) span *= p;
  if (classes > kBitmapLimit) return count_by_sorting(base, gens, p, nvars, span, false);
  std::vector<char> seen(classes, 0);
  std::size_t count = 0;
  for (const auto& b : base)
    for (std::uint64_t idx = 0; idx < span; ++idx) {
      auto code = tensor_code(b, gens, idx, p, nvars);
      if (!seen[code]) {
        seen[code] = 1;
        ++count;
      }
    }
  return count;
}

std::size_t tensor_residue_rank_parallel(std::span<const Residue> base, std::span<const Residue> gens,
                                         std::uint32_t p, std::size_t nvars) {
  const std::uint64_t classes = class_count(p, nvars);
  std::uint64_t span = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) span *= p;
  if (classes > kBitmapLimit) return count_by_sorting(base, gens, p, nvars, span, true);
  const auto total = static_cast<std::int64_t>(base.size() * span);
  std::vector<char> seen(classes, 0);
#pragma omp parallel if (total > 4096)
  {
    std::vector<char> local(classes, 0);
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < total; ++t) {
      const auto b = static_cast<std::size_t>(static_cast<std::uint64_t>(t) / span);
      const auto idx = static_cast<std::uint64_t>(t) % span;
      local[tensor_code(base[b], gens, idx, p, nvars)] = 1;
    }
#pragma omp critical(qlpf_residue_merge)
    for (std::uint64_t c = 0; c < classes; ++c) seen[c] |= local[c];
  }
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
}

std::size_t tensor_residue_rank(std::span<const Residue> base, std::span<const Residue> gens, std::uint32_t p,
                                std::size_t nvars, Exec exec) {
  return exec == Exec::parallel ? tensor_residue_rank_parallel(base, gens, p, nvars)
                                : tensor_residue_rank_serial(base, gens, p, nvars);
}

}  // namespace qlpf
