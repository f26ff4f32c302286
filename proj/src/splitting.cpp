#include "qlpf/splitting.hpp"

#include <algorithm>
#include <exception>

#include "qlpf/error.hpp"

namespace qlpf {

namespace {

ExtensionSpec exponent_one(const Field& f, const std::vector<RatFunc>& elems) {
  std::vector<ExtensionSpec::Generator> g;
  for (const auto& e : elems) g.emplace_back(e, 1);
  return ExtensionSpec(f, std::move(g));
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<RatFunc> slice(const std::vector<RatFunc>& v, std::size_t from, std::size_t to) {
  // 1-based inclusive range a_from..a_to; empty when from > to
  std::vector<RatFunc> out;
  for (std::size_t i = from; i <= to && i <= v.size(); ++i) out.push_back(v[i - 1]);
  return out;
}

// Reduced echelon bases of all subspaces of F_p^m with dimension <= max_dim,
// ordered by dimension, pivot set and free entries.
std::vector<std::vector<std::vector<std::uint32_t>>> subspaces(std::uint32_t p, std::size_t m, std::size_t max_dim) {
  std::vector<std::vector<std::vector<std::uint32_t>>> out;
  for (std::size_t r = 0; r <= std::min(m, max_dim); ++r) {
    std::vector<bool> choose(m, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      std::vector<std::size_t> piv;
      for (std::size_t j = 0; j < m; ++j)
        if (choose[j]) piv.push_back(j);
      // free slots: (row i, column j) with j > piv[i] and j not a pivot
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = piv[i] + 1; j < m; ++j)
          if (!choose[j]) slots.emplace_back(i, j);
      std::vector<std::uint32_t> digits(slots.size(), 0);
      for (;;) {
        std::vector<std::vector<std::uint32_t>> rows(r, std::vector<std::uint32_t>(m, 0));
        for (std::size_t i = 0; i < r; ++i) rows[i][piv[i]] = 1;
        for (std::size_t t = 0; t < slots.size(); ++t) rows[slots[t].first][slots[t].second] = digits[t];
        out.push_back(std::move(rows));
        std::size_t t = slots.size();
        while (t > 0 && digits[t - 1] == p - 1) digits[--t] = 0;
        if (t == 0) break;
        ++digits[t - 1];
      }
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return out;
}

RatFunc monomial_in(const Field& f, const std::vector<RatFunc>& gens, const std::vector<std::uint32_t>& e) {
  RatFunc out = RatFunc::one(f);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (e[i]) out *= gens[i].pow(static_cast<int>(e[i]));
  return out;
}

// g^e with each exponent moved into (-p/2, p/2]. Exponents congruent mod p give
// the same F^p(g^e), and the smaller ones keep degrees down.
RatFunc balanced_monomial_in(const Field& f, const std::vector<RatFunc>& gens, const std::vector<std::uint32_t>& e) {
  const long long p = f->p();
  RatFunc out = RatFunc::one(f);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    long long k = e[i] % p;
    if (2 * k > p) k -= p;
    if (k) out *= gens[i].pow(k);
  }
  return out;
}

// Runs body(i) for i < n, serially or across OpenMP threads; the first exception
// thrown by any iteration is rethrown afterwards.
template <typename Body>
void for_each_index(std::size_t n, Exec exec, Body body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(qlpf_split_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

void add_witness(SplittingReport& r, std::size_t dim, const ExtensionSpec& spec) {
  r.dims.insert(dim);
  r.witnesses.emplace(dim, spec);
}

}  // namespace

TowerReport insep_tower(const QuasiPForm& phi, Exec exec) {
  if (phi.dim() == 0) throw UsageError("insep_tower: zero-dimensional form");
  if (!is_anisotropic(phi)) throw UsageError("insep_tower: the form is isotropic");
  const Field& f = phi.field();
  NormData nd = norm_data(scale(phi[0].inverse(), phi));
  TowerReport out;
  out.generators = nd.generators;
  const std::size_t m = out.generators.size();
  for (std::size_t i = 0; i <= m; ++i) {
    std::vector<RatFunc> prefix(out.generators.begin(), out.generators.begin() + static_cast<std::ptrdiff_t>(i));
    ExtensionSpec spec = exponent_one(f, prefix);
    RelativeDecomposition r = extended_core(phi, spec, exec);
    if (!out.stages.empty()) verify(r.defect > out.stages.back().defect, "tower defects do not strictly increase");
    std::vector<RatFunc> rest{RatFunc::one(f)};
    rest.insert(rest.end(), out.generators.begin() + static_cast<std::ptrdiff_t>(i), out.generators.end());
    verify(extended_core(QuasiPForm(f, rest), spec, exec).defect == 0,
           "remaining norm generators became dependent along the tower");
    out.stages.push_back({std::move(spec), r.defect, r.anisotropic_dim, std::move(r.representatives)});
  }
  verify(out.stages.back().anisotropic_dim == 1, "tower does not end in dimension one");
  return out;
}

SplittingReport pisp_search(const QuasiPForm& phi, const SearchBudget& budget, Exec exec) {
  const Field& f = phi.field();
  SplittingReport out;
  out.method = SplitMethod::search;
  const QuasiPForm an = decompose(phi).anisotropic_part;
  if (an.dim() == 0) {
    add_witness(out, 0, ExtensionSpec(f));
    return out;
  }
  const std::vector<RatFunc> gens = norm_data(an).generators;
  const std::size_t m = gens.size();
  const std::size_t max_gens = budget.max_generators ? budget.max_generators : m + 1;

  // Candidate = a subspace of exponent vectors plus a subset of the extras.
  struct Candidate {
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::size_t> extras;
  };
  std::vector<Candidate> cands;
  const auto spaces = subspaces(f->p(), m, max_gens);
  const std::size_t ne = budget.extra.size();
  for (std::size_t total = 0; total <= max_gens && out.complete; ++total) {
    for (const auto& rows : spaces) {
      if (rows.size() > total) break;
      const std::size_t want = total - rows.size();
      if (want > ne) continue;
      std::vector<bool> choose(ne, false);
      std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(want), true);
      do {
        if (cands.size() >= budget.max_candidates) {
          out.complete = false;
          break;
        }
        Candidate c{rows, {}};
        for (std::size_t j = 0; j < ne; ++j)
          if (choose[j]) c.extras.push_back(j);
        cands.push_back(std::move(c));
      } while (std::prev_permutation(choose.begin(), choose.end()));
      if (!out.complete) break;
    }
  }

  std::vector<ExtensionSpec> specs;
  for (const auto& c : cands) {
    std::vector<RatFunc> elems;
    for (const auto& row : c.rows) elems.push_back(balanced_monomial_in(f, gens, row));
    for (auto j : c.extras) elems.push_back(budget.extra[j]);
    specs.push_back(exponent_one(f, elems));
  }
  // Scan with the tensor formula alone; the chosen witnesses are then
  // recomputed through extended_core, which also runs the greedy route.
  std::vector<std::size_t> dims(specs.size(), 0);
  for_each_index(specs.size(), exec, [&](std::size_t i) {
    const std::vector<RatFunc> basis = extract_p_basis(specs[i].elements());
    dims[i] = phi.dim() - tensor_formula_defect(phi, basis, Exec::serial);
  });
  // merge in enumeration order so the first candidate per dimension wins
  for (std::size_t i = 0; i < specs.size(); ++i) add_witness(out, dims[i], specs[i]);
  for (const auto& [dim, spec] : out.witnesses)
    verify(extended_core(phi, spec, exec).anisotropic_dim == dim, "pisp_search: witness does not reproduce its dimension");
  return out;
}

SplittingReport fsp_minimal(const QuasiPForm& phi, Exec exec) {
  if (!is_minimal(phi)) throw UsageError("fsp_minimal: the form is not minimal");
  TowerReport t = insep_tower(phi, exec);
  SplittingReport out;
  out.method = SplitMethod::closed_form;
  out.is_fsp = true;
  for (const auto& s : t.stages) add_witness(out, s.anisotropic_dim, s.spec);
  std::set<std::size_t> expected;
  for (std::size_t i = 1; i <= phi.dim(); ++i) expected.insert(i);
  verify(out.dims == expected, "minimal form splitting pattern differs from {1..dim}");
  return out;
}

SplittingReport fsp_quasi_pfister(std::span<const RatFunc> gens, Exec exec) {
  if (gens.empty()) throw UsageError("fsp_quasi_pfister: no generators");
  if (!is_p_independent(gens)) throw UsageError("fsp_quasi_pfister: the quasi-Pfister form is isotropic");
  const Field& f = gens.front().field();
  const std::vector<RatFunc> a(gens.begin(), gens.end());
  const QuasiPForm pi = quasi_pfister(f, a);
  const std::size_t n = a.size();
  SplittingReport out;
  out.method = SplitMethod::closed_form;
  out.is_fsp = true;
  for (std::size_t i = 0; i <= n; ++i) {
    ExtensionSpec spec = exponent_one(f, slice(a, 1, i));
    const std::size_t dim = extended_core(pi, spec, exec).anisotropic_dim;
    verify(dim == ipow(f->p(), n - i), "quasi-Pfister witness does not reach p^(n-i)");
    add_witness(out, dim, spec);
  }
  return out;
}

NeighborInput::NeighborInput(std::vector<RatFunc> pfister_gens, std::size_t sigma_prefix, RatFunc d)
    : gens_(std::move(pfister_gens)), s_(sigma_prefix), d_(std::move(d)) {
  if (d_.is_zero()) throw UsageError("neighbor input: d is zero");
  if (gens_.empty()) throw UsageError("neighbor input: no quasi-Pfister generators");
  if (s_ < 1 || s_ > gens_.size()) throw UsageError("neighbor input: sigma prefix must lie in 1..n");
  for (const auto& a : gens_) require_same_field(d_.field(), a.field());
  if (!is_p_independent(gens_)) throw UsageError("neighbor input: generators are not p-independent");
  if (!is_anisotropic(phi())) throw UsageError("neighbor input: pi (+) d sigma is isotropic");
}

QuasiPForm NeighborInput::pi() const { return quasi_pfister(field(), gens_); }

QuasiPForm NeighborInput::sigma() const {
  std::vector<RatFunc> c{RatFunc::one(field())};
  c.insert(c.end(), gens_.begin(), gens_.begin() + static_cast<std::ptrdiff_t>(s_));
  return QuasiPForm(field(), std::move(c));
}

QuasiPForm NeighborInput::phi() const { return orthogonal_sum(pi(), scale(d_, sigma())); }

NeighborSplit neighbor_split(const NeighborInput& input, const ExtensionSpec& spec, Exec exec) {
  const QuasiPForm phi = input.phi(), sigma = input.sigma();
  const RelativeDecomposition rp = extended_core(input.pi(), spec, exec);
  NeighborSplit out;
  if (rp.represents(input.d())) {
    out.which = NeighborCase::d_represented;
    out.defect = rp.defect + sigma.dim();
  } else {
    out.which = NeighborCase::d_not_represented;
    out.defect = rp.defect + extended_core(sigma, spec, exec).defect;
  }
  out.anisotropic_dim = phi.dim() - out.defect;
  verify(out.defect == extended_core(phi, spec, exec).defect, "neighbor split disagrees with extended_core");
  return out;
}

bool neighbor_pair_live(std::uint32_t p, std::size_t n, std::size_t s, std::size_t k, std::size_t l) {
  if (k > n) return false;
  if (l == 0) return true;
  const auto lo = std::max<long long>(1, static_cast<long long>(k + s + 1) - static_cast<long long>(n));
  const std::size_t hi = std::min(s + 1, ipow(p, k));
  return static_cast<long long>(l) >= lo && l <= hi;
}

namespace {

// Exponent tuples lambda in {0..p-1}^k with entry sum > 1, ordered by total
// degree, then largest entry, then lexicographically descending.
std::vector<std::vector<std::uint32_t>> lambda_order(std::uint32_t p, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> all;
  std::vector<std::uint32_t> t(k, 0);
  for (;;) {
    std::uint32_t sum = 0;
    for (auto e : t) sum += e;
    if (sum > 1) all.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == p - 1) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  auto key = [](const std::vector<std::uint32_t>& v) {
    std::uint32_t sum = 0, mx = 0;
    for (auto e : v) {
      sum += e;
      mx = std::max(mx, e);
    }
    return std::pair{sum, mx};
  };
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    if (key(a) != key(b)) return key(a) < key(b);
    return a > b;
  });
  return all;
}

}  // namespace

std::vector<NeighborCell> neighbor_cells(const NeighborInput& input, Exec exec) {
  const Field& f = input.field();
  const std::uint32_t p = f->p();
  const std::size_t n = input.n(), s = input.s();
  const std::vector<RatFunc>& a = input.pfister_gens();
  const RatFunc& d = input.d();
  const QuasiPForm phi = input.phi(), pi = input.pi(), sigma = input.sigma();

  std::vector<NeighborCell> cells;
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t l = 0; l <= s + 1; ++l) {
      if (!neighbor_pair_live(p, n, s, k, l)) continue;
      std::vector<RatFunc> adjoin, pf, dpart;
      char family;
      if (l == 0) {
        family = 'D';
        adjoin = slice(a, 1, n - k);
        adjoin.push_back(d);
        pf = slice(a, n - k + 1, n);
      } else if (l <= k + 1) {
        family = 'E';
        if (!(k == n && l == s + 1)) adjoin = slice(a, l, n - k + l - 1);
        pf = slice(a, 1, l - 1);
        for (auto& x : slice(a, n - k + l, n)) pf.push_back(x);
        dpart.push_back(RatFunc::one(f));
        for (auto& x : slice(a, 1, l - 1)) dpart.push_back(x);
      } else {
        family = 'G';
        const auto lambdas = lambda_order(p, k);
        verify(lambdas.size() >= l - k - 1, "not enough exponent tuples for the G witness");
        pf = slice(a, 1, k);
        dpart.push_back(RatFunc::one(f));
        for (auto& x : slice(a, 1, k)) dpart.push_back(x);
        for (std::size_t j = 1; j <= l - k - 1; ++j) {
          RatFunc al = monomial_in(f, slice(a, 1, k), lambdas[j - 1]);
          adjoin.push_back(al / a[k + j - 1]);
          dpart.push_back(al);
        }
        for (auto& x : slice(a, l, n)) adjoin.push_back(x);
      }
      QuasiPForm expected = quasi_pfister(f, pf);
      if (!dpart.empty()) expected = orthogonal_sum(expected, scale(d, QuasiPForm(f, dpart)));
      cells.push_back({k, l, family, exponent_one(f, adjoin), std::move(pf), std::move(dpart), std::move(expected),
                       ipow(p, k) + l});
    }
  }

  for_each_index(cells.size(), exec, [&](std::size_t i) {
    const NeighborCell& c = cells[i];
    const RelativeDecomposition r = extended_core(phi, c.spec, Exec::serial);
    verify(r.anisotropic_dim == c.dim, "witness field does not reach its dimension");
    verify(c.expected.dim() == c.dim, "closed-form anisotropic part has the wrong dimension");
    verify(extended_core(c.expected, c.spec, Exec::serial).defect == 0,
           "closed-form anisotropic part is isotropic over the witness field");
    for (const auto& x : c.expected.coefficients())
      verify(r.represents(x), "closed-form anisotropic part is not represented over the witness field");
    // bound lemma at the witness
    const std::size_t pi_dim = extended_core(pi, c.spec, Exec::serial).anisotropic_dim;
    const std::size_t sigma_dim = extended_core(sigma, c.spec, Exec::serial).anisotropic_dim;
    verify(pi_dim == ipow(p, c.k), "pi does not split to p^k at the witness");
    verify(sigma_dim + n >= c.k + s + 1, "dim (sigma_E)_an below k - n + s + 1");
    verify(sigma_dim <= pi_dim, "dim (pi_E)_an below p^ceil(log_p dim (sigma_E)_an)");
  });
  return cells;
}

SplittingReport fsp_neighbor(const NeighborInput& input, Exec exec) {
  const std::uint32_t p = input.field()->p();
  const std::size_t n = input.n(), s = input.s();
  SplittingReport out;
  out.method = SplitMethod::closed_form;
  out.is_fsp = true;
  for (const auto& c : neighbor_cells(input, exec)) add_witness(out, c.dim, c.spec);

  std::set<std::size_t> formula, superset;
  for (std::size_t k = 0; k <= n; ++k) {
    formula.insert(ipow(p, k));
    const auto lo = std::max<long long>(1, static_cast<long long>(k + s + 1) - static_cast<long long>(n));
    for (auto l = static_cast<std::size_t>(lo); l <= std::min(s + 1, ipow(p, k)); ++l) formula.insert(ipow(p, k) + l);
    for (std::size_t l = 0; l <= s + 1; ++l) superset.insert(ipow(p, k) + l);
  }
  verify(out.dims == formula, "witness dimensions differ from the closed-form set");
  verify(std::includes(superset.begin(), superset.end(), out.dims.begin(), out.dims.end()),
         "closed-form set leaves the corollary superset");
  return out;
}

LowerBoundCheck pisp_lower_bound_check(const QuasiPForm& phi, Exec exec) {
  LowerBoundCheck out;
  const QuasiPForm an = decompose(phi).anisotropic_part;
  if (an.dim() == 0) {
    out.achieved = 1;
    out.holds = true;
    return out;
  }
  TowerReport t = insep_tower(an, exec);
  out.norm_exponent = t.generators.size();
  std::set<std::size_t> dims;
  for (const auto& s : t.stages) dims.insert(s.anisotropic_dim);
  out.achieved = dims.size();
  out.holds = out.achieved >= out.norm_exponent + 1;
  verify(out.holds, "splitting pattern smaller than m + 1");
  return out;
}

NeighborInput table1_input(std::uint32_t p) {
  Field f = make_field(p, {"a1", "a2", "a3", "a4", "d"});
  std::vector<RatFunc> a;
  for (std::size_t i = 0; i < 4; ++i) a.push_back(RatFunc::variable(f, i));
  return NeighborInput(std::move(a), 3, RatFunc::variable(f, 4));
}

}  // namespace qlpf
