// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>

#include "qlpf/error.hpp"
#include "qlpf/script.hpp"
#include "qlpf/splitting.hpp"
#include "qlpf/table1.hpp"
#include "support.hpp"

using namespace qlpf;
using testing::cst;
using testing::var;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string set_string(const std::set<std::size_t>& s) {
  std::string out = "{";
  for (auto v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

QuasiPForm anisotropic_with_one(const Field& f, std::mt19937_64& rng, int extra, bool monomial) {
  std::vector<RatFunc> c{cst(f, 1)};
  for (int i = 0; i < extra; ++i)
    c.push_back(monomial ? testing::random_unit_monomial(f, rng, 1, 3) : testing::random_ratfunc(f, rng, 2, 2, 0.2));
  return decompose(QuasiPForm(f, c)).anisotropic_part;
}

// Table 1 of the paper for p >= 4, transcribed cell by cell: (k, l, field, form).
// Roots are written with p = 5. The E_{3,3} form is the one given by the
// proof's formula; the printed table has <<a1,a2,a3>> there, which cannot be
// anisotropic over F(a3^(1/p)).
struct PaperCell {
  std::size_t k, l;
  const char* field;
  const char* form;
};
const PaperCell kPaperTable[] = {
    {0, 0, "F(a1^(1/5), a2^(1/5), a3^(1/5), a4^(1/5), d^(1/5))", "<1>"},
    {0, 1, "F(a1^(1/5), a2^(1/5), a3^(1/5), a4^(1/5))", "<1> (+) d * <1>"},
    {1, 0, "F(a1^(1/5), a2^(1/5), a3^(1/5), d^(1/5))", "<<a4>>"},
    {1, 1, "F(a1^(1/5), a2^(1/5), a3^(1/5))", "<<a4>> (+) d * <1>"},
    {1, 2, "F(a2^(1/5), a3^(1/5), a4^(1/5))", "<<a1>> (+) d * <1,a1>"},
    {1, 3, "F((a1^2/a2)^(1/5), a3^(1/5), a4^(1/5))", "<<a1>> (+) d * <1,a1,a1^2>"},
    {1, 4, "F((a1^2/a2)^(1/5), (a1^3/a3)^(1/5), a4^(1/5))", "<<a1>> (+) d * <1,a1,a1^2,a1^3>"},
    {2, 0, "F(a1^(1/5), a2^(1/5), d^(1/5))", "<<a3,a4>>"},
    {2, 2, "F(a2^(1/5), a3^(1/5))", "<<a1,a4>> (+) d * <1,a1>"},
    {2, 3, "F(a3^(1/5), a4^(1/5))", "<<a1,a2>> (+) d * <1,a1,a2>"},
    {2, 4, "F((a1*a2/a3)^(1/5), a4^(1/5))", "<<a1,a2>> (+) d * <1,a1,a2,a1*a2>"},
    {3, 0, "F(a1^(1/5), d^(1/5))", "<<a2,a3,a4>>"},
    {3, 3, "F(a3^(1/5))", "<<a1,a2,a4>> (+) d * <1,a1,a2>"},
    {3, 4, "F(a4^(1/5))", "<<a1,a2,a3>> (+) d * <1,a1,a2,a3>"},
    {4, 0, "F(d^(1/5))", "<<a1,a2,a3,a4>>"},
    {4, 4, "F", "<<a1,a2,a3,a4>> (+) d * <1,a1,a2,a3>"},
};

Outcome criterion1() {
  Session session;
  const Json rec = session.run("verify-table1 5").at(0);
  const NeighborInput in = table1_input(5);
  const QuasiPForm phi = in.phi();
  std::size_t live = 0, matched = 0;
  std::ostringstream bad;
  for (const auto& cell : neighbor_cells(in)) {
    ++live;
    const Json& emitted = rec["cells"][cell.k * 5 + cell.l];
    // anisotropic dimension over the witness field
    const RelativeDecomposition core = extended_core(phi, cell.spec);
    bool ok = core.anisotropic_dim == ipow(5, cell.k) + cell.l && emitted["dim"] == core.anisotropic_dim;
    // isometry class: the closed-form part is anisotropic over E, has the same
    // dimension, and its values lie in D_E(phi); quasilinear forms with equal
    // value spaces are isometric
    ok = ok && cell.expected.dim() == core.anisotropic_dim && extended_core(cell.expected, cell.spec).defect == 0;
    for (const auto& c : cell.expected.coefficients()) ok = ok && core.represents(c);
    for (const auto& paper : kPaperTable)
      if (paper.k == cell.k && paper.l == cell.l)
        ok = ok && emitted["field"] == paper.field && emitted["anisotropic_part"] == paper.form;
    if (ok)
      ++matched;
    else
      bad << " (" << cell.k << "," << cell.l << ")";
  }
  std::ostringstream d;
  d << matched << "/" << live << " live cells verified against extended_core and the paper's table";
  d << " (the spec's count of 14 undercounts the table's 16 cells)";
  if (!bad.str().empty()) d << "; failing:" << bad.str();
  return {live == std::size(kPaperTable) && matched == live && rec["verified"] == true, d.str()};
}

// Mechanical enumeration of the theorem's (k, l) constraints with dim sigma = s + 1.
std::set<std::size_t> theorem_dims(std::size_t p, std::size_t n, std::size_t s) {
  std::set<std::size_t> out;
  const long long dim_sigma = static_cast<long long>(s) + 1;
  for (std::size_t k = 0; k <= n; ++k) {
    const long long pk = static_cast<long long>(ipow(p, k));
    out.insert(static_cast<std::size_t>(pk));
    const long long lo = std::max<long long>(1, static_cast<long long>(k) - static_cast<long long>(n) + dim_sigma);
    const long long hi = std::min(dim_sigma, pk);
    for (long long l = lo; l <= hi; ++l) out.insert(static_cast<std::size_t>(pk + l));
  }
  return out;
}

Outcome criterion2() {
  const std::set<std::size_t> got = fsp_neighbor(table1_input(5)).dims;
  const std::set<std::size_t> oracle = theorem_dims(5, 4, 3);
  const std::set<std::size_t> literal{1, 5, 25, 125, 625, 2, 6, 7, 26, 27, 28, 29, 128, 129, 8, 9};
  std::set<std::size_t> only_literal, only_oracle;
  std::set_difference(literal.begin(), literal.end(), oracle.begin(), oracle.end(),
                      std::inserter(only_literal, only_literal.end()));
  std::set_difference(oracle.begin(), oracle.end(), literal.begin(), literal.end(),
                      std::inserter(only_oracle, only_oracle.end()));
  std::ostringstream d;
  d << "fsp = " << set_string(got) << " equals the (k,l) enumeration; the literal list differs by "
    << set_string(only_literal) << " (not admitted) and " << set_string(only_oracle) << " (missing)";
  return {got == oracle, d.str()};
}

Outcome criterion3() {
  std::mt19937_64 rng(303);
  std::size_t done = 0, failures = 0, isotropic = 0;
  while (done < 100) {
    const std::uint32_t p = done % 2 ? 3 : 2;
    auto f = make_field(p, {"x", "y", "z"});
    std::vector<RatFunc> c;
    for (int i = std::uniform_int_distribution<int>(1, 6)(rng); i > 0; --i)
      c.push_back(testing::random_ratfunc(f, rng, 2, 2, 0.2));
    const QuasiPForm phi(f, c);
    std::vector<ExtensionSpec::Generator> g;
    for (int i = std::uniform_int_distribution<int>(1, 2)(rng); i > 0; --i)
      g.emplace_back(testing::random_ratfunc(f, rng, 2, 2, 0.1), std::uniform_int_distribution<std::uint32_t>(1, 3)(rng));
    const ExtensionSpec spec(f, g);
    if (!is_p_independent(spec.elements())) continue;
    ++done;
    const std::size_t direct = direct_defect_modular(phi, spec);
    const std::size_t core = extended_core(phi, reduce_to_exponent_one(spec)).defect;
    failures += direct != core;
    isotropic += core > 0;
  }
  return {failures == 0, std::to_string(done) + " modular specs, " + std::to_string(failures) + " failures, " +
                             std::to_string(isotropic) + " with positive defect"};
}

Outcome criterion4() {
  std::mt19937_64 rng(404);
  std::size_t failures = 0, isotropic = 0;
  const std::size_t total = 500;
  for (std::size_t trial = 0; trial < total; ++trial) {
    const std::uint32_t p = trial % 3 == 2 ? 3 : 2;
    auto f = make_field(p, {"x", "y", "z"});
    const bool monomial = trial % 2;
    std::vector<RatFunc> c, gens;
    for (int i = std::uniform_int_distribution<int>(1, 6)(rng); i > 0; --i)
      c.push_back(monomial ? testing::random_unit_monomial(f, rng, 1, 3) : testing::random_ratfunc(f, rng, 2, 2, 0.2));
    for (int i = std::uniform_int_distribution<int>(1, 3)(rng); i > 0; --i)
      gens.push_back(monomial ? testing::random_unit_monomial(f, rng, 1, 2) : testing::random_ratfunc(f, rng, 2, 2, 0.1));
    const QuasiPForm phi(f, c);
    std::vector<ExtensionSpec::Generator> g;
    for (const auto& a : gens) g.emplace_back(a, 1);
    const std::vector<RatFunc> basis = extract_p_basis(gens);
    const std::size_t tensor_side = tensor_formula_defect(phi, basis, Exec::serial);
    std::size_t greedy_side = 0;
    try {
      greedy_side = extended_core(phi, ExtensionSpec(f, g)).defect;
    } catch (const VerificationError&) {
      ++failures;
      continue;
    }
    failures += tensor_side != greedy_side;
    isotropic += greedy_side > 0;
  }
  return {failures == 0, std::to_string(total) + " exponent-one instances, " + std::to_string(failures) +
                             " failures, " + std::to_string(isotropic) + " with positive defect"};
}

bool witnesses_hold(const QuasiPForm& phi, const SplittingReport& r) {
  for (const auto& [dim, spec] : r.witnesses)
    if (extended_core(phi, spec).anisotropic_dim != dim) return false;
  return r.witnesses.size() == r.dims.size();
}

Outcome criterion5() {
  std::size_t minimal = 0, pfister = 0, neighbors = 0, failures = 0;
  std::ostringstream bad;
  for (std::uint32_t p : {2u, 3u}) {
    auto f = make_field(p, {"x", "y", "z"});
    const RatFunc x = var(f, "x"), y = var(f, "y"), z = var(f, "z"), one = cst(f, 1);
    const std::vector<RatFunc> pool{x, y, z, x * y, x + y, x * x * z + one};
    const std::size_t count = pool.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
      std::vector<RatFunc> gens;
      for (std::size_t i = 0; i < count; ++i)
        if (mask >> i & 1) gens.push_back(pool[i]);
      if (gens.size() > 3 || !is_p_independent(gens)) continue;
      for (const RatFunc& scale_by : {one, x + z}) {
        std::vector<RatFunc> c{scale_by};
        for (const auto& a : gens) c.push_back(scale_by * a);
        const QuasiPForm phi(f, c);
        const SplittingReport closed = fsp_minimal(phi), search = pisp_search(phi);
        ++minimal;
        if (closed.dims != search.dims || !search.complete || !witnesses_hold(phi, closed)) {
          ++failures;
          bad << " minimal" << to_string(phi);
        }
      }
      if (gens.empty()) continue;
      const QuasiPForm pi = quasi_pfister(f, gens);
      const SplittingReport closed = fsp_quasi_pfister(gens), search = pisp_search(pi);
      ++pfister;
      if (closed.dims != search.dims || !search.complete || !witnesses_hold(pi, closed)) {
        ++failures;
        bad << " pfister" << to_string(std::span<const RatFunc>(gens));
      }
    }
  }
  auto f = make_field(2, {"a1", "a2", "a3", "d"});
  const RatFunc a1 = var(f, "a1"), a2 = var(f, "a2"), a3 = var(f, "a3"), d = var(f, "d");
  const std::vector<std::vector<RatFunc>> families{{a1}, {a1, a2}, {a1, a2, a3}, {a1 * a2, a2 + a3}, {a2, a1 * a3, a1}};
  for (const auto& gens : families)
    for (std::size_t s = 1; s <= gens.size(); ++s)
      for (const RatFunc& dd : {d, d * a1 + a2}) {
        const NeighborInput in(gens, s, dd);
        const SplittingReport closed = fsp_neighbor(in), search = pisp_search(in.phi());
        ++neighbors;
        if (closed.dims != search.dims || !search.complete || !witnesses_hold(in.phi(), closed)) {
          ++failures;
          bad << " neighbor" << to_string(in.phi());
        }
      }
  std::ostringstream out;
  out << minimal << " minimal forms, " << pfister << " quasi-Pfister forms, " << neighbors
      << " neighbors at p=2; search equals closed form in all but " << failures << bad.str();
  return {failures == 0, out.str()};
}

Outcome criterion6() {
  std::mt19937_64 rng(606);
  std::size_t failures = 0, total = 0;
  while (total < 200) {
    const std::uint32_t p = total % 2 ? 3 : 2;
    auto f = make_field(p, {"x", "y", "z"});
    const QuasiPForm phi = anisotropic_with_one(f, rng, std::uniform_int_distribution<int>(1, 5)(rng), total % 3 == 0);
    ++total;
    const TowerReport t = insep_tower(phi);
    const std::size_t m = norm_data(phi).norm_degree_exponent;
    bool ok = t.stages.size() == m + 1 && t.generators.size() == m;
    std::set<std::size_t> dims;
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
      if (i > 0) ok = ok && t.stages[i].defect > t.stages[i - 1].defect;
      ok = ok && extended_core(phi, t.stages[i].spec).anisotropic_dim == t.stages[i].anisotropic_dim;
      dims.insert(t.stages[i].anisotropic_dim);
    }
    ok = ok && dims.size() == m + 1 && t.stages.back().anisotropic_dim == 1;
    failures += !ok;
  }
  return {failures == 0, std::to_string(total) + " forms with 1 represented; " + std::to_string(failures) +
                             " towers without m+1 strictly increasing defects"};
}

Outcome criterion7() {
  auto f3 = make_field(2, {"x", "y", "z"});
  const RatFunc x = var(f3, "x"), y = var(f3, "y"), z = var(f3, "z"), one = cst(f3, 1);
  const ProductAnisotropy remark = product_anisotropy(QuasiPForm(f3, {one, x, y, z}), QuasiPForm(f3, {one, x * y * z}));
  bool ok = !remark.criterion_holds && remark.product_anisotropic;
  std::mt19937_64 rng(707);
  std::size_t held = 0, violations = 0, total = 0;
  while (total < 300) {
    const std::uint32_t p = total % 2 ? 3 : 2;
    auto f = make_field(p, {"w", "x", "y", "z"});
    const bool monomial = total % 4 != 3;
    const QuasiPForm phi = anisotropic_with_one(f, rng, std::uniform_int_distribution<int>(1, 2)(rng), monomial);
    const QuasiPForm psi = anisotropic_with_one(f, rng, std::uniform_int_distribution<int>(1, 2)(rng), monomial);
    ++total;
    ProductAnisotropy r;
    try {
      r = product_anisotropy(phi, psi);
    } catch (const VerificationError&) {
      ++violations;
      continue;
    }
    // independent anisotropy oracle: fraction-free elimination on the product
    const bool aniso = decompose_general(tensor(phi, psi), Exec::serial).defect == 0;
    held += r.criterion_holds;
    violations += (r.criterion_holds && !aniso) || r.product_anisotropic != aniso;
  }
  ok = ok && violations == 0;
  std::ostringstream d;
  d << "remark pair gives criterion_holds=" << remark.criterion_holds
    << ", product_anisotropic=" << remark.product_anisotropic << "; " << total << " random pairs, criterion held on "
    << held << ", " << violations << " violations";
  return {ok, d.str()};
}

Outcome criterion8() {
  auto f = make_field(2, {"a1", "a2", "a3", "b1"});
  const RatFunc a1 = var(f, "a1"), a2 = var(f, "a2"), a3 = var(f, "a3"), b1 = var(f, "b1"), one = cst(f, 1);
  const RatFunc b2 = (a1 * b1 + a3) / a2;
  const QuasiPForm phi(f, {one, a1, a2, a3});
  const std::size_t defect = extended_core(phi, ExtensionSpec(f, {{b1, 1}, {b2, 1}})).defect;
  const std::vector<RatFunc> e_gens{b1, b2}, n_gens{a1, a2, a3};
  const RepresentedSpace ep = RepresentedSpace::spanned_by(f, quasi_pfister(f, e_gens).coefficients());
  const RepresentedSpace norm = RepresentedSpace::spanned_by(f, quasi_pfister(f, n_gens).coefficients());
  const RepresentedSpace meet = subspace_intersection(ep, norm);
  const bool trivial = meet.dimension() == 1 && meet.contains(one);
  std::ostringstream d;
  d << "defect over F(b1^(1/2), b2^(1/2)) = " << defect << ", dim(E^2 cap N_F(phi)) over F^2 = " << meet.dimension();
  return {defect >= 1 && trivial, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;  // optional criterion numbers on the command line
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
  const double limits[] = {0, 60, 120, 600, 300, 1e9, 1e9, 1e9, 1e9};
  bool all = true;
  for (const auto& [id, run] : criteria) {
    if (!only.empty() && !only.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limits[id]) {
      o.pass = false;
      o.detail += "; exceeded the time limit";
    }
    all = all && o.pass;
    std::cout << "CRITERION " << id << ' ' << (o.pass ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(2) << secs << " s) " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
