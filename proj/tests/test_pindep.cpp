#include <random>

#include "doctest.h"
#include "qlpf/error.hpp"
#include "qlpf/pindep.hpp"
#include "support.hpp"

using namespace qlpf;
using qlpf::testing::cst;
using qlpf::testing::var;

namespace {
QuasiPForm form(const Field& f, std::vector<RatFunc> c) { return QuasiPForm(f, std::move(c)); }

// Rank over F_p of residue vectors, computed by plain modular elimination.
std::size_t residue_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::uint32_t inv = 1;
    while (rows[r][c] * inv % p != 1) ++inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint32_t k = rows[i][c] * inv % p;
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + (p - k) * rows[r][j]) % p;
    }
    ++r;
  }
  return r;
}
}  // namespace

TEST_CASE("is_p_independent") {
  auto f = make_field(2, {"x", "y"});
  auto x = var(f, "x"), y = var(f, "y");
  CHECK(is_p_independent(std::vector<RatFunc>{x, y}));
  CHECK_FALSE(is_p_independent(std::vector<RatFunc>{x, x * y * y}));
  CHECK_THROWS_AS(is_p_independent(std::vector<RatFunc>{x, RatFunc::zero(f)}), UsageError);

  auto f3 = make_field(3, {"x", "y"});
  auto x3 = var(f3, "x"), y3 = var(f3, "y");
  std::vector<RatFunc> s{x3, y3, (x3.pow(3) + y3) / y3};
  CHECK(is_p_independent(s) == (decompose_general(quasi_pfister(f3, s)).defect == 0));
}

TEST_CASE("is_p_independent matches residue rank on monomials") {
  std::mt19937_64 rng(4);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = make_field(p, {"x", "y", "z"});
    for (int trial = 0; trial < 30; ++trial) {
      std::uniform_int_distribution<int> nd(1, 4);
      std::vector<RatFunc> s;
      std::vector<std::vector<std::uint32_t>> rows;
      for (int i = nd(rng); i > 0; --i) {
        s.push_back(testing::random_unit_monomial(f, rng, 2, 2 * p));
        auto m = *as_laurent_monomial(s.back());
        auto res = m.residue(p);
        rows.push_back({res[0], res[1], res[2]});
      }
      CHECK(is_p_independent(s) == (residue_rank(rows, p) == s.size()));
      CHECK(degree_over_fp(s) == boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(residue_rank(rows, p))));
    }
  }
}

TEST_CASE("extract_p_basis") {
  auto f = make_field(2, {"x", "y"});
  auto x = var(f, "x"), y = var(f, "y");
  CHECK(extract_p_basis(std::vector<RatFunc>{x * x, x, y}) == std::vector<RatFunc>{x, y});
  // the contract is only same field and p-independence
  std::vector<RatFunc> s{x, x * y * y, y};
  auto b = extract_p_basis(s);
  CHECK(is_p_independent(b));
  for (const auto& a : s) CHECK(in_pfield(f, b, a));
  CHECK(extract_p_basis(std::vector<RatFunc>{x, y}) == std::vector<RatFunc>{x, y});
}

TEST_CASE("extract_p_basis properties on random sets") {
  std::mt19937_64 rng(41);
  for (std::uint32_t p : {2u, 3u}) {
    auto f = make_field(p, {"x", "y", "z"});
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<RatFunc> s;
      for (int i = 0; i < 3; ++i) s.push_back(testing::random_ratfunc(f, rng, 2, 2, 0.2));
      if (trial % 2) s.push_back(s[0] * s[1]);
      auto b = extract_p_basis(s);
      CHECK(is_p_independent(b));
      for (const auto& a : s) CHECK(in_pfield(f, b, a));
      CHECK(decompose_general(quasi_pfister(f, b)).defect == 0);
    }
  }
}

TEST_CASE("norm_data") {
  auto f = make_field(2, {"x", "y"});
  auto x = var(f, "x"), y = var(f, "y"), one = cst(f, 1);
  auto nd = norm_data(form(f, {x, x * y, x + x * y}));
  CHECK(nd.generators == std::vector<RatFunc>{y});
  CHECK(nd.norm_degree_exponent == 1);
  CHECK(nd.norm_form == form(f, {one, y}));

  nd = norm_data(form(f, {one, x, y, x * y}));
  CHECK(nd.norm_degree_exponent == 2);
  CHECK(is_isometric(nd.norm_form, form(f, {one, x, y, x * y})));

  nd = norm_data(form(f, {one, x, y, x + y + x * y}));
  CHECK(nd.norm_degree_exponent == 2);
  std::vector<RatFunc> g{x, y};
  CHECK(is_isometric(nd.norm_form, quasi_pfister(f, g)));

  CHECK_THROWS_AS(norm_data(form(f, {RatFunc::zero(f)})), UsageError);
}

TEST_CASE("norm_data invariants on random forms") {
  std::mt19937_64 rng(6);
  for (std::uint32_t p : {2u, 3u}) {
    auto f = make_field(p, {"x", "y", "z"});
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<RatFunc> c;
      for (int i = p == 2 ? 4 : 3; i > 0; --i) c.push_back(testing::random_ratfunc(f, rng, 2, 2, 0.2));
      QuasiPForm phi(f, c);
      auto nd = norm_data(phi);
      auto an = decompose(phi).anisotropic_part;
      CHECK(nd.norm_degree_exponent + 1 <= an.dim());
      CHECK(an.dim() <= nd.norm_form.dim());
      CHECK(is_subform(scale(nd.base.inverse(), an), nd.norm_form));
      auto cscale = testing::random_ratfunc(f, rng, 2, 2, 0.3);
      auto nd2 = norm_data(scale(cscale, phi));
      CHECK(nd2.norm_degree_exponent == nd.norm_degree_exponent);
      CHECK(is_isometric(nd2.norm_form, nd.norm_form));
    }
  }
}

TEST_CASE("minimality") {
  auto f = make_field(2, {"x", "y", "z"});
  auto x = var(f, "x"), y = var(f, "y"), z = var(f, "z"), one = cst(f, 1);
  CHECK(is_minimal(form(f, {one, x, y})));
  CHECK_FALSE(is_minimal(form(f, {one, x, y, x * y})));
  CHECK(is_minimal(form(f, {one, x, y, x * y * z})));
  CHECK(is_minimal(form(f, {x})));
  CHECK_THROWS_AS(is_minimal(form(f, {one, one})), UsageError);

  CHECK(minimal_subform(form(f, {one, x, y, x * y})) == form(f, {one, x, y}));
  auto m = minimal_subform(form(f, {x, x * y, x * z, x * y * z}));
  CHECK(m == form(f, {x, x * y, x * z}));
  CHECK(is_minimal(m));
  auto f3 = make_field(3, {"x"});
  std::vector<RatFunc> g{var(f3, "x")};
  CHECK(minimal_subform(quasi_pfister(f3, g)) == form(f3, {cst(f3, 1), var(f3, "x")}));
  CHECK_THROWS_AS(minimal_subform(form(f, {x})), UsageError);
}

TEST_CASE("subforms of scaled minimal forms are minimal") {
  std::mt19937_64 rng(13);
  auto f = make_field(3, {"a", "b", "c", "t"});
  std::vector<RatFunc> gens{var(f, "a"), var(f, "b"), var(f, "c") * var(f, "a")};
  for (int trial = 0; trial < 15; ++trial) {
    RatFunc c = testing::random_ratfunc(f, rng, 2, 2, 0.3);
    std::vector<RatFunc> coeffs{c};
    for (const auto& g : gens) coeffs.push_back(c * g);
    QuasiPForm phi(f, coeffs);
    REQUIRE(is_minimal(phi));
    for (unsigned mask = 1; mask < 16; ++mask) {
      std::vector<RatFunc> sub;
      for (unsigned i = 0; i < 4; ++i)
        if (mask >> i & 1) sub.push_back(coeffs[i]);
      CHECK(is_minimal(QuasiPForm(f, sub)));
    }
  }
}

TEST_CASE("product_anisotropy") {
  auto f = make_field(2, {"x", "y", "z"});
  auto x = var(f, "x"), y = var(f, "y"), z = var(f, "z"), one = cst(f, 1);
  auto r = product_anisotropy(form(f, {one, x}), form(f, {one, y}));
  CHECK(r.criterion_holds);
  CHECK(r.product_anisotropic);
  r = product_anisotropy(form(f, {one, x, y, z}), form(f, {one, x * y * z}));
  CHECK_FALSE(r.criterion_holds);
  CHECK(r.product_anisotropic);
  r = product_anisotropy(form(f, {one, x}), form(f, {one, x}));
  CHECK_FALSE(r.criterion_holds);
  CHECK_FALSE(r.product_anisotropic);
  CHECK_THROWS_AS(product_anisotropy(form(f, {one, one}), form(f, {one})), UsageError);
}

TEST_CASE("subspace_intersection") {
  auto f = make_field(2, {"x", "y"});
  auto x = var(f, "x"), y = var(f, "y"), one = cst(f, 1);
  auto i = subspace_intersection(RepresentedSpace(f, {one, x}), RepresentedSpace(f, {one, y}));
  CHECK(i.same_subspace(RepresentedSpace(f, {one})));
  i = subspace_intersection(RepresentedSpace(f, {one, x, y, x * y}), RepresentedSpace(f, {one, x}));
  CHECK(i.same_subspace(RepresentedSpace(f, {one, x})));
  CHECK(i.dimension() == 2);
}

TEST_CASE("degree_over_fp") {
  auto f = make_field(2, {"x", "y"});
  CHECK(degree_over_fp(std::vector<RatFunc>{var(f, "x"), var(f, "y")}) == 4);
  CHECK(degree_over_fp(std::vector<RatFunc>{var(f, "x") * var(f, "x")}) == 1);
  auto f3 = make_field(3, {"x", "y"});
  CHECK(degree_over_fp(std::vector<RatFunc>{var(f3, "x"), var(f3, "x") * var(f3, "y").pow(2)}) == 9);
  // twelve generators at p = 31
  auto big = make_field(31, {"a", "b", "c", "d", "e", "g", "h", "i", "j", "k", "l", "m"});
  std::vector<RatFunc> all;
  for (std::size_t v = 0; v < 12; ++v) all.push_back(RatFunc::variable(big, v));
  CHECK(degree_over_fp(all) == boost::multiprecision::pow(BigInt(31), 12));
  CHECK_THROWS_AS(degree_over_fp(std::vector<RatFunc>{RatFunc::zero(f)}), UsageError);
}
