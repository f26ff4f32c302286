#include <random>

#include "doctest.h"
#include "qlpf/error.hpp"
#include "qlpf/frobenius.hpp"
#include "qlpf/kernels.hpp"
#include "qlpf/linalg.hpp"
#include "support.hpp"

using namespace qlpf;
using qlpf::testing::cst;
using qlpf::testing::var;

TEST_CASE("field descriptor validation") {
  CHECK_THROWS_AS(make_field(4, {"x"}), UsageError);
  CHECK_THROWS_AS(make_field(37, {"x"}), UsageError);
  CHECK_NOTHROW(make_field(37, {"x"}, FieldOptions{512, 37}));
  CHECK_THROWS_AS(make_field(2, {"x", "x"}), UsageError);
  CHECK_THROWS_AS(make_field(2, {"1x"}), UsageError);
  CHECK_THROWS_AS(make_field(2, {""}), UsageError);
  auto f = make_field(7, {"x", "y"});
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
}

TEST_CASE("polynomial arithmetic examples") {
  auto f2 = make_field(2, {"x", "y"});
  auto x = MultiPoly::variable(f2, 0), y = MultiPoly::variable(f2, 1);
  auto one = MultiPoly::constant(f2, 1);
  CHECK(((x + one) + (x + one)).is_zero());
  CHECK((x + y) * (x + y) == x * x + y * y);

  auto f3 = make_field(3, {"x"});
  auto t = MultiPoly::variable(f3, 0);
  CHECK((t + MultiPoly::constant(f3, 2)) * (t + MultiPoly::constant(f3, 1)) ==
        t * t + MultiPoly::constant(f3, 2));

  auto g = make_field(2, {"x"});
  CHECK_THROWS_AS(x + MultiPoly::variable(g, 0), UsageError);
}

TEST_CASE("graded-lex order and degree guard") {
  auto f = make_field(5, {"x", "y"}, FieldOptions{8, 31});
  auto x = MultiPoly::variable(f, 0), y = MultiPoly::variable(f, 1);
  auto p = y * y + x * y + x + x * x;
  REQUIRE(p.size() == 4);
  // x^2 > xy > y^2 > x
  CHECK(p.terms()[0].mono.exp[0] == 2);
  CHECK(p.terms()[1].mono.exp[0] == 1);
  CHECK(p.terms()[2].mono.exp[1] == 2);
  CHECK(p.terms()[3].mono.degree == 1);
  CHECK_NOTHROW(x.pow(8));
  CHECK_THROWS_AS(x.pow(9), ResourceError);
}

TEST_CASE("gcd") {
  auto f = make_field(3, {"x", "y"});
  auto x = MultiPoly::variable(f, 0), y = MultiPoly::variable(f, 1);
  auto one = MultiPoly::constant(f, 1);
  auto a = (x + y) * (x * y + one), b = (x + y) * (x + one) * (x + one);
  CHECK(gcd(a, b) == x + y);
  CHECK(gcd(x * x * y, x * y * y) == x * y);
  CHECK(gcd(a, MultiPoly(f)) == a.monic());
  CHECK(gcd(MultiPoly::constant(f, 2), a).is_one());
}

TEST_CASE("rational function arithmetic examples") {
  auto f = make_field(2, {"x", "y"});
  auto x = var(f, "x"), y = var(f, "y"), one = cst(f, 1);
  CHECK((x.inverse() * x).is_one());
  CHECK((x / (x + one) + one / (x + one)).is_one());
  auto q = (x * x / y) / (x / (y * y));
  CHECK(q == x * y);
  CHECK(q.cross_equal(x * y));
  CHECK_THROWS_AS(x / RatFunc::zero(f), ArithmeticError);
  // denominators are monic
  auto f3 = make_field(3, {"x"});
  auto r = cst(f3, 1) / (cst(f3, 2) * var(f3, "x"));
  CHECK(r.den().leading_coeff() == 1);
}

TEST_CASE("field axioms on random inputs") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = make_field(p, {"x", "y"});
    for (int i = 0; i < 60; ++i) {
      auto a = testing::random_ratfunc(f, rng), b = testing::random_ratfunc(f, rng),
           c = testing::random_ratfunc(f, rng);
      CHECK(((a + b) + c).cross_equal(a + (b + c)));
      CHECK(((a * b) * c).cross_equal(a * (b * c)));
      CHECK((a * (b + c)).cross_equal(a * b + a * c));
      CHECK((a * a.inverse()).is_one());
      CHECK((a - a).is_zero());
      // structural and cross-multiplication equality agree
      auto lhs = (a + b) * c, rhs = a * c + b * c;
      CHECK((lhs == rhs) == lhs.cross_equal(rhs));
    }
  }
}

TEST_CASE("frobenius examples") {
  auto f2 = make_field(2, {"x", "y"});
  auto x = var(f2, "x"), y = var(f2, "y");
  auto r = frobenius_root(x * x + y * y);
  REQUIRE(r);
  CHECK(*r == x + y);
  CHECK_FALSE(frobenius_root(x));

  auto f3 = make_field(3, {"x"});
  auto t = var(f3, "x");
  CHECK(frobenius_power(cst(f3, 1) / (t + cst(f3, 1))) == cst(f3, 1) / (t.pow(3) + cst(f3, 1)));
}

TEST_CASE("fp_coordinates examples") {
  auto f = make_field(2, {"x"});
  auto x = var(f, "x");
  auto c = fp_coordinates(cst(f, 1) / (x + cst(f, 1)));
  REQUIRE(c.coords.size() == 2);
  CHECK(c.coords.at(Residue{0}) == cst(f, 1) / (x + cst(f, 1)));
  CHECK(c.coords.at(Residue{1}) == cst(f, 1) / (x + cst(f, 1)));

  auto g = make_field(2, {"x", "y"});
  auto gx = var(g, "x"), gy = var(g, "y");
  auto d = fp_coordinates(gx * gx * gy);
  REQUIRE(d.coords.size() == 1);
  CHECK(d.coords.at(Residue{0, 1}) == gx);

  auto h = make_field(7, {"x"});
  auto e = fp_coordinates(cst(h, 5));
  REQUIRE(e.coords.size() == 1);
  CHECK(e.coords.at(Residue{}) == cst(h, 5));
}

namespace {
RatFunc reconstruct(const Field& f, const FpCoordinates& c) {
  RatFunc acc = RatFunc::zero(f);
  for (const auto& [res, r] : c.coords) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.exp[i] = res[i];
      m.degree += res[i];
    }
    acc += frobenius_power(r) * RatFunc(MultiPoly::monomial(f, m));
  }
  return acc;
}
}  // namespace

TEST_CASE("fp_coordinates properties") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = make_field(p, {"x", "y", "z"});
    for (int i = 0; i < 50; ++i) {
      auto a = testing::random_ratfunc(f, rng), b = testing::random_ratfunc(f, rng);
      auto ca = fp_coordinates(a), cb = fp_coordinates(b), cab = fp_coordinates(a + b);
      CHECK(reconstruct(f, ca) == a);
      // coordinates are additive because Frobenius is
      std::map<Residue, RatFunc> sum = ca.coords;
      for (const auto& [res, r] : cb.coords) {
        auto it = sum.find(res);
        if (it == sum.end())
          sum.emplace(res, r);
        else
          it->second += r;
      }
      std::erase_if(sum, [](const auto& kv) { return kv.second.is_zero(); });
      CHECK(sum == cab.coords);
      auto back = frobenius_root(frobenius_power(a));
      REQUIRE(back);
      CHECK(*back == a);
    }
  }
}

TEST_CASE("laurent monomial recognition") {
  auto f = make_field(3, {"x", "y"});
  auto x = var(f, "x"), y = var(f, "y");
  auto m = as_laurent_monomial(cst(f, 2) * x.pow(4) / y.pow(2));
  REQUIRE(m);
  CHECK(m->coeff == 2);
  CHECK(m->exp[0] == 4);
  CHECK(m->exp[1] == -2);
  CHECK(m->residue(3)[0] == 1);
  CHECK(m->residue(3)[1] == 1);
  CHECK(to_ratfunc(f, *m) == cst(f, 2) * x.pow(4) / y.pow(2));
  CHECK_FALSE(as_laurent_monomial(x + y));
}

TEST_CASE("matrix_rank_kernel examples") {
  auto f = make_field(2, {"x"});
  auto x = var(f, "x");
  auto id = RatMatrix::from_rows(f, {{cst(f, 1), cst(f, 0)}, {cst(f, 0), cst(f, 1)}});
  auto rk = matrix_rank_kernel(id);
  CHECK(rk.rank == 2);
  CHECK(rk.kernel.empty());

  auto m = RatMatrix::from_rows(f, {{x, x * x}, {cst(f, 1), x}});
  rk = matrix_rank_kernel(m);
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel.size() == 1);
  // kernel spanned by (x, 1); normalized with free entry 1 it is (-x, 1) = (x, 1) in char 2
  CHECK(rk.kernel[0][0] == x);
  CHECK(rk.kernel[0][1].is_one());

  CHECK_THROWS_AS(RatMatrix::from_rows(f, {{x}, {x, x}}), UsageError);
}

TEST_CASE("planted rank and specialization oracle") {
  std::mt19937_64 rng(99);
  auto f = make_field(3, {"x", "y"});
  testing::ExtensionFiniteField gf(3, 13, rng);
  for (int trial = 0; trial < 12; ++trial) {
    // 4x6 matrix as a product of 4x3 and 3x6 random factors: rank <= 3
    std::vector<RatVector> a(4), b(3);
    for (auto& row : a)
      for (int j = 0; j < 3; ++j) row.push_back(testing::random_ratfunc(f, rng, 2, 2, 0.2));
    for (auto& row : b)
      for (int j = 0; j < 6; ++j) row.push_back(testing::random_ratfunc(f, rng, 2, 2, 0.2));
    RatMatrix m(f, 4, 6);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        for (std::size_t k = 0; k < 3; ++k) m(i, j) += a[i][k] * b[k][j];
    for (Exec ex : {Exec::serial, Exec::parallel}) {
      auto rk = matrix_rank_kernel(m, ex);
      CHECK(rk.rank <= 3);
      CHECK(rk.rank + rk.kernel.size() == 6);
      for (const auto& v : rk.kernel)
        for (const auto& e : m.apply(v)) CHECK(e.is_zero());
      long s = testing::specialized_rank(m, gf, rng);
      if (s >= 0) CHECK(static_cast<std::size_t>(s) == rk.rank);
    }
  }
}

TEST_CASE("serial and parallel elimination agree") {
  std::mt19937_64 rng(3);
  auto f = make_field(2, {"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix m(f, 5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = testing::random_poly(f, rng, 2, 2, false);
    auto s = fraction_free_rref_serial(m), p = fraction_free_rref_parallel(m);
    CHECK(s.rank == p.rank);
    CHECK(s.pivot_cols == p.pivot_cols);
    CHECK(s.pivot == p.pivot);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) CHECK(s.reduced(i, j) == p.reduced(i, j));
  }
}

TEST_CASE("tensor residue rank kernels agree") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> d(0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Residue> base(6), gens(3);
    for (auto& r : base)
      for (std::size_t i = 0; i < 4; ++i) r[i] = static_cast<std::uint16_t>(d(rng));
    for (auto& r : gens)
      for (std::size_t i = 0; i < 4; ++i) r[i] = static_cast<std::uint16_t>(d(rng));
    CHECK(tensor_residue_rank_serial(base, gens, 5, 4) == tensor_residue_rank_parallel(base, gens, 5, 4));
  }
  // <<x>> over F_2: classes {0, 1}
  std::vector<Residue> one(1), x{Residue{1}};
  CHECK(tensor_residue_rank(one, x, 2, 1) == 2);
}

TEST_CASE("solve_linear examples") {
  auto f = make_field(2, {"x"});
  auto x = var(f, "x");
  auto s = solve_linear(RatMatrix::from_rows(f, {{cst(f, 1)}}), {x});
  REQUIRE(s);
  CHECK((*s)[0] == x);
  s = solve_linear(RatMatrix::from_rows(f, {{x}, {x * x}}), {cst(f, 1), x});
  REQUIRE(s);
  CHECK((*s)[0] == cst(f, 1) / x);
  CHECK_FALSE(solve_linear(RatMatrix::from_rows(f, {{x}, {cst(f, 1)}}), {cst(f, 1), cst(f, 1)}));
  CHECK_THROWS_AS(solve_linear(RatMatrix::from_rows(f, {{x}}), {x, x}), UsageError);
}
