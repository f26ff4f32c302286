#include "qlpf/random.hpp"

namespace qlpf {

MultiPoly random_poly(const Field& f, std::mt19937_64& rng, int max_terms, int max_deg, bool nonzero) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<std::uint32_t> coeff(1, f->p() - 1);
  std::uniform_int_distribution<std::size_t> pick_var(0, f->nvars() == 0 ? 0 : f->nvars() - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  for (;;) {
    std::vector<Term> terms;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
      Monomial m;
      const int d = f->nvars() == 0 ? 0 : deg(rng);
      for (int k = 0; k < d; ++k) {
        ++m.exp[pick_var(rng)];
        ++m.degree;
      }
      terms.push_back({m, coeff(rng)});
    }
    MultiPoly out(f, std::move(terms));
    if (!nonzero || !out.is_zero()) return out;
  }
}

RatFunc random_ratfunc(const Field& f, std::mt19937_64& rng, int max_terms, int max_deg, double frac_prob) {
  RatFunc num(random_poly(f, rng, max_terms, max_deg));
  if (std::bernoulli_distribution(frac_prob)(rng)) return num / RatFunc(random_poly(f, rng, 2, max_deg));
  return num;
}

RatFunc random_unit_monomial(const Field& f, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> e(-lo, hi);
  std::uniform_int_distribution<std::uint32_t> u(1, f->p() - 1);
  RatFunc out = RatFunc::constant(f, u(rng));
  for (std::size_t i = 0; i < f->nvars(); ++i) out *= RatFunc::variable(f, i).pow(e(rng));
  return out;
}

}  // namespace qlpf
