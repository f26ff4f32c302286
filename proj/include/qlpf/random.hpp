#pragma once

#include <random>

#include "qlpf/ratfunc.hpp"

namespace qlpf {

/// Sparse polynomial with 1..max_terms terms of total degree <= max_deg.
MultiPoly random_poly(const Field& f, std::mt19937_64& rng, int max_terms, int max_deg, bool nonzero = true);

/// Random polynomial, or with probability frac_prob a quotient of two.
RatFunc random_ratfunc(const Field& f, std::mt19937_64& rng, int max_terms = 3, int max_deg = 2,
                       double frac_prob = 0.3);

/// Unit times a Laurent monomial with exponents in [-lo, hi].
RatFunc random_unit_monomial(const Field& f, std::mt19937_64& rng, int lo = 1, int hi = 4);

}  // namespace qlpf
