#pragma once

#include <string>
#include <vector>

#include "drees/polynomial.hpp"

namespace drees {

// Multi-indices reuse the exponent-vector type.
using MultiIndex = Monomial;

struct ReesGenerator {
  Polynomial poly;
  unsigned weight = 1;
};

// Coefficient of T^alpha in f(x + T).
Polynomial hasse_derivative(const Polynomial& f, const MultiIndex& alpha);
Polynomial hasse_derivative(const Polynomial& f, const std::vector<unsigned>& alpha);
// Single-variable Delta^r along `var`.
Polynomial hasse_derivative(const Polynomial& f, std::size_t var, unsigned r);

// All alpha supported on `active` with |alpha| <= max_total, ordered by |alpha| then lexicographically.
std::vector<MultiIndex> multi_indices(const std::vector<std::size_t>& active, unsigned max_total);

// (Delta^alpha f, n' - |alpha|) for 1 <= n' <= n, |alpha| < n', alpha on `active`.
// Zeros dropped; entries that repeat an earlier one up to a nonzero scalar at the same weight are dropped.
std::vector<ReesGenerator> diff_closure_list(const Polynomial& f, unsigned n, const std::vector<std::string>& active);

mpz_class binomial(unsigned n, unsigned k);

}  // namespace drees
