#include "drees/hasse.hpp"

#include <functional>

namespace drees {

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Polynomial hasse_derivative(const Polynomial& f, const MultiIndex& alpha) {
  const Field& F = f.field();
  const std::size_t d = f.ring().nvars();
  for (std::size_t i = d; i < kMaxVars; ++i)
    if (alpha[i]) throw DomainError("multi-index longer than the variable list");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (!alpha.divides(t.m)) continue;
    mpz_class c = 1;
    for (std::size_t i = 0; i < d; ++i)
      if (alpha[i]) c *= binomial(t.m[i], alpha[i]);
    Scalar s = F.mul(t.c, F.from_mpz(c));
    if (F.is_zero(s)) continue;
    out.push_back({t.m / alpha, s});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial hasse_derivative(const Polynomial& f, const std::vector<unsigned>& alpha) {
  if (alpha.size() != f.ring().nvars())
    throw DomainError("multi-index has length " + std::to_string(alpha.size()) + ", ring has " +
                      std::to_string(f.ring().nvars()) + " variables");
  MultiIndex a;
  for (std::size_t i = 0; i < alpha.size(); ++i) a[i] = alpha[i];
  return hasse_derivative(f, a);
}

Polynomial hasse_derivative(const Polynomial& f, std::size_t var, unsigned r) {
  if (var >= f.ring().nvars()) throw DomainError("variable index out of range");
  MultiIndex a;
  a[var] = r;
  return hasse_derivative(f, a);
}

std::vector<MultiIndex> multi_indices(const std::vector<std::size_t>& active, unsigned max_total) {
  std::vector<MultiIndex> out;
  for (unsigned total = 0; total <= max_total; ++total) {
    MultiIndex cur;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
      if (pos == active.size()) {
        if (left == 0) out.push_back(cur);
        return;
      }
      for (unsigned x = left + 1; x-- > 0;) {
        cur[active[pos]] = x;
        rec(pos + 1, left - x);
      }
      cur[active[pos]] = 0;
    };
    rec(0, total);
  }
  return out;
}

std::vector<ReesGenerator> diff_closure_list(const Polynomial& f, unsigned n, const std::vector<std::string>& active) {
  if (n == 0) throw DomainError("weight must be at least 1");
  std::vector<std::size_t> idx;
  for (const auto& v : active) idx.push_back(f.ring().index(v));
  std::vector<ReesGenerator> out;
  for (const auto& alpha : multi_indices(idx, n - 1)) {
    Polynomial g = hasse_derivative(f, alpha);
    if (g.is_zero()) continue;
    for (unsigned w = n - alpha.degree(); w >= 1; --w) {
      bool dup = false;
      for (const auto& e : out)
        if (e.weight == w && e.poly.proportional(g)) {
          dup = true;
          break;
        }
      if (!dup) out.push_back({g, w});
    }
  }
  return out;
}

}  // namespace drees
