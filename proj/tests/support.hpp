#pragma once

// Shared test helpers: a seeded generator and brute-force oracles that avoid the
// library code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "drees/io.hpp"
#include "drees/scenario.hpp"

namespace testkit {

using namespace drees;

// splitmix64
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return next() & 1; }

 private:
  std::uint64_t s_;
};

inline Scalar scalar(const Field& F, Gen& g, bool nonzero = false) {
  if (F.finite()) {
    std::uint64_t q = F.size();
    return F.element_at(nonzero ? 1 + g.below(q - 1) : g.below(q));
  }
  long num = g.range(-9, 9), den = g.range(1, 4);
  if (nonzero && num == 0) num = 1;
  return F.from_rational(mpq_class(num, den));
}

inline Polynomial poly(const Ring& r, Gen& g, unsigned max_terms, unsigned max_deg) {
  std::vector<Term> ts;
  unsigned n = static_cast<unsigned>(g.below(max_terms + 1));
  for (unsigned i = 0; i < n; ++i) {
    Monomial m;
    unsigned budget = static_cast<unsigned>(g.below(max_deg + 1));
    for (unsigned k = 0; k < budget; ++k) ++m.e[g.below(r.nvars())];
    ts.push_back({m, scalar(r.field(), g, true)});
  }
  return Polynomial::from_terms(r, ts);
}

inline Polynomial nonzero_poly(const Ring& r, Gen& g, unsigned max_terms, unsigned max_deg) {
  for (;;) {
    Polynomial p = poly(r, g, std::max(1u, max_terms), max_deg);
    if (!p.is_zero()) return p;
  }
}

inline RationalPoint point(const Ring& r, Gen& g) {
  RationalPoint p = RationalPoint::origin(r);
  for (auto& c : p.coords) c = scalar(r.field(), g);
  return p;
}

inline const std::vector<std::string>& small_fields() {
  static const std::vector<std::string> f{"F2", "F3", "F4", "F5", "F7", "F8", "F9"};
  return f;
}

// Binomial coefficient reduced into F through Pascal's triangle (no factorials, no Lucas).
inline Scalar pascal(const Field& F, unsigned n, unsigned k) {
  std::vector<Scalar> row{F.one()};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Scalar> next(i + 1, F.zero());
    next[0] = next[i] = F.one();
    for (unsigned j = 1; j < i; ++j) next[j] = F.add(row[j - 1], row[j]);
    row = std::move(next);
  }
  return k <= n ? row[k] : F.zero();
}

// Hasse derivative term by term with Pascal coefficients.
inline Polynomial hasse_oracle(const Polynomial& f, const Monomial& alpha) {
  const Field& F = f.field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Scalar c = t.c;
    Monomial m = t.m;
    bool dead = false;
    for (std::size_t i = 0; i < f.ring().nvars(); ++i) {
      if (alpha.e[i] > t.m.e[i]) {
        dead = true;
        break;
      }
      c = F.mul(c, pascal(F, t.m.e[i], alpha.e[i]));
      m.e[i] -= alpha.e[i];
    }
    if (!dead && !F.is_zero(c)) out.push_back({m, c});
  }
  return Polynomial::from_terms(f.ring(), out);
}

// Smallest |alpha| with (Delta^alpha f)(p) != 0; 'inf' (UINT_MAX) for f = 0.
inline unsigned order_oracle(const Polynomial& f, const RationalPoint& p) {
  if (f.is_zero()) return ~0u;
  unsigned d = f.total_degree();
  for (unsigned k = 0; k <= d; ++k) {
    std::vector<unsigned> a(f.ring().nvars(), 0);
    std::function<bool(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i + 1 == a.size()) {
        a[i] = left;
        Monomial m;
        for (std::size_t j = 0; j < a.size(); ++j) m.e[j] = a[j];
        return !hasse_oracle(f, m).evaluate(p).is_zero();
      }
      for (unsigned x = 0; x <= left; ++x) {
        a[i] = x;
        if (rec(i + 1, left - x)) return true;
      }
      return false;
    };
    if (rec(0, k)) return k;
  }
  return ~0u;
}

// Determinant by the permutation expansion.
inline Polynomial det_oracle(const std::vector<std::vector<Polynomial>>& A, const Ring& r) {
  std::size_t n = A.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial d(r);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Polynomial t = Polynomial::constant(r, inv % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) t = t * A[i][perm[i]];
    d = d + t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return d;
}

// f monic univariate over F_q has a single root in the closure iff f = (Z^{p^s} - c)^m, p !| m.
inline bool single_root_oracle(const Polynomial& f) {
  const Field& F = f.field();
  std::uint32_t p = F.characteristic();
  unsigned b = f.degree_in(std::size_t(0));
  if (b == 0) return false;
  Polynomial Z = Polynomial::variable(f.ring(), std::size_t(0));
  unsigned ps = 1;
  while (b % (ps * p) == 0) ps *= p;
  unsigned m = b / ps;
  Scalar coef = F.zero();
  for (const auto& t : f.terms())
    if (t.m.e[0] == ps * (m - 1)) coef = t.c;
  // (Z^ps - c)^m has Z^{ps(m-1)} coefficient -m c.
  Scalar c = F.neg(F.div(coef, F.from_int(m)));
  return (Z.pow(ps) - Polynomial::constant(f.ring(), c)).pow(m) == f.monic();
}

// Exhaustive nu(I_k) at p over multisets of generators with weight sum >= k.
inline unsigned component_order_oracle(const ReesAlgebra& G, unsigned k, const RationalPoint& p) {
  const auto& gens = G.generators();
  std::vector<unsigned> ord;
  for (const auto& g : gens) ord.push_back(order_oracle(g.poly, p));
  unsigned best = ~0u;
  std::function<void(std::size_t, unsigned, unsigned)> rec = [&](std::size_t from, unsigned w, unsigned o) {
    if (o >= best) return;
    if (w >= k) {
      best = o;
      return;
    }
    for (std::size_t i = from; i < gens.size(); ++i)
      if (ord[i] != ~0u) rec(i, w + gens[i].weight, o + ord[i]);
  };
  rec(0, 0, 0);
  return best;
}

// Random algebra whose generators all vanish to order >= weight along `center`.
inline ReesAlgebra permissible_algebra(const Ring& r, const std::vector<std::string>& center, Gen& g,
                                       unsigned ngens, unsigned max_weight) {
  std::vector<std::size_t> cidx;
  for (const auto& c : center) cidx.push_back(r.index(c));
  ReesAlgebra A(r);
  for (unsigned k = 0; k < ngens; ++k) {
    unsigned n = 1 + static_cast<unsigned>(g.below(max_weight));
    std::vector<Term> ts;
    unsigned terms = 1 + static_cast<unsigned>(g.below(3));
    for (unsigned t = 0; t < terms; ++t) {
      Monomial m;
      for (unsigned j = 0; j < n; ++j) ++m.e[cidx[g.below(cidx.size())]];
      unsigned extra = static_cast<unsigned>(g.below(3));
      for (unsigned j = 0; j < extra; ++j) ++m.e[g.below(r.nvars())];
      ts.push_back({m, scalar(r.field(), g, true)});
    }
    Polynomial p = Polynomial::from_terms(r, ts);
    if (p.is_zero()) p = Polynomial::variable(r, cidx[0]).pow(n);
    A.add(p, n);
  }
  return A;
}

}  // namespace testkit
