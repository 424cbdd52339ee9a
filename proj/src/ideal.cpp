#include "drees/ideal.hpp"

#include <algorithm>
#include <set>

namespace drees {

Ideal::Ideal(Ring r, const std::vector<Polynomial>& gens) : ring_(std::move(r)) {
  for (const auto& g : gens) add(g);
}

void Ideal::add(const Polynomial& g) {
  if (g.ring() != ring_) throw DomainError("generator outside the ideal's ring");
  if (!g.is_zero()) gens_.push_back(g);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const Field& F = f.field();
  std::vector<Term> rest;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    const Polynomial* div = nullptr;
    for (const auto& g : divisors)
      if (g.lm().divides(lt.m)) {
        div = &g;
        break;
      }
    if (div) {
      Scalar c = F.is_one(div->lc()) ? lt.c : F.div(lt.c, div->lc());
      p = p.sub_mul(lt.m / div->lm(), c, *div);
    } else {
      rest.push_back(lt);
      p = p.tail();
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(rest));
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (f.ring() != ring_) throw DomainError("ring mismatch in normal form");
  return drees::normal_form(f, basis_);
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
  return ring_ == o.ring_ && basis_ == o.basis_;
}

namespace {

Polynomial spoly(const Polynomial& a, const Polynomial& b) {
  Monomial l = Monomial::lcm(a.lm(), b.lm());
  const Field& F = a.field();
  Polynomial x = a.mul_term(l / a.lm(), F.inv(a.lc()));
  return x.sub_mul(l / b.lm(), F.inv(b.lc()), b);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

std::uint64_t key(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& I, const GroebnerOptions& opt) {
  std::vector<Polynomial> G;
  std::vector<Pair> pairs;
  std::set<std::uint64_t> pending;

  auto insert = [&](Polynomial h) {
    h = h.monic();
    std::size_t n = G.size();
    for (std::size_t i = 0; i < n; ++i) {
      pairs.push_back({i, n, Monomial::lcm(G[i].lm(), h.lm())});
      pending.insert(key(i, n));
    }
    G.push_back(std::move(h));
    if (G.size() > opt.max_basis)
      throw ResourceError("Groebner basis exceeded " + std::to_string(opt.max_basis) + " elements");
  };

  for (const auto& g : I.generators()) {
    Polynomial h = normal_form(g, G);
    if (!h.is_zero()) insert(std::move(h));
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first; ties broken by pair indices for determinism.
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      int c = grevlex_cmp(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pr = *best;
    *best = pairs.back();
    pairs.pop_back();
    pending.erase(key(pr.i, pr.j));

    const Polynomial& a = G[pr.i];
    const Polynomial& b = G[pr.j];
    if (a.lm().coprime(b.lm())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!G[k].lm().divides(pr.lcm)) continue;
      if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chain = true;
    }
    if (chain) continue;
    Polynomial h = normal_form(spoly(a, b), G);
    if (!h.is_zero()) insert(std::move(h));
  }

  // Minimalize, then tail-reduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !G[j].lm().divides(G[i].lm())) continue;
      if (!(G[j].lm() == G[i].lm()) || j < i) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial lead = Polynomial::monomial(I.ring(), minimal[i].lm(), minimal[i].lc());
    reduced.push_back((lead + normal_form(minimal[i].tail(), others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& a, const Polynomial& b) { return grevlex_cmp(a.lm(), b.lm()) < 0; });
  return GroebnerBasis(I.ring(), std::move(reduced));
}

bool membership(const Polynomial& f, const GroebnerBasis& G) { return G.normal_form(f).is_zero(); }

bool ideal_equal(const Ideal& I, const Ideal& J, const GroebnerOptions& opt) {
  if (I.ring() != J.ring()) throw DomainError("ring mismatch in ideal comparison");
  return buchberger(I, opt) == buchberger(J, opt);
}

int zero_set_dimension(const GroebnerBasis& G) {
  if (G.is_unit()) return -1;
  const std::size_t n = G.ring().nvars();
  // Largest set of variables containing the support of no leading monomial.
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool free = true;
    for (const auto& g : G.basis()) {
      const Monomial& m = g.lm();
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (m.e[i] && !(mask >> i & 1)) inside = false;
      if (inside) {
        free = false;
        break;
      }
    }
    if (free) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

std::uint64_t point_count(const Ring& r) {
  std::uint64_t q = r.field().size();
  long double total = 1;
  for (std::size_t i = 0; i < r.nvars(); ++i) total *= static_cast<long double>(q);
  if (total > 1e18L) return UINT64_MAX;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < r.nvars(); ++i) n *= q;
  return n;
}

void for_each_point(const Ring& r, const std::function<bool(const RationalPoint&)>& visit, std::uint64_t budget) {
  if (!r.field().finite()) throw DomainError("cannot enumerate points over an infinite field");
  std::uint64_t total = point_count(r);
  if (total > budget)
    throw ResourceError("point scan of " + r.spec() + " exceeds the budget of " + std::to_string(budget) + " points");
  std::uint64_t q = r.field().size();
  std::vector<Scalar> elems;
  for (std::uint64_t i = 0; i < q; ++i) elems.push_back(r.field().element_at(i));
  std::vector<std::uint64_t> idx(r.nvars(), 0);
  RationalPoint p = RationalPoint::origin(r);
  for (std::uint64_t n = 0; n < total; ++n) {
    for (std::size_t i = 0; i < idx.size(); ++i) p.coords[i] = elems[idx[i]];
    if (!visit(p)) return;
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < q) break;
      idx[i] = 0;
    }
  }
}

std::vector<RationalPoint> rational_zero_set(const Ideal& I, std::uint64_t budget) {
  std::vector<RationalPoint> out;
  for_each_point(
      I.ring(),
      [&](const RationalPoint& p) {
        for (const auto& g : I.generators())
          if (!g.evaluate(p).is_zero()) return true;
        out.push_back(p);
        return true;
      },
      budget);
  return out;
}

}  // namespace drees
