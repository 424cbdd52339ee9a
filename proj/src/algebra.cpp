#include "drees/algebra.hpp"

#include <algorithm>
#include <functional>

namespace drees {

ReesAlgebra::ReesAlgebra(Ring r, const std::vector<ReesGenerator>& gens) : ring_(std::move(r)) {
  for (const auto& g : gens) add(g);
}

unsigned ReesAlgebra::max_weight() const {
  unsigned w = 0;
  for (const auto& g : gens_) w = std::max(w, g.weight);
  return w;
}

void ReesAlgebra::add(const Polynomial& g, unsigned weight) {
  if (g.ring() != ring_) throw DomainError("generator outside the algebra's ring");
  if (g.is_zero()) throw DomainError("zero generator");
  if (weight == 0) throw DomainError("generator weight must be at least 1");
  gens_.push_back({g, weight});
  saturated_.clear();
}

bool ReesAlgebra::contains(const Polynomial& g, unsigned weight) const {
  for (const auto& e : gens_)
    if (e.weight == weight && e.poly.proportional(g)) return true;
  return false;
}

bool ReesAlgebra::add_unique(const Polynomial& g, unsigned weight) {
  if (contains(g, weight)) return false;
  add(g, weight);
  return true;
}

ReesAlgebra ReesAlgebra::normalized() const {
  ReesAlgebra out(ring_);
  for (const auto& g : gens_) out.add_unique(g.poly.monic(), g.weight);
  out.saturated_ = saturated_;
  return out;
}

std::string ReesAlgebra::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += "(" + gens_[i].poly.to_string() + ")W^" + std::to_string(gens_[i].weight);
  }
  return s + "}";
}

ReesAlgebra diff_saturate(const ReesAlgebra& G, const std::vector<std::string>& active) {
  ReesAlgebra out(G.ring());
  for (const auto& v : active) G.ring().index(v);
  for (const auto& g : G.generators())
    for (const auto& d : diff_closure_list(g.poly, g.weight, active)) out.add_unique(d.poly, d.weight);
  out.mark_saturated(active);
  return out;
}

ReesAlgebra diff_saturate(const ReesAlgebra& G) { return diff_saturate(G, G.ring().vars()); }

Ideal singular_ideal(const ReesAlgebra& G) {
  const Ring& R = G.ring();
  std::vector<std::size_t> all(R.nvars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Ideal I(R);
  std::vector<Polynomial> seen;
  for (const auto& g : G.generators())
    for (const auto& alpha : multi_indices(all, g.weight - 1)) {
      Polynomial d = hasse_derivative(g.poly, alpha);
      if (d.is_zero()) continue;
      bool dup = std::any_of(seen.begin(), seen.end(), [&](const Polynomial& s) { return s.proportional(d); });
      if (dup) continue;
      seen.push_back(d);
      I.add(d);
    }
  return I;
}

bool in_singular_locus(const ReesAlgebra& G, const RationalPoint& p) {
  for (const auto& g : G.generators())
    if (!(order_at(g.poly, p) >= g.weight)) return false;
  return true;
}

std::vector<RationalPoint> singular_points(const ReesAlgebra& G, std::uint64_t budget) {
  return rational_zero_set(singular_ideal(G), budget);
}

Order component_order(const ReesAlgebra& G, unsigned k, const RationalPoint& at) {
  if (k == 0) throw DomainError("component index must be at least 1");
  std::vector<Order> nu;
  for (const auto& g : G.generators()) nu.push_back(order_at(g.poly, at));
  std::vector<Order> dp(k + 1, Order::infinity());
  dp[0] = Order(0);
  for (unsigned w = 1; w <= k; ++w)
    for (std::size_t i = 0; i < nu.size(); ++i) {
      unsigned n = G.generators()[i].weight;
      Order cand = nu[i] + dp[w > n ? w - n : 0];
      dp[w] = std::min(dp[w], cand);
    }
  return dp[k];
}

Rational ord_at_point(const ReesAlgebra& G, const RationalPoint& at) {
  if (G.empty()) throw DomainError("ord of an algebra with no generators");
  if (at.ring != G.ring()) throw DomainError("point outside the algebra's ring");
  std::optional<Rational> best;
  for (const auto& g : G.generators()) {
    Rational r(order_at(g.poly, at).value(), g.weight);
    r.canonicalize();
    if (!best || r < *best) best = r;
  }
  return *best;
}

bool is_simple(const ReesAlgebra& G, const RationalPoint& at) {
  if (!in_singular_locus(G, at)) throw DomainError("point " + at.to_string() + " is not in the singular locus");
  return ord_at_point(G, at) == 1;
}

unsigned e0_invariant(const ReesAlgebra& G, const RationalPoint& at) {
  if (!is_simple(G, at)) throw DomainError("e0 needs a simple point");
  std::uint32_t p = G.ring().field().characteristic();
  if (p == 0) return 0;
  unsigned maxw = G.max_weight();
  std::uint64_t q = 1;
  for (unsigned e = 0; q <= maxw; ++e, q *= p) {
    Order o = component_order(G, static_cast<unsigned>(q), at);
    if (!o.is_infinite() && o.value() == q) return e;
  }
  throw DomainError("no component I_{p^e} of order p^e within the generator weights; is the algebra saturated?");
}

namespace {

// Rank of a list of coefficient vectors over F.
unsigned rank(const Field& F, std::vector<std::vector<Scalar>> rows) {
  unsigned r = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && F.is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Scalar inv = F.inv(rows[r][c]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || F.is_zero(rows[i][c])) continue;
      Scalar f = F.mul(rows[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace

unsigned tau_estimate(const ReesAlgebra& G, const RationalPoint& at) {
  if (!is_simple(G, at)) throw DomainError("tau needs a simple point");
  const Field& F = G.ring().field();
  const std::size_t d = G.ring().nvars();
  std::uint32_t p = F.characteristic();
  std::vector<std::vector<Scalar>> forms;
  for (const auto& g : G.generators()) {
    Polynomial h = recenter(g.poly, at);
    Order nu = order_at_origin(h);
    if (nu.is_infinite() || nu.value() != g.weight) continue;
    unsigned w = g.weight;
    unsigned e = 0;
    if (p == 0) {
      if (w != 1) continue;
    } else {
      unsigned q = 1;
      while (q < w) {
        q *= p;
        ++e;
      }
      if (q != w) continue;
    }
    Polynomial in = initial_form(h);
    std::vector<Scalar> row(d, F.zero());
    bool diagonal = true;
    for (const auto& t : in.terms()) {
      std::size_t var = d;
      for (std::size_t i = 0; i < d; ++i)
        if (t.m[i]) {
          if (var != d) diagonal = false;
          var = i;
        }
      if (!diagonal || var == d || t.m[var] != w) {
        diagonal = false;
        break;
      }
      Scalar c = t.c;
      for (unsigned k = 0; k < e; ++k) c = F.pth_root(c);
      row[var] = c;
    }
    if (diagonal) forms.push_back(std::move(row));
  }
  return rank(F, std::move(forms));
}

Ideal degree_ideal(const ReesAlgebra& G, unsigned k, std::size_t max_products) {
  if (k == 0) throw DomainError("component index must be at least 1");
  const auto& gens = G.generators();
  Ideal I(G.ring());
  std::vector<Polynomial> seen;
  std::vector<std::size_t> chosen;
  std::size_t count = 0;
  std::function<void(std::size_t, unsigned, const Polynomial&)> rec = [&](std::size_t start, unsigned sum,
                                                                         const Polynomial& prod) {
    if (sum >= k) {
      unsigned lightest = ~0u;
      for (auto i : chosen) lightest = std::min(lightest, gens[i].weight);
      if (sum - lightest >= k) return;
      if (++count > max_products) throw ResourceError("degree ideal enumeration exceeded its product cap");
      if (std::none_of(seen.begin(), seen.end(), [&](const Polynomial& s) { return s.proportional(prod); })) {
        seen.push_back(prod);
        I.add(prod);
      }
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      chosen.push_back(i);
      rec(i, sum + gens[i].weight, prod * gens[i].poly);
      chosen.pop_back();
    }
  };
  rec(0, 0, Polynomial::constant(G.ring(), 1));
  return I;
}

std::vector<GroebnerBasis> degree_ideal_bases(const ReesAlgebra& G, unsigned kmax, const GroebnerOptions& opt) {
  std::vector<GroebnerBasis> out;
  for (unsigned k = 1; k <= kmax; ++k) {
    Ideal I(G.ring());
    for (const auto& g : G.generators()) {
      if (g.weight >= k) {
        I.add(g.poly);
        continue;
      }
      for (const auto& b : out[k - g.weight - 1].basis()) I.add(g.poly * b);
    }
    out.push_back(buchberger(I, opt));
  }
  return out;
}

}  // namespace drees
