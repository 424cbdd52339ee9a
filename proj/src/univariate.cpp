#include "drees/polynomial.hpp"

namespace drees {

std::optional<std::size_t> sole_variable(const Polynomial& f) {
  std::optional<std::size_t> v;
  for (std::size_t i = 0; i < f.ring().nvars(); ++i) {
    if (!f.involves(i)) continue;
    if (v) throw DomainError("expected a univariate polynomial, got " + f.to_string());
    v = i;
  }
  return v;
}

Polynomial univ_derivative(const Polynomial& f, std::size_t var) {
  const Field& F = f.field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.m[var] == 0) continue;
    Scalar c = F.mul(t.c, F.from_int(static_cast<long>(t.m[var])));
    if (F.is_zero(c)) continue;
    Monomial m = t.m;
    m[var] -= 1;
    out.push_back({m, c});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

namespace {

std::size_t common_variable(const Polynomial& a, const Polynomial& b) {
  auto va = sole_variable(a), vb = sole_variable(b);
  if (va && vb && *va != *vb) throw DomainError("polynomials in different variables");
  if (va) return *va;
  if (vb) return *vb;
  return 0;
}

}  // namespace

Polynomial univ_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) throw DomainError("ring mismatch in gcd");
  std::size_t var = common_variable(a, b);
  const std::string& name = a.ring().vars()[var];
  Polynomial x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = univ_divmod(x, y, name).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

Polynomial univ_radical(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("radical of zero");
  auto v = sole_variable(f);
  Polynomial g = f.monic();
  if (!v) return Polynomial::constant(f.ring(), 1);
  std::size_t var = *v;
  const std::string& name = f.ring().vars()[var];
  const Field& F = f.field();
  Polynomial d = univ_derivative(g, var);
  if (d.is_zero()) {
    // g = h(Z^p): peel the p-th power.
    std::uint32_t p = F.characteristic();
    std::vector<Term> h;
    for (const auto& t : g.terms()) {
      Monomial m = t.m;
      m[var] /= p;
      h.push_back({m, F.pth_root(t.c)});
    }
    return univ_radical(Polynomial::from_terms(f.ring(), std::move(h)));
  }
  Polynomial c = univ_gcd(g, d);
  Polynomial w = univ_divmod(g, c, name).quotient;
  if (c.is_constant()) return w.monic();
  Polynomial rc = univ_radical(c);
  Polynomial extra = univ_divmod(rc, univ_gcd(w, rc), name).quotient;
  return (w * extra).monic();
}

}  // namespace drees
