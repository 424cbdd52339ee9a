#include "drees/elim.hpp"

#include <algorithm>

namespace drees {

namespace {

void check_modulus(const Polynomial& f, std::size_t var, const std::string& name) {
  if (f.is_zero() || f.degree_in(var) == 0 || !is_monic_in(f, var))
    throw DomainError(f.to_string() + " is not monic of positive degree in " + name);
}

}  // namespace

MultiplicationMatrix mult_matrix(const Polynomial& g, const Polynomial& f, const std::string& var) {
  if (g.ring() != f.ring()) throw DomainError("ring mismatch in multiplication matrix");
  const Ring& R = f.ring();
  std::size_t z = R.index(var);
  check_modulus(f, z, var);
  unsigned c = f.degree_in(z);
  Ring base = R.without(var);
  Polynomial elem = univ_divmod(g, f, var).remainder;
  MultiplicationMatrix M{f, elem, var, base, {}};
  M.entries.assign(c, std::vector<Polynomial>(c, Polynomial(base)));
  Polynomial col = elem;
  Polynomial Z = Polynomial::variable(R, z);
  for (unsigned j = 0; j < c; ++j) {
    if (j > 0) col = univ_divmod(col * Z, f, var).remainder;
    auto coeffs = coefficients_in(col, z, base);
    for (unsigned i = 0; i < c && i < coeffs.size(); ++i) M.entries[i][j] = coeffs[i];
  }
  return M;
}

std::vector<Polynomial> char_poly(const std::vector<std::vector<Polynomial>>& M, const Ring& base) {
  const std::size_t c = M.size();
  if (c == 0) return {};
  if (c > kCharPolyCap) throw ResourceError("characteristic polynomial of size " + std::to_string(c) + " exceeds the cap");
  std::vector<std::string> names = base.vars();
  std::string vname = next_name("_V", names);
  names.push_back(vname);
  Ring BV = base.with_vars(names);
  std::size_t v = BV.nvars() - 1;
  Polynomial V = Polynomial::variable(BV, v);
  // A = V*Id - M over base[V].
  std::vector<std::vector<Polynomial>> A(c, std::vector<Polynomial>(c, Polynomial(BV)));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (M[i][j].ring() != base) throw DomainError("matrix entry outside the base ring");
      A[i][j] = -M[i][j].embed(BV);
      if (i == j) A[i][j] += V;
    }
  // det by Laplace expansion over row subsets: D[mask] uses columns 0..|mask|-1.
  std::vector<Polynomial> D(std::size_t(1) << c, Polynomial(BV));
  D[0] = Polynomial::constant(BV, 1);
  for (std::size_t mask = 1; mask < D.size(); ++mask) {
    unsigned k = static_cast<unsigned>(__builtin_popcountll(mask));
    std::size_t col = k - 1;
    Polynomial acc(BV);
    unsigned pos = 0;
    for (std::size_t r = 0; r < c; ++r) {
      if (!(mask >> r & 1)) continue;
      const Polynomial& sub = D[mask & ~(std::size_t(1) << r)];
      if (!A[r][col].is_zero() && !sub.is_zero()) {
        Polynomial t = A[r][col] * sub;
        acc = ((pos + col) % 2 == 0) ? acc + t : acc - t;
      }
      ++pos;
    }
    D[mask] = std::move(acc);
  }
  auto coeffs = coefficients_in(D.back(), v, base);
  std::vector<Polynomial> h;
  for (std::size_t j = 1; j <= c; ++j) h.push_back(c - j < coeffs.size() ? coeffs[c - j] : Polynomial(base));
  return h;
}

std::vector<Polynomial> char_poly(const MultiplicationMatrix& M) { return char_poly(M.entries, M.base); }

EliminationResult eliminate(const ReesAlgebra& G, const ReesGenerator& f, const std::string& var,
                            const EliminationOptions& opt) {
  const Ring& R = G.ring();
  if (f.poly.ring() != R) throw DomainError("monic generator outside the algebra's ring");
  std::size_t z = R.index(var);
  check_modulus(f.poly, z, var);
  unsigned c = f.poly.degree_in(z);
  if (opt.check_transversal) {
    Order o = order_at_origin(f.poly);
    if (c != f.weight || o.is_infinite() || o.value() != f.weight)
      throw DomainError("transversality fails for " + f.poly.to_string() + ": degree in " + var + " is " +
                        std::to_string(c) + ", order is " + o.to_string() + ", weight is " + std::to_string(f.weight));
  }
  ReesAlgebra with_f = G;
  if (!with_f.contains(f.poly, f.weight)) with_f.add(f);
  ReesAlgebra sat = diff_saturate(with_f, {var});
  Ring base = R.without(var);
  EliminationResult res{base, ReesAlgebra(base), {}, {}};
  for (const auto& g : sat.generators()) {
    MultiplicationMatrix M = mult_matrix(g.poly, f.poly, var);
    if (M.element.is_zero()) continue;
    auto h = char_poly(M);
    for (unsigned j = 1; j <= h.size(); ++j) {
      if (h[j - 1].is_zero()) continue;
      if (res.algebra.add_unique(h[j - 1], j * g.weight)) res.provenance.push_back({g.poly, g.weight, j});
    }
  }
  if (res.algebra.empty())
    res.warnings.push_back("every characteristic-polynomial coefficient vanished; the result is the zero algebra");
  return res;
}

Rational monomial_slope(const ReesAlgebra& A) {
  if (A.ring().nvars() != 1) throw DomainError("slope comparison needs a one-variable ring, got " + A.ring().spec());
  if (A.empty()) throw DomainError("slope of an algebra with no generators");
  std::optional<Rational> best;
  for (const auto& g : A.generators()) {
    if (!g.poly.is_monomial())
      throw DomainError("slope comparison needs monomial generators, got " + g.poly.to_string());
    Rational s(g.poly.lm().degree(), g.weight);
    s.canonicalize();
    if (!best || s < *best) best = s;
  }
  return *best;
}

bool slope_equivalent(const ReesAlgebra& A, const ReesAlgebra& B) {
  if (A.ring() != B.ring()) throw DomainError("slope comparison across different rings");
  return monomial_slope(A) == monomial_slope(B);
}

}  // namespace drees
