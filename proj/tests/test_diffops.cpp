#include <doctest.h>

#include "support.hpp"

using namespace drees;
using testkit::Gen;

namespace {

Polynomial P(const Ring& r, const char* s) { return parse_polynomial(r, s); }

bool has(const std::vector<ReesGenerator>& L, const Polynomial& f, unsigned w) {
  for (const auto& g : L)
    if (g.weight == w && g.poly == f) return true;
  return false;
}

// Formal partial derivative, term by term.
Polynomial partial(const Polynomial& f, std::size_t v) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (!t.m.e[v]) continue;
    Monomial m = t.m;
    --m.e[v];
    out.push_back({m, f.field().mul(t.c, f.field().from_int(t.m.e[v]))});
  }
  return Polynomial::from_terms(f.ring(), out);
}

}  // namespace

TEST_CASE("Hasse derivative examples") {
  Ring R = Ring::parse("Q[Y,Z]");
  CHECK(hasse_derivative(P(R, "Z^2+Y^5"), std::vector<unsigned>{0, 1}) == P(R, "2*Z"));
  for (unsigned n = 0; n < 7; ++n) {
    Polynomial Zn = Polynomial::variable(R, 1).pow(n);
    CHECK(hasse_derivative(Zn, 1, n) == P(R, "1"));
    CHECK(hasse_derivative(Zn, 1, n + 1).is_zero());
  }
  Ring F2 = Ring::parse("F2[X,Y]");
  CHECK(hasse_derivative(P(F2, "X^4+X^2*Y^5"), std::vector<unsigned>{2, 1}) == P(F2, "Y^4"));
  CHECK_THROWS_AS(hasse_derivative(P(R, "Z"), std::vector<unsigned>{1}), DomainError);
}

TEST_CASE("Hasse derivatives match the Pascal-triangle oracle") {
  Gen g(21);
  for (const char* spec : {"Q[X,Y,Z]", "F2[X,Y,Z]", "F3[X,Y]", "F4[X,Y]", "F5[X,Y]"}) {
    Ring r = Ring::parse(spec);
    for (int i = 0; i < 40; ++i) {
      Polynomial f = testkit::poly(r, g, 5, 9);
      Monomial a;
      for (std::size_t v = 0; v < r.nvars(); ++v) a.e[v] = static_cast<std::uint32_t>(g.below(5));
      CHECK(hasse_derivative(f, a) == testkit::hasse_oracle(f, a));
    }
  }
}

TEST_CASE("closure lists") {
  Ring Q = Ring::parse("Q[Y,Z]");
  auto L = diff_closure_list(P(Q, "Z^2+Y^5"), 2, {"Y", "Z"});
  CHECK(has(L, P(Q, "Z^2+Y^5"), 2));
  CHECK(has(L, P(Q, "Z^2+Y^5"), 1));
  CHECK(has(L, P(Q, "2*Z"), 1));
  CHECK(has(L, P(Q, "5*Y^4"), 1));
  CHECK(L.size() == 4);
  Polynomial any = P(Q, "Y^3*Z+7");
  L = diff_closure_list(any, 1, {"Y", "Z"});
  REQUIRE(L.size() == 1);
  CHECK(L[0].poly == any);
  CHECK(L[0].weight == 1);
  Ring F2 = Ring::parse("F2[Y,Z]");
  L = diff_closure_list(P(F2, "Z^2+Y^5"), 2, {"Z"});
  CHECK(L.size() == 2);
  CHECK(has(L, P(F2, "Z^2+Y^5"), 2));
  CHECK(has(L, P(F2, "Z^2+Y^5"), 1));
}

TEST_CASE("Taylor identity") {
  Gen g(23);
  for (const char* spec : {"Q[X,Y]", "F2[X,Y]", "F3[X,Y]", "F4[X,Y]"}) {
    Ring r = Ring::parse(spec);
    Ring rt(r.field(), {"X", "Y", "T"});
    Polynomial T = Polynomial::variable(rt, 2);
    for (int i = 0; i < 25; ++i) {
      Polynomial f = testkit::poly(r, g, 4, 8);
      std::size_t v = g.below(2);
      Polynomial shifted = f.embed(rt).substitute({{r.vars()[v], Polynomial::variable(rt, v) + T}});
      Polynomial sum(rt);
      for (unsigned k = 0; k <= f.total_degree(); ++k) sum += hasse_derivative(f, v, k).embed(rt) * T.pow(k);
      CHECK(sum == shifted);
    }
  }
}

TEST_CASE("Leibniz rule and composition") {
  Gen g(29);
  for (const char* spec : {"Q[X,Y]", "F2[X,Y]", "F3[X,Y]", "F9[X,Y]"}) {
    Ring r = Ring::parse(spec);
    for (int i = 0; i < 20; ++i) {
      Polynomial f = testkit::poly(r, g, 3, 5), h = testkit::poly(r, g, 3, 5);
      Monomial a;
      a.e[0] = static_cast<std::uint32_t>(g.below(4));
      a.e[1] = static_cast<std::uint32_t>(g.below(4));
      Polynomial rhs(r);
      for (unsigned b0 = 0; b0 <= a.e[0]; ++b0)
        for (unsigned b1 = 0; b1 <= a.e[1]; ++b1) {
          Monomial b, c;
          b.e[0] = b0, b.e[1] = b1, c.e[0] = a.e[0] - b0, c.e[1] = a.e[1] - b1;
          rhs += hasse_derivative(f, b) * hasse_derivative(h, c);
        }
      CHECK(hasse_derivative(f * h, a) == rhs);
      unsigned s = static_cast<unsigned>(g.below(4)), t = static_cast<unsigned>(g.below(4));
      Scalar c = r.field().from_mpz(binomial(s + t, s));
      CHECK(hasse_derivative(hasse_derivative(f, 0, t), 0, s) == hasse_derivative(f, 0, s + t).scale(c));
    }
  }
}

TEST_CASE("characteristic zero: factorial times Hasse derivative is the iterated partial") {
  Gen g(31);
  Ring r = Ring::parse("Q[X,Y,Z]");
  for (int i = 0; i < 30; ++i) {
    Polynomial f = testkit::poly(r, g, 4, 7);
    Monomial a;
    Polynomial d = f;
    mpz_class fact = 1;
    for (std::size_t v = 0; v < 3; ++v) {
      a.e[v] = static_cast<std::uint32_t>(g.below(3));
      for (unsigned k = 1; k <= a.e[v]; ++k) {
        d = partial(d, v);
        fact *= k;
      }
    }
    CHECK(hasse_derivative(f, a).scale(r.field().from_mpz(fact)) == d);
  }
}

TEST_CASE("multi-index enumeration") {
  auto all = multi_indices({0, 2}, 2);
  CHECK(all.size() == 6);  // |alpha| <= 2 in two active variables
  for (const auto& a : all) {
    CHECK(a.e[1] == 0);
    CHECK(a.degree() <= 2);
  }
  CHECK(all.front().degree() == 0);
}
