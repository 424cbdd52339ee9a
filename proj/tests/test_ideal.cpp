#include <doctest.h>

#include "support.hpp"

using namespace drees;
using testkit::Gen;

namespace {

Polynomial P(const Ring& r, const char* s) { return parse_polynomial(r, s); }

Ideal I(const Ring& r, std::initializer_list<const char*> gens) {
  Ideal out(r);
  for (auto g : gens) out.add(P(r, g));
  return out;
}

std::vector<std::string> strs(const GroebnerBasis& G) {
  std::vector<std::string> v;
  for (const auto& g : G.basis()) v.push_back(g.to_string());
  return v;
}

// Buchberger's criterion, computed without the library's pair machinery.
bool s_pairs_reduce(const GroebnerBasis& G) {
  const auto& B = G.basis();
  const Field& F = G.ring().field();
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      Monomial l = Monomial::lcm(B[i].lm(), B[j].lm());
      Polynomial s = B[i].mul_term(l / B[i].lm(), F.inv(B[i].lc())) - B[j].mul_term(l / B[j].lm(), F.inv(B[j].lc()));
      if (!normal_form(s, B).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("reduced bases") {
  Ring R = Ring::parse("Q[Y,Z]");
  CHECK(strs(buchberger(I(R, {"Z", "Y^4"}))) == std::vector<std::string>{"Z", "Y^4"});
  CHECK(strs(buchberger(I(R, {"Z^2+Y^5", "2*Z", "5*Y^4"}))) == std::vector<std::string>{"Z", "Y^4"});
  CHECK(buchberger(Ideal(R, {Polynomial(R)})).basis().empty());
  CHECK(buchberger(I(R, {"Y*Z-1", "Y"})).is_unit());
}

TEST_CASE("membership") {
  Ring R = Ring::parse("Q[Y,Z]");
  GroebnerBasis G = buchberger(I(R, {"Z", "Y^4"}));
  CHECK(membership(P(R, "Z^2+Y^5"), G));
  CHECK(membership(P(R, "Z*Z+Y*Y^4"), G));
  CHECK_FALSE(membership(P(R, "1"), G));
  CHECK_FALSE(membership(P(R, "Y^3"), buchberger(I(R, {"Y^4"}))));
  CHECK_THROWS_AS(membership(P(Ring::parse("F2[Y,Z]"), "Z"), G), DomainError);
}

TEST_CASE("ideal equality") {
  Ring R = Ring::parse("Q[Y,Z]");
  CHECK(ideal_equal(I(R, {"Z", "Y^4"}), I(R, {"Z+Y^4", "Y^4"})));
  CHECK_FALSE(ideal_equal(I(R, {"Y^3"}), I(R, {"Y^4"})));
  CHECK(ideal_equal(I(R, {"Z^2+Y^5", "Z"}), I(R, {"Z", "Y^5"})));
}

TEST_CASE("rational zero sets") {
  Ring F3 = Ring::parse("F3[Y,Z]");
  auto z = rational_zero_set(I(F3, {"Z", "Y^4"}));
  REQUIRE(z.size() == 1);
  CHECK(z[0].is_origin());
  CHECK(rational_zero_set(Ideal(Ring::parse("F2[Y]"))).size() == 2);
  Ring F5 = Ring::parse("F5[Y]");
  auto w = rational_zero_set(I(F5, {"Y^2-1"}));
  REQUIRE(w.size() == 2);
  CHECK(w[0] == RationalPoint::of(F5, {1}));
  CHECK(w[1] == RationalPoint::of(F5, {4}));
  CHECK_THROWS_AS(rational_zero_set(I(Ring::parse("Q[Y]"), {"Y"})), DomainError);
  CHECK_THROWS_AS(rational_zero_set(I(Ring::parse("F101[A,B,C,D]"), {"A"})), ResourceError);
}

TEST_CASE("resource cap") {
  Ring R = Ring::parse("Q[X,Y,Z]");
  GroebnerOptions tiny;
  tiny.max_basis = 2;
  CHECK_THROWS_AS(buchberger(I(R, {"X^3-Y*Z", "Y^3-X*Z", "Z^3-X*Y"}), tiny), ResourceError);
}

TEST_CASE("zero set dimension") {
  Ring R = Ring::parse("Q[X,Y,Z]");
  CHECK(zero_set_dimension(buchberger(I(R, {"X", "Y", "Z"}))) == 0);
  CHECK(zero_set_dimension(buchberger(I(R, {"Z", "Y^2"}))) == 1);
  CHECK(zero_set_dimension(buchberger(I(R, {"X*Y"}))) == 2);
  CHECK(zero_set_dimension(buchberger(Ideal(R))) == 3);
  CHECK(zero_set_dimension(buchberger(I(R, {"X*Y-1", "X"}))) == -1);
}

TEST_CASE("random bases satisfy the S-pair criterion and contain their generators") {
  Gen g(41);
  for (const char* spec : {"Q[X,Y,Z]", "F2[X,Y,Z]", "F3[X,Y]", "F4[X,Y]", "F7[X,Y,Z]"}) {
    Ring r = Ring::parse(spec);
    for (int i = 0; i < 15; ++i) {
      Ideal J(r);
      unsigned n = 1 + static_cast<unsigned>(g.below(3));
      for (unsigned k = 0; k < n; ++k) J.add(testkit::poly(r, g, 3, 4));
      GroebnerBasis G = buchberger(J);
      CHECK(s_pairs_reduce(G));
      for (const auto& f : J.generators()) CHECK(membership(f, G));
      for (const auto& b : G.basis()) CHECK(r.field().is_one(b.lc()));
      // inter-reduced: no leading monomial divides another basis term.
      for (const auto& a : G.basis())
        for (const auto& b : G.basis())
          if (&a != &b)
            for (const auto& t : b.terms()) CHECK_FALSE(a.lm().divides(t.m));
    }
  }
}

TEST_CASE("normal form is linear and membership is an ideal property") {
  Gen g(43);
  for (const char* spec : {"Q[X,Y]", "F2[X,Y,Z]", "F5[X,Y]"}) {
    Ring r = Ring::parse(spec);
    for (int i = 0; i < 15; ++i) {
      Ideal J(r);
      for (int k = 0; k < 2; ++k) J.add(testkit::poly(r, g, 3, 3));
      GroebnerBasis G = buchberger(J);
      Polynomial a = testkit::poly(r, g, 4, 4), b = testkit::poly(r, g, 4, 4), h = testkit::poly(r, g, 3, 3);
      CHECK(G.normal_form(a + b) == G.normal_form(G.normal_form(a) + G.normal_form(b)));
      if (!J.generators().empty()) {
        Polynomial m = J.generators()[0] * h + (J.generators().size() > 1 ? J.generators()[1] * a : Polynomial(r));
        CHECK(membership(m, G));
        CHECK(membership(m * b, G));
      }
    }
  }
}

TEST_CASE("zero sets reverse containment") {
  Gen g(47);
  for (const char* spec : {"F2[X,Y,Z]", "F3[X,Y]", "F4[X,Y]"}) {
    Ring r = Ring::parse(spec);
    for (int i = 0; i < 15; ++i) {
      Ideal J(r);
      for (int k = 0; k < 2; ++k) J.add(testkit::poly(r, g, 3, 3));
      // K is generated by members of J, so V(J) lies inside V(K).
      Ideal K(r);
      for (const auto& f : J.generators()) K.add(f * testkit::poly(r, g, 2, 2));
      auto vj = rational_zero_set(J), vk = rational_zero_set(K);
      for (const auto& p : vj) CHECK(std::find(vk.begin(), vk.end(), p) != vk.end());
    }
  }
}
