#include <doctest.h>

#include "support.hpp"

using namespace drees;
using testkit::Gen;

TEST_CASE("algebra files parse and round-trip") {
  ReesAlgebra G = parse_algebra("# cusp\nring: F2[Y,Z]\n\ngen: Z^2+Y^5 w 2\ngen: Y^4 w 1\n");
  CHECK(G.ring() == Ring::parse("F2[Y,Z]"));
  REQUIRE(G.size() == 2);
  CHECK(G.generators()[0].weight == 2);
  std::string out = emit_algebra(G);
  CHECK(out.find("#! generators: 2 max-weight: 2") != std::string::npos);
  ReesAlgebra back = parse_algebra(out);
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back.generators()[i].poly == G.generators()[i].poly);
    CHECK(back.generators()[i].weight == G.generators()[i].weight);
  }
  ReesAlgebra over = parse_algebra("ring: Q[Y,Z]\ngen: 3*Z+Y w 1\n", Field::parse("F3"));
  CHECK(over.ring() == Ring::parse("F3[Y,Z]"));
  CHECK(over.generators()[0].poly == parse_polynomial(over.ring(), "Y"));
}

TEST_CASE("random algebras round-trip through text") {
  Gen g(109);
  for (const char* spec : {"Q[X,Y,Z]", "F2[Y,Z]", "F4[X,Y]", "F9[A,B]"}) {
    Ring r = Ring::parse(spec);
    for (int i = 0; i < 10; ++i) {
      ReesAlgebra G(r);
      for (int k = 0; k < 3; ++k) G.add(testkit::nonzero_poly(r, g, 4, 5), 1 + static_cast<unsigned>(g.below(5)));
      ReesAlgebra back = parse_algebra(emit_algebra(G));
      CHECK(back.ring() == r);
      REQUIRE(back.size() == G.size());
      for (std::size_t k = 0; k < G.size(); ++k) {
        CHECK(back.generators()[k].poly == G.generators()[k].poly);
        CHECK(back.generators()[k].weight == G.generators()[k].weight);
      }
    }
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_algebra("gen: Z w 1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("ring: Q[Z]\nring: Q[Z]\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("ring: Q[Z]\ngen: Z\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("ring: Q[Z]\ngen: Z w 0\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("ring: Q[Z]\ngen: Z w two\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("ring: Q[Z]\ngen: Z-Z w 1\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("ring: Q[Z]\nfoo\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra(""), ParseError);
  CHECK_THROWS_AS(read_algebra_file("/nonexistent/file.rees"), DomainError);
}

TEST_CASE("elimination output format") {
  Ring Q = Ring::parse("Q[Y,Z]");
  ReesAlgebra G(Q);
  G.add(parse_polynomial(Q, "Z"), 1);
  G.add(parse_polynomial(Q, "Y^4"), 1);
  std::string out = emit_elimination(eliminate(G, {parse_polynomial(Q, "Z"), 1}, "Z"));
  CHECK(out.rfind("ring: Q[Y]\n", 0) == 0);
  CHECK(out.find("# from: Y^4 w 1 coeff 1") != std::string::npos);
  CHECK(out.find("#! generators: 1 max-weight: 1") != std::string::npos);
  CHECK(parse_algebra(out).size() == 1);
}

TEST_CASE("points") {
  Ring r = Ring::parse("F5[Y,Z]");
  CHECK(parse_point(r, "") == RationalPoint::origin(r));
  CHECK(parse_point(r, "1,3") == RationalPoint::of(r, {1, 3}));
  CHECK(parse_point(r, "Z=3") == RationalPoint::of(r, {0, 3}));
  CHECK(parse_point(r, " Z = -1 , Y=2") == RationalPoint::of(r, {2, 4}));
  CHECK_THROWS_AS(parse_point(r, "1"), ParseError);
  CHECK_THROWS_AS(parse_point(r, "Y=1,2"), ParseError);
  CHECK_THROWS_AS(parse_point(r, "Y"), ParseError);
  CHECK_THROWS_AS(parse_point(r, "W=1"), DomainError);
  Ring f4 = Ring::parse("F4[X]");
  CHECK(parse_point(f4, "t+1").coord(0).to_string() == "t+1");
}

TEST_CASE("scenario reports are deterministic and independent of the worker count") {
  for (const auto& name : scenario_names()) {
    if (name.find("random") == std::string::npos) continue;
    std::string a = run_scenario(name, 3, 1).render();
    std::string b = run_scenario(name, 3, 4).render();
    CHECK(a == b);
    CHECK(a.find("#! passed: ") != std::string::npos);
  }
  CHECK(run_scenario("thm6.6-random", 1, 2).steps != run_scenario("thm6.6-random", 2, 2).steps);
  CHECK_THROWS_AS(run_scenario("nope"), DomainError);
}

TEST_CASE("example scenarios pass their checks") {
  for (const char* name : {"ex6.9", "ex6.10", "ex5.14"}) {
    ScenarioReport rep = run_scenario(name);
    CHECK_MESSAGE(rep.passed(), rep.render());
    CHECK(!rep.checks.empty());
  }
}
