#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace drees;
using testkit::Gen;

namespace {

FieldElement el(const Field& F, const Scalar& s) { return {F, s}; }

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  Field Q = Field::rationals();
  FieldElement a(Q, Q.from_rational(mpq_class(2, 3))), b(Q, Q.from_rational(mpq_class(1, 6)));
  CHECK((a + b).to_string() == "5/6");
  CHECK(field_arith(a, b, ArithOp::Div).to_string() == "4");
  CHECK_THROWS_AS(a / FieldElement(Q, 0), DomainError);
}

TEST_CASE("prime field products reduce") {
  Field F5 = Field::prime(5);
  CHECK(field_arith(FieldElement(F5, 3), FieldElement(F5, 4), ArithOp::Mul) == FieldElement(F5, 2));
  CHECK(FieldElement(F5, -1) == FieldElement(F5, 4));
}

TEST_CASE("inverse of t in F4 matches brute force") {
  Field F4 = Field::parse("F4");
  Scalar t = F4.gen();
  std::optional<FieldElement> found;
  for (const auto& x : F4.elements())
    if (F4.is_one(F4.mul(x.value(), t))) found = x;
  REQUIRE(found);
  CHECK(found->to_string() == "t+1");
  CHECK(el(F4, F4.inv(t)) == *found);
}

TEST_CASE("p-th roots") {
  Field F5 = Field::prime(5), F4 = Field::parse("F4");
  CHECK(el(F5, F5.pth_root(F5.from_int(3))) == FieldElement(F5, 3));
  CHECK(F4.is_zero(F4.pth_root(F4.zero())));
  // Brute force: the element whose square is t.
  std::vector<FieldElement> roots;
  for (const auto& x : F4.elements())
    if (F4.equal(F4.mul(x.value(), x.value()), F4.gen())) roots.push_back(x);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].to_string() == "t+1");
  CHECK(el(F4, F4.pth_root(F4.gen())) == roots[0]);
  CHECK_THROWS_AS(Field::rationals().pth_root(Field::rationals().one()), DomainError);
}

TEST_CASE("element enumeration") {
  auto names = [](const Field& F) {
    std::vector<std::string> v;
    for (const auto& x : F.elements()) v.push_back(x.to_string());
    return v;
  };
  CHECK(names(Field::prime(3)) == std::vector<std::string>{"0", "1", "2"});
  CHECK(names(Field::parse("F4")) == std::vector<std::string>{"0", "1", "t", "t+1"});
  auto f25 = names(Field::parse("F25"));
  CHECK(f25.size() == 25);
  CHECK(std::set<std::string>(f25.begin(), f25.end()).size() == 25);
  CHECK_THROWS_AS(Field::rationals().elements(), DomainError);
}

TEST_CASE("field spec parsing") {
  CHECK(Field::parse("Q").spec() == "Q");
  CHECK(Field::parse("F5").size() == 5);
  CHECK(Field::parse("F4:t^2+t+1") == Field::parse("F4"));
  CHECK(Field::parse("F9").size() == 9);
  CHECK(Field::parse("F8:a^3+a+1").generator_name() == "a");
  CHECK_THROWS_AS(Field::parse("F6"), DomainError);
  CHECK_THROWS(Field::parse("F4:t^2+1"));  // (t+1)^2 over F2
  CHECK_THROWS(Field::parse("F9:t^2+t"));
  CHECK(Field::parse("F625").degree() == 4);
  CHECK_THROWS_AS(Field::parse("F3125"), DomainError);  // k = 4 is the largest supported degree
}

TEST_CASE("irreducibility test against root search") {
  // Degree 2 and 3 polynomials are irreducible iff they have no root.
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned deg : {2u, 3u}) {
      std::vector<std::uint32_t> f(deg + 1, 0);
      f[deg] = 1;
      std::uint64_t count = 1;
      for (unsigned i = 0; i < deg; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < deg; ++i) {
          f[i] = c % p;
          c /= p;
        }
        bool root = false;
        for (std::uint64_t x = 0; x < p; ++x) {
          std::uint64_t v = 0;
          for (unsigned i = deg + 1; i-- > 0;) v = (v * x + f[i]) % p;
          if (v == 0) root = true;
        }
        CHECK(is_irreducible_mod_p(f, p) == !root);
      }
    }
  }
}

TEST_CASE("field laws on random elements") {
  Gen g(11);
  for (const char* spec : {"Q", "F2", "F3", "F4", "F5", "F7", "F8", "F9", "F16", "F25", "F27", "F49", "F13"}) {
    Field F = Field::parse(spec);
    for (int i = 0; i < 60; ++i) {
      FieldElement a(F, testkit::scalar(F, g)), b(F, testkit::scalar(F, g)), c(F, testkit::scalar(F, g));
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == FieldElement(F, 0));
      if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement(F, 1));
    }
  }
}

TEST_CASE("frobenius inverse is a multiplicative bijection") {
  for (const char* spec : {"F2", "F3", "F4", "F8", "F9", "F16", "F25", "F27"}) {
    Field F = Field::parse(spec);
    auto els = F.elements();
    std::set<std::string> images;
    for (const auto& a : els) {
      FieldElement r = a.pth_root();
      CHECK(r.pow(F.characteristic()) == a);
      images.insert(r.to_string());
      for (const auto& b : els) {
        if (els.size() > 9 && (&b - &els[0]) % 5) continue;  // thin the square for larger fields
        CHECK((a * b).pth_root() == r * b.pth_root());
      }
    }
    CHECK(images.size() == els.size());
  }
}

TEST_CASE("enumerated elements are closed under arithmetic") {
  for (const char* spec : {"F4", "F9", "F8"}) {
    Field F = Field::parse(spec);
    auto els = F.elements();
    std::set<std::string> names;
    for (const auto& a : els) names.insert(a.to_string());
    for (const auto& a : els)
      for (const auto& b : els) {
        CHECK(names.count((a + b).to_string()));
        CHECK(names.count((a * b).to_string()));
        if (!b.is_zero()) CHECK(names.count((a / b).to_string()));
      }
  }
}

TEST_CASE("descriptor mismatch is rejected") {
  CHECK_THROWS_AS(FieldElement(Field::prime(3), 1) + FieldElement(Field::prime(5), 1), DomainError);
}
