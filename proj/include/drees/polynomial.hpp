#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drees/field.hpp"

namespace drees {

inline constexpr std::size_t kMaxVars = 8;

struct Monomial {
  std::array<std::uint32_t, kMaxVars> e{};

  std::uint32_t operator[](std::size_t i) const { return e[i]; }
  std::uint32_t& operator[](std::size_t i) { return e[i]; }
  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  // Requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  bool operator==(const Monomial&) const = default;
};

// >0 if a > b in graded reverse lexicographic order (x1 > x2 > ... > xn).
int grevlex_cmp(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

struct Term {
  Monomial m;
  Scalar c;
};

// Order of vanishing; +infinity for the zero polynomial.
class Order {
 public:
  constexpr explicit Order(unsigned v = 0) : v_(v) {}
  static constexpr Order infinity() { return Order(kInf); }
  constexpr bool is_infinite() const { return v_ == kInf; }
  unsigned value() const;
  auto operator<=>(const Order&) const = default;
  Order operator+(const Order& o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return Order(v_ + o.v_);
  }
  bool operator>=(unsigned n) const { return is_infinite() || v_ >= n; }
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr unsigned kInf = std::numeric_limits<unsigned>::max();
  unsigned v_;
};

struct RingData {
  Field field;
  std::vector<std::string> vars;
};

class Ring {
 public:
  Ring(Field field, std::vector<std::string> vars);
  static Ring parse(std::string_view spec);  // "F2[Y,Z]"

  const Field& field() const { return d_->field; }
  const std::vector<std::string>& vars() const { return d_->vars; }
  std::size_t nvars() const { return d_->vars.size(); }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws DomainError
  std::string spec() const;

  Ring without(std::string_view name) const;
  Ring with_vars(std::vector<std::string> vars) const { return Ring(field(), std::move(vars)); }

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const RingData> d_;
};

class Polynomial;

struct RationalPoint {
  Ring ring;
  std::vector<Scalar> coords;

  static RationalPoint origin(const Ring& r);
  static RationalPoint of(const Ring& r, const std::vector<long>& values);
  bool is_origin() const;
  FieldElement coord(std::size_t i) const { return {ring.field(), coords[i]}; }
  std::string to_string() const;
  bool operator==(const RationalPoint& o) const;
};

class Polynomial {
 public:
  explicit Polynomial(Ring r) : ring_(std::move(r)) {}
  static Polynomial constant(const Ring& r, const Scalar& c);
  static Polynomial constant(const Ring& r, long c) { return constant(r, r.field().from_int(c)); }
  static Polynomial variable(const Ring& r, std::string_view name);
  static Polynomial variable(const Ring& r, std::size_t index);
  static Polynomial monomial(const Ring& r, const Monomial& m, const Scalar& c);
  // Sorts, combines like terms and drops zeros.
  static Polynomial from_terms(const Ring& r, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const Field& field() const { return ring_.field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const;
  const Monomial& lm() const { return leading().m; }
  const Scalar& lc() const { return leading().c; }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  // this - c*m*g, by merging.
  Polynomial sub_mul(const Monomial& m, const Scalar& c, const Polynomial& g) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;  // scaled so that the leading coefficient is 1
  Polynomial tail() const;   // without the leading term

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  // Same up to a nonzero scalar.
  bool proportional(const Polynomial& o) const;

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  unsigned degree_in(std::string_view var) const { return degree_in(ring_.index(var)); }
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  FieldElement evaluate(const RationalPoint& p) const;
  // Simultaneous substitution; images[i] empty keeps variable i (mapped by name into target).
  Polynomial substitute(const std::vector<std::optional<Polynomial>>& images, const Ring& target) const;
  Polynomial substitute(const std::map<std::string, Polynomial>& images) const;
  // Same polynomial in a ring whose variable set contains all variables used here.
  Polynomial embed(const Ring& target) const;

  std::string to_string() const;

 private:
  void check(const Polynomial& o) const;
  Ring ring_;
  std::vector<Term> terms_;  // strictly descending in grevlex
};

Polynomial parse_polynomial(const Ring& r, std::string_view text);

// Order and initial-form toolkit.
Order order_at_origin(const Polynomial& f);
Order order_at(const Polynomial& f, const RationalPoint& p);
Order order_along_subspace(const Polynomial& f, const std::vector<std::string>& center);
Polynomial initial_form(const Polynomial& f);
Polynomial recenter(const Polynomial& f, const RationalPoint& p);

// Univariate toolkit in a distinguished variable.
struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
bool is_monic_in(const Polynomial& g, std::size_t var);
DivMod univ_divmod(const Polynomial& f, const Polynomial& g, std::string_view var);
// Coefficients of f as a polynomial in var, as elements of base = ring minus var.
std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var, const Ring& base);
Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, const Ring& full, std::size_t var);

// Single-variable helpers: f must involve at most one variable.
std::optional<std::size_t> sole_variable(const Polynomial& f);
Polynomial univ_derivative(const Polynomial& f, std::size_t var);
Polynomial univ_gcd(const Polynomial& a, const Polynomial& b);
Polynomial univ_radical(const Polynomial& f);

}  // namespace drees
