#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "drees/error.hpp"

namespace drees {

// Raw coefficient storage. Meaning depends on the Field that owns it:
// an mpq_class over Q, or the coefficient vector c[0] + c[1] t + ... over F_{p^k}.
using Residues = std::array<std::uint32_t, 4>;
using Scalar = std::variant<Residues, mpq_class>;

struct FieldDescriptor {
  std::uint32_t characteristic = 0;
  unsigned degree = 1;
  std::vector<std::uint32_t> modulus;  // monic, low to high, size degree+1; empty if degree 1
  std::string generator = "t";
};

class FieldElement;

class Field {
 public:
  Field();  // Q
  static Field rationals();
  static Field prime(std::uint32_t p);
  static Field extension(std::uint32_t p, std::vector<std::uint32_t> modulus,
                         std::string generator = "t");
  // "Q", "F5", "F4", "F4:t^2+t+1".
  static Field parse(std::string_view spec);

  const FieldDescriptor& descriptor() const { return *d_; }
  std::uint32_t characteristic() const { return d_->characteristic; }
  unsigned degree() const { return d_->degree; }
  bool finite() const { return d_->characteristic != 0; }
  // q = p^k; throws for Q.
  std::uint64_t size() const;
  const std::string& generator_name() const { return d_->generator; }
  std::string spec() const;

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& v) const;  // throws if denominator vanishes
  Scalar gen() const;                              // t; throws for degree 1

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, std::uint64_t e) const;
  Scalar pth_root(const Scalar& a) const;

  // Elements in enumeration order: index = sum c_i p^i.
  Scalar element_at(std::uint64_t index) const;
  std::vector<FieldElement> elements() const;

  std::string to_string(const Scalar& a) const;
  // True when to_string needs parentheses as a product factor.
  bool is_compound(const Scalar& a) const;
  // True when the printed form starts with '-'.
  bool is_negative_literal(const Scalar& a) const;

  const mpq_class& rational(const Scalar& a) const { return std::get<mpq_class>(a); }
  const Residues& residues(const Scalar& a) const { return std::get<Residues>(a); }

 private:
  explicit Field(std::shared_ptr<const FieldDescriptor> d) : d_(std::move(d)) {}
  std::shared_ptr<const FieldDescriptor> d_;
};

// Built-in modulus for F_{p^k}, or the first irreducible found by search.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned k);
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p);
bool is_prime(std::uint64_t n);

class FieldElement {
 public:
  FieldElement(Field f, Scalar v) : field_(std::move(f)), v_(std::move(v)) {}
  FieldElement(const Field& f, long v) : field_(f), v_(f.from_int(v)) {}

  const Field& field() const { return field_; }
  const Scalar& value() const { return v_; }
  bool is_zero() const { return field_.is_zero(v_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_.neg(v_)}; }
  FieldElement inverse() const { return {field_, field_.inv(v_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(v_, e)}; }
  FieldElement pth_root() const { return {field_, field_.pth_root(v_)}; }
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  std::string to_string() const { return field_.to_string(v_); }

 private:
  void check(const FieldElement& o) const;
  Field field_;
  Scalar v_;
};

enum class ArithOp { Add, Sub, Mul, Div };
FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

}  // namespace drees
