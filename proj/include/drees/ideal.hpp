#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "drees/polynomial.hpp"

namespace drees {

class Ideal {
 public:
  explicit Ideal(Ring r) : ring_(std::move(r)) {}
  Ideal(Ring r, const std::vector<Polynomial>& gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  void add(const Polynomial& g);

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
};

struct GroebnerOptions {
  std::size_t max_basis = 10000;
};

class GroebnerBasis {
 public:
  GroebnerBasis(Ring r, std::vector<Polynomial> basis) : ring_(std::move(r)), basis_(std::move(basis)) {}

  const Ring& ring() const { return ring_; }
  // Monic, inter-reduced, sorted by ascending leading monomial.
  const std::vector<Polynomial>& basis() const { return basis_; }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }
  Polynomial normal_form(const Polynomial& f) const;
  bool operator==(const GroebnerBasis& o) const;

 private:
  Ring ring_;
  std::vector<Polynomial> basis_;
};

// Full reduction of f by `divisors` (leading coefficients need not be 1).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

GroebnerBasis buchberger(const Ideal& I, const GroebnerOptions& opt = {});
bool membership(const Polynomial& f, const GroebnerBasis& G);
bool ideal_equal(const Ideal& I, const Ideal& J, const GroebnerOptions& opt = {});
// Dimension of the affine zero set over the algebraic closure, read off the leading monomials;
// -1 for the unit ideal.
int zero_set_dimension(const GroebnerBasis& G);

inline constexpr std::uint64_t kScanBudget = 1000000;

// Visits every rational point of r (finite field only) in enumeration order; the callback
// may return false to stop early.
void for_each_point(const Ring& r, const std::function<bool(const RationalPoint&)>& visit,
                    std::uint64_t budget = kScanBudget);
std::uint64_t point_count(const Ring& r);
std::vector<RationalPoint> rational_zero_set(const Ideal& I, std::uint64_t budget = kScanBudget);

}  // namespace drees
