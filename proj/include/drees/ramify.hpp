#pragma once

#include <string>
#include <vector>

#include "drees/elim.hpp"

namespace drees {

// Monic factors f_1 .. f_r in var; f_1 drives the elimination.
struct MonicInput {
  Ring ring;
  std::string var;
  std::vector<Polynomial> factors;

  static MonicInput make(const Ring& ring, const std::string& var, std::vector<Polynomial> factors);
  Ring base() const { return ring.without(var); }
  std::vector<unsigned> degrees() const;
  unsigned total_degree() const;  // b
  Polynomial product() const;
  MonicInput over(const Field& field) const;  // coefficients mapped into another field
};

// Coefficients carried from Q (reduced), from F_p into F_{p^k}, or within one field.
Polynomial change_field(const Polynomial& f, const Ring& target);

bool purely_ramified_at(const MonicInput& input, const RationalPoint& base_point);
EliminationResult generalized_discriminants(const MonicInput& input);

struct RamificationReport {
  std::string field;
  std::uint64_t points = 0;
  std::vector<RationalPoint> ramified;
  std::vector<RationalPoint> vanishing;
  std::vector<RationalPoint> counterexamples;
  bool agreement = true;

  std::string render() const;
};

RamificationReport verify_thm_1_16(const MonicInput& input, std::uint64_t budget = kScanBudget);
RamificationReport verify_thm_1_16(const MonicInput& input, const Field& field, std::uint64_t budget = kScanBudget);
// Q is a point of the full ring; requires the product to have order b there.
bool verify_thm_1_16_ii(const MonicInput& input, const RationalPoint& Q);

}  // namespace drees
