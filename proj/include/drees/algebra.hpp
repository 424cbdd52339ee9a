#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "drees/hasse.hpp"
#include "drees/ideal.hpp"

namespace drees {

using Rational = mpq_class;

// The algebra generated by g_i W^{n_i}, with down-shifted copies g_i W^{n'} (n' <= n_i) implied.
class ReesAlgebra {
 public:
  explicit ReesAlgebra(Ring r) : ring_(std::move(r)) {}
  ReesAlgebra(Ring r, const std::vector<ReesGenerator>& gens);

  const Ring& ring() const { return ring_; }
  const std::vector<ReesGenerator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  unsigned max_weight() const;

  // Throws on zero polynomial, weight 0 or ring mismatch.
  void add(const Polynomial& g, unsigned weight);
  void add(const ReesGenerator& g) { add(g.poly, g.weight); }
  // Adds unless an entry proportional to g with the same weight exists; returns true if added.
  bool add_unique(const Polynomial& g, unsigned weight);
  bool contains(const Polynomial& g, unsigned weight) const;

  const std::vector<std::string>& saturated_over() const { return saturated_; }
  void mark_saturated(std::vector<std::string> vars) { saturated_ = std::move(vars); }

  ReesAlgebra normalized() const;  // every generator scaled to leading coefficient 1
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<ReesGenerator> gens_;
  std::vector<std::string> saturated_;
};

ReesAlgebra diff_saturate(const ReesAlgebra& G, const std::vector<std::string>& active);
ReesAlgebra diff_saturate(const ReesAlgebra& G);  // all variables

Ideal singular_ideal(const ReesAlgebra& G);
// Every generator has order >= its weight at p.
bool in_singular_locus(const ReesAlgebra& G, const RationalPoint& p);
std::vector<RationalPoint> singular_points(const ReesAlgebra& G, std::uint64_t budget = kScanBudget);

Order component_order(const ReesAlgebra& G, unsigned k, const RationalPoint& at);
Rational ord_at_point(const ReesAlgebra& G, const RationalPoint& at);
bool is_simple(const ReesAlgebra& G, const RationalPoint& at);
unsigned e0_invariant(const ReesAlgebra& G, const RationalPoint& at);
unsigned tau_estimate(const ReesAlgebra& G, const RationalPoint& at);

// Generators of I_k: products over minimal multisets with weight sum >= k.
Ideal degree_ideal(const ReesAlgebra& G, unsigned k, std::size_t max_products = 200000);
// Reduced bases of I_1 .. I_kmax via I_k = sum_i g_i I_{k - n_i}.
std::vector<GroebnerBasis> degree_ideal_bases(const ReesAlgebra& G, unsigned kmax, const GroebnerOptions& opt = {});

struct BlowupChart {
  Ring ring;         // after the transform
  Ring parent_ring;  // before
  std::string exceptional;
  std::vector<std::string> center;
  std::map<std::string, Polynomial> substitution;  // parent variable -> polynomial in `ring`
  std::shared_ptr<const BlowupChart> parent;

  Polynomial apply(const Polynomial& f) const;  // total transform of one polynomial
  std::size_t depth() const { return parent ? parent->depth() + 1 : 1; }
};

BlowupChart make_chart(const Ring& r, const std::vector<std::string>& center, const std::string& chart_var,
                       std::shared_ptr<const BlowupChart> parent = nullptr);

struct TransformResult {
  ReesAlgebra algebra;
  BlowupChart chart;
};

TransformResult weighted_transform(const ReesAlgebra& G, const std::vector<std::string>& center,
                                   const std::string& chart_var, std::shared_ptr<const BlowupChart> parent = nullptr);
ReesAlgebra total_transform(const ReesAlgebra& G, const std::vector<std::string>& center, const std::string& chart_var);

// Name used for a non-exceptional center variable after a chart substitution (Z -> Z1 -> Z2 ...).
std::string next_name(const std::string& name, const std::vector<std::string>& taken);

}  // namespace drees
