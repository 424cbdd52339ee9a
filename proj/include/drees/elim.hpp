#pragma once

#include <string>
#include <vector>

#include "drees/algebra.hpp"

namespace drees {

inline constexpr std::size_t kCharPolyCap = 12;

struct MultiplicationMatrix {
  Polynomial modulus;  // monic in var, degree c
  Polynomial element;  // reduced modulo `modulus`
  std::string var;
  Ring base;  // ring without var
  // entries[i][j] = coefficient of var^i in element * var^j mod modulus.
  std::vector<std::vector<Polynomial>> entries;

  std::size_t dim() const { return entries.size(); }
};

MultiplicationMatrix mult_matrix(const Polynomial& g, const Polynomial& f, const std::string& var);

// h_1..h_c with det(V*Id - M) = V^c + h_1 V^{c-1} + ... + h_c; division-free.
std::vector<Polynomial> char_poly(const std::vector<std::vector<Polynomial>>& M, const Ring& base);
std::vector<Polynomial> char_poly(const MultiplicationMatrix& M);

struct Provenance {
  Polynomial source;  // saturated generator in the ring with var
  unsigned source_weight;
  unsigned coeff;  // j in h_j
};

struct EliminationResult {
  Ring base;
  ReesAlgebra algebra;
  std::vector<Provenance> provenance;  // one per algebra generator
  std::vector<std::string> warnings;
};

struct EliminationOptions {
  // Require Z-degree = weight = order at the origin for f.
  bool check_transversal = true;
};

EliminationResult eliminate(const ReesAlgebra& G, const ReesGenerator& f, const std::string& var,
                            const EliminationOptions& opt = {});

// Minimum of degree/weight over the generators; one-variable ring, monomial generators only.
Rational monomial_slope(const ReesAlgebra& A);
bool slope_equivalent(const ReesAlgebra& A, const ReesAlgebra& B);

}  // namespace drees
