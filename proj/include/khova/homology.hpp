#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "khova/complex.hpp"
#include "khova/int_matrix.hpp"
#include "khova/laurent.hpp"

namespace khova {

// dims[i] = dim_q H_i, graded like the chain groups.
struct HomologyTable {
  std::vector<LaurentPoly1> dims;
  Field field = Field::rationals();
  bool reduced = false;

  friend bool operator==(const HomologyTable&, const HomologyTable&) = default;
};

// Graded kernel and image of every d_i : C_i -> C_{i+1}. Kernels are graded in
// the source, images in the target.
struct DifferentialDims {
  std::vector<LaurentPoly1> kernel;
  std::vector<LaurentPoly1> image;
  std::map<std::pair<int, int>, std::size_t> ranks;  // (i, source qdeg)
};

DifferentialDims differential_dims(const ChainComplex& complex, Field field = Field::rationals());

// Throws InternalError on a negative dimension.
HomologyTable homology_dims(const ChainComplex& complex, Field field = Field::rationals());
HomologyTable homology_dims(const ChainComplex& complex, const DifferentialDims& dims, Field field);

struct Superpolynomial {
  LaurentPoly2 value;
  bool reduced = false;
  int n_black = 0;
  int n_white = 0;

  friend bool operator==(const Superpolynomial&, const Superpolynomial&) = default;
};

// q^(n_black - 2 n_white) T^(-n_white) (q^-1 if reduced) sum_i (qT)^i dim_q H_i.
Superpolynomial superpolynomial(const HomologyTable& table, int n_black, int n_white);

// (q + 1/q) Pr - P.
LaurentPoly2 correction_term(const Superpolynomial& unreduced, const Superpolynomial& reduced);

// P at T = -1 equals the given Jones polynomial.
bool euler_check(const Superpolynomial& p, const LaurentPoly1& jones);

// Chain-level Euler characteristic with the superpolynomial normalization.
LaurentPoly1 euler_characteristic(const ChainComplex& complex, int n_black, int n_white);

}  // namespace khova
