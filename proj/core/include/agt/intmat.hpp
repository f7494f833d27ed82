#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "agt/presentation.hpp"

namespace agt {

// Entries are exact unbounded integers: pivots in the Smith reduction grow
// far beyond 64 bits even for modest relation matrices.
using BigInt = boost::multiprecision::cpp_int;

struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0) {}

  BigInt& at(size_t r, size_t c) { return data[r * cols + c]; }
  const BigInt& at(size_t r, size_t c) const { return data[r * cols + c]; }
};

// Full Smith diagonal (d_1, ..., d_min(rows,cols)): nonnegative, each
// dividing the next, zeros trailing. Empty matrix gives an empty diagonal.
std::vector<BigInt> smith_normal_form(IntMatrix m);

struct Abelianization {
  size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next

  bool operator==(const Abelianization&) const = default;
};

// Relation-by-generator matrix of relator exponent sums.
IntMatrix exponent_matrix(const Presentation& p);

// Cokernel of the exponent matrix.
Abelianization abelianization(const Presentation& p);

}  // namespace agt
