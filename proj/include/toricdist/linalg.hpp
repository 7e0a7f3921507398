#pragma once

#include <vector>

#include "toricdist/rational.hpp"

namespace toricdist {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix reduced;             // reduced row echelon form, zero rows removed
  std::vector<std::size_t> pivots;    // pivot column of each row
};

RowEchelon row_reduce(RationalMatrix a, std::size_t cols);

// Basis of {x : a x = 0}. Each vector has a 1 in its free column and zeros in
// the other free columns.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a, std::size_t cols);

Rational determinant(RationalMatrix a);

// Returns false if the matrix is singular.
bool invert(const RationalMatrix& a, RationalMatrix& out);

}  // namespace toricdist
