#pragma once

#include <vector>

#include "toricdist/rational.hpp"

namespace toricdist {

using IntMatrix = std::vector<std::vector<Integer>>;

struct SmithForm {
  IntMatrix left;                  // unimodular U with U * A * V = diag
  IntMatrix right;                 // unimodular V
  std::vector<Integer> diagonal;   // invariant factors, each dividing the next
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form: echelon, positive pivots, entries above a
// pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix a);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace toricdist
