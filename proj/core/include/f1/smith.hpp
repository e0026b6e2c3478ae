#pragma once

#include "f1/abelian.hpp"
#include "f1/int_matrix.hpp"

namespace f1 {

// u * m * v = d with u, v unimodular and d diagonal, d(0,0) | d(1,1) | ...
struct SmithResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

// Deterministic pivoting: the nonzero entry of minimal absolute value in the
// trailing submatrix, ties broken by lowest (row, col).
SmithResult smith_normal_form(const IntMatrix& m);

// Cokernel of the relation matrix (rows = relations, columns = generators):
// rank = cols - #nonzero diagonal entries, invariant factors = entries >= 2.
FgAbelianGroup group_from_presentation(const IntMatrix& relations);

}  // namespace f1
