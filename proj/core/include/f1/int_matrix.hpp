#pragma once

#include <vector>

#include "f1/numeric.hpp"

namespace f1 {

// Dense matrix with exact integer entries, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> entries;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}
  IntMatrix(int r, int c, std::vector<Int> e);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init);

  Int& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

  static IntMatrix identity(int n);

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix operator*(const IntMatrix& o) const;
  bool is_diagonal() const;

  // Exact determinant (Bareiss fraction-free elimination); square only.
  Int determinant() const;

  std::string to_string() const;
};

}  // namespace f1
