#include "f1/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace f1 {

IntMatrix::IntMatrix(int r, int c, std::vector<Int> e) : rows(r), cols(c), entries(std::move(e)) {
  if (entries.size() != static_cast<size_t>(r) * c) {
    throw std::invalid_argument("IntMatrix: entry count does not match shape");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
  rows = static_cast<int>(init.size());
  cols = rows == 0 ? 0 : static_cast<int>(init.begin()->size());
  entries.reserve(static_cast<size_t>(rows) * cols);
  for (const auto& row : init) {
    if (static_cast<int>(row.size()) != cols) {
      throw std::invalid_argument("IntMatrix: ragged initializer");
    }
    for (long long v : row) entries.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols; ++j) {
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return r;
}

bool IntMatrix::is_diagonal() const {
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (i != j && at(i, j) != 0) return false;
    }
  }
  return true;
}

Int IntMatrix::determinant() const {
  if (rows != cols) throw std::invalid_argument("IntMatrix: determinant of non-square matrix");
  int n = rows;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;  // exact division in Bareiss
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols; ++j) {
      if (j) os << ",";
      os << at(i, j).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace f1
