#include "f1/smith.hpp"

namespace f1 {

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

void add_row(IntMatrix& m, int dst, int src, const Int& factor) {
  for (int j = 0; j < m.cols; ++j) m.at(dst, j) += factor * m.at(src, j);
}

void add_col(IntMatrix& m, int dst, int src, const Int& factor) {
  for (int i = 0; i < m.rows; ++i) m.at(i, dst) += factor * m.at(i, src);
}

// Minimal |entry| over the trailing submatrix, ties by lowest (row, col).
bool find_pivot(const IntMatrix& d, int t, int& pi, int& pj) {
  bool found = false;
  Int best = 0;
  for (int i = t; i < d.rows; ++i) {
    for (int j = t; j < d.cols; ++j) {
      const Int& e = d.at(i, j);
      if (e == 0) continue;
      Int a = abs(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult r{IntMatrix::identity(m.rows), m, IntMatrix::identity(m.cols)};
  IntMatrix& d = r.d;
  const int steps = std::min(m.rows, m.cols);

  for (int t = 0; t < steps; ++t) {
    int pi = 0, pj = 0;
    if (!find_pivot(d, t, pi, pj)) break;  // trailing block is zero
    for (;;) {
      find_pivot(d, t, pi, pj);
      swap_rows(d, t, pi);
      swap_rows(r.u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(r.v, t, pj);

      bool clean = true;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        if (q != 0) {
          add_row(d, i, t, -q);
          add_row(r.u, i, t, -q);
        }
        if (d.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        if (q != 0) {
          add_col(d, j, t, -q);
          add_col(r.v, j, t, -q);
        }
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot divides everything below-right, or gets mixed with a witness
      // row so the next pass shrinks it.
      bool divides = true;
      for (int i = t + 1; i < d.rows && divides; ++i) {
        for (int j = t + 1; j < d.cols; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            add_row(d, t, i, 1);
            add_row(r.u, t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d.at(t, t) < 0) {
      for (int j = 0; j < d.cols; ++j) d.at(t, j) = -d.at(t, j);
      for (int j = 0; j < r.u.cols; ++j) r.u.at(t, j) = -r.u.at(t, j);
    }
  }
  return r;
}

FgAbelianGroup group_from_presentation(const IntMatrix& relations) {
  SmithResult s = smith_normal_form(relations);
  FgAbelianGroup g;
  int nonzero = 0;
  const int steps = std::min(relations.rows, relations.cols);
  for (int t = 0; t < steps; ++t) {
    const Int& dt = s.d.at(t, t);
    if (dt == 0) continue;
    ++nonzero;
    if (dt >= 2) g.invariant_factors.push_back(dt);
  }
  g.rank = relations.cols - nonzero;
  return g;
}

}  // namespace f1
