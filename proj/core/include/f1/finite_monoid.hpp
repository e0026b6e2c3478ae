#pragma once

#include <string>
#include <vector>

#include "f1/abelian.hpp"
#include "f1/presentation.hpp"

namespace f1 {

// Commutative monoid given by its full Cayley table over element indices.
struct FiniteMonoid {
  int size = 0;
  std::vector<int> table;  // row-major, table[i*size + j] = i*j
  int identity = 0;
  int zero = -1;  // index of the flagged absorbing element, -1 if none
  std::vector<std::string> names;

  int mul(int a, int b) const { return table[static_cast<size_t>(a) * size + b]; }
  int pow(int a, long long e) const;

  bool has_zero() const { return zero >= 0; }
  const std::string& name_of(int i) const { return names[i]; }

  bool operator==(const FiniteMonoid&) const = default;

  static FiniteMonoid trivial();
  static FiniteMonoid cyclic_group(int n);
  // D_k = C_{k-1} adjoin 0, the multiplicative monoid of "F_k"; k >= 2.
  static FiniteMonoid d_monoid(long long k);
  static FiniteMonoid from_table(std::vector<int> table, int identity, int zero = -1,
                                 std::vector<std::string> names = {});

  // Restriction to a product-closed subset containing the identity.
  FiniteMonoid submonoid(const std::vector<int>& elems) const;
  FiniteMonoid adjoin_zero() const;

  // True if x*y = x for all y (independent of the zero flag).
  bool is_absorbing(int x) const;
};

// Law checker; empty report iff the table is a valid commutative monoid.
struct MonoidReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
MonoidReport verify_monoid(const FiniteMonoid& m);

std::vector<int> idempotents(const FiniteMonoid& m);
std::vector<int> unit_elements(const FiniteMonoid& m);
int minimal_idempotent(const FiniteMonoid& m);

// Invariant factors of a finite abelian group sitting inside m as the element
// set `elems` with identity `unit`. Generators are picked greedily (largest
// order first), relations solved by Smith normal form.
FgAbelianGroup abelian_invariants(const FiniteMonoid& m, const std::vector<int>& elems, int unit);

// The unit group A^x as an abstract abelian group.
FgAbelianGroup units(const FiniteMonoid& m);

// Quot(m): the universal group m maps to, realized as e*m for the minimal
// idempotent e (product of all idempotents). Rank is always 0.
FgAbelianGroup group_completion_finite(const FiniteMonoid& m);
// Same, but as a subset of m (elements of e*m plus the unit e).
std::pair<std::vector<int>, int> group_completion_subset(const FiniteMonoid& m);

// Presentation with one generator per element and one relation per table
// entry; element i corresponds to the i-th generator word.
struct TablePresentation {
  Presentation pres;
  std::vector<ExponentVector> element_words;
};
TablePresentation table_presentation(const FiniteMonoid& m);

}  // namespace f1
