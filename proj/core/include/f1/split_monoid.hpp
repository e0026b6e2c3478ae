#pragma once

#include <vector>

#include "f1/abelian.hpp"
#include "f1/presentation.hpp"

namespace f1 {

// Z^a x N^b x T, optionally with an absorbing zero adjoined. Decidable
// carrier for the infinite finitely generated monoids (affine spaces, tori).
struct SplitMonoid {
  int free_rank = 0;          // a: invertible Z-coordinates
  int cone_rank = 0;          // b: N-coordinates
  std::vector<Int> torsion;   // invariant factors of T, divisibility chain
  bool has_zero = false;

  bool operator==(const SplitMonoid&) const = default;

  FgAbelianGroup torsion_group() const;
  void check() const;  // chain d1 | d2 | ..., each >= 2
};

// Presentation of the split monoid: each Z-coordinate becomes a generator
// pair u, u' with u*u' = 1; each N-coordinate a free generator; each torsion
// factor d a generator g with g^d = 1; the zero an explicit absorbing
// generator.
struct SplitPresentation {
  Presentation pres;
  std::vector<int> cone_gens;  // generator index of each N-coordinate
  int zero_gen = -1;
};
SplitPresentation presentation_of(const SplitMonoid& s);

}  // namespace f1
