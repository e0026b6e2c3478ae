#pragma once

#include <string>
#include <vector>

#include "f1/numeric.hpp"

namespace f1 {

// Finitely generated abelian group Z^rank x Z/d1 x ... x Z/dt with
// d1 | d2 | ... | dt and every di >= 2.
struct FgAbelianGroup {
  int rank = 0;
  std::vector<Int> invariant_factors;

  bool operator==(const FgAbelianGroup& o) const = default;

  bool is_trivial() const { return rank == 0 && invariant_factors.empty(); }
  bool is_torsion_free() const { return invariant_factors.empty(); }

  // lcm of torsion orders = largest invariant factor (1 when torsion-free).
  Int exponent() const;
  // Order of the torsion subgroup.
  Int torsion_order() const;

  // Checks the divisibility-chain invariant.
  bool valid() const;

  // "0", "Z", "Z^2 x Z/2 x Z/4", ...
  std::string to_string() const;
};

// Trivial group.
inline FgAbelianGroup trivial_group() { return FgAbelianGroup{}; }
// Z^r.
FgAbelianGroup free_abelian(int r);
// Z/n (n >= 1; n == 1 gives the trivial group).
FgAbelianGroup cyclic(const Int& n);

// Exact number of homomorphisms into the cyclic group of order m:
// m^rank * prod_i gcd(d_i, m).
Int hom_count_cyclic(const FgAbelianGroup& g, const Int& m);

}  // namespace f1
