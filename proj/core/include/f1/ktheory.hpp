#pragma once

#include <string>
#include <vector>

#include "f1/abelian.hpp"
#include "f1/module.hpp"

namespace f1 {

// A projective found as the image of an idempotent endomorphism of a free
// module, with its wedge decomposition into indecomposables.
struct ProjectiveInfo {
  PointedModule module;
  int free_rank = 0;                // rank of the free module split
  std::vector<int> witness_endo;    // the idempotent endomorphism
  std::vector<int> decomposition;   // sorted indices into `indecomposables`
};

struct ProjectiveEnumeration {
  std::shared_ptr<const FiniteMonoid> over;
  std::vector<PointedModule> indecomposables;  // up to isomorphism
  std::vector<ProjectiveInfo> projectives;     // up to isomorphism, zero module included
  bool decomposition_unique = true;            // Krull-Schmidt check across discoveries
};

// Images of idempotent endomorphisms of free modules with carrier at most
// size_cap. Throws CapExceeded when the endomorphism scan is too large.
ProjectiveEnumeration enumerate_projectives(const FiniteMonoid& a, int size_cap = 12);

struct K0Result {
  FgAbelianGroup group;  // cokernel of the relation matrix
  std::vector<std::string> generator_labels;
  // Multiplicity vector over indecomposable classes, one row per enumerated
  // projective.
  std::vector<std::vector<Int>> class_map;
  FgAbelianGroup free_on_indecomposables;
  bool agree = true;
};

// Grothendieck group of the split exact structure: generators are the
// enumerated projectives, relations come from wedge sums and decompositions;
// cross-checked against the free group on indecomposable classes.
K0Result k0_q(const FiniteMonoid& a, int size_cap = 12);

// Monomial matrix over the unit group: one invertible entry per row/column,
// stored as a permutation with a diagonal of unit indices.
struct MonomialMatrix {
  std::vector<int> perm;  // perm[j] = image of j
  std::vector<int> diag;  // indices into the unit list
  bool operator==(const MonomialMatrix&) const = default;
};

// GL_n(A) = (A^x)^n semidirect Per(n).
class GlN {
 public:
  GlN(const FiniteMonoid& a, int n);

  int n() const { return n_; }
  int unit_count() const { return static_cast<int>(units_.size()); }
  Int order() const;  // |A^x|^n * n!

  MonomialMatrix identity() const;
  MonomialMatrix multiply(const MonomialMatrix& a, const MonomialMatrix& b) const;
  MonomialMatrix invert(const MonomialMatrix& a) const;
  long long element_order(const MonomialMatrix& a) const;
  std::vector<MonomialMatrix> enumerate() const;  // n <= 8

  // Matrix entry (i, j) as a monoid element, or -1 when the entry vanishes.
  int entry(const MonomialMatrix& a, int i, int j) const;

 private:
  FiniteMonoid monoid_;
  std::vector<int> units_;     // unit elements of the monoid
  std::vector<int> unit_pos_;  // monoid element -> index in units_, or -1
  std::vector<int> unit_inv_;  // inverse within units_
  int n_;
};

inline GlN gl_n(const FiniteMonoid& a, int n) { return GlN(a, n); }

// K^+ values: i = 0 gives Z x A^x; 1 <= i <= 7 the stable stem table entry.
// Throws OutOfTable beyond the table.
FgAbelianGroup k_plus(const FiniteMonoid& a, int i);

// The shipped stable homotopy constants pi_i^s for i = 0..7.
const std::vector<FgAbelianGroup>& stable_stems();
// Parses the data file the constants ship as ("<index> <group>" per line).
std::vector<FgAbelianGroup> load_stable_stems(const std::string& path);
std::string default_stems_path();

}  // namespace f1
