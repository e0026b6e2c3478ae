#pragma once

#include <memory>
#include <string>
#include <vector>

#include "f1/finite_monoid.hpp"

namespace f1 {

// Finite pointed set with a monoid action fixing the basepoint (element 0).
// When the monoid carries a flagged zero, that zero acts as the basepoint.
struct PointedModule {
  std::shared_ptr<const FiniteMonoid> over;
  int size = 1;            // carrier including the basepoint
  std::vector<int> act;    // act[a * size + x] = a.x
  std::vector<std::string> labels;

  int apply(int a, int x) const { return act[static_cast<size_t>(a) * size + x]; }
  int nonzero() const { return size - 1; }

  bool same_base(const PointedModule& o) const { return over == o.over || *over == *o.over; }
  bool operator==(const PointedModule& o) const {
    return size == o.size && act == o.act && same_base(o);
  }
};

// Checks 1.x = x, a.(b.x) = (ab).x, a.0 = 0, and that a flagged monoid zero
// acts as the basepoint. Empty result iff valid.
std::vector<std::string> module_violations(const PointedModule& m);
void validate_module(const PointedModule& m);  // throws Error on violation

PointedModule zero_module(std::shared_ptr<const FiniteMonoid> a);
// Wedge of n free rank-one modules; Hom(free_module(A, n), M) = M^n.
PointedModule free_module(std::shared_ptr<const FiniteMonoid> a, int n);
// Coproduct identifying basepoints. Throws BaseMismatch.
PointedModule wedge(const PointedModule& m, const PointedModule& n);

// Deterministic backtracking search for an action-equivariant pointed
// bijection.
bool is_isomorphic(const PointedModule& m, const PointedModule& n);

struct ModuleMap {
  PointedModule from;
  PointedModule to;
  std::vector<int> map;  // from-element -> to-element

  int operator()(int x) const { return map[x]; }
};

// Basepoint preservation and equivariance. Throws NotEquivariant.
void validate_map(const ModuleMap& f);
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);  // g after f
ModuleMap identity_map(const PointedModule& m);

// Submodule on an action-closed subset containing the basepoint; returns the
// module together with its inclusion.
ModuleMap submodule_inclusion(const PointedModule& m, const std::vector<int>& subset);

// kernel(f) = inclusion of f^{-1}(0); cokernel(f) = projection collapsing the
// image to the basepoint.
ModuleMap kernel(const ModuleMap& f);
ModuleMap cokernel(const ModuleMap& f);

struct Pullback {
  PointedModule object;  // pairs (x, y) with f(x) = g(y)
  ModuleMap to_left;
  ModuleMap to_right;
};
Pullback pullback(const ModuleMap& f, const ModuleMap& g);  // both into the same module

// Kernel-cokernel pair test: i mono with image j^{-1}(0), j epi isomorphic to
// the canonical quotient by im(i). Throws NotEquivariant on invalid maps.
bool strong_exact_check(const ModuleMap& i, const ModuleMap& j);

// Maps usable as legs of Q-spans.
bool is_exact_kernel(const ModuleMap& f);    // injective
bool is_exact_cokernel(const ModuleMap& f);  // surjective, injective off f^{-1}(0)

}  // namespace f1
