#pragma once

#include "f1/module.hpp"

namespace f1 {

// Morphism X -> Y in the Q-construction: an isomorphism class of spans with
// an injective leg into Y (kernel-leg) and a collapsing surjection onto X
// (cokernel-leg), both legs of strong exact sequences.
struct QSpan {
  PointedModule source;           // X
  PointedModule target;           // Y
  PointedModule middle;           // S
  std::vector<int> kernel_leg;    // S -> Y
  std::vector<int> cokernel_leg;  // S -> X

  ModuleMap kernel_map() const { return ModuleMap{middle, target, kernel_leg}; }
  ModuleMap cokernel_map() const { return ModuleMap{middle, source, cokernel_leg}; }
};

// Validates the legs. Throws InvalidSpan / NotEquivariant.
QSpan make_qspan(PointedModule source, PointedModule target, PointedModule middle,
                 std::vector<int> cokernel_leg, std::vector<int> kernel_leg);

QSpan identity_span(const PointedModule& m);

// Base change S x_Y T; composable when s1's target equals s2's source.
// The result is canonicalized. Throws NotComposable.
QSpan q_compose(const QSpan& s1, const QSpan& s2);

// Canonical representative of the isomorphism class: the relabeling of the
// middle carrier minimizing (action table, kernel leg, cokernel leg)
// lexicographically.
QSpan canonicalize(const QSpan& s);

// Isomorphism of spans fixing source and target.
bool span_isomorphic(const QSpan& a, const QSpan& b);

}  // namespace f1
