#pragma once

#include "f1/finite_monoid.hpp"
#include "f1/presentation.hpp"

namespace f1 {

struct SaturationResult {
  FiniteMonoid monoid;
  // Canonical (BFS-shortest) word for each element, over the generators of
  // the explicit-zero form of the input presentation.
  std::vector<ExponentVector> element_words;
  std::vector<int> generator_images;  // element index of each generator
  Presentation realized;              // the explicit-zero presentation the words refer to
};

// Closes the presentation under products and the congruence generated by its
// relations. Throws CapExceeded when more than `cap` distinct elements are
// produced (the presented monoid may be infinite).
SaturationResult saturate(const Presentation& p, int cap);

}  // namespace f1
