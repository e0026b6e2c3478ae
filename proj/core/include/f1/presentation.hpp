#pragma once

#include <string>
#include <vector>

namespace f1 {

// One side of a relation: a formal product of generators, stored as the
// exponent vector indexed by the generator list.
using ExponentVector = std::vector<unsigned>;

struct Relation {
  ExponentVector lhs;
  ExponentVector rhs;

  bool operator==(const Relation&) const = default;
};

// Finitely generated commutative monoid presentation.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  bool has_zero = false;  // adjoin an absorbing element

  bool operator==(const Presentation&) const = default;

  int arity() const { return static_cast<int>(generators.size()); }
  void check() const;  // exponent vectors sized to the generator list
};

// Rewrites the absorbing flag into an explicit generator "0" with relations
// 0*g = 0 for every generator and 0*0 = 0. Identity when has_zero is false.
Presentation with_explicit_zero(const Presentation& p);

std::string word_to_string(const Presentation& p, const ExponentVector& w);

}  // namespace f1
