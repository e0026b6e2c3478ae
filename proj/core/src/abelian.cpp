#include "f1/abelian.hpp"

#include <sstream>

namespace f1 {

Int FgAbelianGroup::exponent() const {
  return invariant_factors.empty() ? Int(1) : invariant_factors.back();
}

Int FgAbelianGroup::torsion_order() const {
  Int o = 1;
  for (const Int& d : invariant_factors) o *= d;
  return o;
}

bool FgAbelianGroup::valid() const {
  if (rank < 0) return false;
  Int prev = 1;
  for (const Int& d : invariant_factors) {
    if (d < 2) return false;
    if (prev != 1 && d % prev != 0) return false;
    prev = d;
  }
  return true;
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank == 1) {
    os << "Z";
    first = false;
  } else if (rank > 1) {
    os << "Z^" << rank;
    first = false;
  }
  for (const Int& d : invariant_factors) {
    if (!first) os << " x ";
    os << "Z/" << d.str();
    first = false;
  }
  return os.str();
}

FgAbelianGroup free_abelian(int r) {
  FgAbelianGroup g;
  g.rank = r;
  return g;
}

FgAbelianGroup cyclic(const Int& n) {
  FgAbelianGroup g;
  if (n > 1) g.invariant_factors.push_back(n);
  return g;
}

Int hom_count_cyclic(const FgAbelianGroup& g, const Int& m) {
  Int count = ipow(m, static_cast<unsigned long>(g.rank));
  for (const Int& d : g.invariant_factors) count *= gcd(d, m);
  return count;
}

}  // namespace f1
