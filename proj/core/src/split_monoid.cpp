#include "f1/split_monoid.hpp"

#include <limits>

#include "f1/errors.hpp"

namespace f1 {

FgAbelianGroup SplitMonoid::torsion_group() const {
  FgAbelianGroup g;
  g.invariant_factors = torsion;
  return g;
}

void SplitMonoid::check() const {
  if (free_rank < 0 || cone_rank < 0) throw SemanticError("split monoid: negative rank");
  Int prev = 1;
  for (const Int& d : torsion) {
    if (d < 2) throw SemanticError("split monoid: torsion factors must be >= 2");
    if (prev != 1 && d % prev != 0) {
      throw SemanticError("split monoid: torsion factors must form a divisibility chain");
    }
    prev = d;
  }
}

SplitPresentation presentation_of(const SplitMonoid& s) {
  s.check();
  SplitPresentation sp;
  Presentation& p = sp.pres;
  std::vector<std::pair<int, int>> unit_pairs;
  for (int i = 0; i < s.free_rank; ++i) {
    int u = p.arity();
    p.generators.push_back("u" + std::to_string(i));
    p.generators.push_back("u" + std::to_string(i) + "'");
    unit_pairs.emplace_back(u, u + 1);
  }
  for (int i = 0; i < s.cone_rank; ++i) {
    sp.cone_gens.push_back(p.arity());
    p.generators.push_back("x" + std::to_string(i));
  }
  std::vector<std::pair<int, Int>> torsion_gens;
  for (size_t i = 0; i < s.torsion.size(); ++i) {
    torsion_gens.emplace_back(p.arity(), s.torsion[i]);
    p.generators.push_back("t" + std::to_string(i));
  }
  if (s.has_zero) {
    sp.zero_gen = p.arity();
    p.generators.push_back("z");
  }
  const size_t n = p.generators.size();
  auto empty = [&] { return ExponentVector(n, 0); };
  for (auto [u, v] : unit_pairs) {
    Relation r;
    r.lhs = empty();
    r.lhs[u] = 1;
    r.lhs[v] = 1;
    r.rhs = empty();
    p.relations.push_back(std::move(r));
  }
  for (auto& [g, d] : torsion_gens) {
    if (d > std::numeric_limits<unsigned>::max()) {
      throw SemanticError("presentation_of: torsion factor too large to present");
    }
    Relation r;
    r.lhs = empty();
    r.lhs[g] = static_cast<unsigned>(d);
    r.rhs = empty();
    p.relations.push_back(std::move(r));
  }
  if (s.has_zero) {
    for (size_t g = 0; g < n; ++g) {
      Relation r;
      r.lhs = empty();
      r.lhs[sp.zero_gen] = 1;
      r.lhs[g] += 1;
      r.rhs = empty();
      r.rhs[sp.zero_gen] = 1;
      p.relations.push_back(std::move(r));
    }
  }
  return sp;
}

}  // namespace f1
