#include "f1/presentation.hpp"

#include <sstream>

#include "f1/errors.hpp"

namespace f1 {

void Presentation::check() const {
  const size_t n = generators.size();
  for (const Relation& r : relations) {
    if (r.lhs.size() != n || r.rhs.size() != n) {
      throw SemanticError("relation exponent vectors must be indexed by the generator list");
    }
  }
}

Presentation with_explicit_zero(const Presentation& p) {
  if (!p.has_zero) return p;
  Presentation q;
  q.generators = p.generators;
  q.generators.push_back("0");
  const size_t n = q.generators.size();
  for (const Relation& r : p.relations) {
    Relation s;
    s.lhs = r.lhs;
    s.lhs.push_back(0);
    s.rhs = r.rhs;
    s.rhs.push_back(0);
    q.relations.push_back(std::move(s));
  }
  // 0 * g = 0 for every generator g, including 0 itself.
  for (size_t g = 0; g < n; ++g) {
    Relation abs;
    abs.lhs.assign(n, 0);
    abs.rhs.assign(n, 0);
    abs.lhs[n - 1] = 1;
    abs.lhs[g] += 1;
    abs.rhs[n - 1] = 1;
    q.relations.push_back(std::move(abs));
  }
  q.has_zero = false;
  return q;
}

std::string word_to_string(const Presentation& p, const ExponentVector& w) {
  std::ostringstream os;
  bool first = true;
  for (size_t g = 0; g < w.size(); ++g) {
    if (w[g] == 0) continue;
    if (!first) os << "*";
    os << p.generators[g];
    if (w[g] > 1) os << "^" << w[g];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

}  // namespace f1
