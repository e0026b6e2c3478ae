#include "f1/finite_monoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "f1/errors.hpp"
#include "f1/int_matrix.hpp"
#include "f1/smith.hpp"

namespace f1 {

int FiniteMonoid::pow(int a, long long e) const {
  int r = identity;
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

bool FiniteMonoid::is_absorbing(int x) const {
  for (int y = 0; y < size; ++y) {
    if (mul(x, y) != x) return false;
  }
  return true;
}

FiniteMonoid FiniteMonoid::trivial() {
  return from_table({0}, 0, -1, {"1"});
}

FiniteMonoid FiniteMonoid::cyclic_group(int n) {
  if (n < 1) throw Error("cyclic_group: order must be >= 1");
  FiniteMonoid m;
  m.size = n;
  m.identity = 0;
  m.table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.table[static_cast<size_t>(i) * n + j] = (i + j) % n;
  }
  m.names.push_back("1");
  for (int i = 1; i < n; ++i) {
    m.names.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  }
  return m;
}

FiniteMonoid FiniteMonoid::d_monoid(long long k) {
  if (k < 2) throw Error("d_monoid: k must be >= 2");
  const int n = static_cast<int>(k - 1);  // order of the unit group
  FiniteMonoid m;
  m.size = n + 1;
  m.identity = 0;
  m.zero = n;
  m.table.resize(static_cast<size_t>(m.size) * m.size);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      int p = (i == n || j == n) ? n : (i + j) % n;
      m.table[static_cast<size_t>(i) * m.size + j] = p;
    }
  }
  m.names.push_back("1");
  for (int i = 1; i < n; ++i) {
    m.names.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  }
  m.names.push_back("0");
  return m;
}

FiniteMonoid FiniteMonoid::from_table(std::vector<int> table, int identity, int zero,
                                      std::vector<std::string> names) {
  FiniteMonoid m;
  int size = 0;
  while (static_cast<size_t>(size) * size < table.size()) ++size;
  if (static_cast<size_t>(size) * size != table.size()) {
    throw SemanticError("Cayley table must be square");
  }
  m.size = size;
  m.table = std::move(table);
  m.identity = identity;
  m.zero = zero;
  if (names.empty()) {
    for (int i = 0; i < size; ++i) names.push_back("e" + std::to_string(i));
    if (identity >= 0 && identity < size) names[identity] = "1";
    if (zero >= 0 && zero < size) names[zero] = "0";
  }
  m.names = std::move(names);
  return m;
}

FiniteMonoid FiniteMonoid::submonoid(const std::vector<int>& elems) const {
  std::vector<int> index(size, -1);
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  if (index[identity] < 0) throw Error("submonoid: subset must contain the identity");
  FiniteMonoid s;
  s.size = static_cast<int>(elems.size());
  s.identity = index[identity];
  s.zero = (zero >= 0 && index[zero] >= 0) ? index[zero] : -1;
  s.table.resize(static_cast<size_t>(s.size) * s.size);
  for (int i = 0; i < s.size; ++i) {
    for (int j = 0; j < s.size; ++j) {
      int p = mul(elems[i], elems[j]);
      if (index[p] < 0) throw Error("submonoid: subset is not product-closed");
      s.table[static_cast<size_t>(i) * s.size + j] = index[p];
    }
  }
  for (int e : elems) s.names.push_back(names[e]);
  return s;
}

FiniteMonoid FiniteMonoid::adjoin_zero() const {
  FiniteMonoid m;
  m.size = size + 1;
  m.identity = identity;
  m.zero = size;
  m.table.assign(static_cast<size_t>(m.size) * m.size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) m.table[static_cast<size_t>(i) * m.size + j] = mul(i, j);
  }
  m.names = names;
  m.names.push_back("0");
  return m;
}

MonoidReport verify_monoid(const FiniteMonoid& m) {
  MonoidReport rep;
  const int n = m.size;
  auto name = [&](int i) { return i < static_cast<int>(m.names.size()) ? m.names[i] : std::to_string(i); };
  for (int v : m.table) {
    if (v < 0 || v >= n) {
      rep.violations.push_back("table entry out of range");
      return rep;
    }
  }
  if (m.identity < 0 || m.identity >= n) {
    rep.violations.push_back("identity index out of range");
    return rep;
  }
  for (int x = 0; x < n; ++x) {
    if (m.mul(m.identity, x) != x || m.mul(x, m.identity) != x) {
      rep.violations.push_back("identity law fails at " + name(x));
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (m.mul(x, y) != m.mul(y, x)) {
        rep.violations.push_back("commutativity fails at (" + name(x) + ", " + name(y) + ")");
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z))) {
          rep.violations.push_back("associativity fails at (" + name(x) + ", " + name(y) + ", " +
                                   name(z) + ")");
        }
      }
    }
  }
  if (m.zero >= 0) {
    if (m.zero >= n) {
      rep.violations.push_back("zero index out of range");
    } else {
      for (int x = 0; x < n; ++x) {
        if (m.mul(m.zero, x) != m.zero) {
          rep.violations.push_back("absorbing law fails at " + name(x));
        }
      }
    }
  }
  return rep;
}

std::vector<int> idempotents(const FiniteMonoid& m) {
  std::vector<int> out;
  for (int x = 0; x < m.size; ++x) {
    if (m.mul(x, x) == x) out.push_back(x);
  }
  return out;
}

std::vector<int> unit_elements(const FiniteMonoid& m) {
  std::vector<int> out;
  for (int x = 0; x < m.size; ++x) {
    for (int y = 0; y < m.size; ++y) {
      if (m.mul(x, y) == m.identity) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

int minimal_idempotent(const FiniteMonoid& m) {
  int e = m.identity;
  for (int x : idempotents(m)) e = m.mul(e, x);
  return e;
}

namespace {

// Order of x in the group (elems, unit).
long long element_order(const FiniteMonoid& m, int x, int unit) {
  long long ord = 1;
  int p = x;
  while (p != unit) {
    p = m.mul(p, x);
    ++ord;
    if (ord > m.size + 1) throw Error("element_order: subset is not a group");
  }
  return ord;
}

std::vector<int> generated_closure(const FiniteMonoid& m, const std::vector<int>& gens, int unit) {
  std::set<int> seen{unit};
  std::vector<int> queue{unit};
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int g : gens) {
      int p = m.mul(x, g);
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

FgAbelianGroup abelian_invariants(const FiniteMonoid& m, const std::vector<int>& elems, int unit) {
  std::set<int> want(elems.begin(), elems.end());
  std::vector<int> gens;
  std::vector<long long> orders;
  std::set<int> covered{unit};

  // Greedy generating set, largest order first, ties by lowest index.
  while (covered.size() < want.size()) {
    int best = -1;
    long long best_ord = 0;
    for (int x : want) {
      if (covered.count(x)) continue;
      long long o = element_order(m, x, unit);
      if (o > best_ord) {
        best_ord = o;
        best = x;
      }
    }
    gens.push_back(best);
    orders.push_back(best_ord);
    auto closure = generated_closure(m, gens, unit);
    covered = std::set<int>(closure.begin(), closure.end());
  }

  const int k = static_cast<int>(gens.size());
  if (k == 0) return trivial_group();

  // Kernel of Z^k -> G: vectors in the order box plus the diagonal rows.
  long long box = 1;
  for (long long o : orders) {
    box *= o;
    if (box > 10'000'000) throw Error("abelian_invariants: order box too large");
  }
  std::vector<std::vector<long long>> rows;
  std::vector<long long> v(k, 0);
  for (long long it = 0; it < box; ++it) {
    long long rem = it;
    int prod = unit;
    for (int i = 0; i < k; ++i) {
      v[i] = rem % orders[i];
      rem /= orders[i];
      for (long long e = 0; e < v[i]; ++e) prod = m.mul(prod, gens[i]);
    }
    if (prod == unit && it != 0) rows.emplace_back(v);
  }
  for (int i = 0; i < k; ++i) {
    std::vector<long long> diag(k, 0);
    diag[i] = orders[i];
    rows.push_back(std::move(diag));
  }

  IntMatrix rel(static_cast<int>(rows.size()), k);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < k; ++j) rel.at(static_cast<int>(i), j) = rows[i][j];
  }
  FgAbelianGroup g = group_from_presentation(rel);
  if (g.rank != 0 || g.torsion_order() != static_cast<long long>(want.size())) {
    throw Error("abelian_invariants: inconsistent invariant factors");
  }
  return g;
}

FgAbelianGroup units(const FiniteMonoid& m) {
  return abelian_invariants(m, unit_elements(m), m.identity);
}

std::pair<std::vector<int>, int> group_completion_subset(const FiniteMonoid& m) {
  int e = minimal_idempotent(m);
  std::set<int> elems;
  for (int x = 0; x < m.size; ++x) elems.insert(m.mul(e, x));
  return {{elems.begin(), elems.end()}, e};
}

FgAbelianGroup group_completion_finite(const FiniteMonoid& m) {
  auto [elems, e] = group_completion_subset(m);
  return abelian_invariants(m, elems, e);
}

TablePresentation table_presentation(const FiniteMonoid& m) {
  TablePresentation tp;
  // One generator per non-identity element; the identity is the empty word.
  std::vector<int> gen_of(m.size, -1);
  for (int x = 0; x < m.size; ++x) {
    if (x == m.identity) continue;
    gen_of[x] = tp.pres.arity();
    tp.pres.generators.push_back(m.names.empty() ? "e" + std::to_string(x) : m.names[x]);
  }
  const size_t n = tp.pres.generators.size();
  auto word_of = [&](int x) {
    ExponentVector w(n, 0);
    if (x != m.identity) w[gen_of[x]] = 1;
    return w;
  };
  for (int x = 0; x < m.size; ++x) tp.element_words.push_back(word_of(x));
  for (int x = 0; x < m.size; ++x) {
    if (x == m.identity) continue;
    for (int y = x; y < m.size; ++y) {
      if (y == m.identity) continue;
      Relation r;
      r.lhs.assign(n, 0);
      r.lhs[gen_of[x]] += 1;
      r.lhs[gen_of[y]] += 1;
      r.rhs = word_of(m.mul(x, y));
      tp.pres.relations.push_back(std::move(r));
    }
  }
  return tp;
}

}  // namespace f1
