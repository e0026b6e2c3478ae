#include "f1/ktheory.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "f1/errors.hpp"
#include "f1/int_matrix.hpp"
#include "f1/smith.hpp"

namespace f1 {

namespace {

// Finest partition of the nonzero carrier into action-closed parts.
std::vector<std::vector<int>> wedge_components(const PointedModule& m) {
  std::vector<int> parent(m.size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  const FiniteMonoid& a = *m.over;
  for (int x = 1; x < m.size; ++x) {
    for (int g = 0; g < a.size; ++g) {
      int y = m.apply(g, x);
      if (y == 0) continue;
      int rx = find(x), ry = find(y);
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
  }
  std::vector<std::vector<int>> parts;
  std::vector<int> part_of(m.size, -1);
  for (int x = 1; x < m.size; ++x) {
    int r = find(x);
    if (part_of[r] == -1) {
      part_of[r] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[part_of[r]].push_back(x);
  }
  return parts;
}

PointedModule component_module(const PointedModule& m, const std::vector<int>& part) {
  return submodule_inclusion(m, part).from;
}

// Image of an endomorphism of f given by basis images; returns the submodule.
PointedModule endo_image(const PointedModule& f, const std::vector<int>& endo) {
  std::vector<char> hit(f.size, 0);
  for (int x = 0; x < f.size; ++x) hit[endo[x]] = 1;
  std::vector<int> elems;
  for (int x = 1; x < f.size; ++x) {
    if (hit[x]) elems.push_back(x);
  }
  return submodule_inclusion(f, elems).from;
}

}  // namespace

ProjectiveEnumeration enumerate_projectives(const FiniteMonoid& a, int size_cap) {
  if (size_cap < 1) throw CapExceeded("enumerate_projectives: size cap must be >= 1");
  ProjectiveEnumeration out;
  out.over = std::make_shared<FiniteMonoid>(a);

  auto find_or_add_indecomposable = [&](const PointedModule& m) {
    for (size_t i = 0; i < out.indecomposables.size(); ++i) {
      if (is_isomorphic(out.indecomposables[i], m)) return static_cast<int>(i);
    }
    out.indecomposables.push_back(m);
    return static_cast<int>(out.indecomposables.size()) - 1;
  };

  long long budget = 2'000'000;
  for (int rank = 0;; ++rank) {
    PointedModule free = free_module(out.over, rank);
    if (rank > 0 && free.size > size_cap) break;
    // Basis element of copy c: the slot carrying the monoid identity. The
    // carrier of a copy lists monoid elements in index order, zero skipped.
    const int per = rank > 0 ? free.nonzero() / rank : 0;
    int ident_pos = 0;
    for (int e = 0; e < a.identity; ++e) {
      if (!(a.has_zero() && e == a.zero)) ++ident_pos;
    }
    std::vector<int> basis;
    for (int c = 0; c < rank; ++c) basis.push_back(1 + c * per + ident_pos);

    long long combos = 1;
    for (int c = 0; c < rank; ++c) {
      combos *= free.size;
      if (combos > budget) {
        throw CapExceeded("enumerate_projectives: endomorphism scan exceeds budget at rank " +
                          std::to_string(rank));
      }
    }
    budget -= combos;

    std::vector<int> choice(rank, 0);
    for (long long it = 0; it < combos; ++it) {
      long long rem = it;
      for (int c = 0; c < rank; ++c) {
        choice[c] = static_cast<int>(rem % free.size);
        rem /= free.size;
      }
      // Freeness: the basis images determine the endomorphism
      // phi(e . b_c) = e . choice[c].
      std::vector<int> endo(free.size, 0);
      for (int c = 0; c < rank; ++c) {
        for (int e = 0; e < a.size; ++e) {
          endo[free.apply(e, basis[c])] = free.apply(e, choice[c]);
        }
      }
      // Idempotent?
      bool idem = true;
      for (int x = 0; x < free.size && idem; ++x) idem = endo[endo[x]] == endo[x];
      if (!idem) continue;

      PointedModule image = endo_image(free, endo);
      if (image.size > size_cap) continue;

      // Decompose and dedupe.
      std::vector<int> decomposition;
      for (const auto& part : wedge_components(image)) {
        decomposition.push_back(find_or_add_indecomposable(component_module(image, part)));
      }
      std::sort(decomposition.begin(), decomposition.end());

      bool known = false;
      for (auto& p : out.projectives) {
        if (p.module.size == image.size && is_isomorphic(p.module, image)) {
          if (p.decomposition != decomposition) out.decomposition_unique = false;
          known = true;
          break;
        }
      }
      if (!known) {
        out.projectives.push_back(ProjectiveInfo{image, rank, endo, decomposition});
      }
    }
  }

  std::sort(out.projectives.begin(), out.projectives.end(),
            [](const ProjectiveInfo& x, const ProjectiveInfo& y) {
              if (x.module.size != y.module.size) return x.module.size < y.module.size;
              return x.decomposition < y.decomposition;
            });
  return out;
}

K0Result k0_q(const FiniteMonoid& a, int size_cap) {
  ProjectiveEnumeration en = enumerate_projectives(a, size_cap);
  const int m = static_cast<int>(en.projectives.size());
  const int ind = static_cast<int>(en.indecomposables.size());

  auto find_iso = [&](const PointedModule& mod) {
    for (int k = 0; k < m; ++k) {
      if (en.projectives[k].module.size == mod.size &&
          is_isomorphic(en.projectives[k].module, mod)) {
        return k;
      }
    }
    return -1;
  };

  // Relations [X v Y] - [X] - [Y] for every wedge landing inside the cap,
  // plus the decomposition of each object into its indecomposable parts.
  std::vector<std::vector<Int>> rows;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      PointedModule w = wedge(en.projectives[i].module, en.projectives[j].module);
      if (w.size > size_cap) continue;
      int k = find_iso(w);
      if (k < 0) continue;  // wedge escapes the enumerated range
      std::vector<Int> row(m, 0);
      row[k] += 1;
      row[i] -= 1;
      row[j] -= 1;
      rows.push_back(std::move(row));
    }
  }
  // [X] = sum of its indecomposable components, expressed through the
  // projectives isomorphic to single components.
  std::vector<int> indec_as_proj(ind, -1);
  for (int i = 0; i < ind; ++i) indec_as_proj[i] = find_iso(en.indecomposables[i]);
  for (int i = 0; i < m; ++i) {
    const auto& dec = en.projectives[i].decomposition;
    if (dec.size() == 1 && indec_as_proj[dec[0]] == i) continue;
    std::vector<Int> row(m, 0);
    row[i] += 1;
    bool expressible = true;
    for (int d : dec) {
      if (indec_as_proj[d] < 0) {
        expressible = false;
        break;
      }
      row[indec_as_proj[d]] -= 1;
    }
    if (expressible) rows.push_back(std::move(row));
  }

  IntMatrix rel(static_cast<int>(rows.size()), m);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < m; ++c) rel.at(static_cast<int>(r), c) = rows[r][c];
  }

  K0Result res;
  res.group = group_from_presentation(rel);
  res.free_on_indecomposables = free_abelian(ind);
  res.agree = res.group == res.free_on_indecomposables;
  for (int i = 0; i < ind; ++i) {
    res.generator_labels.push_back("P" + std::to_string(i) + "[" +
                                   std::to_string(en.indecomposables[i].size) + "]");
  }
  for (int i = 0; i < m; ++i) {
    std::vector<Int> v(ind, 0);
    for (int d : en.projectives[i].decomposition) v[d] += 1;
    res.class_map.push_back(std::move(v));
  }
  return res;
}

GlN::GlN(const FiniteMonoid& a, int n) : monoid_(a), n_(n) {
  if (n < 1) throw Error("gl_n: n must be >= 1");
  units_ = unit_elements(a);
  unit_pos_.assign(a.size, -1);
  for (size_t i = 0; i < units_.size(); ++i) unit_pos_[units_[i]] = static_cast<int>(i);
  unit_inv_.resize(units_.size());
  for (size_t i = 0; i < units_.size(); ++i) {
    for (size_t j = 0; j < units_.size(); ++j) {
      if (a.mul(units_[i], units_[j]) == a.identity) {
        unit_inv_[i] = static_cast<int>(j);
        break;
      }
    }
  }
}

Int GlN::order() const { return ipow(Int(units_.size()), n_) * factorial(n_); }

MonomialMatrix GlN::identity() const {
  MonomialMatrix m;
  m.perm.resize(n_);
  std::iota(m.perm.begin(), m.perm.end(), 0);
  m.diag.assign(n_, unit_pos_[monoid_.identity]);
  return m;
}

MonomialMatrix GlN::multiply(const MonomialMatrix& a, const MonomialMatrix& b) const {
  MonomialMatrix r;
  r.perm.resize(n_);
  r.diag.resize(n_);
  std::vector<int> a_inv(n_);
  for (int i = 0; i < n_; ++i) a_inv[a.perm[i]] = i;
  for (int i = 0; i < n_; ++i) r.perm[i] = a.perm[b.perm[i]];
  for (int i = 0; i < n_; ++i) {
    int u = monoid_.mul(units_[a.diag[i]], units_[b.diag[a_inv[i]]]);
    r.diag[i] = unit_pos_[u];
  }
  return r;
}

MonomialMatrix GlN::invert(const MonomialMatrix& a) const {
  MonomialMatrix r;
  r.perm.resize(n_);
  r.diag.resize(n_);
  for (int i = 0; i < n_; ++i) r.perm[a.perm[i]] = i;
  for (int i = 0; i < n_; ++i) r.diag[i] = unit_inv_[a.diag[a.perm[i]]];
  return r;
}

long long GlN::element_order(const MonomialMatrix& a) const {
  MonomialMatrix id = identity();
  MonomialMatrix p = a;
  long long ord = 1;
  while (!(p == id)) {
    p = multiply(p, a);
    ++ord;
  }
  return ord;
}

std::vector<MonomialMatrix> GlN::enumerate() const {
  if (n_ > 8) throw SizeExceeded("gl_n: enumeration limited to n <= 8");
  Int total = order();
  if (total > 5'000'000) throw SizeExceeded("gl_n: group too large to enumerate");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n_);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<MonomialMatrix> out;
  const long long ucount = static_cast<long long>(units_.size());
  long long diag_total = 1;
  for (int i = 0; i < n_; ++i) diag_total *= ucount;
  for (const auto& perm : perms) {
    for (long long d = 0; d < diag_total; ++d) {
      MonomialMatrix m;
      m.perm = perm;
      m.diag.resize(n_);
      long long rem = d;
      for (int i = 0; i < n_; ++i) {
        m.diag[i] = static_cast<int>(rem % ucount);
        rem /= ucount;
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

int GlN::entry(const MonomialMatrix& a, int i, int j) const {
  if (a.perm[j] != i) return -1;
  return units_[a.diag[i]];
}

FgAbelianGroup k_plus(const FiniteMonoid& a, int i) {
  if (i < 0 || i > 7) {
    throw OutOfTable("k_plus: stable stem table covers 0 <= i <= 7");
  }
  if (i == 0) {
    FgAbelianGroup g = units(a);
    g.rank += 1;  // Z x A^x
    return g;
  }
  return stable_stems()[i];
}

const std::vector<FgAbelianGroup>& stable_stems() {
  static const std::vector<FgAbelianGroup> table = {
      free_abelian(1), cyclic(2), cyclic(2), cyclic(24), trivial_group(),
      trivial_group(), cyclic(2), cyclic(240),
  };
  return table;
}

std::vector<FgAbelianGroup> load_stable_stems(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_stable_stems: cannot open " + path);
  std::vector<FgAbelianGroup> table;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    int index = std::stoi(first);
    std::string desc;
    ls >> desc;
    FgAbelianGroup g;
    if (desc == "Z") {
      g = free_abelian(1);
    } else if (desc == "0") {
      g = trivial_group();
    } else if (desc.rfind("Z/", 0) == 0) {
      g = cyclic(Int(desc.substr(2)));
    } else {
      throw Error("load_stable_stems: unrecognized group descriptor " + desc);
    }
    if (index != static_cast<int>(table.size())) {
      throw Error("load_stable_stems: indices must be consecutive from 0");
    }
    table.push_back(std::move(g));
  }
  return table;
}

std::string default_stems_path() {
#ifdef F1_STEMS_FILE
  return F1_STEMS_FILE;
#else
  return "data/stable_stems.txt";
#endif
}

}  // namespace f1
