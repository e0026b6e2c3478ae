#include "f1/module.hpp"

#include <algorithm>
#include <map>

#include "f1/errors.hpp"

namespace f1 {

std::vector<std::string> module_violations(const PointedModule& m) {
  std::vector<std::string> out;
  const FiniteMonoid& a = *m.over;
  if (static_cast<int>(m.act.size()) != a.size * m.size) {
    out.push_back("action table has wrong shape");
    return out;
  }
  for (int v : m.act) {
    if (v < 0 || v >= m.size) {
      out.push_back("action value out of range");
      return out;
    }
  }
  for (int x = 0; x < m.size; ++x) {
    if (m.apply(a.identity, x) != x) out.push_back("1.x != x at x=" + std::to_string(x));
  }
  for (int g = 0; g < a.size; ++g) {
    if (m.apply(g, 0) != 0) out.push_back("a.0 != 0 at a=" + std::to_string(g));
  }
  for (int g = 0; g < a.size; ++g) {
    for (int h = 0; h < a.size; ++h) {
      for (int x = 0; x < m.size; ++x) {
        if (m.apply(g, m.apply(h, x)) != m.apply(a.mul(g, h), x)) {
          out.push_back("a.(b.x) != (ab).x at a=" + std::to_string(g) + " b=" + std::to_string(h) +
                        " x=" + std::to_string(x));
        }
      }
    }
  }
  if (a.has_zero()) {
    for (int x = 0; x < m.size; ++x) {
      if (m.apply(a.zero, x) != 0) {
        out.push_back("monoid zero does not act as basepoint at x=" + std::to_string(x));
      }
    }
  }
  return out;
}

void validate_module(const PointedModule& m) {
  auto v = module_violations(m);
  if (!v.empty()) throw Error("invalid module: " + v.front());
}

PointedModule zero_module(std::shared_ptr<const FiniteMonoid> a) {
  PointedModule m;
  m.over = std::move(a);
  m.size = 1;
  m.act.assign(m.over->size, 0);
  m.labels = {"0"};
  return m;
}

PointedModule free_module(std::shared_ptr<const FiniteMonoid> a, int n) {
  if (n < 0) throw Error("free_module: rank must be >= 0");
  const FiniteMonoid& mon = *a;
  std::vector<int> carrier;  // monoid elements of one copy, zero excluded
  for (int x = 0; x < mon.size; ++x) {
    if (mon.has_zero() && x == mon.zero) continue;
    carrier.push_back(x);
  }
  const int per = static_cast<int>(carrier.size());
  std::vector<int> pos(mon.size, -1);
  for (int i = 0; i < per; ++i) pos[carrier[i]] = i;

  PointedModule m;
  m.over = std::move(a);
  m.size = n * per + 1;
  m.act.assign(static_cast<size_t>(mon.size) * m.size, 0);
  m.labels.assign(m.size, "0");
  for (int copy = 0; copy < n; ++copy) {
    for (int i = 0; i < per; ++i) {
      int idx = 1 + copy * per + i;
      m.labels[idx] = (n > 1 ? "e" + std::to_string(copy) + "." : "") + mon.names[carrier[i]];
      for (int g = 0; g < mon.size; ++g) {
        int prod = mon.mul(g, carrier[i]);
        int target = (mon.has_zero() && prod == mon.zero) ? 0 : 1 + copy * per + pos[prod];
        m.act[static_cast<size_t>(g) * m.size + idx] = target;
      }
    }
  }
  return m;
}

PointedModule wedge(const PointedModule& m, const PointedModule& n) {
  if (!m.same_base(n)) throw BaseMismatch("wedge: modules over different monoids");
  const FiniteMonoid& a = *m.over;
  PointedModule w;
  w.over = m.over;
  w.size = 1 + m.nonzero() + n.nonzero();
  w.act.assign(static_cast<size_t>(a.size) * w.size, 0);
  w.labels.assign(w.size, "0");
  auto from_m = [&](int x) { return x == 0 ? 0 : x; };
  auto from_n = [&](int y) { return y == 0 ? 0 : m.nonzero() + y; };
  for (int g = 0; g < a.size; ++g) {
    for (int x = 1; x < m.size; ++x) w.act[static_cast<size_t>(g) * w.size + from_m(x)] = from_m(m.apply(g, x));
    for (int y = 1; y < n.size; ++y) w.act[static_cast<size_t>(g) * w.size + from_n(y)] = from_n(n.apply(g, y));
  }
  for (int x = 1; x < m.size; ++x) {
    w.labels[from_m(x)] = "l." + (x < static_cast<int>(m.labels.size()) ? m.labels[x] : std::to_string(x));
  }
  for (int y = 1; y < n.size; ++y) {
    w.labels[from_n(y)] = "r." + (y < static_cast<int>(n.labels.size()) ? n.labels[y] : std::to_string(y));
  }
  return w;
}

namespace {

// Iso-invariant fingerprint per element for pruning the bijection search.
std::vector<std::vector<int>> element_signatures(const PointedModule& m) {
  const FiniteMonoid& a = *m.over;
  std::vector<std::vector<int>> sig(m.size);
  for (int x = 0; x < m.size; ++x) {
    std::vector<int>& s = sig[x];
    for (int g = 0; g < a.size; ++g) {
      int y = m.apply(g, x);
      s.push_back(y == 0 ? 0 : (y == x ? 1 : 2));
    }
    // Orbit size of x.
    std::vector<char> seen(m.size, 0);
    int count = 0;
    for (int g = 0; g < a.size; ++g) {
      int y = m.apply(g, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
      }
    }
    s.push_back(count);
  }
  return sig;
}

bool extend_isomorphism(const PointedModule& m, const PointedModule& n, std::vector<int>& image,
                        std::vector<char>& used, int next,
                        const std::vector<std::vector<int>>& sig_m,
                        const std::vector<std::vector<int>>& sig_n) {
  if (next == m.size) return true;
  const FiniteMonoid& a = *m.over;
  for (int cand = 1; cand < n.size; ++cand) {
    if (used[cand] || sig_m[next] != sig_n[cand]) continue;
    bool ok = true;
    image[next] = cand;
    used[cand] = 1;
    for (int g = 0; g < a.size && ok; ++g) {
      for (int x = 1; x <= next && ok; ++x) {
        if (image[x] == -1) continue;
        int y = m.apply(g, x);
        if (y <= next && image[y] != -1) {
          if (n.apply(g, image[x]) != image[y]) ok = false;
        }
      }
    }
    if (ok && extend_isomorphism(m, n, image, used, next + 1, sig_m, sig_n)) return true;
    image[next] = -1;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const PointedModule& m, const PointedModule& n) {
  if (!m.same_base(n)) throw BaseMismatch("is_isomorphic: modules over different monoids");
  if (m.size != n.size) return false;
  if (m.size == 1) return true;
  auto sig_m = element_signatures(m);
  auto sig_n = element_signatures(n);
  {
    auto a = sig_m;
    auto b = sig_n;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<int> image(m.size, -1);
  image[0] = 0;
  std::vector<char> used(n.size, 0);
  used[0] = 1;
  return extend_isomorphism(m, n, image, used, 1, sig_m, sig_n);
}

void validate_map(const ModuleMap& f) {
  if (static_cast<int>(f.map.size()) != f.from.size) {
    throw NotEquivariant("module map has wrong domain size");
  }
  for (int v : f.map) {
    if (v < 0 || v >= f.to.size) throw NotEquivariant("module map image out of range");
  }
  if (!f.from.same_base(f.to)) throw BaseMismatch("module map across different monoids");
  if (f.map[0] != 0) throw NotEquivariant("module map does not preserve the basepoint");
  const FiniteMonoid& a = *f.from.over;
  for (int g = 0; g < a.size; ++g) {
    for (int x = 0; x < f.from.size; ++x) {
      if (f.map[f.from.apply(g, x)] != f.to.apply(g, f.map[x])) {
        throw NotEquivariant("module map is not equivariant at a=" + std::to_string(g) +
                             " x=" + std::to_string(x));
      }
    }
  }
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
  if (!(f.to == g.from)) throw NotComposable("compose: middle objects differ");
  ModuleMap h{f.from, g.to, {}};
  h.map.reserve(f.map.size());
  for (int v : f.map) h.map.push_back(g.map[v]);
  return h;
}

ModuleMap identity_map(const PointedModule& m) {
  ModuleMap f{m, m, {}};
  f.map.resize(m.size);
  for (int i = 0; i < m.size; ++i) f.map[i] = i;
  return f;
}

ModuleMap submodule_inclusion(const PointedModule& m, const std::vector<int>& subset) {
  std::vector<int> elems;
  std::vector<char> in(m.size, 0);
  for (int x : subset) in[x] = 1;
  in[0] = 1;
  for (int x = 0; x < m.size; ++x) {
    if (in[x]) elems.push_back(x);
  }
  std::vector<int> pos(m.size, -1);
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  const FiniteMonoid& a = *m.over;
  PointedModule s;
  s.over = m.over;
  s.size = static_cast<int>(elems.size());
  s.act.assign(static_cast<size_t>(a.size) * s.size, 0);
  s.labels.resize(s.size);
  for (size_t i = 0; i < elems.size(); ++i) {
    s.labels[i] = elems[i] < static_cast<int>(m.labels.size()) ? m.labels[elems[i]]
                                                               : std::to_string(elems[i]);
    for (int g = 0; g < a.size; ++g) {
      int y = m.apply(g, elems[i]);
      if (pos[y] < 0) throw Error("submodule_inclusion: subset is not action-closed");
      s.act[static_cast<size_t>(g) * s.size + i] = pos[y];
    }
  }
  ModuleMap inc{std::move(s), m, {}};
  for (int e : elems) inc.map.push_back(e);
  return inc;
}

ModuleMap kernel(const ModuleMap& f) {
  validate_map(f);
  std::vector<int> ker;
  for (int x = 0; x < f.from.size; ++x) {
    if (f.map[x] == 0) ker.push_back(x);
  }
  return submodule_inclusion(f.from, ker);
}

ModuleMap cokernel(const ModuleMap& f) {
  validate_map(f);
  std::vector<char> in_image(f.to.size, 0);
  for (int v : f.map) in_image[v] = 1;
  const FiniteMonoid& a = *f.to.over;
  std::vector<int> pos(f.to.size, -1);
  pos[0] = 0;
  std::vector<int> elems{0};
  for (int y = 1; y < f.to.size; ++y) {
    if (!in_image[y]) {
      pos[y] = static_cast<int>(elems.size());
      elems.push_back(y);
    }
  }
  PointedModule c;
  c.over = f.to.over;
  c.size = static_cast<int>(elems.size());
  c.act.assign(static_cast<size_t>(a.size) * c.size, 0);
  c.labels.resize(c.size, "0");
  for (size_t i = 1; i < elems.size(); ++i) {
    c.labels[i] = elems[i] < static_cast<int>(f.to.labels.size()) ? f.to.labels[elems[i]]
                                                                  : std::to_string(elems[i]);
    for (int g = 0; g < a.size; ++g) {
      int y = f.to.apply(g, elems[i]);
      c.act[static_cast<size_t>(g) * c.size + i] = in_image[y] ? 0 : pos[y];
    }
  }
  ModuleMap proj{f.to, std::move(c), {}};
  for (int y = 0; y < f.to.size; ++y) proj.map.push_back(in_image[y] ? 0 : pos[y]);
  return proj;
}

Pullback pullback(const ModuleMap& f, const ModuleMap& g) {
  validate_map(f);
  validate_map(g);
  if (!(f.to == g.to)) throw NotComposable("pullback: maps have different targets");
  const FiniteMonoid& a = *f.from.over;
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pos;
  pairs.emplace_back(0, 0);
  pos[{0, 0}] = 0;
  for (int x = 0; x < f.from.size; ++x) {
    for (int y = 0; y < g.from.size; ++y) {
      if (x == 0 && y == 0) continue;
      if (f.map[x] == g.map[y]) {
        pos[{x, y}] = static_cast<int>(pairs.size());
        pairs.emplace_back(x, y);
      }
    }
  }
  PointedModule p;
  p.over = f.from.over;
  p.size = static_cast<int>(pairs.size());
  p.act.assign(static_cast<size_t>(a.size) * p.size, 0);
  p.labels.resize(p.size);
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [x, y] = pairs[i];
    p.labels[i] = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    for (int gg = 0; gg < a.size; ++gg) {
      p.act[static_cast<size_t>(gg) * p.size + i] = pos.at({f.from.apply(gg, x), g.from.apply(gg, y)});
    }
  }
  Pullback pb{p, ModuleMap{p, f.from, {}}, ModuleMap{p, g.from, {}}};
  for (auto& [x, y] : pairs) {
    pb.to_left.map.push_back(x);
    pb.to_right.map.push_back(y);
  }
  return pb;
}

bool is_exact_kernel(const ModuleMap& f) {
  validate_map(f);
  std::vector<char> hit(f.to.size, 0);
  for (int v : f.map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool is_exact_cokernel(const ModuleMap& f) {
  validate_map(f);
  std::vector<int> preimage(f.to.size, -1);
  for (int x = 0; x < f.from.size; ++x) {
    int v = f.map[x];
    if (v == 0) continue;
    if (preimage[v] != -1) return false;  // fiber over a nonzero point must be a singleton
    preimage[v] = x;
  }
  for (int y = 1; y < f.to.size; ++y) {
    if (preimage[y] == -1) return false;  // not surjective
  }
  return true;
}

bool strong_exact_check(const ModuleMap& i, const ModuleMap& j) {
  validate_map(i);
  validate_map(j);
  if (!(i.to == j.from)) return false;
  // j . i = 0
  for (int x = 0; x < i.from.size; ++x) {
    if (j.map[i.map[x]] != 0) return false;
  }
  // i is the kernel of j: mono with image exactly j^{-1}(0).
  if (!is_exact_kernel(i)) return false;
  std::vector<char> in_image(i.to.size, 0);
  for (int v : i.map) in_image[v] = 1;
  for (int y = 0; y < i.to.size; ++y) {
    bool killed = j.map[y] == 0;
    if (killed != static_cast<bool>(in_image[y])) return false;
  }
  // j is the cokernel of i: the induced map from the canonical quotient is an
  // isomorphism.
  if (!is_exact_cokernel(j)) return false;
  return true;
}

}  // namespace f1
