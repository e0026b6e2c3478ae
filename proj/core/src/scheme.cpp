#include "f1/scheme.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "f1/errors.hpp"

namespace f1 {

namespace {

int uf_find(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

std::vector<GlobalPoint> glue(const F1Scheme& x) {
  // Chart points in canonical order: chart index, then prime order.
  std::vector<ChartPointRef> points;
  std::vector<FgAbelianGroup> stalks;
  std::map<ChartPointRef, int> index;
  for (int ci = 0; ci < static_cast<int>(x.charts.size()); ++ci) {
    for (const PrimeIdeal& p : chart_spectrum(x.charts[ci], x.limits)) {
      ChartPointRef ref{ci, p};
      index[ref] = static_cast<int>(points.size());
      points.push_back(ref);
      stalks.push_back(stalk_units(x.charts[ci], p));
    }
  }

  std::vector<int> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [a, b] : x.identifications) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw Error("glue: identification references a point that is not in any chart spectrum");
    }
    int ra = uf_find(parent, ia->second);
    int rb = uf_find(parent, ib->second);
    if (ra == rb) continue;
    if (ra > rb) std::swap(ra, rb);
    parent[rb] = ra;
  }

  std::map<int, GlobalPoint> classes;
  for (size_t i = 0; i < points.size(); ++i) {
    int r = uf_find(parent, static_cast<int>(i));
    GlobalPoint& gp = classes[r];
    if (gp.members.empty()) {
      gp.stalk_units = stalks[r];
    }
    if (stalks[i] != gp.stalk_units) {
      throw IncompatibleGluing(
          "glue: identified points have different stalk invariants: " +
          x.charts[points[r].chart].name + "." + prime_to_string(x.charts[points[r].chart], points[r].prime) +
          " has " + gp.stalk_units.to_string() + ", " + x.charts[points[i].chart].name + "." +
          prime_to_string(x.charts[points[i].chart], points[i].prime) + " has " +
          stalks[i].to_string());
    }
    gp.members.push_back(points[i]);
  }

  std::vector<GlobalPoint> out;
  for (auto& [root, gp] : classes) {
    std::sort(gp.members.begin(), gp.members.end());
    out.push_back(std::move(gp));
  }
  std::sort(out.begin(), out.end(),
            [](const GlobalPoint& a, const GlobalPoint& b) { return a.members.front() < b.members.front(); });
  return out;
}

int scheme_rank(const F1Scheme& x) {
  int r = 0;
  for (const GlobalPoint& p : glue(x)) r = std::max(r, p.rank());
  return r;
}

Int scheme_exponent(const F1Scheme& x) {
  Int e = 1;
  for (const GlobalPoint& p : glue(x)) e = lcm(e, p.stalk_units.exponent());
  return e;
}

F1Scheme spec_chart(MonoidChart c, std::string name) {
  F1Scheme x;
  x.name = name.empty() ? "spec " + c.name : std::move(name);
  x.charts.push_back(std::move(c));
  return x;
}

F1Scheme spec_f1() {
  F1Scheme x = spec_chart(make_chart("F1", SplitMonoid{}), "spec F1");
  return x;
}

F1Scheme affine_space(int n) {
  if (n < 0) throw Error("affine_space: dimension must be >= 0");
  SplitMonoid s;
  s.cone_rank = n;
  return spec_chart(make_chart("A" + std::to_string(n), s), "A^" + std::to_string(n));
}

F1Scheme torus(int k) {
  if (k < 0) throw Error("torus: dimension must be >= 0");
  SplitMonoid s;
  s.free_rank = k;
  std::string name = k == 1 ? "G_m" : "G_m^" + std::to_string(k);
  return spec_chart(make_chart(name, s), name);
}

F1Scheme mu_scheme(int n) {
  if (n < 1) throw Error("mu_scheme: n must be >= 1");
  FiniteMonoid m = FiniteMonoid::cyclic_group(n);
  // Compact presentation {g | g^n = 1} keeps the brute-force counter in
  // bounds; element g^i is the word g^i.
  ChartOracleData od;
  od.from_presentation = true;
  od.pres.generators = {"g"};
  od.pres.relations.push_back(Relation{{static_cast<unsigned>(n)}, {0}});
  for (int i = 0; i < n; ++i) od.element_words.push_back({static_cast<unsigned>(i)});
  od.generator_images = {n >= 2 ? 1 : 0};
  return spec_chart(make_chart("mu_" + std::to_string(n), std::move(m), std::move(od)),
                    "mu_" + std::to_string(n));
}

F1Scheme d_scheme(long long k) {
  if (k < 2) throw Error("d_scheme: k must be >= 2");
  FiniteMonoid m = FiniteMonoid::d_monoid(k);
  // {g, z | g^(k-1) = 1, z g = z, z z = z}; elements 1, g, ..., g^(k-2), 0.
  ChartOracleData od;
  od.from_presentation = true;
  od.pres.generators = {"g", "0"};
  od.pres.relations.push_back(Relation{{static_cast<unsigned>(k - 1), 0}, {0, 0}});
  od.pres.relations.push_back(Relation{{1, 1}, {0, 1}});
  od.pres.relations.push_back(Relation{{0, 2}, {0, 1}});
  for (long long i = 0; i + 1 < k; ++i) od.element_words.push_back({static_cast<unsigned>(i), 0});
  od.element_words.push_back({0, 1});
  od.generator_images = {k >= 3 ? 1 : 0, static_cast<int>(k - 1)};
  return spec_chart(make_chart("D_" + std::to_string(k), std::move(m), std::move(od)),
                    "spec D_" + std::to_string(k));
}

F1Scheme proj_space(int n) {
  if (n < 0 || n > 6) throw Error("proj_space: dimension must be in 0..6");
  F1Scheme x;
  x.name = "P^" + std::to_string(n);
  for (int i = 0; i <= n; ++i) {
    SplitMonoid s;
    s.cone_rank = n;
    x.charts.push_back(make_chart("U" + std::to_string(i), s));
  }
  // Chart i covers the points J (subsets of {0..n}) with i in J; the prime of
  // J in chart i is generated by the coordinates outside J. Identify the
  // copies of each J along consecutive members.
  auto coord_in_chart = [n](int chart, int j) { return j < chart ? j : j - 1; };
  for (uint32_t j_set = 1; j_set < (1u << (n + 1)); ++j_set) {
    std::vector<int> members;
    for (int i = 0; i <= n; ++i) {
      if ((j_set >> i) & 1u) members.push_back(i);
    }
    if (members.size() < 2) continue;
    auto prime_in = [&](int chart) {
      uint32_t mask = 0;
      for (int j = 0; j <= n; ++j) {
        if (j == chart) continue;
        if (!((j_set >> j) & 1u)) mask |= 1u << coord_in_chart(chart, j);
      }
      return PrimeIdeal{mask, false};
    };
    for (size_t t = 0; t + 1 < members.size(); ++t) {
      x.identifications.push_back({ChartPointRef{members[t], prime_in(members[t])},
                                   ChartPointRef{members[t + 1], prime_in(members[t + 1])}});
    }
  }
  return x;
}

}  // namespace f1
