#include "doctest.h"
#include "f1/errors.hpp"
#include "f1/module.hpp"
#include "f1/saturate.hpp"

using namespace f1;

namespace {

std::shared_ptr<const FiniteMonoid> flat_monoid() {
  // {1, a} with a^2 = a.
  Presentation p;
  p.generators = {"a"};
  p.relations.push_back(Relation{{2}, {1}});
  return std::make_shared<FiniteMonoid>(saturate(p, 8).monoid);
}

std::shared_ptr<const FiniteMonoid> c3() {
  return std::make_shared<FiniteMonoid>(FiniteMonoid::cyclic_group(3));
}

// The submodule {0, a} of the rank-one free module over {1, a}.
PointedModule flat_subcopy(const std::shared_ptr<const FiniteMonoid>& a) {
  PointedModule f = free_module(a, 1);
  // the nonzero element fixed by a
  for (int x = 1; x < f.size; ++x) {
    if (f.apply(1, x) == x) return submodule_inclusion(f, {x}).from;
  }
  throw std::logic_error("no absorbing module element");
}

}  // namespace

TEST_CASE("free modules") {
  CHECK(free_module(c3(), 1).size == 4);
  CHECK(free_module(c3(), 0).size == 1);
  CHECK(free_module(flat_monoid(), 2).size == 5);
  // A flagged monoid zero acts as the basepoint, so a copy drops it.
  auto d3 = std::make_shared<FiniteMonoid>(FiniteMonoid::d_monoid(3));
  CHECK(free_module(d3, 1).size == 3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(module_violations(free_module(c3(), n)).empty());
    CHECK(module_violations(free_module(d3, n)).empty());
  }
}

TEST_CASE("wedges and isomorphism") {
  auto a = flat_monoid();
  PointedModule f1m = free_module(a, 1);
  PointedModule z = zero_module(a);
  CHECK(is_isomorphic(wedge(f1m, z), f1m));
  CHECK(is_isomorphic(wedge(f1m, f1m), free_module(a, 2)));
  PointedModule sub = flat_subcopy(a);
  CHECK(sub.size == 2);
  CHECK_FALSE(is_isomorphic(f1m, sub));
  CHECK_THROWS_AS(wedge(free_module(a, 1), free_module(c3(), 1)), BaseMismatch);
  // Wedge is commutative up to isomorphism.
  CHECK(is_isomorphic(wedge(f1m, sub), wedge(sub, f1m)));
}

TEST_CASE("kernels, cokernels, pullbacks") {
  auto a = flat_monoid();
  PointedModule f1m = free_module(a, 1);
  ModuleMap id = identity_map(f1m);
  CHECK(kernel(id).from.size == 1);

  ModuleMap to_zero{f1m, zero_module(a), std::vector<int>(f1m.size, 0)};
  CHECK(kernel(to_zero).from.size == f1m.size);
  CHECK(cokernel(id).to.size == 1);

  Pullback pb = pullback(id, id);
  CHECK(is_isomorphic(pb.object, f1m));

  std::vector<int> bad(f1m.size, 0);
  bad[1] = 1;
  bad[2] = 1;  // collapses a to 1's image: not equivariant
  CHECK_THROWS_AS(validate_map(ModuleMap{f1m, f1m, bad}), NotEquivariant);
}

TEST_CASE("strong exactness of wedge sequences") {
  auto a = flat_monoid();
  PointedModule x = free_module(a, 1);
  PointedModule y = flat_subcopy(a);
  PointedModule w = wedge(x, y);
  // X -> X v Y -> Y
  std::vector<int> inc(x.size);
  for (int i = 0; i < x.size; ++i) inc[i] = i;  // left block of the wedge
  std::vector<int> proj(w.size, 0);
  for (int j = 1; j < y.size; ++j) proj[x.size - 1 + j] = j;
  ModuleMap i{x, w, inc};
  ModuleMap j{w, y, proj};
  CHECK(strong_exact_check(i, j));

  SUBCASE("dropping a kernel element breaks exactness") {
    // Replace X by its submodule {0, a}: the image no longer fills j^{-1}(0).
    PointedModule sub = flat_subcopy(a);
    std::vector<int> inc2(sub.size);
    inc2[0] = 0;
    inc2[1] = 2;  // a inside the left block
    ModuleMap i2{sub, w, inc2};
    CHECK_FALSE(strong_exact_check(i2, j));
  }
  SUBCASE("non-injective first map") {
    std::vector<int> collapse(w.size, 0);
    ModuleMap i3{w, w, collapse};
    std::vector<int> idw(w.size);
    for (int t = 0; t < w.size; ++t) idw[t] = t;
    CHECK_FALSE(strong_exact_check(i3, ModuleMap{w, w, idw}));
  }
  SUBCASE("cokernel leg collapsing two points") {
    // Y v Y -> Y identifying the copies is epi but not a cokernel.
    PointedModule yy = wedge(y, y);
    std::vector<int> fold(yy.size, 0);
    for (int t = 1; t < y.size; ++t) {
      fold[t] = t;
      fold[y.size - 1 + t] = t;
    }
    ModuleMap f{yy, y, fold};
    validate_map(f);
    CHECK_FALSE(is_exact_cokernel(f));
    ModuleMap k = kernel(f);
    CHECK_FALSE(strong_exact_check(k, f));
  }
}
