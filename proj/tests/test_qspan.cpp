#include "doctest.h"
#include "f1/errors.hpp"
#include "f1/qspan.hpp"
#include "f1/saturate.hpp"

using namespace f1;

namespace {

std::shared_ptr<const FiniteMonoid> flat_monoid() {
  Presentation p;
  p.generators = {"a"};
  p.relations.push_back(Relation{{2}, {1}});
  return std::make_shared<FiniteMonoid>(saturate(p, 8).monoid);
}

PointedModule absorbed_copy(const std::shared_ptr<const FiniteMonoid>& a) {
  PointedModule f = free_module(a, 1);
  for (int x = 1; x < f.size; ++x) {
    if (f.apply(1, x) == x) return submodule_inclusion(f, {x}).from;
  }
  throw std::logic_error("no absorbing element");
}

// All spans between small fixed modules over the monoid, found by scanning
// leg candidates.
std::vector<QSpan> span_corpus(const std::shared_ptr<const FiniteMonoid>& a) {
  std::vector<PointedModule> objs{zero_module(a), free_module(a, 1), absorbed_copy(a)};
  std::vector<QSpan> spans;
  for (const PointedModule& x : objs) {
    for (const PointedModule& y : objs) {
      for (const PointedModule& s : objs) {
        // enumerate all maps s->y and s->x
        std::vector<std::vector<int>> to_y, to_x;
        std::vector<int> map(s.size, 0);
        auto enumerate = [&](const PointedModule& target, std::vector<std::vector<int>>& out) {
          long long total = 1;
          for (int i = 1; i < s.size; ++i) total *= target.size;
          for (long long it = 0; it < total; ++it) {
            long long rem = it;
            for (int i = 1; i < s.size; ++i) {
              map[i] = static_cast<int>(rem % target.size);
              rem /= target.size;
            }
            try {
              validate_map(ModuleMap{s, target, map});
              out.push_back(map);
            } catch (const NotEquivariant&) {
            }
          }
        };
        enumerate(y, to_y);
        enumerate(x, to_x);
        for (const auto& ky : to_y) {
          for (const auto& kx : to_x) {
            try {
              spans.push_back(make_qspan(x, y, s, kx, ky));
            } catch (const InvalidSpan&) {
            }
          }
        }
      }
    }
  }
  return spans;
}

}  // namespace

TEST_CASE("identity spans are neutral for composition") {
  auto a = flat_monoid();
  for (const QSpan& s : span_corpus(a)) {
    QSpan right = q_compose(s, identity_span(s.target));
    CHECK(span_isomorphic(right, s));
    QSpan left = q_compose(identity_span(s.source), s);
    CHECK(span_isomorphic(left, s));
  }
}

TEST_CASE("base change preserves the kernel of the cokernel leg") {
  auto a = flat_monoid();
  auto corpus = span_corpus(a);
  int checked = 0;
  for (const QSpan& s1 : corpus) {
    for (const QSpan& s2 : corpus) {
      if (!(s1.target == s2.source)) continue;
      Pullback pb = pullback(s1.kernel_map(), s2.cokernel_map());
      ModuleMap ker_base_change = kernel(pb.to_left);
      ModuleMap ker_original = kernel(s2.cokernel_map());
      CHECK(is_isomorphic(ker_base_change.from, ker_original.from));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("pullback middles match hand enumeration") {
  auto a = flat_monoid();
  PointedModule f = free_module(a, 1);   // {0, 1, a}
  PointedModule t = absorbed_copy(a);    // {0, a}
  // spans: f <- f -> f (identities) and f <- t -> t.
  QSpan s1 = identity_span(f);
  std::vector<int> inc = {0, 2};  // t embeds onto {0, a}
  std::vector<int> idt = {0, 1};
  QSpan s2 = make_qspan(t, f, t, idt, inc);
  // middle of s1 after s2: pairs (y in t, x in f) with inc(y) = x, i.e.
  // {(0,0), (a,a)}.
  QSpan c = q_compose(s2, s1);
  CHECK(c.middle.size == 2);
  QSpan c2 = q_compose(identity_span(t), s2);
  CHECK(c2.middle.size == 2);
  CHECK(span_isomorphic(c2, s2));
}

TEST_CASE("composition is associative up to isomorphism") {
  for (auto base : {flat_monoid(), std::make_shared<const FiniteMonoid>(FiniteMonoid::cyclic_group(2))}) {
    auto corpus = span_corpus(base);
    int checked = 0;
    for (size_t i = 0; i < corpus.size() && checked < 400; ++i) {
      for (size_t j = 0; j < corpus.size() && checked < 400; ++j) {
        if (!(corpus[i].target == corpus[j].source)) continue;
        for (size_t k = 0; k < corpus.size() && checked < 400; ++k) {
          if (!(corpus[j].target == corpus[k].source)) continue;
          QSpan lhs = q_compose(q_compose(corpus[i], corpus[j]), corpus[k]);
          QSpan rhs = q_compose(corpus[i], q_compose(corpus[j], corpus[k]));
          CHECK(span_isomorphic(lhs, rhs));
          ++checked;
        }
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("non-composable spans are rejected") {
  auto a = flat_monoid();
  PointedModule f = free_module(a, 1);
  PointedModule t = absorbed_copy(a);
  QSpan sf = identity_span(f);
  QSpan st = identity_span(t);
  CHECK_THROWS_AS(q_compose(sf, st), NotComposable);
}

TEST_CASE("invalid legs are rejected") {
  auto a = flat_monoid();
  PointedModule f = free_module(a, 1);
  std::vector<int> collapse(f.size, 0);
  std::vector<int> id(f.size);
  for (int i = 0; i < f.size; ++i) id[i] = i;
  CHECK_THROWS_AS(make_qspan(f, f, f, id, collapse), InvalidSpan);   // kernel leg not injective
  CHECK_THROWS_AS(make_qspan(f, f, f, collapse, id), InvalidSpan);   // cokernel leg not onto
}
