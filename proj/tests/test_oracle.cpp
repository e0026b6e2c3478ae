#include "doctest.h"
#include "f1/errors.hpp"
#include "f1/oracle.hpp"
#include "f1/saturate.hpp"
#include "f1/zeta.hpp"

using namespace f1;

namespace {

Presentation pres(std::vector<std::string> gens,
                  std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> rels,
                  bool zero = false) {
  Presentation p;
  p.generators = std::move(gens);
  for (auto& [l, r] : rels) p.relations.push_back(Relation{l, r});
  p.has_zero = zero;
  return p;
}

}  // namespace

TEST_CASE("assignment counting on pinned presentations") {
  CHECK(hom_count_oracle(pres({"x", "y"}, {}), 5) == 25);
  CHECK(hom_count_oracle(pres({"g"}, {{{2}, {0}}}), 5) == 2);   // order-2 solutions in D_5
  CHECK(hom_count_oracle(pres({"a"}, {{{2}, {1}}}), 9) == 2);   // idempotents of D_9
  CHECK(hom_count_oracle(pres({}, {}), 7) == 1);                // trivial monoid
}

TEST_CASE("adjoined zero adds an absorbing image") {
  // D_2 = {1, 0}: its absorbing image can be either idempotent of D_k.
  Presentation d2 = pres({}, {}, true);
  CHECK(hom_count_oracle(d2, 5) == 2);
  // mu_2 with a zero: g^2 = 1 plus an absorber.
  Presentation m = pres({"g"}, {{{2}, {0}}}, true);
  CHECK(hom_count_oracle(m, 5) == hom_count_oracle(pres({"g"}, {{{2}, {0}}}), 5) + 1);
}

TEST_CASE("search space limits") {
  Presentation nine = pres({"a", "b", "c", "d", "e", "f", "g", "h", "i"}, {});
  CHECK_THROWS_AS(hom_count_oracle(nine, 4), SearchSpaceExceeded);
  CHECK_FALSE(oracle_feasible(nine, 4));
  Presentation two = pres({"a", "b"}, {});
  CHECK_THROWS_AS(hom_count_oracle(two, 100), SearchSpaceExceeded);
  OracleLimits tight;
  tight.space_cap = 10;
  CHECK_THROWS_AS(hom_count_oracle(two, 5, tight), SearchSpaceExceeded);
}

TEST_CASE("oracle agrees with the spectral formula on charts") {
  std::vector<MonoidChart> charts;
  charts.push_back(make_chart("D5", FiniteMonoid::d_monoid(5)));
  charts.push_back(make_chart("C6", FiniteMonoid::cyclic_group(6)));
  charts.push_back(make_chart("flat", FiniteMonoid::from_table({0, 1, 1, 1}, 0)));
  {
    SplitMonoid s;
    s.free_rank = 1;
    charts.push_back(make_chart("Gm", s));
  }
  {
    SplitMonoid s;
    s.cone_rank = 2;
    charts.push_back(make_chart("A2", s));
  }
  {
    SplitMonoid s;
    s.free_rank = 1;
    s.torsion = {2};
    charts.push_back(make_chart("GmMu2", s));
  }
  for (const MonoidChart& c : charts) {
    for (long long k = 2; k <= 16; ++k) {
      Int formula = 0;
      for (const PrimeIdeal& p : chart_spectrum(c)) {
        formula += hom_count_cyclic(stalk_units(c, p), k - 1);
      }
      CAPTURE(c.name);
      CAPTURE(k);
      CHECK(hom_count_oracle(c.oracle->pres, k) == formula);
      // The by-prime decomposition refines the total.
      auto by_prime = oracle_counts_by_prime(c, k);
      Int total = 0;
      for (const auto& [p, cnt] : by_prime) {
        CHECK(is_prime_of(c, p));
        total += cnt;
      }
      CHECK(total == formula);
      // Per-prime counts match the stalk formula.
      for (const PrimeIdeal& p : chart_spectrum(c)) {
        Int expect = hom_count_cyclic(stalk_units(c, p), k - 1);
        Int got = by_prime.count(p) ? by_prime.at(p) : Int(0);
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("scheme-level counts through representatives") {
  for (long long q = 2; q <= 9; ++q) {
    CHECK(scheme_oracle_count(proj_space(1), q) == q + 1);
    CHECK(scheme_oracle_count(affine_space(2), q) == q * q);
    CHECK(scheme_oracle_count(torus(1), q) == q - 1);
  }
  CHECK(scheme_oracle_feasible(proj_space(2), 4));
}

TEST_CASE("thread count does not change totals") {
  SplitMonoid s;
  s.cone_rank = 3;
  MonoidChart c = make_chart("A3", s);
  OracleLimits one;
  one.threads = 1;
  OracleLimits four;
  four.threads = 4;
  for (long long k : {5, 9}) {
    CHECK(oracle_counts_by_prime(c, k, one) == oracle_counts_by_prime(c, k, four));
  }
}
