#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "f1/errors.hpp"
#include "f1/scheme.hpp"

using namespace f1;

namespace {

std::multiset<int> rank_multiset(const F1Scheme& x) {
  std::multiset<int> ranks;
  for (const GlobalPoint& p : glue(x)) ranks.insert(p.rank());
  return ranks;
}

}  // namespace

TEST_CASE("single chart gluing keeps chart points") {
  F1Scheme a2 = affine_space(2);
  auto points = glue(a2);
  CHECK(points.size() == 4);
  for (const GlobalPoint& p : points) CHECK(p.members.size() == 1);
}

TEST_CASE("builders") {
  CHECK(rank_multiset(spec_f1()) == std::multiset<int>{0});
  CHECK(rank_multiset(affine_space(1)) == std::multiset<int>{0, 1});
  CHECK(rank_multiset(torus(1)) == std::multiset<int>{1});
  auto mu2 = glue(mu_scheme(2));
  REQUIRE(mu2.size() == 1);
  CHECK(mu2[0].stalk_units == FgAbelianGroup{0, {2}});
  auto d5 = glue(d_scheme(5));
  REQUIRE(d5.size() == 2);
  CHECK(scheme_exponent(d_scheme(5)) == 4);
}

TEST_CASE("projective spaces glue to the subset lattice") {
  for (int n = 0; n <= 3; ++n) {
    F1Scheme pn = proj_space(n);
    auto points = glue(pn);
    CHECK(points.size() == (1u << (n + 1)) - 1);
    std::map<int, int> by_rank;
    for (const GlobalPoint& p : points) by_rank[p.rank()] += 1;
    for (int r = 0; r <= n; ++r) {
      CHECK(by_rank[r] == binomial(n + 1, r + 1));
    }
  }
  CHECK(rank_multiset(proj_space(1)) == std::multiset<int>{0, 0, 1});
  CHECK(rank_multiset(proj_space(2)) == std::multiset<int>{0, 0, 0, 1, 1, 1, 2});
}

TEST_CASE("incompatible gluing is rejected") {
  F1Scheme x;
  x.name = "bad";
  SplitMonoid line;
  line.cone_rank = 1;
  x.charts.push_back(make_chart("U0", line));
  x.charts.push_back(make_chart("U1", line));
  // Rank-1 generic point against a rank-0 closed point.
  x.identifications.push_back({ChartPointRef{0, PrimeIdeal{0, false}},
                               ChartPointRef{1, PrimeIdeal{1, false}}});
  CHECK_THROWS_AS(glue(x), IncompatibleGluing);

  F1Scheme y = x;
  y.identifications.clear();
  y.identifications.push_back({ChartPointRef{0, PrimeIdeal{2, false}},
                               ChartPointRef{1, PrimeIdeal{0, false}}});
  CHECK_THROWS_AS(glue(y), Error);  // references a point outside the spectrum
}

TEST_CASE("gluing is independent of identification order") {
  F1Scheme p2 = proj_space(2);
  auto reference = glue(p2);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    F1Scheme shuffled = p2;
    std::shuffle(shuffled.identifications.begin(), shuffled.identifications.end(), rng);
    for (auto& [a, b] : shuffled.identifications) {
      if (trial % 2 == 1) std::swap(a, b);
    }
    auto points = glue(shuffled);
    REQUIRE(points.size() == reference.size());
    for (size_t i = 0; i < points.size(); ++i) {
      CHECK(points[i].members == reference[i].members);
      CHECK(points[i].stalk_units == reference[i].stalk_units);
    }
  }
}

TEST_CASE("scheme rank and exponent") {
  CHECK(scheme_rank(affine_space(2)) == 2);
  CHECK(scheme_exponent(affine_space(2)) == 1);
  CHECK(scheme_rank(mu_scheme(6)) == 0);
  CHECK(scheme_exponent(mu_scheme(6)) == 6);
  CHECK(scheme_rank(proj_space(1)) == 1);
  CHECK(scheme_exponent(proj_space(1)) == 1);
}
