#include <random>

#include "doctest.h"
#include "f1/numeric.hpp"
#include "f1/smith.hpp"

using namespace f1;

TEST_CASE("integer helpers") {
  CHECK(ipow(Int(2), 10) == 1024);
  CHECK(ipow(Int(-3), 3) == -27);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(is_prime(2));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(33));
  CHECK(is_prime_power(8));
  CHECK(is_prime_power(49));
  CHECK_FALSE(is_prime_power(6));
  CHECK_FALSE(is_prime_power(1));
  CHECK(prime_powers_upto(10) == std::vector<long long>{2, 3, 4, 5, 7, 8, 9});
}

TEST_CASE("determinant") {
  CHECK(IntMatrix{{2, 4}, {6, 8}}.determinant() == -8);
  CHECK(IntMatrix::identity(4).determinant() == 1);
  CHECK(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}.determinant() == 0);
  CHECK(IntMatrix{{0, 1}, {1, 0}}.determinant() == -1);
}

namespace {

bool is_divisibility_chain(const IntMatrix& d) {
  Int prev = 0;
  const int steps = std::min(d.rows, d.cols);
  bool zero_seen = false;
  for (int t = 0; t < steps; ++t) {
    const Int& v = d.at(t, t);
    if (v < 0) return false;
    if (v == 0) {
      zero_seen = true;
      continue;
    }
    if (zero_seen) return false;  // zeros must trail
    if (prev != 0 && v % prev != 0) return false;
    prev = v;
  }
  return d.is_diagonal();
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
  SUBCASE("identity") {
    SmithResult s = smith_normal_form(IntMatrix::identity(2));
    CHECK(s.d == IntMatrix::identity(2));
  }
  SUBCASE("2x2 with determinant -8") {
    IntMatrix m{{2, 4}, {6, 8}};
    SmithResult s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 4);
    CHECK(s.u * m * s.v == s.d);
  }
  SUBCASE("zero matrix") {
    IntMatrix m(3, 2);
    SmithResult s = smith_normal_form(m);
    CHECK(s.d == m);
    CHECK(s.u == IntMatrix::identity(3));
    CHECK(s.v == IntMatrix::identity(2));
  }
  SUBCASE("rectangular") {
    IntMatrix m{{6, 10, 15}};
    SmithResult s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 1);  // gcd(6,10,15)
    CHECK(s.u * m * s.v == s.d);
  }
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int iter = 0; iter < 300; ++iter) {
    IntMatrix m(dim(rng), dim(rng));
    for (Int& e : m.entries) e = entry(rng);
    SmithResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    Int du = s.u.determinant();
    Int dv = s.v.determinant();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(is_divisibility_chain(s.d));
  }
}

TEST_CASE("group from presentation") {
  SUBCASE("free") {
    IntMatrix m(0, 3);
    FgAbelianGroup g = group_from_presentation(m);
    CHECK(g.rank == 3);
    CHECK(g.invariant_factors.empty());
  }
  SUBCASE("Z/2") {
    FgAbelianGroup g = group_from_presentation(IntMatrix{{2}});
    CHECK(g.rank == 0);
    CHECK(g.invariant_factors == std::vector<Int>{2});
  }
  SUBCASE("Z x Z/2") {
    FgAbelianGroup g = group_from_presentation(IntMatrix{{2, 0}, {0, 0}});
    CHECK(g.rank == 1);
    CHECK(g.invariant_factors == std::vector<Int>{2});
  }
  SUBCASE("unit relation entries cancel") {
    // 2x = 0, x = 0 presents the trivial group on one generator.
    FgAbelianGroup g = group_from_presentation(IntMatrix{{2}, {1}});
    CHECK(g.rank == 0);
    CHECK(g.invariant_factors.empty());
  }
}
