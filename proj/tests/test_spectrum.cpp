#include "doctest.h"
#include "f1/chart.hpp"
#include "f1/errors.hpp"

using namespace f1;

namespace {

// Independent characterization: a subset is prime iff its complement contains
// the identity, is closed under products, and is divisor-closed.
bool face_check(const FiniteMonoid& m, uint32_t p) {
  auto in_s = [&](int x) { return !((p >> x) & 1u); };
  if (!in_s(m.identity)) return false;
  for (int x = 0; x < m.size; ++x) {
    for (int y = 0; y < m.size; ++y) {
      int prod = m.mul(x, y);
      if (in_s(x) && in_s(y) && !in_s(prod)) return false;
      if (in_s(prod) && (!in_s(x) || !in_s(y))) return false;
    }
  }
  return true;
}

SplitMonoid split(int a, int b, std::vector<Int> torsion = {}, bool zero = false) {
  SplitMonoid s;
  s.free_rank = a;
  s.cone_rank = b;
  s.torsion = std::move(torsion);
  s.has_zero = zero;
  return s;
}

}  // namespace

TEST_CASE("finite spectra") {
  CHECK(spectrum_finite(FiniteMonoid::trivial()) == std::vector<PrimeIdeal>{PrimeIdeal{0, false}});

  auto d5 = FiniteMonoid::d_monoid(5);
  auto spec_d5 = spectrum_finite(d5);
  REQUIRE(spec_d5.size() == 2);
  CHECK(spec_d5[0] == PrimeIdeal{0, false});
  CHECK(spec_d5[1] == PrimeIdeal{1u << d5.zero, false});

  FiniteMonoid flat = FiniteMonoid::from_table({0, 1, 1, 1}, 0, -1, {"1", "a"});
  auto spec_flat = spectrum_finite(flat);
  REQUIRE(spec_flat.size() == 2);
  CHECK(spec_flat[1].mask == 0b10u);  // the ideal {a}
}

TEST_CASE("split spectra") {
  CHECK(spectrum_split(split(0, 1)).size() == 2);
  CHECK(spectrum_split(split(0, 2)).size() == 4);
  auto d5_split = spectrum_split(split(0, 0, {4}, true));
  REQUIRE(d5_split.size() == 2);
  CHECK(d5_split[0] == PrimeIdeal{0, false});
  CHECK(d5_split[1] == PrimeIdeal{0, true});
  // Groups have a single prime.
  CHECK(spectrum_split(split(3, 0, {2, 6})).size() == 1);
}

TEST_CASE("stalk unit groups") {
  MonoidChart n_chart = make_chart("N", split(0, 1));
  CHECK(stalk_units(n_chart, PrimeIdeal{0, false}) == free_abelian(1));
  CHECK(stalk_units(n_chart, PrimeIdeal{1, false}).is_trivial());

  MonoidChart d5 = make_chart("D5", FiniteMonoid::d_monoid(5));
  CHECK(stalk_units(d5, PrimeIdeal{1u << 4, false}) == FgAbelianGroup{0, {4}});
  CHECK(stalk_units(d5, PrimeIdeal{0, false}).is_trivial());

  MonoidChart torus2 = make_chart("T2", split(2, 0));
  CHECK(stalk_units(torus2, PrimeIdeal{0, false}) == free_abelian(2));

  CHECK_THROWS_AS(stalk_units(d5, PrimeIdeal{0b01, false}), NotPrime);  // drop the identity
}

TEST_CASE("face duality on all monoids of size <= 8") {
  std::vector<FiniteMonoid> corpus;
  for (int k = 2; k <= 7; ++k) corpus.push_back(FiniteMonoid::d_monoid(k));
  for (int n = 1; n <= 6; ++n) corpus.push_back(FiniteMonoid::cyclic_group(n));
  corpus.push_back(FiniteMonoid::from_table({0, 1, 1, 1}, 0));
  corpus.push_back(FiniteMonoid::cyclic_group(4).adjoin_zero());
  for (const FiniteMonoid& m : corpus) {
    auto spec = spectrum_finite(m);
    size_t found = 0;
    for (uint32_t p = 0; p < (1u << m.size); ++p) {
      bool is_spec = std::find(spec.begin(), spec.end(), PrimeIdeal{p, false}) != spec.end();
      CAPTURE(m.size);
      CAPTURE(p);
      CHECK(is_spec == face_check(m, p));
      if (is_spec) ++found;
    }
    CHECK(found == spec.size());
    // The empty ideal is always prime; the generic stalk of a zero-free chart
    // is the full quotient group.
    CHECK(spec.front() == PrimeIdeal{0, false});
    bool absorbing = false;
    for (int x = 0; x < m.size; ++x) absorbing = absorbing || m.is_absorbing(x);
    if (!absorbing) {
      MonoidChart c = make_chart("m", m);
      CHECK(stalk_units(c, PrimeIdeal{0, false}) == group_completion_finite(m));
    }
  }
}

TEST_CASE("representation agreement for D_k") {
  for (long long k = 2; k <= 10; ++k) {
    MonoidChart fin = make_chart("fin", FiniteMonoid::d_monoid(k));
    MonoidChart spl = make_chart("spl", k == 2 ? split(0, 0, {}, true)
                                               : split(0, 0, {Int(k - 1)}, true));
    auto sf = chart_spectrum(fin);
    auto ss = chart_spectrum(spl);
    REQUIRE(sf.size() == ss.size());
    for (size_t i = 0; i < sf.size(); ++i) {
      CHECK(stalk_units(fin, sf[i]) == stalk_units(spl, ss[i]));
    }
  }
}

TEST_CASE("size limits") {
  SplitMonoid big = split(0, 25);
  CHECK_THROWS_AS(spectrum_split(big), SizeExceeded);
  FiniteMonoid big_table = FiniteMonoid::cyclic_group(17);
  CHECK_THROWS_AS(spectrum_finite(big_table), SizeExceeded);
  SpectrumLimits relaxed;
  relaxed.max_finite_size = 18;
  CHECK(spectrum_finite(big_table, relaxed).size() == 1);
}
