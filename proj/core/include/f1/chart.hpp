#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "f1/finite_monoid.hpp"
#include "f1/split_monoid.hpp"

namespace f1 {

// Prime ideal of a chart. For a finite chart, `mask` is the bitset of element
// indices in the ideal. For a split chart, `mask` is the subset of cone
// coordinates generating the ideal and `zero_part` says whether the absorbing
// element belongs to it.
struct PrimeIdeal {
  uint32_t mask = 0;
  bool zero_part = false;

  bool operator==(const PrimeIdeal&) const = default;
  // Canonical order: by size then bitset value (the zero flag sorts first
  // within equal masks only through the size term below).
  auto sort_key() const {
    return std::tuple<int, int, uint32_t>(__builtin_popcount(mask) + (zero_part ? 1 : 0),
                                          zero_part ? 1 : 0, mask);
  }
  bool operator<(const PrimeIdeal& o) const { return sort_key() < o.sort_key(); }
};

// Data letting the brute-force counter run against this chart: a presentation
// plus the link between assignments and primes (element words for finite
// charts, generator roles for split charts).
struct ChartOracleData {
  Presentation pres;
  bool from_presentation = false;             // chart was defined by generators
  std::vector<ExponentVector> element_words;  // finite charts
  std::vector<int> generator_images;          // finite charts: element of each generator
  std::vector<int> cone_gens;                 // split charts
  int zero_gen = -1;
};

struct MonoidChart {
  std::string name;
  std::variant<FiniteMonoid, SplitMonoid> carrier;
  std::optional<ChartOracleData> oracle;

  bool is_finite() const { return std::holds_alternative<FiniteMonoid>(carrier); }
  const FiniteMonoid& finite() const { return std::get<FiniteMonoid>(carrier); }
  const SplitMonoid& split() const { return std::get<SplitMonoid>(carrier); }

  bool operator==(const MonoidChart& o) const {
    return name == o.name && carrier == o.carrier;
  }
};

MonoidChart make_chart(std::string name, FiniteMonoid m,
                       std::optional<ChartOracleData> oracle = std::nullopt);
MonoidChart make_chart(std::string name, SplitMonoid s);

struct SpectrumLimits {
  int max_finite_size = 16;
  int max_cone_rank = 20;
};

// All prime ideals, canonically sorted. The empty ideal (generic point) is
// always present.
std::vector<PrimeIdeal> spectrum_finite(const FiniteMonoid& m, const SpectrumLimits& lim = {});
std::vector<PrimeIdeal> spectrum_split(const SplitMonoid& s, const SpectrumLimits& lim = {});
std::vector<PrimeIdeal> chart_spectrum(const MonoidChart& c, const SpectrumLimits& lim = {});

// Whether p is a prime of the chart.
bool is_prime_of(const MonoidChart& c, const PrimeIdeal& p);

// Quot(S_p), the unit group of the stalk at p. Throws NotPrime.
FgAbelianGroup stalk_units(const MonoidChart& c, const PrimeIdeal& p);

std::string prime_to_string(const MonoidChart& c, const PrimeIdeal& p);

}  // namespace f1
