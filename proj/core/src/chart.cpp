#include "f1/chart.hpp"

#include <algorithm>
#include <sstream>

#include "f1/errors.hpp"

namespace f1 {

MonoidChart make_chart(std::string name, FiniteMonoid m, std::optional<ChartOracleData> oracle) {
  MonoidChart c;
  c.name = std::move(name);
  if (!oracle) {
    TablePresentation tp = table_presentation(m);
    ChartOracleData od;
    od.pres = std::move(tp.pres);
    od.element_words = std::move(tp.element_words);
    for (int x = 0; x < m.size; ++x) {
      if (x != m.identity) od.generator_images.push_back(x);
    }
    oracle = std::move(od);
  }
  c.carrier = std::move(m);
  c.oracle = std::move(oracle);
  return c;
}

MonoidChart make_chart(std::string name, SplitMonoid s) {
  MonoidChart c;
  c.name = std::move(name);
  SplitPresentation sp = presentation_of(s);
  ChartOracleData od;
  od.pres = std::move(sp.pres);
  od.cone_gens = std::move(sp.cone_gens);
  od.zero_gen = sp.zero_gen;
  c.oracle = std::move(od);
  c.carrier = std::move(s);
  return c;
}

namespace {

// p is an ideal and its complement is a submonoid.
bool finite_prime_check(const FiniteMonoid& m, uint32_t p) {
  if (p & (1u << m.identity)) return false;
  for (int x = 0; x < m.size; ++x) {
    bool xin = (p >> x) & 1u;
    for (int y = 0; y < m.size; ++y) {
      int prod = m.mul(x, y);
      bool yin = (p >> y) & 1u;
      bool prodin = (p >> prod) & 1u;
      if (xin && !prodin) return false;           // ideal: A*p subset of p
      if (!xin && !yin && prodin) return false;   // complement closed under products
    }
  }
  return true;
}

}  // namespace

std::vector<PrimeIdeal> spectrum_finite(const FiniteMonoid& m, const SpectrumLimits& lim) {
  if (m.size > lim.max_finite_size || m.size > 31) {
    throw SizeExceeded("spectrum_finite: monoid has " + std::to_string(m.size) +
                       " elements, limit is " + std::to_string(std::min(lim.max_finite_size, 31)));
  }
  std::vector<PrimeIdeal> out;
  const uint32_t total = 1u << m.size;
  for (uint32_t p = 0; p < total; ++p) {
    if (finite_prime_check(m, p)) out.push_back(PrimeIdeal{p, false});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimeIdeal> spectrum_split(const SplitMonoid& s, const SpectrumLimits& lim) {
  if (s.cone_rank > lim.max_cone_rank || s.cone_rank > 31) {
    throw SizeExceeded("spectrum_split: cone rank " + std::to_string(s.cone_rank) +
                       " exceeds limit " + std::to_string(std::min(lim.max_cone_rank, 31)));
  }
  std::vector<PrimeIdeal> out;
  out.push_back(PrimeIdeal{0, false});  // generic point
  const uint32_t total = 1u << s.cone_rank;
  if (s.has_zero) {
    for (uint32_t mask = 0; mask < total; ++mask) out.push_back(PrimeIdeal{mask, true});
  } else {
    for (uint32_t mask = 1; mask < total; ++mask) out.push_back(PrimeIdeal{mask, false});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimeIdeal> chart_spectrum(const MonoidChart& c, const SpectrumLimits& lim) {
  return c.is_finite() ? spectrum_finite(c.finite(), lim) : spectrum_split(c.split(), lim);
}

bool is_prime_of(const MonoidChart& c, const PrimeIdeal& p) {
  if (c.is_finite()) {
    if (p.zero_part) return false;
    if (c.finite().size < 32 && (p.mask >> c.finite().size) != 0) return false;
    return finite_prime_check(c.finite(), p.mask);
  }
  const SplitMonoid& s = c.split();
  if ((p.mask >> s.cone_rank) != 0) return false;
  if (p.zero_part) return s.has_zero;
  return !s.has_zero || p.mask == 0;
}

FgAbelianGroup stalk_units(const MonoidChart& c, const PrimeIdeal& p) {
  if (!is_prime_of(c, p)) throw NotPrime("stalk_units: not a prime of chart " + c.name);
  if (c.is_finite()) {
    const FiniteMonoid& m = c.finite();
    std::vector<int> face;
    for (int x = 0; x < m.size; ++x) {
      if (!((p.mask >> x) & 1u)) face.push_back(x);
    }
    return group_completion_finite(m.submonoid(face));
  }
  const SplitMonoid& s = c.split();
  if (s.has_zero && !p.zero_part) return trivial_group();  // generic stalk dies on the zero
  FgAbelianGroup g = s.torsion_group();
  g.rank = s.free_rank + s.cone_rank - __builtin_popcount(p.mask);
  return g;
}

std::string prime_to_string(const MonoidChart& c, const PrimeIdeal& p) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  if (p.zero_part) {
    os << "zero";
    first = false;
  }
  if (c.is_finite()) {
    const FiniteMonoid& m = c.finite();
    for (int x = 0; x < m.size; ++x) {
      if ((p.mask >> x) & 1u) {
        if (!first) os << ",";
        os << m.names[x];
        first = false;
      }
    }
  } else {
    for (int i = 0; i < c.split().cone_rank; ++i) {
      if ((p.mask >> i) & 1u) {
        if (!first) os << ",";
        os << "x" << i;
        first = false;
      }
    }
  }
  os << "}";
  return os.str();
}

}  // namespace f1
