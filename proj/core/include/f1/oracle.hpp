#pragma once

#include <map>

#include "f1/scheme.hpp"

namespace f1 {

struct OracleLimits {
  int max_gens = 8;
  long long max_k = 64;
  long long space_cap = 50'000'000;  // assignments enumerated per call
  int threads = 0;                   // 0: F1_THREADS env var, else hardware
};

// Whether the assignment space k^gens (zero generator included) fits the
// limits.
bool oracle_feasible(const Presentation& p, long long k, const OracleLimits& lim = {});

// Number of monoid morphisms from the presented monoid to D_k, counted by
// exhaustive assignment of generator images. No spectral theory involved.
Int hom_count_oracle(const Presentation& p, long long k, const OracleLimits& lim = {});

// Same enumeration, but split by the prime each morphism pulls the zero back
// to. Keys match the chart's spectrum. Throws SearchSpaceExceeded.
std::map<PrimeIdeal, Int> oracle_counts_by_prime(const MonoidChart& c, long long k,
                                                 const OracleLimits& lim = {});

bool scheme_oracle_feasible(const F1Scheme& x, long long k, const OracleLimits& lim = {});

// Morphism count for a glued scheme: the by-prime counts of one representative
// chart point per global point, summed. Independent of the counting formula.
Int scheme_oracle_count(const F1Scheme& x, long long k, const OracleLimits& lim = {});

}  // namespace f1
