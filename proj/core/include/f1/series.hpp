#pragma once

#include <string>
#include <vector>

#include "f1/zeta.hpp"

namespace f1 {

// Truncated power series with exact rational coefficients.
struct RationalSeries {
  int order = 0;               // truncation order M
  std::vector<Rat> coeffs;     // c_0..c_M

  bool operator==(const RationalSeries&) const = default;
  std::string to_string() const;  // "1 + 3T + 7T^2"
};

// Local Weil zeta factor list: prod_k (1 - p^k T)^{-a_k}; the multiplicities
// a_k are the monomial coefficients of N, negative values allowed.
struct LocalZeta {
  long long p = 2;
  std::vector<std::pair<int, Int>> factors;  // (level k, multiplicity a_k)

  // "(1-T)^-1(1-2T)^-1", "(1-T)(1-2T)^-1"
  std::string to_string() const;
};

LocalZeta weil_local_zeta(const F1Scheme& x, long long p);  // InvalidPrime

// exp(sum_{n>=1} T^n/n #X(F_{p^n})) truncated at the given order, with counts
// taken from exact_count at q = p^n. Exact rational arithmetic.
RationalSeries weil_series(const F1Scheme& x, long long p, int order);

// Geometric expansion of the factor list to the given order.
RationalSeries expand_local_zeta(const LocalZeta& z, int order);

struct ConsistencyReport {
  enum class Status { Pass, Fail, Skipped };
  Status status = Status::Pass;
  int failing_n = -1;  // order where coprimality or equality failed
  std::string detail;

  bool passed() const { return status == Status::Pass; }
};

// Compares the exponential series against the product expansion through the
// given order; reports Skipped with the failing n when gcd(p^n - 1, e) != 1.
ConsistencyReport weil_consistency(const F1Scheme& x, long long p, int order);

}  // namespace f1
