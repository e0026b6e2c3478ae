#include "f1/numeric.hpp"

#include <stdexcept>

namespace f1 {

Int ipow(Int base, unsigned long exp) {
  Int result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(long long q, long long* base, int* exp) {
  if (q < 2) return false;
  long long p = q;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  long long r = q;
  int k = 0;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return false;
  if (base) *base = p;
  if (exp) *exp = k;
  return true;
}

std::vector<long long> prime_powers_upto(long long bound) {
  std::vector<long long> out;
  for (long long q = 2; q <= bound; ++q) {
    if (is_prime_power(q)) out.push_back(q);
  }
  return out;
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
  if (boost::multiprecision::denominator(v) == 1) {
    return boost::multiprecision::numerator(v).str();
  }
  return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

}  // namespace f1
