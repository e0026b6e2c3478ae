#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace f1 {

// All algebraic quantities are exact: arbitrary-precision integers and
// rationals throughout, no floating point except in the numeric limit.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

Int ipow(Int base, unsigned long exp);
Int binomial(int n, int k);
Int factorial(int n);

bool is_prime(long long n);
// q = p^k for a single prime p and k >= 1.
bool is_prime_power(long long q, long long* base = nullptr, int* exp = nullptr);
std::vector<long long> prime_powers_upto(long long bound);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace f1
