#pragma once

#include <string>
#include <vector>

#include "f1/scheme.hpp"

namespace f1 {

// Counting polynomial N(x) in two bases: monomial coefficients a_0..a_n and
// the multiset of stalk ranks, one (x-1)^r term per global point.
struct ZetaPolynomial {
  std::vector<Int> coeffs;         // monomial basis; coeffs[i] = a_i
  std::vector<int> shifted_ranks;  // sorted multiset {r_p}

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int eval(const Int& x) const;
  Int coeff(int i) const { return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[i] : Int(0); }
  bool operator==(const ZetaPolynomial&) const = default;

  // "x^2 + x + 1", "x - 1", "2"
  std::string to_string() const;

  static ZetaPolynomial from_ranks(std::vector<int> ranks);
};

ZetaPolynomial zeta_polynomial(const F1Scheme& x);
ZetaPolynomial zeta_polynomial(const std::vector<GlobalPoint>& points);

// #Hom(spec D_q, X) for any integer q >= 2; equals #X(F_q) when q is a prime
// power and N(q) whenever gcd(q-1, exponent) = 1.
Int exact_count(const F1Scheme& x, const Int& q);
Int exact_count(const std::vector<GlobalPoint>& points, const Int& q);

// N(1) = number of rank-0 points.
Int euler_char(const F1Scheme& x);

// [a_0, 0, a_1, 0, ..., a_n]
std::vector<Int> betti(const F1Scheme& x);

// prod_k (s-k)^{a_k}
struct ZetaFactored {
  std::vector<std::pair<int, Int>> factors;  // (root k, exponent a_k), a_k != 0

  // "s(s-1)", "s^-1(s-1)", "(s-2)"
  std::string to_string() const;
};
ZetaFactored zeta_factored(const ZetaPolynomial& n);
ZetaFactored zeta_factored(const F1Scheme& x);

// All prime powers q <= bound with gcd(q-1, e) = 1, plus the least witness of
// the form 2^n produced by the constructive argument.
struct CoprimeQs {
  std::vector<long long> qs;
  long long witness = 2;
};
CoprimeQs coprime_qs(const Int& e, long long bound);

// Numeric check of the limit defining the zeta function: evaluates
// Z(p, p^-s)^{-1} / (p-1)^{N(1)} at p = 1+eps and p = 1+eps/2 and
// Richardson-extrapolates one step. Converges to prod_k (s-k)^{a_k}.
double soule_limit(const F1Scheme& x, double s, double eps = 1e-4);

}  // namespace f1
