#include "f1/series.hpp"

#include <sstream>

#include "f1/errors.hpp"

namespace f1 {

std::string RationalSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= order; ++n) {
    const Rat& c = coeffs[n];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat mag = c < 0 ? Rat(-c) : c;
    if (n == 0 || mag != 1) os << f1::to_string(mag);
    if (n >= 1) {
      os << "T";
      if (n >= 2) os << "^" << n;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string LocalZeta::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (const auto& [k, a] : factors) {
    Int c = ipow(Int(p), k);
    os << "(1-";
    if (c != 1) os << c.str();
    os << "T)";
    Int shown = -a;  // displayed exponent
    if (shown != 1) os << "^" << shown.str();
  }
  return os.str();
}

LocalZeta weil_local_zeta(const F1Scheme& x, long long p) {
  if (!is_prime(p)) throw InvalidPrime("weil_local_zeta: " + std::to_string(p) + " is not prime");
  ZetaPolynomial n = zeta_polynomial(x);
  LocalZeta z;
  z.p = p;
  for (int k = 0; k <= n.degree(); ++k) {
    if (n.coeffs[k] != 0) z.factors.emplace_back(k, n.coeffs[k]);
  }
  return z;
}

RationalSeries weil_series(const F1Scheme& x, long long p, int order) {
  if (order < 0) throw Error("weil_series: order must be >= 0");
  auto points = glue(x);
  std::vector<Int> counts(order + 1);  // counts[n] = #X(F_{p^n}), n >= 1
  Int q = 1;
  for (int n = 1; n <= order; ++n) {
    q *= p;
    counts[n] = exact_count(points, q);
  }
  // exp of L(T) = sum c_n T^n / n via z_n = (1/n) sum_{k=1..n} c_k z_{n-k}.
  RationalSeries z;
  z.order = order;
  z.coeffs.assign(order + 1, 0);
  z.coeffs[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rat acc = 0;
    for (int k = 1; k <= n; ++k) acc += Rat(counts[k]) * z.coeffs[n - k];
    z.coeffs[n] = acc / n;
  }
  return z;
}

namespace {

// series *= 1/(1 - c T)
void mul_geometric(std::vector<Rat>& s, const Int& c) {
  for (size_t n = 1; n < s.size(); ++n) s[n] += Rat(c) * s[n - 1];
}

// series *= (1 - c T)
void mul_linear(std::vector<Rat>& s, const Int& c) {
  for (size_t n = s.size(); n-- > 1;) s[n] -= Rat(c) * s[n - 1];
}

}  // namespace

RationalSeries expand_local_zeta(const LocalZeta& z, int order) {
  RationalSeries s;
  s.order = order;
  s.coeffs.assign(order + 1, 0);
  s.coeffs[0] = 1;
  for (const auto& [k, a] : z.factors) {
    Int c = ipow(Int(z.p), k);
    if (a > 0) {
      for (Int i = 0; i < a; ++i) mul_geometric(s.coeffs, c);
    } else {
      for (Int i = 0; i < -a; ++i) mul_linear(s.coeffs, c);
    }
  }
  return s;
}

ConsistencyReport weil_consistency(const F1Scheme& x, long long p, int order) {
  ConsistencyReport rep;
  Int e = scheme_exponent(x);
  Int q = 1;
  for (int n = 1; n <= order; ++n) {
    q *= p;
    if (gcd(Int(q - 1), e) != 1) {
      rep.status = ConsistencyReport::Status::Skipped;
      rep.failing_n = n;
      rep.detail = "gcd(p^" + std::to_string(n) + " - 1, " + e.str() + ") != 1";
      return rep;
    }
  }
  RationalSeries lhs = weil_series(x, p, order);
  RationalSeries rhs = expand_local_zeta(weil_local_zeta(x, p), order);
  for (int n = 0; n <= order; ++n) {
    if (lhs.coeffs[n] != rhs.coeffs[n]) {
      rep.status = ConsistencyReport::Status::Fail;
      rep.failing_n = n;
      rep.detail = "coefficient of T^" + std::to_string(n) + ": series " +
                   f1::to_string(lhs.coeffs[n]) + " vs product " + f1::to_string(rhs.coeffs[n]);
      return rep;
    }
  }
  rep.detail = "series equals product through order " + std::to_string(order);
  return rep;
}

}  // namespace f1
