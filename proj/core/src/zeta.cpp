#include "f1/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "f1/errors.hpp"

namespace f1 {

Int ZetaPolynomial::eval(const Int& x) const {
  Int r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

ZetaPolynomial ZetaPolynomial::from_ranks(std::vector<int> ranks) {
  ZetaPolynomial z;
  std::sort(ranks.begin(), ranks.end());
  z.shifted_ranks = std::move(ranks);
  int deg = z.shifted_ranks.empty() ? 0 : z.shifted_ranks.back();
  z.coeffs.assign(deg + 1, 0);
  for (int r : z.shifted_ranks) {
    // (x-1)^r contributes C(r,i) (-1)^(r-i) to a_i.
    for (int i = 0; i <= r; ++i) {
      Int c = binomial(r, i);
      z.coeffs[i] += ((r - i) % 2 == 0) ? c : -c;
    }
  }
  return z;
}

std::string ZetaPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& a = coeffs[i];
    if (a == 0 && !(first && i == 0)) continue;
    Int mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.str();
    if (i >= 1) {
      os << "x";
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

ZetaPolynomial zeta_polynomial(const std::vector<GlobalPoint>& points) {
  std::vector<int> ranks;
  ranks.reserve(points.size());
  for (const GlobalPoint& p : points) ranks.push_back(p.rank());
  return ZetaPolynomial::from_ranks(std::move(ranks));
}

ZetaPolynomial zeta_polynomial(const F1Scheme& x) { return zeta_polynomial(glue(x)); }

Int exact_count(const std::vector<GlobalPoint>& points, const Int& q) {
  if (q < 2) throw Error("exact_count: q must be >= 2");
  Int total = 0;
  for (const GlobalPoint& p : points) total += hom_count_cyclic(p.stalk_units, q - 1);
  return total;
}

Int exact_count(const F1Scheme& x, const Int& q) { return exact_count(glue(x), q); }

Int euler_char(const F1Scheme& x) { return zeta_polynomial(x).eval(1); }

std::vector<Int> betti(const F1Scheme& x) {
  ZetaPolynomial n = zeta_polynomial(x);
  std::vector<Int> b;
  for (int i = 0; i <= n.degree(); ++i) {
    if (i > 0) b.push_back(0);
    b.push_back(n.coeffs[i]);
  }
  return b;
}

std::string ZetaFactored::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (const auto& [k, a] : factors) {
    if (k == 0) {
      os << "s";
    } else {
      os << "(s-" << k << ")";
    }
    if (a != 1) os << "^" << a.str();
  }
  return os.str();
}

ZetaFactored zeta_factored(const ZetaPolynomial& n) {
  ZetaFactored f;
  for (int k = 0; k <= n.degree(); ++k) {
    if (n.coeffs[k] != 0) f.factors.emplace_back(k, n.coeffs[k]);
  }
  return f;
}

ZetaFactored zeta_factored(const F1Scheme& x) { return zeta_factored(zeta_polynomial(x)); }

CoprimeQs coprime_qs(const Int& e, long long bound) {
  if (e < 1) throw Error("coprime_qs: exponent must be >= 1");
  CoprimeQs out;
  for (long long q : prime_powers_upto(bound)) {
    if (gcd(Int(q - 1), e) == 1) out.qs.push_back(q);
  }
  // Constructive family 2^(n+1) with 2^n = 1 mod m, m the odd part of e.
  Int m = e;
  while (m % 2 == 0) m /= 2;
  Int pow2 = 1;
  unsigned long n = 0;
  while (pow2 % m != 1) {
    pow2 *= 2;
    ++n;
  }
  out.witness = static_cast<long long>(ipow(Int(2), n + 1));
  return out;
}

namespace {

double dpow_int(double base, long long e) {
  if (e < 0) return 1.0 / dpow_int(base, -e);
  double r = 1.0;
  for (long long i = 0; i < e; ++i) r *= base;
  return r;
}

// Z(p, p^-s)^{-1} / (p-1)^chi = prod_k (1 - p^(k-s))^{a_k} / (p-1)^chi.
double soule_value(const ZetaPolynomial& n, double p, double s) {
  double num = 1.0;
  for (int k = 0; k <= n.degree(); ++k) {
    if (n.coeffs[k] == 0) continue;
    double base = 1.0 - std::pow(p, static_cast<double>(k) - s);
    num *= dpow_int(base, n.coeffs[k].convert_to<long long>());
  }
  Int chi = n.eval(1);
  return num / dpow_int(p - 1.0, chi.convert_to<long long>());
}

}  // namespace

double soule_limit(const F1Scheme& x, double s, double eps) {
  if (!(eps > 0.0) || eps > 0.01) throw Error("soule_limit: eps must be in (0, 0.01]");
  ZetaPolynomial n = zeta_polynomial(x);
  double f1 = soule_value(n, 1.0 + eps, s);
  double f2 = soule_value(n, 1.0 + eps / 2.0, s);
  if (!std::isfinite(f1) || !std::isfinite(f2)) {
    throw NumericDomain("soule_limit: non-finite intermediate value");
  }
  double r = 2.0 * f2 - f1;  // one Richardson step in eps
  if (!std::isfinite(r)) throw NumericDomain("soule_limit: non-finite result");
  return r;
}

}  // namespace f1
