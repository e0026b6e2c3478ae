#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "f1/ktheory.hpp"
#include "f1/oracle.hpp"
#include "f1/series.hpp"
#include "f1/zeta.hpp"

namespace f1 {

struct PointRow {
  std::string chart;
  std::string prime;
  int rank = 0;
  std::vector<Int> invariant_factors;
  std::vector<std::string> glued;  // other members of the class, "chart.prime"

  bool operator==(const PointRow&) const = default;
};

struct CountRow {
  long long q = 2;
  Int count;
  Int n_value;
  bool coprime = true;
  std::optional<Int> oracle;

  bool operator==(const CountRow&) const = default;
};

struct KBlock {
  std::vector<std::pair<int, Int>> gl_orders;           // (n, |GL_n|)
  std::vector<std::pair<int, std::string>> k_plus;      // (i, group)
  std::string k0_group;
  std::vector<std::string> k0_generators;
  bool k0_agree = true;

  bool operator==(const KBlock&) const = default;
};

// Scheme report: the zeta polynomial in both bases, exponent, Euler
// characteristic, factored zeta, the point table, and optional count and
// K-theory blocks.
struct Report {
  std::string scheme;
  std::vector<Int> n_monomial;
  std::vector<int> n_shifted_ranks;
  std::string n_display;
  std::string zeta_display;
  Int exponent = 1;
  Int chi = 0;
  std::vector<PointRow> points;
  std::optional<std::vector<CountRow>> counts;
  std::optional<KBlock> ktheory;

  bool operator==(const Report&) const = default;
};

Report make_report(const F1Scheme& x);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_to_text(const Report& r);

// Monoid-level outputs.
struct SpecReport {
  std::string monoid;
  std::vector<PointRow> points;
};
SpecReport make_spec_report(const MonoidChart& chart, const SpectrumLimits& lim = {});
nlohmann::json spec_report_to_json(const SpecReport& r);
std::string spec_report_to_text(const SpecReport& r);

struct KReport {
  std::string monoid;
  std::string units;
  KBlock block;
};
KReport make_k_report(const MonoidChart& chart, int k0_cap = 12);
nlohmann::json k_report_to_json(const KReport& r);
std::string k_report_to_text(const KReport& r);

struct VerifyRow {
  long long q = 2;
  bool coprime = true;
  Int count;
  Int n_value;
  std::optional<Int> oracle;
  bool ok = true;
};
struct VerifyReport {
  std::string scheme;
  long long qmax = 2;
  Int exponent = 1;
  std::vector<VerifyRow> rows;
  bool all_ok = true;
};
VerifyReport make_verify_report(const F1Scheme& x, long long qmax, const OracleLimits& lim = {});
nlohmann::json verify_report_to_json(const VerifyReport& r);
std::string verify_report_to_text(const VerifyReport& r);

}  // namespace f1
