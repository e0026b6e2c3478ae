#include "f1/report.hpp"

#include <sstream>

#include "f1/errors.hpp"
#include "f1/oracle.hpp"

namespace f1 {

namespace {

using nlohmann::json;

json int_to_json(const Int& v) { return v.str(); }
Int int_from_json(const json& j) { return Int(j.get<std::string>()); }

json factors_to_json(const std::vector<Int>& fs) {
  json a = json::array();
  for (const Int& f : fs) a.push_back(int_to_json(f));
  return a;
}

std::vector<Int> factors_from_json(const json& a) {
  std::vector<Int> fs;
  for (const auto& v : a) fs.push_back(int_from_json(v));
  return fs;
}

std::string factors_text(const std::vector<Int>& fs) {
  std::string out = "[";
  for (size_t i = 0; i < fs.size(); ++i) out += (i ? "," : "") + fs[i].str();
  return out + "]";
}

json point_to_json(const PointRow& p) {
  json j{{"chart", p.chart},
         {"prime", p.prime},
         {"rank", p.rank},
         {"invariant_factors", factors_to_json(p.invariant_factors)}};
  if (!p.glued.empty()) j["glued"] = p.glued;
  return j;
}

PointRow point_from_json(const json& j) {
  PointRow p;
  p.chart = j.at("chart").get<std::string>();
  p.prime = j.at("prime").get<std::string>();
  p.rank = j.at("rank").get<int>();
  p.invariant_factors = factors_from_json(j.at("invariant_factors"));
  if (j.contains("glued")) p.glued = j.at("glued").get<std::vector<std::string>>();
  return p;
}

json count_to_json(const CountRow& c) {
  json j{{"q", c.q},
         {"count", int_to_json(c.count)},
         {"n_value", int_to_json(c.n_value)},
         {"coprime", c.coprime}};
  if (c.oracle) j["oracle"] = int_to_json(*c.oracle);
  return j;
}

CountRow count_from_json(const json& j) {
  CountRow c;
  c.q = j.at("q").get<long long>();
  c.count = int_from_json(j.at("count"));
  c.n_value = int_from_json(j.at("n_value"));
  c.coprime = j.at("coprime").get<bool>();
  if (j.contains("oracle")) c.oracle = int_from_json(j.at("oracle"));
  return c;
}

json kblock_to_json(const KBlock& k) {
  json gl = json::array();
  for (const auto& [n, o] : k.gl_orders) gl.push_back(json{{"n", n}, {"order", int_to_json(o)}});
  json kp = json::array();
  for (const auto& [i, g] : k.k_plus) kp.push_back(json{{"i", i}, {"group", g}});
  return json{{"gl_orders", gl},
              {"k_plus", kp},
              {"k0_group", k.k0_group},
              {"k0_generators", k.k0_generators},
              {"k0_agree", k.k0_agree}};
}

KBlock kblock_from_json(const json& j) {
  KBlock k;
  for (const auto& e : j.at("gl_orders")) {
    k.gl_orders.emplace_back(e.at("n").get<int>(), int_from_json(e.at("order")));
  }
  for (const auto& e : j.at("k_plus")) {
    k.k_plus.emplace_back(e.at("i").get<int>(), e.at("group").get<std::string>());
  }
  k.k0_group = j.at("k0_group").get<std::string>();
  k.k0_generators = j.at("k0_generators").get<std::vector<std::string>>();
  k.k0_agree = j.at("k0_agree").get<bool>();
  return k;
}

std::vector<PointRow> point_rows(const F1Scheme& x) {
  std::vector<PointRow> rows;
  for (const GlobalPoint& gp : glue(x)) {
    PointRow row;
    const ChartPointRef& rep = gp.members.front();
    row.chart = x.charts[rep.chart].name;
    row.prime = prime_to_string(x.charts[rep.chart], rep.prime);
    row.rank = gp.rank();
    row.invariant_factors = gp.stalk_units.invariant_factors;
    for (size_t i = 1; i < gp.members.size(); ++i) {
      const ChartPointRef& m = gp.members[i];
      row.glued.push_back(x.charts[m.chart].name + "." +
                          prime_to_string(x.charts[m.chart], m.prime));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Report make_report(const F1Scheme& x) {
  Report r;
  r.scheme = x.name;
  ZetaPolynomial n = zeta_polynomial(x);
  r.n_monomial = n.coeffs;
  r.n_shifted_ranks = n.shifted_ranks;
  r.n_display = n.to_string();
  r.zeta_display = zeta_factored(n).to_string();
  r.exponent = scheme_exponent(x);
  r.chi = n.eval(1);
  r.points = point_rows(x);
  return r;
}

nlohmann::json report_to_json(const Report& r) {
  json points = json::array();
  for (const PointRow& p : r.points) points.push_back(point_to_json(p));
  json j{{"schema_version", 1},
         {"kind", "zeta"},
         {"scheme", r.scheme},
         {"n_monomial", factors_to_json(r.n_monomial)},
         {"n_shifted_ranks", r.n_shifted_ranks},
         {"n_display", r.n_display},
         {"zeta_display", r.zeta_display},
         {"exponent", int_to_json(r.exponent)},
         {"chi", int_to_json(r.chi)},
         {"points", points}};
  if (r.counts) {
    json counts = json::array();
    for (const CountRow& c : *r.counts) counts.push_back(count_to_json(c));
    j["counts"] = counts;
  }
  if (r.ktheory) j["ktheory"] = kblock_to_json(*r.ktheory);
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  if (j.at("kind").get<std::string>() != "zeta") {
    throw Error("report_from_json: not a zeta report");
  }
  Report r;
  r.scheme = j.at("scheme").get<std::string>();
  r.n_monomial = factors_from_json(j.at("n_monomial"));
  r.n_shifted_ranks = j.at("n_shifted_ranks").get<std::vector<int>>();
  r.n_display = j.at("n_display").get<std::string>();
  r.zeta_display = j.at("zeta_display").get<std::string>();
  r.exponent = int_from_json(j.at("exponent"));
  r.chi = int_from_json(j.at("chi"));
  for (const auto& p : j.at("points")) r.points.push_back(point_from_json(p));
  if (j.contains("counts")) {
    std::vector<CountRow> counts;
    for (const auto& c : j.at("counts")) counts.push_back(count_from_json(c));
    r.counts = std::move(counts);
  }
  if (j.contains("ktheory")) r.ktheory = kblock_from_json(j.at("ktheory"));
  return r;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "scheme " << r.scheme << "\n";
  os << "points " << r.points.size() << "\n";
  for (const PointRow& p : r.points) {
    os << "  " << p.chart << "." << p.prime << " rank " << p.rank << " factors "
       << factors_text(p.invariant_factors);
    if (!p.glued.empty()) {
      os << " glued";
      for (const std::string& g : p.glued) os << " " << g;
    }
    os << "\n";
  }
  os << "N(x) = " << r.n_display << "\n";
  os << "shifted ranks [";
  for (size_t i = 0; i < r.n_shifted_ranks.size(); ++i) {
    os << (i ? "," : "") << r.n_shifted_ranks[i];
  }
  os << "]\n";
  os << "exponent = " << r.exponent.str() << "\n";
  os << "chi = " << r.chi.str() << "\n";
  os << "zeta = " << r.zeta_display << "\n";
  if (r.counts) {
    os << "counts\n";
    for (const CountRow& c : *r.counts) {
      os << "  q=" << c.q << " count=" << c.count.str() << " N(q)=" << c.n_value.str()
         << (c.coprime ? " coprime" : " non-coprime");
      if (c.oracle) os << " oracle=" << c.oracle->str();
      os << "\n";
    }
  }
  if (r.ktheory) {
    const KBlock& k = *r.ktheory;
    os << "ktheory\n";
    for (const auto& [n, o] : k.gl_orders) os << "  |GL_" << n << "| = " << o.str() << "\n";
    for (const auto& [i, g] : k.k_plus) os << "  K_" << i << "^+ = " << g << "\n";
    os << "  K_0^Q = " << k.k0_group << (k.k0_agree ? "" : " (disagrees with indecomposables)")
       << "\n";
  }
  return os.str();
}

SpecReport make_spec_report(const MonoidChart& chart, const SpectrumLimits& lim) {
  SpecReport r;
  r.monoid = chart.name;
  for (const PrimeIdeal& p : chart_spectrum(chart, lim)) {
    PointRow row;
    row.chart = chart.name;
    row.prime = prime_to_string(chart, p);
    FgAbelianGroup g = stalk_units(chart, p);
    row.rank = g.rank;
    row.invariant_factors = g.invariant_factors;
    r.points.push_back(std::move(row));
  }
  return r;
}

nlohmann::json spec_report_to_json(const SpecReport& r) {
  json points = json::array();
  for (const PointRow& p : r.points) points.push_back(point_to_json(p));
  return json{{"schema_version", 1}, {"kind", "spec"}, {"monoid", r.monoid}, {"points", points}};
}

std::string spec_report_to_text(const SpecReport& r) {
  std::ostringstream os;
  os << "monoid " << r.monoid << "\n";
  os << "primes " << r.points.size() << "\n";
  for (const PointRow& p : r.points) {
    os << "  " << p.prime << " stalk rank " << p.rank << " factors "
       << factors_text(p.invariant_factors) << "\n";
  }
  return os.str();
}

KReport make_k_report(const MonoidChart& chart, int k0_cap) {
  if (!chart.is_finite()) {
    throw SemanticError("k-theory report needs a finite monoid chart");
  }
  const FiniteMonoid& m = chart.finite();
  KReport r;
  r.monoid = chart.name;
  r.units = units(m).to_string();
  for (int n = 1; n <= 4; ++n) r.block.gl_orders.emplace_back(n, gl_n(m, n).order());
  for (int i = 0; i <= 7; ++i) r.block.k_plus.emplace_back(i, k_plus(m, i).to_string());
  K0Result k0 = k0_q(m, k0_cap);
  r.block.k0_group = k0.group.to_string();
  r.block.k0_generators = k0.generator_labels;
  r.block.k0_agree = k0.agree;
  return r;
}

nlohmann::json k_report_to_json(const KReport& r) {
  json j = kblock_to_json(r.block);
  j["schema_version"] = 1;
  j["kind"] = "k";
  j["monoid"] = r.monoid;
  j["units"] = r.units;
  return j;
}

std::string k_report_to_text(const KReport& r) {
  std::ostringstream os;
  os << "monoid " << r.monoid << "\n";
  os << "units = " << r.units << "\n";
  for (const auto& [n, o] : r.block.gl_orders) os << "|GL_" << n << "| = " << o.str() << "\n";
  for (const auto& [i, g] : r.block.k_plus) os << "K_" << i << "^+ = " << g << "\n";
  os << "K_0^Q = " << r.block.k0_group << "\n";
  os << "K_0^Q generators:";
  for (const std::string& g : r.block.k0_generators) os << " " << g;
  os << "\n";
  os << "K_0^Q matches free group on indecomposables: " << (r.block.k0_agree ? "yes" : "NO")
     << "\n";
  return os.str();
}

VerifyReport make_verify_report(const F1Scheme& x, long long qmax, const OracleLimits& lim) {
  VerifyReport r;
  r.scheme = x.name;
  r.qmax = qmax;
  r.exponent = scheme_exponent(x);
  auto points = glue(x);
  ZetaPolynomial n = zeta_polynomial(points);
  for (long long q : prime_powers_upto(qmax)) {
    VerifyRow row;
    row.q = q;
    row.coprime = gcd(Int(q - 1), r.exponent) == 1;
    row.count = exact_count(points, q);
    row.n_value = n.eval(q);
    if (scheme_oracle_feasible(x, q, lim)) {
      row.oracle = scheme_oracle_count(x, q, lim);
    }
    row.ok = true;
    if (row.coprime && row.count != row.n_value) row.ok = false;
    if (row.oracle && *row.oracle != row.count) row.ok = false;
    r.rows.push_back(std::move(row));
    r.all_ok = r.all_ok && r.rows.back().ok;
  }
  return r;
}

nlohmann::json verify_report_to_json(const VerifyReport& r) {
  json rows = json::array();
  for (const VerifyRow& row : r.rows) {
    json j{{"q", row.q},
           {"coprime", row.coprime},
           {"count", int_to_json(row.count)},
           {"n_value", int_to_json(row.n_value)},
           {"ok", row.ok}};
    if (row.oracle) j["oracle"] = int_to_json(*row.oracle);
    rows.push_back(std::move(j));
  }
  return json{{"schema_version", 1}, {"kind", "verify"},   {"scheme", r.scheme},
              {"qmax", r.qmax},      {"exponent", r.exponent.str()}, {"rows", rows},
              {"all_ok", r.all_ok}};
}

std::string verify_report_to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "verify " << r.scheme << " qmax " << r.qmax << "\n";
  os << "exponent = " << r.exponent.str() << "\n";
  for (const VerifyRow& row : r.rows) {
    os << "  q=" << row.q << (row.coprime ? " coprime    " : " non-coprime") << " count="
       << row.count.str() << " N(q)=" << row.n_value.str();
    if (row.oracle) {
      os << " oracle=" << row.oracle->str();
    } else {
      os << " oracle=skipped";
    }
    os << (row.ok ? " ok" : " FAIL") << "\n";
  }
  os << (r.all_ok ? "all assertions hold" : "VERIFICATION FAILED") << "\n";
  return os.str();
}

}  // namespace f1
