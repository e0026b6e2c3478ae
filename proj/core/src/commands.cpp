#include "f1/commands.hpp"

#include <functional>
#include <ostream>

#include "f1/errors.hpp"
#include "f1/report.hpp"

namespace f1 {

int cmd_zeta(const SchemeFile& f, const std::string& scheme, std::ostream& out, bool json) {
  BuildOptions opt = resolve_directives(f);
  F1Scheme x = build_scheme(f, scheme, opt);
  Report r = make_report(x);
  if (json) {
    out << report_to_json(r).dump(2) << "\n";
  } else {
    out << report_to_text(r);
  }
  return kOk;
}

int cmd_count(const SchemeFile& f, const std::string& scheme, const std::vector<long long>& qs,
              std::ostream& out, bool json) {
  BuildOptions opt = resolve_directives(f);
  F1Scheme x = build_scheme(f, scheme, opt);
  Report r = make_report(x);
  auto points = glue(x);
  ZetaPolynomial n = zeta_polynomial(points);
  std::vector<CountRow> rows;
  for (long long q : qs) {
    if (q < 2) throw SemanticError("count: q must be >= 2");
    CountRow row;
    row.q = q;
    row.count = exact_count(points, q);
    row.n_value = n.eval(q);
    row.coprime = gcd(Int(q - 1), r.exponent) == 1;
    if (scheme_oracle_feasible(x, q, opt.oracle)) {
      row.oracle = scheme_oracle_count(x, q, opt.oracle);
    }
    rows.push_back(std::move(row));
  }
  r.counts = std::move(rows);
  if (json) {
    out << report_to_json(r).dump(2) << "\n";
  } else {
    out << report_to_text(r);
  }
  return kOk;
}

int cmd_spec(const SchemeFile& f, const std::string& monoid, std::ostream& out, bool json) {
  BuildOptions opt = resolve_directives(f);
  MonoidChart chart = build_chart(f, monoid, opt);
  SpecReport r = make_spec_report(chart, opt.spectrum);
  if (json) {
    out << spec_report_to_json(r).dump(2) << "\n";
  } else {
    out << spec_report_to_text(r);
  }
  return kOk;
}

int cmd_k(const SchemeFile& f, const std::string& monoid, std::ostream& out, bool json,
          int k0_cap) {
  BuildOptions opt = resolve_directives(f);
  MonoidChart chart = build_chart(f, monoid, opt);
  KReport r = make_k_report(chart, k0_cap);
  if (json) {
    out << k_report_to_json(r).dump(2) << "\n";
  } else {
    out << k_report_to_text(r);
  }
  return kOk;
}

int cmd_verify(const SchemeFile& f, const std::string& scheme, long long qmax, std::ostream& out,
               bool json) {
  BuildOptions opt = resolve_directives(f);
  F1Scheme x = build_scheme(f, scheme, opt);
  VerifyReport r = make_verify_report(x, qmax, opt.oracle);
  if (json) {
    out << verify_report_to_json(r).dump(2) << "\n";
  } else {
    out << verify_report_to_text(r);
  }
  return r.all_ok ? kOk : kVerificationFailure;
}

int run_command(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const SizeExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const SearchSpaceExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace f1
