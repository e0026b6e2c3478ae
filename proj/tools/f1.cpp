// f1: zeta functions, point counts and K-theory for monoid schemes.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "f1/commands.hpp"
#include "f1/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw f1::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<long long> parse_q_list(const std::string& spec) {
  std::vector<long long> qs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) qs.push_back(std::stoll(item));
  }
  if (qs.empty()) throw f1::SemanticError("--q needs a comma-separated list of integers >= 2");
  return qs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zeta polynomials, point counts and K-theory of monoid schemes"};
  app.require_subcommand(1);

  std::string file, scheme, monoid, qlist;
  long long qmax = 32;
  int k0_cap = 12;
  bool json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "scheme description file")->required();
    cmd->add_flag("--json", json, "emit JSON instead of text");
  };

  CLI::App* zeta = app.add_subcommand("zeta", "zeta polynomial and point table of a scheme");
  add_common(zeta);
  zeta->add_option("--scheme", scheme, "scheme name")->required();

  CLI::App* count = app.add_subcommand("count", "exact point counts at the given q values");
  add_common(count);
  count->add_option("--scheme", scheme, "scheme name")->required();
  count->add_option("--q", qlist, "comma-separated q values, each >= 2")->required();

  CLI::App* spec = app.add_subcommand("spec", "prime spectrum and stalks of a monoid");
  add_common(spec);
  spec->add_option("--monoid", monoid, "monoid name")->required();

  CLI::App* k = app.add_subcommand("k", "GL_n orders, K^+ groups and K_0 of a monoid");
  add_common(k);
  k->add_option("--monoid", monoid, "monoid name")->required();
  k->add_option("--k0-cap", k0_cap, "carrier bound for the projective enumeration");

  CLI::App* verify = app.add_subcommand("verify", "sweep prime powers, check counts against the "
                                                  "polynomial and the brute-force oracle");
  add_common(verify);
  verify->add_option("--scheme", scheme, "scheme name")->required();
  verify->add_option("--qmax", qmax, "largest q to sweep");

  CLI11_PARSE(app, argc, argv);

  return f1::run_command(std::cerr, [&]() -> int {
    f1::SchemeFile parsed = f1::parse_scheme_file(read_file(file));
    if (zeta->parsed()) return f1::cmd_zeta(parsed, scheme, std::cout, json);
    if (count->parsed()) return f1::cmd_count(parsed, scheme, parse_q_list(qlist), std::cout, json);
    if (spec->parsed()) return f1::cmd_spec(parsed, monoid, std::cout, json);
    if (k->parsed()) return f1::cmd_k(parsed, monoid, std::cout, json, k0_cap);
    return f1::cmd_verify(parsed, scheme, qmax, std::cout, json);
  });
}
