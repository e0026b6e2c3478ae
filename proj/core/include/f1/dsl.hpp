#pragma once

#include <string_view>
#include <variant>

#include "f1/oracle.hpp"
#include "f1/scheme.hpp"

namespace f1 {

// Input language, one definition per monoid or scheme:
//
//   set saturation_cap 4096
//   monoid M { table [[0,1],[1,1]] identity 0 }
//   monoid C { gens g rels g^4 = 1 zero }
//   monoid B = split(free=1, cone=0, torsion=[2], zero=false)
//   scheme X = projective(2)
//   scheme Y { charts U0, U1; glue U0.p{} ~ U1.p{}; }
//
// Comments run from '#' to end of line. Point names are chart.p{...}: for a
// split chart the braces list cone coordinates (and "zero"); for a table
// chart they list the elements of the prime; for a generator-presented chart
// they list generators (and "zero"), and name the ideal those generate.

struct RelWord {
  std::vector<std::pair<std::string, long long>> factors;  // empty = "1"
  bool operator==(const RelWord&) const = default;
};

struct TableMonoidBody {
  std::vector<std::vector<long long>> table;
  long long identity = 0;
  long long zero = -1;
  std::vector<std::string> names;
  bool operator==(const TableMonoidBody&) const = default;
};

struct GensMonoidBody {
  std::vector<std::string> gens;
  std::vector<std::pair<RelWord, RelWord>> rels;
  bool zero = false;
  long long cap = 0;  // 0: saturation_cap directive applies
  bool operator==(const GensMonoidBody&) const = default;
};

struct MonoidDef {
  std::string name;
  std::variant<TableMonoidBody, GensMonoidBody, SplitMonoid> body;
  bool operator==(const MonoidDef&) const = default;
};

struct PointSpec {
  std::string chart;
  std::vector<std::string> items;  // raw lexemes
  bool operator==(const PointSpec&) const = default;
};

struct GlueClause {
  PointSpec a;
  PointSpec b;
  bool operator==(const GlueClause&) const = default;
};

struct BuiltinCall {
  std::string builtin;  // affine | projective | torus | mu | d
  long long arg = 0;
  bool operator==(const BuiltinCall&) const = default;
};

struct ChartsBody {
  std::vector<std::string> charts;  // monoid names
  std::vector<GlueClause> glues;
  bool operator==(const ChartsBody&) const = default;
};

struct SchemeDef {
  std::string name;
  std::variant<BuiltinCall, ChartsBody> body;
  bool operator==(const SchemeDef&) const = default;
};

struct Directive {
  std::string key;
  long long value = 0;
  bool operator==(const Directive&) const = default;
};

struct SchemeFile {
  std::vector<Directive> directives;
  std::vector<MonoidDef> monoids;
  std::vector<SchemeDef> schemes;
  bool operator==(const SchemeFile&) const = default;
};

// Throws SyntaxError (with position) or SemanticError.
SchemeFile parse_scheme_file(std::string_view text);
std::string pretty_print(const SchemeFile& f);

struct BuildOptions {
  long long saturation_cap = 4096;
  SpectrumLimits spectrum;
  OracleLimits oracle;
};
BuildOptions resolve_directives(const SchemeFile& f);

const MonoidDef* find_monoid(const SchemeFile& f, const std::string& name);
const SchemeDef* find_scheme(const SchemeFile& f, const std::string& name);

MonoidChart build_chart(const SchemeFile& f, const std::string& monoid_name);
MonoidChart build_chart(const SchemeFile& f, const std::string& monoid_name,
                        const BuildOptions& opt);
F1Scheme build_scheme(const SchemeFile& f, const std::string& scheme_name);
F1Scheme build_scheme(const SchemeFile& f, const std::string& scheme_name,
                      const BuildOptions& opt);

}  // namespace f1
