#include "f1/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "f1/errors.hpp"
#include "f1/saturate.hpp"

namespace f1 {

namespace {

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {
      "monoid", "scheme", "set",     "table", "identity", "zero", "names", "gens", "rels",
      "cap",    "split",  "free",    "cone",  "torsion",  "charts", "glue", "true", "false",
  };
  return kw;
}

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      tok_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::Kind::Ident;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::Kind::Number;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    static const std::string punct = "{}[]();,~.^*=-";
    if (punct.find(c) != std::string::npos) {
      tok_.kind = Token::Kind::Punct;
      tok_.text = std::string(1, c);
      ++pos_;
      ++col_;
      return;
    }
    throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  SchemeFile parse() {
    SchemeFile f;
    while (lex_.peek().kind != Token::Kind::End) {
      const Token& t = lex_.peek();
      if (t.kind != Token::Kind::Ident) fail("expected 'monoid', 'scheme' or 'set'");
      if (t.text == "set") {
        f.directives.push_back(parse_directive());
      } else if (t.text == "monoid") {
        f.monoids.push_back(parse_monoid());
      } else if (t.text == "scheme") {
        f.schemes.push_back(parse_scheme());
      } else {
        fail("expected 'monoid', 'scheme' or 'set', got '" + t.text + "'");
      }
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw SyntaxError(lex_.peek().line, lex_.peek().col, msg);
  }

  Token expect_ident() {
    if (lex_.peek().kind != Token::Kind::Ident) fail("expected identifier");
    return lex_.next();
  }

  void expect_punct(const char* p) {
    if (lex_.peek().kind != Token::Kind::Punct || lex_.peek().text != p) {
      fail(std::string("expected '") + p + "'");
    }
    lex_.next();
  }

  bool at_punct(const char* p) const {
    return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == p;
  }

  bool at_ident(const char* s) const {
    return lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == s;
  }

  long long expect_number() {
    bool neg = false;
    if (at_punct("-")) {
      lex_.next();
      neg = true;
    }
    if (lex_.peek().kind != Token::Kind::Number) fail("expected number");
    long long v = std::stoll(lex_.next().text);
    return neg ? -v : v;
  }

  Directive parse_directive() {
    lex_.next();  // set
    Directive d;
    d.key = expect_ident().text;
    d.value = expect_number();
    return d;
  }

  MonoidDef parse_monoid() {
    lex_.next();  // monoid
    MonoidDef def;
    def.name = expect_ident().text;
    if (at_punct("=")) {
      lex_.next();
      def.body = parse_split();
      return def;
    }
    expect_punct("{");
    if (at_ident("table")) {
      def.body = parse_table_body();
    } else if (at_ident("gens")) {
      def.body = parse_gens_body();
    } else {
      fail("expected 'table' or 'gens'");
    }
    expect_punct("}");
    return def;
  }

  SplitMonoid parse_split() {
    if (!at_ident("split")) fail("expected 'split'");
    lex_.next();
    expect_punct("(");
    SplitMonoid s;
    auto keyed_number = [&](const char* key) {
      if (!at_ident(key)) fail(std::string("expected '") + key + "'");
      lex_.next();
      expect_punct("=");
      return expect_number();
    };
    s.free_rank = static_cast<int>(keyed_number("free"));
    expect_punct(",");
    s.cone_rank = static_cast<int>(keyed_number("cone"));
    expect_punct(",");
    if (!at_ident("torsion")) fail("expected 'torsion'");
    lex_.next();
    expect_punct("=");
    expect_punct("[");
    while (!at_punct("]")) {
      s.torsion.emplace_back(expect_number());
      if (!at_punct("]")) expect_punct(",");
    }
    expect_punct("]");
    expect_punct(",");
    if (!at_ident("zero")) fail("expected 'zero'");
    lex_.next();
    expect_punct("=");
    if (at_ident("true")) {
      s.has_zero = true;
    } else if (at_ident("false")) {
      s.has_zero = false;
    } else {
      fail("expected 'true' or 'false'");
    }
    lex_.next();
    expect_punct(")");
    return s;
  }

  TableMonoidBody parse_table_body() {
    lex_.next();  // table
    TableMonoidBody b;
    expect_punct("[");
    while (!at_punct("]")) {
      expect_punct("[");
      std::vector<long long> row;
      while (!at_punct("]")) {
        row.push_back(expect_number());
        if (!at_punct("]")) expect_punct(",");
      }
      expect_punct("]");
      b.table.push_back(std::move(row));
      if (!at_punct("]")) expect_punct(",");
    }
    expect_punct("]");
    if (at_ident("identity")) {
      lex_.next();
      b.identity = expect_number();
    }
    if (at_ident("zero")) {
      lex_.next();
      b.zero = expect_number();
    }
    if (at_ident("names")) {
      lex_.next();
      expect_punct("[");
      while (!at_punct("]")) {
        b.names.push_back(expect_ident().text);
        if (!at_punct("]")) expect_punct(",");
      }
      expect_punct("]");
    }
    return b;
  }

  RelWord parse_word() {
    RelWord w;
    if (lex_.peek().kind == Token::Kind::Number) {
      if (lex_.next().text != "1") fail("the only numeric word is '1'");
      return w;
    }
    for (;;) {
      Token g = expect_ident();
      long long e = 1;
      if (at_punct("^")) {
        lex_.next();
        e = expect_number();
      }
      w.factors.emplace_back(g.text, e);
      if (at_punct("*")) {
        lex_.next();
        continue;
      }
      break;
    }
    return w;
  }

  GensMonoidBody parse_gens_body() {
    lex_.next();  // gens
    GensMonoidBody b;
    b.gens.push_back(expect_ident().text);
    while (at_punct(",")) {
      lex_.next();
      b.gens.push_back(expect_ident().text);
    }
    if (at_ident("rels")) {
      lex_.next();
      for (;;) {
        RelWord lhs = parse_word();
        expect_punct("=");
        RelWord rhs = parse_word();
        b.rels.emplace_back(std::move(lhs), std::move(rhs));
        if (at_punct(",")) {
          lex_.next();
          continue;
        }
        break;
      }
    }
    if (at_ident("zero")) {
      lex_.next();
      b.zero = true;
    }
    if (at_ident("cap")) {
      lex_.next();
      b.cap = expect_number();
    }
    return b;
  }

  PointSpec parse_point() {
    PointSpec p;
    p.chart = expect_ident().text;
    expect_punct(".");
    Token t = expect_ident();
    if (t.text != "p") fail("expected 'p' after '.' in point name");
    expect_punct("{");
    while (!at_punct("}")) {
      if (lex_.peek().kind == Token::Kind::Ident || lex_.peek().kind == Token::Kind::Number) {
        p.items.push_back(lex_.next().text);
      } else {
        fail("expected element, generator, coordinate index or 'zero'");
      }
      if (!at_punct("}")) expect_punct(",");
    }
    expect_punct("}");
    return p;
  }

  SchemeDef parse_scheme() {
    lex_.next();  // scheme
    SchemeDef def;
    def.name = expect_ident().text;
    if (at_punct("=")) {
      lex_.next();
      BuiltinCall call;
      call.builtin = expect_ident().text;
      expect_punct("(");
      call.arg = expect_number();
      expect_punct(")");
      def.body = std::move(call);
      return def;
    }
    expect_punct("{");
    if (!at_ident("charts")) fail("expected 'charts'");
    lex_.next();
    ChartsBody body;
    body.charts.push_back(expect_ident().text);
    while (at_punct(",")) {
      lex_.next();
      body.charts.push_back(expect_ident().text);
    }
    expect_punct(";");
    while (at_ident("glue")) {
      lex_.next();
      GlueClause g;
      g.a = parse_point();
      expect_punct("~");
      g.b = parse_point();
      expect_punct(";");
      body.glues.push_back(std::move(g));
    }
    expect_punct("}");
    def.body = std::move(body);
    return def;
  }

  Lexer lex_;
};

void semantic_checks(const SchemeFile& f) {
  std::set<std::string> monoid_names;
  for (const MonoidDef& m : f.monoids) {
    if (!monoid_names.insert(m.name).second) {
      throw SemanticError("duplicate monoid definition: " + m.name);
    }
    if (const auto* t = std::get_if<TableMonoidBody>(&m.body)) {
      const size_t n = t->table.size();
      for (const auto& row : t->table) {
        if (row.size() != n) throw SemanticError("monoid " + m.name + ": table is not square");
        for (long long v : row) {
          if (v < 0 || static_cast<size_t>(v) >= n) {
            throw SemanticError("monoid " + m.name + ": table entry out of range");
          }
        }
      }
      if (n == 0) throw SemanticError("monoid " + m.name + ": empty table");
      if (t->identity < 0 || static_cast<size_t>(t->identity) >= n) {
        throw SemanticError("monoid " + m.name + ": identity index out of range");
      }
      if (t->zero != -1 && (t->zero < 0 || static_cast<size_t>(t->zero) >= n)) {
        throw SemanticError("monoid " + m.name + ": zero index out of range");
      }
      if (!t->names.empty() && t->names.size() != n) {
        throw SemanticError("monoid " + m.name + ": names list must cover every element");
      }
    } else if (const auto* g = std::get_if<GensMonoidBody>(&m.body)) {
      std::set<std::string> gens;
      for (const std::string& gen : g->gens) {
        if (keywords().count(gen)) {
          throw SemanticError("monoid " + m.name + ": '" + gen + "' is a reserved word");
        }
        if (!gens.insert(gen).second) {
          throw SemanticError("monoid " + m.name + ": duplicate generator " + gen);
        }
      }
      for (const auto& [lhs, rhs] : g->rels) {
        for (const RelWord* w : {&lhs, &rhs}) {
          for (const auto& [gen, e] : w->factors) {
            if (!gens.count(gen)) {
              throw SemanticError("monoid " + m.name + ": relation uses unknown generator " + gen);
            }
            if (e < 1) throw SemanticError("monoid " + m.name + ": exponents must be >= 1");
          }
        }
      }
      if (g->cap < 0) throw SemanticError("monoid " + m.name + ": cap must be positive");
    } else {
      std::get<SplitMonoid>(m.body).check();
    }
  }
  std::set<std::string> scheme_names;
  for (const SchemeDef& s : f.schemes) {
    if (scheme_names.count(s.name) || monoid_names.count(s.name)) {
      throw SemanticError("duplicate definition: " + s.name);
    }
    scheme_names.insert(s.name);
    if (const auto* call = std::get_if<BuiltinCall>(&s.body)) {
      const std::string& b = call->builtin;
      long long a = call->arg;
      if (b == "affine") {
        if (a < 0) throw SemanticError("affine(n): n must be >= 0");
      } else if (b == "projective") {
        if (a < 0 || a > 6) throw SemanticError("projective(n): n must be in 0..6");
      } else if (b == "torus") {
        if (a < 0) throw SemanticError("torus(k): k must be >= 0");
      } else if (b == "mu") {
        if (a < 1) throw SemanticError("mu(n): n must be >= 1");
      } else if (b == "d") {
        if (a < 2) throw SemanticError("d(k): k must be >= 2");
      } else {
        throw SemanticError("unknown builder: " + b);
      }
    } else {
      const auto& body = std::get<ChartsBody>(s.body);
      std::set<std::string> charts;
      for (const std::string& c : body.charts) {
        if (!monoid_names.count(c)) {
          throw SemanticError("scheme " + s.name + ": chart " + c + " is not a declared monoid");
        }
        if (!charts.insert(c).second) {
          throw SemanticError("scheme " + s.name + ": duplicate chart " + c);
        }
      }
      for (const GlueClause& g : body.glues) {
        for (const PointSpec* ps : {&g.a, &g.b}) {
          if (!charts.count(ps->chart)) {
            throw SemanticError("scheme " + s.name + ": glue references unknown chart " +
                                ps->chart);
          }
        }
      }
    }
  }
  static const std::set<std::string> keys = {
      "saturation_cap", "spectrum_max_size", "spectrum_max_cone",
      "oracle_max_gens", "oracle_max_k",     "oracle_space_cap",
  };
  for (const Directive& d : f.directives) {
    if (!keys.count(d.key)) throw SemanticError("unknown directive: " + d.key);
    if (d.value < 1) throw SemanticError("directive " + d.key + " must be >= 1");
  }
}

}  // namespace

SchemeFile parse_scheme_file(std::string_view text) {
  Parser p(text);
  SchemeFile f = p.parse();
  semantic_checks(f);
  return f;
}

namespace {

std::string word_text(const RelWord& w) {
  if (w.factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : w.factors) {
    if (!first) os << "*";
    os << g;
    if (e != 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string pretty_print(const SchemeFile& f) {
  std::ostringstream os;
  for (const Directive& d : f.directives) os << "set " << d.key << " " << d.value << "\n";
  if (!f.directives.empty()) os << "\n";
  for (const MonoidDef& m : f.monoids) {
    if (const auto* t = std::get_if<TableMonoidBody>(&m.body)) {
      os << "monoid " << m.name << " {\n  table [";
      for (size_t i = 0; i < t->table.size(); ++i) {
        os << (i ? "," : "") << "[";
        for (size_t j = 0; j < t->table[i].size(); ++j) {
          os << (j ? "," : "") << t->table[i][j];
        }
        os << "]";
      }
      os << "]\n  identity " << t->identity << "\n";
      if (t->zero != -1) os << "  zero " << t->zero << "\n";
      if (!t->names.empty()) {
        os << "  names [";
        for (size_t i = 0; i < t->names.size(); ++i) os << (i ? ", " : "") << t->names[i];
        os << "]\n";
      }
      os << "}\n\n";
    } else if (const auto* g = std::get_if<GensMonoidBody>(&m.body)) {
      os << "monoid " << m.name << " {\n  gens ";
      for (size_t i = 0; i < g->gens.size(); ++i) os << (i ? ", " : "") << g->gens[i];
      os << "\n";
      if (!g->rels.empty()) {
        os << "  rels ";
        for (size_t i = 0; i < g->rels.size(); ++i) {
          os << (i ? ", " : "") << word_text(g->rels[i].first) << " = "
             << word_text(g->rels[i].second);
        }
        os << "\n";
      }
      if (g->zero) os << "  zero\n";
      if (g->cap != 0) os << "  cap " << g->cap << "\n";
      os << "}\n\n";
    } else {
      const auto& s = std::get<SplitMonoid>(m.body);
      os << "monoid " << m.name << " = split(free=" << s.free_rank << ", cone=" << s.cone_rank
         << ", torsion=[";
      for (size_t i = 0; i < s.torsion.size(); ++i) os << (i ? "," : "") << s.torsion[i].str();
      os << "], zero=" << (s.has_zero ? "true" : "false") << ")\n\n";
    }
  }
  for (const SchemeDef& s : f.schemes) {
    if (const auto* call = std::get_if<BuiltinCall>(&s.body)) {
      os << "scheme " << s.name << " = " << call->builtin << "(" << call->arg << ")\n\n";
    } else {
      const auto& body = std::get<ChartsBody>(s.body);
      os << "scheme " << s.name << " {\n  charts ";
      for (size_t i = 0; i < body.charts.size(); ++i) os << (i ? ", " : "") << body.charts[i];
      os << ";\n";
      for (const GlueClause& g : body.glues) {
        auto point = [&](const PointSpec& p) {
          std::string out = p.chart + ".p{";
          for (size_t i = 0; i < p.items.size(); ++i) out += (i ? "," : "") + p.items[i];
          return out + "}";
        };
        os << "  glue " << point(g.a) << " ~ " << point(g.b) << ";\n";
      }
      os << "}\n\n";
    }
  }
  return os.str();
}

BuildOptions resolve_directives(const SchemeFile& f) {
  BuildOptions opt;
  for (const Directive& d : f.directives) {
    if (d.key == "saturation_cap") opt.saturation_cap = d.value;
    if (d.key == "spectrum_max_size") opt.spectrum.max_finite_size = static_cast<int>(d.value);
    if (d.key == "spectrum_max_cone") opt.spectrum.max_cone_rank = static_cast<int>(d.value);
    if (d.key == "oracle_max_gens") opt.oracle.max_gens = static_cast<int>(d.value);
    if (d.key == "oracle_max_k") opt.oracle.max_k = d.value;
    if (d.key == "oracle_space_cap") opt.oracle.space_cap = d.value;
  }
  return opt;
}

const MonoidDef* find_monoid(const SchemeFile& f, const std::string& name) {
  for (const MonoidDef& m : f.monoids) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const SchemeDef* find_scheme(const SchemeFile& f, const std::string& name) {
  for (const SchemeDef& s : f.schemes) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

MonoidChart build_chart(const SchemeFile& f, const std::string& monoid_name) {
  return build_chart(f, monoid_name, resolve_directives(f));
}

MonoidChart build_chart(const SchemeFile& f, const std::string& monoid_name,
                        const BuildOptions& opt) {
  const MonoidDef* def = find_monoid(f, monoid_name);
  if (!def) throw SemanticError("unknown monoid: " + monoid_name);
  if (const auto* t = std::get_if<TableMonoidBody>(&def->body)) {
    const int n = static_cast<int>(t->table.size());
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : t->table) {
      for (long long v : row) flat.push_back(static_cast<int>(v));
    }
    FiniteMonoid m = FiniteMonoid::from_table(std::move(flat), static_cast<int>(t->identity),
                                              static_cast<int>(t->zero), t->names);
    MonoidReport rep = verify_monoid(m);
    if (!rep.ok()) {
      throw SemanticError("monoid " + monoid_name + " is not a valid commutative monoid: " +
                          rep.violations.front());
    }
    return make_chart(monoid_name, std::move(m));
  }
  if (const auto* g = std::get_if<GensMonoidBody>(&def->body)) {
    Presentation pres;
    pres.generators = g->gens;
    pres.has_zero = g->zero;
    std::vector<int> gen_index(g->gens.size());
    for (const auto& [lhs, rhs] : g->rels) {
      Relation r;
      r.lhs.assign(g->gens.size(), 0);
      r.rhs.assign(g->gens.size(), 0);
      auto fill = [&](const RelWord& w, ExponentVector& v) {
        for (const auto& [gen, e] : w.factors) {
          size_t gi = std::find(g->gens.begin(), g->gens.end(), gen) - g->gens.begin();
          v[gi] += static_cast<unsigned>(e);
        }
      };
      fill(lhs, r.lhs);
      fill(rhs, r.rhs);
      pres.relations.push_back(std::move(r));
    }
    long long cap = g->cap != 0 ? g->cap : opt.saturation_cap;
    SaturationResult sr = saturate(pres, static_cast<int>(cap));
    ChartOracleData od;
    od.pres = sr.realized;
    od.from_presentation = true;
    od.element_words = sr.element_words;
    od.generator_images = sr.generator_images;
    return make_chart(monoid_name, std::move(sr.monoid), std::move(od));
  }
  return make_chart(monoid_name, std::get<SplitMonoid>(def->body));
}

namespace {

PrimeIdeal resolve_point(const MonoidChart& chart, const PointSpec& spec) {
  PrimeIdeal p;
  auto bad = [&](const std::string& why) {
    return SemanticError("point " + spec.chart + ".p{...}: " + why);
  };
  if (!chart.is_finite()) {
    const SplitMonoid& s = chart.split();
    for (const std::string& item : spec.items) {
      if (item == "zero") {
        if (!s.has_zero) throw bad("chart has no zero");
        p.zero_part = true;
      } else if (!item.empty() && std::isdigit(static_cast<unsigned char>(item[0]))) {
        int idx = std::stoi(item);
        if (idx < 0 || idx >= s.cone_rank) throw bad("cone coordinate out of range");
        p.mask |= 1u << idx;
      } else {
        throw bad("expected cone coordinate index or 'zero'");
      }
    }
    if (p.mask != 0 && s.has_zero) p.zero_part = true;  // nonempty ideals absorb the zero
  } else {
    const FiniteMonoid& m = chart.finite();
    const ChartOracleData& od = *chart.oracle;
    // Table charts list the elements of the prime; presented charts list
    // generators of the ideal.
    const bool generated = od.from_presentation;
    std::vector<int> seeds;
    for (const std::string& item : spec.items) {
      if (item == "zero" && m.has_zero()) {
        seeds.push_back(m.zero);
        continue;
      }
      if (!item.empty() && std::isdigit(static_cast<unsigned char>(item[0]))) {
        int idx = std::stoi(item);
        if (idx < 0 || idx >= m.size) throw bad("element index out of range");
        seeds.push_back(idx);
        continue;
      }
      // Name lookup: generator first, then element name.
      auto git = std::find(od.pres.generators.begin(), od.pres.generators.end(), item);
      if (git != od.pres.generators.end() && !od.generator_images.empty()) {
        seeds.push_back(od.generator_images[git - od.pres.generators.begin()]);
        continue;
      }
      auto nit = std::find(m.names.begin(), m.names.end(), item);
      if (nit == m.names.end()) throw bad("unknown element or generator '" + item + "'");
      seeds.push_back(static_cast<int>(nit - m.names.begin()));
    }
    if (generated) {
      for (int s : seeds) {
        for (int x = 0; x < m.size; ++x) p.mask |= 1u << m.mul(x, s);
      }
    } else {
      for (int s : seeds) p.mask |= 1u << s;
    }
  }
  if (!is_prime_of(chart, p)) {
    throw bad("the set " + prime_to_string(chart, p) + " is not a prime of " + chart.name);
  }
  return p;
}

}  // namespace

F1Scheme build_scheme(const SchemeFile& f, const std::string& scheme_name) {
  return build_scheme(f, scheme_name, resolve_directives(f));
}

F1Scheme build_scheme(const SchemeFile& f, const std::string& scheme_name,
                      const BuildOptions& opt) {
  const SchemeDef* def = find_scheme(f, scheme_name);
  if (!def) throw SemanticError("unknown scheme: " + scheme_name);
  F1Scheme x;
  if (const auto* call = std::get_if<BuiltinCall>(&def->body)) {
    if (call->builtin == "affine") {
      x = affine_space(static_cast<int>(call->arg));
    } else if (call->builtin == "projective") {
      x = proj_space(static_cast<int>(call->arg));
    } else if (call->builtin == "torus") {
      x = torus(static_cast<int>(call->arg));
    } else if (call->builtin == "mu") {
      x = mu_scheme(static_cast<int>(call->arg));
    } else {
      x = d_scheme(call->arg);
    }
  } else {
    const auto& body = std::get<ChartsBody>(def->body);
    for (const std::string& cname : body.charts) {
      x.charts.push_back(build_chart(f, cname, opt));
    }
    auto chart_index = [&](const std::string& cname) {
      for (size_t i = 0; i < body.charts.size(); ++i) {
        if (body.charts[i] == cname) return static_cast<int>(i);
      }
      throw SemanticError("unknown chart " + cname);
    };
    for (const GlueClause& g : body.glues) {
      int ca = chart_index(g.a.chart);
      int cb = chart_index(g.b.chart);
      x.identifications.push_back({ChartPointRef{ca, resolve_point(x.charts[ca], g.a)},
                                   ChartPointRef{cb, resolve_point(x.charts[cb], g.b)}});
    }
  }
  x.name = def->name;
  x.limits = opt.spectrum;
  return x;
}

}  // namespace f1
