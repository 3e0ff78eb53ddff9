#pragma once

// A small circuit language: alphabet declarations followed by one term
// built from generators with ";" (sequence) and "*" (parallel).
//
//   program = decl* term
//   decl    = "alphabet" NAME "=" "{" sym ("," sym)* "}"
//   term    = par (";" par)*
//   par     = atom ("*" atom)*
//   atom    = NAME args? | "id[" obj "]" | "sw[" obj "," obj "]"
//           | "fbk[" obj "](" term ")" | "tr[" obj "](" term ")"
//           | "dly[" obj "]" | "cp[" obj "]" | "ccp[" obj "]" | "ds[" obj "]"
//           | "cds[" obj "]" | "cup[" obj "]" | "cap[" obj "]" | "(" term ")"
//   obj     = NAME ("@" NAME)*        the name I denotes the unit

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "otsalg/kernel.hpp"
#include "otsalg/mat.hpp"

namespace otsalg::dsl {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t col = 1;
};

/// Factor names of an object; empty for the unit.
using ObjectExpr = std::vector<std::string>;

enum class TermKind { Gen, Seq, Par, Fbk, Tr, Id, Swap, Delay, Copy, Cocopy, Discard, Codiscard, Cup, Cap };

struct Term {
  TermKind kind = TermKind::Id;
  std::string name;
  std::vector<ObjectExpr> objects;
  std::vector<Term> children;
  SourceSpan where;

  static Term gen(std::string n, std::vector<ObjectExpr> args = {}) {
    return Term{TermKind::Gen, std::move(n), std::move(args), {}, {}};
  }
  static Term seq(Term a, Term b) { return Term{TermKind::Seq, {}, {}, {std::move(a), std::move(b)}, {}}; }
  static Term par(Term a, Term b) { return Term{TermKind::Par, {}, {}, {std::move(a), std::move(b)}, {}}; }
  static Term fbk(ObjectExpr s, Term t) { return Term{TermKind::Fbk, {}, {std::move(s)}, {std::move(t)}, {}}; }
  static Term tr(ObjectExpr s, Term t) { return Term{TermKind::Tr, {}, {std::move(s)}, {std::move(t)}, {}}; }
  static Term constant(TermKind k, std::vector<ObjectExpr> objs) { return Term{k, {}, std::move(objs), {}, {}}; }
};

/// Equality of terms ignoring source positions.
inline bool same_term(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name || a.objects != b.objects || a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_term(a.children[i], b.children[i])) return false;
  return true;
}

struct AlphabetDecl {
  std::string name;
  std::vector<std::string> symbols;
  SourceSpan where;
};

struct Program {
  std::vector<AlphabetDecl> decls;
  Term term;
};

inline const char* keyword(TermKind k) {
  switch (k) {
    case TermKind::Id: return "id";
    case TermKind::Swap: return "sw";
    case TermKind::Fbk: return "fbk";
    case TermKind::Tr: return "tr";
    case TermKind::Delay: return "dly";
    case TermKind::Copy: return "cp";
    case TermKind::Cocopy: return "ccp";
    case TermKind::Discard: return "ds";
    case TermKind::Codiscard: return "cds";
    case TermKind::Cup: return "cup";
    case TermKind::Cap: return "cap";
    default: return "";
  }
}

inline std::optional<TermKind> keyword_kind(std::string_view w) {
  static const std::map<std::string, TermKind, std::less<>> table{
      {"id", TermKind::Id},      {"sw", TermKind::Swap},     {"fbk", TermKind::Fbk},
      {"tr", TermKind::Tr},      {"dly", TermKind::Delay},   {"cp", TermKind::Copy},
      {"ccp", TermKind::Cocopy}, {"ds", TermKind::Discard},  {"cds", TermKind::Codiscard},
      {"cup", TermKind::Cup},    {"cap", TermKind::Cap}};
  auto it = table.find(w);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Lexer and parser.

namespace detail {

enum class Tok { Name, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan where;
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && ident(src[j])) ++j;
      out.push_back({Tok::Name, std::string(src.substr(i, j - i)), {line, col}});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && ident(src[j])) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), {line, col}});
      advance(j - i);
    } else if (std::string_view("={},;*[]()@").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), {line, col}});
      advance(1);
    } else {
      throw SyntaxError(line, col, "a name, a number or one of = { } , ; * [ ] ( ) @");
    }
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Program program() {
    Program p;
    while (peek().kind == Tok::Name && peek().text == "alphabet") p.decls.push_back(decl());
    p.term = term();
    if (peek().kind != Tok::End) fail("';', '*' or end of input");
    return p;
  }

  Term term_only() {
    Term t = term();
    if (peek().kind != Tok::End) fail("';', '*' or end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(peek().where.line, peek().where.col, expected);
  }
  bool at(const char* punct) const { return peek().kind == Tok::Punct && peek().text == punct; }
  void expect(const char* punct) {
    if (!at(punct)) fail(std::string("'") + punct + "'");
    ++pos_;
  }
  std::string name(const char* what) {
    if (peek().kind != Tok::Name) fail(what);
    return next().text;
  }

  AlphabetDecl decl() {
    AlphabetDecl d;
    d.where = next().where;
    d.name = name("an alphabet name");
    expect("=");
    expect("{");
    do {
      if (peek().kind != Tok::Name && peek().kind != Tok::Number) fail("a symbol");
      d.symbols.push_back(next().text);
    } while (at(",") && (++pos_, true));
    expect("}");
    return d;
  }

  ObjectExpr obj() {
    ObjectExpr o;
    std::string n = name("an object name");
    if (n == "I" && !at("@")) return o;
    o.push_back(n);
    while (at("@")) {
      ++pos_;
      o.push_back(name("an alphabet name after '@'"));
    }
    return o;
  }

  Term term() {
    SourceSpan w = peek().where;
    Term t = par();
    while (at(";")) {
      ++pos_;
      t = Term::seq(std::move(t), par());
      t.where = w;
    }
    return t;
  }

  Term par() {
    SourceSpan w = peek().where;
    Term t = atom();
    while (at("*")) {
      ++pos_;
      t = Term::par(std::move(t), atom());
      t.where = w;
    }
    return t;
  }

  Term atom() {
    SourceSpan w = peek().where;
    if (at("(")) {
      ++pos_;
      Term t = term();
      expect(")");
      return t;
    }
    if (peek().kind != Tok::Name) fail("a generator, a constant or '('");
    std::string word = next().text;
    Term t;
    if (auto k = keyword_kind(word)) {
      t.kind = *k;
      expect("[");
      t.objects.push_back(obj());
      if (*k == TermKind::Swap) {
        expect(",");
        t.objects.push_back(obj());
      }
      expect("]");
      if (*k == TermKind::Fbk || *k == TermKind::Tr) {
        expect("(");
        t.children.push_back(term());
        expect(")");
      }
    } else {
      if (word == "alphabet") fail("a term (declarations come first)");
      t.kind = TermKind::Gen;
      t.name = word;
      if (at("[")) {
        ++pos_;
        t.objects.push_back(obj());
        while (at(",")) {
          ++pos_;
          t.objects.push_back(obj());
        }
        expect("]");
      }
    }
    t.where = w;
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Program parse(std::string_view src) { return detail::Parser(src).program(); }
inline Term parse_term(std::string_view src) { return detail::Parser(src).term_only(); }

// ---------------------------------------------------------------------------
// Printer.

inline std::string print(const ObjectExpr& o) {
  if (o.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < o.size(); ++i) s += (i ? "@" : "") + o[i];
  return s;
}

namespace detail {

inline int level(const Term& t) {
  if (t.kind == TermKind::Seq) return 0;
  if (t.kind == TermKind::Par) return 1;
  return 2;
}

inline void print_at(const Term& t, int min_level, std::string& out);

inline void print_term(const Term& t, std::string& out) {
  switch (t.kind) {
    case TermKind::Seq:
      print_at(t.children[0], 0, out);
      out += " ; ";
      print_at(t.children[1], 1, out);
      return;
    case TermKind::Par:
      print_at(t.children[0], 1, out);
      out += " * ";
      print_at(t.children[1], 2, out);
      return;
    case TermKind::Gen:
      out += t.name;
      if (!t.objects.empty()) {
        out += "[";
        for (std::size_t i = 0; i < t.objects.size(); ++i) out += (i ? ", " : "") + print(t.objects[i]);
        out += "]";
      }
      return;
    case TermKind::Swap:
      out += std::string("sw[") + print(t.objects[0]) + ", " + print(t.objects[1]) + "]";
      return;
    case TermKind::Fbk:
    case TermKind::Tr:
      out += std::string(keyword(t.kind)) + "[" + print(t.objects[0]) + "](";
      print_at(t.children[0], 0, out);
      out += ")";
      return;
    default:
      out += std::string(keyword(t.kind)) + "[" + print(t.objects[0]) + "]";
  }
}

inline void print_at(const Term& t, int min_level, std::string& out) {
  if (level(t) < min_level) {
    out += "(";
    print_term(t, out);
    out += ")";
  } else {
    print_term(t, out);
  }
}

}  // namespace detail

inline std::string print(const Term& t) {
  std::string out;
  detail::print_term(t, out);
  return out;
}

inline std::string print(const Program& p) {
  std::string out;
  for (const auto& d : p.decls) {
    out += "alphabet " + d.name + " = {";
    for (std::size_t i = 0; i < d.symbols.size(); ++i) out += (i ? ", " : "") + d.symbols[i];
    out += "}\n";
  }
  return out + print(p.term) + "\n";
}

// ---------------------------------------------------------------------------
// Environments and type checking.

/// A user generator given as a table of (left tuple, right tuple) rows, and
/// optionally as a matrix for the linear instance.
struct GeneratorDef {
  std::string name;
  ObjectExpr dom;
  ObjectExpr cod;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rows;
  std::optional<Matrix> matrix;
};

struct Environment {
  std::map<std::string, Alphabet> alphabets;
  std::map<std::string, GeneratorDef> generators;

  Object object(const ObjectExpr& o, SourceSpan where = {}) const {
    std::vector<Alphabet> f;
    for (const auto& n : o) {
      auto it = alphabets.find(n);
      if (it == alphabets.end()) throw TypeError(where.line, where.col, n, "declared alphabets", "unknown alphabet");
      f.push_back(it->second);
    }
    return Object(std::move(f));
  }
};

inline Environment environment(const Program& p, const std::vector<GeneratorDef>& gens = {}) {
  Environment env;
  for (const auto& d : p.decls) {
    if (env.alphabets.count(d.name))
      throw TypeError(d.where.line, d.where.col, d.name, d.name, "alphabet declared twice");
    try {
      env.alphabets.emplace(d.name, Alphabet(d.name, d.symbols));
    } catch (const InvalidArgument& e) {
      throw TypeError(d.where.line, d.where.col, d.name, d.name, e.what());
    }
  }
  for (const auto& g : gens) env.generators[g.name] = g;
  return env;
}

struct TypedTerm {
  TermKind kind;
  std::string name;
  std::vector<Object> objects;
  SourceSpan where;
  Object dom;
  Object cod;
  std::vector<TypedTerm> children;
};

/// The two-symbol alphabet used by the built-in nor generator.
inline Alphabet nor_alphabet(const Term& t, const Environment& env) {
  if (!t.objects.empty()) {
    if (t.objects.size() != 1 || t.objects[0].size() != 1)
      throw TypeError(t.where.line, t.where.col, "nor[...]", "nor[B]", "nor takes one alphabet");
    auto o = env.object(t.objects[0], t.where);
    if (o.factors()[0].size() != 2)
      throw TypeError(t.where.line, t.where.col, o.describe(), "a two-symbol alphabet", "nor needs two symbols");
    return o.factors()[0];
  }
  std::vector<Alphabet> found;
  for (const auto& [n, a] : env.alphabets)
    if (a.size() == 2) found.push_back(a);
  if (found.size() != 1)
    throw TypeError(t.where.line, t.where.col, std::to_string(found.size()) + " two-symbol alphabets", "exactly one",
                    "nor needs an explicit alphabet");
  return found[0];
}

inline TypedTerm typecheck(const Term& t, const Environment& env) {
  TypedTerm out{t.kind, t.name, {}, t.where, {}, {}, {}};
  for (const auto& o : t.objects) out.objects.push_back(env.object(o, t.where));
  auto mismatch = [&](const Object& a, const Object& b, const std::string& what) {
    return TypeError(t.where.line, t.where.col, a.describe(), b.describe(), what);
  };
  const auto* objs = &out.objects;
  auto one = [&]() -> const Object& { return (*objs)[0]; };
  switch (t.kind) {
    case TermKind::Seq: {
      auto l = typecheck(t.children[0], env);
      auto r = typecheck(t.children[1], env);
      if (!(l.cod == r.dom)) throw mismatch(l.cod, r.dom, "sequential composition boundary mismatch");
      out.dom = l.dom;
      out.cod = r.cod;
      out.children = {std::move(l), std::move(r)};
      break;
    }
    case TermKind::Par: {
      auto l = typecheck(t.children[0], env);
      auto r = typecheck(t.children[1], env);
      out.dom = tensor(l.dom, r.dom);
      out.cod = tensor(l.cod, r.cod);
      out.children = {std::move(l), std::move(r)};
      break;
    }
    case TermKind::Fbk:
    case TermKind::Tr: {
      auto c = typecheck(t.children[0], env);
      auto a = strip_prefix(c.dom, one());
      auto b = strip_prefix(c.cod, one());
      if (!a) throw mismatch(one(), c.dom, "feedback wires are not a prefix of the domain");
      if (!b) throw mismatch(one(), c.cod, "feedback wires are not a prefix of the codomain");
      out.dom = *a;
      out.cod = *b;
      out.children = {std::move(c)};
      break;
    }
    case TermKind::Id:
    case TermKind::Delay:
      out.dom = out.cod = one();
      break;
    case TermKind::Swap:
      out.dom = tensor(out.objects[0], out.objects[1]);
      out.cod = tensor(out.objects[1], out.objects[0]);
      break;
    case TermKind::Copy:
      out.dom = one();
      out.cod = tensor(one(), one());
      break;
    case TermKind::Cocopy:
      out.dom = tensor(one(), one());
      out.cod = one();
      break;
    case TermKind::Discard:
      out.dom = one();
      break;
    case TermKind::Codiscard:
      out.cod = one();
      break;
    case TermKind::Cup:
      out.cod = tensor(one(), one());
      break;
    case TermKind::Cap:
      out.dom = tensor(one(), one());
      break;
    case TermKind::Gen: {
      auto it = env.generators.find(t.name);
      if (it != env.generators.end()) {
        out.dom = env.object(it->second.dom, t.where);
        out.cod = env.object(it->second.cod, t.where);
      } else if (t.name == "nor") {
        auto b = nor_alphabet(t, env);
        out.objects = {Object{b}};
        out.dom = Object{b, b};
        out.cod = Object{b};
      } else {
        throw TypeError(t.where.line, t.where.col, t.name, "a known generator", "unknown generator");
      }
      break;
    }
  }
  return out;
}

}  // namespace otsalg::dsl
