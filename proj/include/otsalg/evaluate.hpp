#pragma once

// Interpretation of typed circuit terms in a chosen stateful instance.

#include <optional>
#include <string>
#include <variant>

#include "otsalg/automata.hpp"
#include "otsalg/cospangraph.hpp"
#include "otsalg/dsl.hpp"
#include "otsalg/feedback.hpp"
#include "otsalg/spangraph.hpp"

namespace otsalg::dsl {

enum class InstanceKind { Span, Cospan, Mealy, Mat };

inline InstanceKind parse_instance(const std::string& s) {
  if (s == "span") return InstanceKind::Span;
  if (s == "cospan") return InstanceKind::Cospan;
  if (s == "mealy") return InstanceKind::Mealy;
  if (s == "mat") return InstanceKind::Mat;
  throw InvalidArgument("unknown instance '" + s + "' (expected span, cospan, mealy or mat)");
}

inline const char* instance_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::Span: return "span";
    case InstanceKind::Cospan: return "cospan";
    case InstanceKind::Mealy: return "mealy";
    case InstanceKind::Mat: return "mat";
  }
  return "";
}

namespace detail {

[[noreturn]] inline void unsupported(const TypedTerm& t, const std::string& what, const char* instance) {
  throw UnsupportedConstant(std::to_string(t.where.line) + ":" + std::to_string(t.where.col) + ": " + what +
                            " is not available in the " + instance + " instance");
}

/// Rows of a user generator as pairs of indices into its boundaries.
inline std::vector<std::pair<std::size_t, std::size_t>> generator_rows(const GeneratorDef& g, const Object& dom,
                                                                       const Object& cod) {
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  for (const auto& [l, r] : g.rows) rows.emplace_back(dom.find(l), cod.find(r));
  return rows;
}

}  // namespace detail

/// Per-instance interpretation of objects, constants and generators.
template <class I>
struct Interpretation;

template <>
struct Interpretation<SpanInstance> {
  static constexpr const char* name = "span";
  static Object object(const Object& o) { return o; }
  static std::optional<Span> constant(TermKind k, const Object& a) {
    switch (k) {
      case TermKind::Copy: return Span::copy(a);
      case TermKind::Cocopy: return Span::cocopy(a);
      case TermKind::Discard: return Span::discard(a);
      case TermKind::Codiscard: return Span::codiscard(a);
      case TermKind::Cup: return Span::cup(a);
      case TermKind::Cap: return Span::cap(a);
      default: return std::nullopt;
    }
  }
  static Span generator(const TypedTerm& t, const Environment& env) {
    auto it = env.generators.find(t.name);
    if (it == env.generators.end()) return Span::lift(nor_function(t.objects[0].factors()[0]));
    auto rows = detail::generator_rows(it->second, t.dom, t.cod);
    auto head = indexed_object(t.name, rows.size(), "r");
    std::vector<std::size_t> l, r;
    for (auto [a, b] : rows) {
      l.push_back(a);
      r.push_back(b);
    }
    return Span(FinFunction(head, t.dom, l), FinFunction(head, t.cod, r));
  }
};

template <>
struct Interpretation<CospanInstance> {
  static constexpr const char* name = "cospan";
  static Object object(const Object& o) { return o; }
  static std::optional<Cospan> constant(TermKind k, const Object& a) {
    switch (k) {
      case TermKind::Copy: return Cospan::copy(a);
      case TermKind::Cocopy: return Cospan::cocopy(a);
      case TermKind::Discard: return Cospan::discard(a);
      case TermKind::Codiscard: return Cospan::codiscard(a);
      case TermKind::Cup: return Cospan::cup(a);
      case TermKind::Cap: return Cospan::cap(a);
      default: return std::nullopt;
    }
  }
  static Cospan generator(const TypedTerm& t, const Environment& env) {
    if (!env.generators.count(t.name)) detail::unsupported(t, "the nor gate", name);
    detail::unsupported(t, "generator '" + t.name + "'", name);
  }
};

template <>
struct Interpretation<FinSetInstance> {
  static constexpr const char* name = "mealy";
  static Object object(const Object& o) { return o; }
  static std::optional<FinFunction> constant(TermKind k, const Object& a) {
    switch (k) {
      case TermKind::Copy: return diagonal(a);
      case TermKind::Discard: return terminal_map(a);
      default: return std::nullopt;
    }
  }
  static FinFunction generator(const TypedTerm& t, const Environment& env) {
    auto it = env.generators.find(t.name);
    if (it == env.generators.end()) return nor_function(t.objects[0].factors()[0]);
    std::vector<std::optional<std::size_t>> table(t.dom.size());
    for (auto [a, b] : detail::generator_rows(it->second, t.dom, t.cod)) {
      if (table[a] && *table[a] != b) detail::unsupported(t, "generator '" + t.name + "' (not a function)", name);
      table[a] = b;
    }
    std::vector<std::size_t> out;
    for (const auto& v : table) {
      if (!v) detail::unsupported(t, "generator '" + t.name + "' (not total)", name);
      out.push_back(*v);
    }
    return FinFunction(t.dom, t.cod, std::move(out));
  }
};

template <>
struct Interpretation<MatInstance> {
  static constexpr const char* name = "mat";
  /// One dimension per symbol of each factor.
  static std::size_t object(const Object& o) {
    std::size_t n = 0;
    for (const auto& a : o.factors()) n += a.size();
    return n;
  }
  static std::optional<Matrix> constant(TermKind k, std::size_t n) {
    switch (k) {
      case TermKind::Copy: return MatInstance::copy(n);
      case TermKind::Cocopy: return MatInstance::cocopy(n);
      case TermKind::Discard: return MatInstance::discard(n);
      case TermKind::Codiscard: return MatInstance::codiscard(n);
      default: return std::nullopt;
    }
  }
  static Matrix generator(const TypedTerm& t, const Environment& env) {
    auto it = env.generators.find(t.name);
    if (it == env.generators.end()) detail::unsupported(t, "the nor gate", name);
    if (!it->second.matrix) detail::unsupported(t, "generator '" + t.name + "' (no matrix given)", name);
    const Matrix& m = *it->second.matrix;
    if (m.cols() != object(t.dom) || m.rows() != object(t.cod))
      throw DimensionMismatch("matrix of generator '" + t.name + "' is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(object(t.cod)) + "x" +
                              std::to_string(object(t.dom)));
    return m;
  }
};

template <SmcInstance I>
StatefulMorphism<I> evaluate_in(const TypedTerm& t, const Environment& env) {
  using In = Interpretation<I>;
  auto obj = [&](std::size_t i) { return In::object(t.objects[i]); };
  switch (t.kind) {
    case TermKind::Seq:
      return st_compose(evaluate_in<I>(t.children[0], env), evaluate_in<I>(t.children[1], env));
    case TermKind::Par:
      return st_tensor(evaluate_in<I>(t.children[0], env), evaluate_in<I>(t.children[1], env));
    case TermKind::Fbk:
      return store<I>(obj(0), evaluate_in<I>(t.children[0], env));
    case TermKind::Tr:
      if constexpr (CompactInstance<I>) {
        return st_trace<I>(obj(0), evaluate_in<I>(t.children[0], env));
      } else {
        detail::unsupported(t, "tr", In::name);
      }
    case TermKind::Id:
      return st_identity<I>(obj(0));
    case TermKind::Swap:
      return st_lift<I>(I::swap(obj(0), obj(1)));
    case TermKind::Delay:
      return delay<I>(obj(0));
    case TermKind::Gen:
      return st_lift<I>(In::generator(t, env));
    default: {
      auto c = In::constant(t.kind, obj(0));
      if (!c) detail::unsupported(t, keyword(t.kind), In::name);
      return st_lift<I>(*c);
    }
  }
}

using Evaluation = std::variant<SpanStateful, CospanStateful, StatefulMorphism<FinSetInstance>, MatStateful>;

inline Evaluation evaluate(const TypedTerm& t, const Environment& env, InstanceKind k) {
  switch (k) {
    case InstanceKind::Span: return evaluate_in<SpanInstance>(t, env);
    case InstanceKind::Cospan: return evaluate_in<CospanInstance>(t, env);
    case InstanceKind::Mealy: return evaluate_in<FinSetInstance>(t, env);
    case InstanceKind::Mat: return evaluate_in<MatInstance>(t, env);
  }
  throw InvalidArgument("unknown instance");
}

/// Parse, check and evaluate a whole program.
inline Evaluation run_program(std::string_view src, InstanceKind k, const std::vector<GeneratorDef>& gens = {}) {
  auto p = parse(src);
  auto env = environment(p, gens);
  return evaluate(typecheck(p.term, env), env, k);
}

}  // namespace otsalg::dsl
