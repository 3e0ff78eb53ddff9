#pragma once

// Symmetric monoidal categories used as parameters of the stateful construction.
//
// An instance is a stateless struct exposing the object and morphism types
// together with static operations. Optional capabilities (compact structure,
// Frobenius generators, state isomorphism search) are detected by concepts.

#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "otsalg/cospans.hpp"
#include "otsalg/graphs.hpp"
#include "otsalg/kernel.hpp"
#include "otsalg/spans.hpp"

namespace otsalg {

template <class I>
concept SmcInstance = requires(const typename I::object& a, const typename I::morphism& f) {
  { I::unit() } -> std::same_as<typename I::object>;
  { I::dom(f) } -> std::convertible_to<typename I::object>;
  { I::cod(f) } -> std::convertible_to<typename I::object>;
  { I::compose(f, f) } -> std::same_as<typename I::morphism>;
  { I::tensor(f, f) } -> std::same_as<typename I::morphism>;
  { I::identity(a) } -> std::same_as<typename I::morphism>;
  { I::swap(a, a) } -> std::same_as<typename I::morphism>;
  { I::equal(f, f) } -> std::convertible_to<bool>;
  { I::tensor_objects(a, a) } -> std::same_as<typename I::object>;
  { I::strip_prefix(a, a) } -> std::same_as<std::optional<typename I::object>>;
  { I::describe(a) } -> std::convertible_to<std::string>;
};

template <class I>
concept CompactInstance = SmcInstance<I> && requires(const typename I::object& a) {
  { I::cup(a) } -> std::same_as<typename I::morphism>;
  { I::cap(a) } -> std::same_as<typename I::morphism>;
};

template <class I>
concept FrobeniusInstance = SmcInstance<I> && requires(const typename I::object& a) {
  { I::copy(a) } -> std::same_as<typename I::morphism>;
  { I::cocopy(a) } -> std::same_as<typename I::morphism>;
  { I::discard(a) } -> std::same_as<typename I::morphism>;
  { I::codiscard(a) } -> std::same_as<typename I::morphism>;
};

/// Called with a bijection between state carriers; returning true stops the search.
using StateIsoVisitor = std::function<bool(const std::vector<std::size_t>&)>;

/// Instances whose isomorphisms between state objects can be enumerated.
/// The search receives the two morphisms being compared so it can prune
/// bijections that cannot conjugate one into the other.
template <class I>
concept IsoSearchInstance =
    SmcInstance<I> && requires(const typename I::object& a, const typename I::morphism& f,
                               const std::vector<std::size_t>& perm, const StateIsoVisitor& visit) {
      { I::carrier_size(a) } -> std::convertible_to<std::size_t>;
      { I::iso(a, a, perm) } -> std::same_as<typename I::morphism>;
      I::for_each_state_iso(a, f, a, f, perm, perm, visit);
    };

namespace detail {

struct StateGraph {
  FinGraph graph;
  FinFunction in_label;
  FinFunction out_label;
};

inline void search_state_isos(const StateGraph& a, const StateGraph& b, const std::vector<std::size_t>& colors_a,
                              const std::vector<std::size_t>& colors_b, const StateIsoVisitor& visit) {
  IsoConstraints c;
  c.edge_legs = {{a.in_label, b.in_label}, {a.out_label, b.out_label}};
  c.vertex_colors_g = colors_a;
  c.vertex_colors_h = colors_b;
  for_each_graph_iso(a.graph, b.graph, c, [&](const GraphIso& iso) { return visit(iso.vertex_map); });
}

}  // namespace detail

/// Spans of finite sets with the cartesian product as tensor.
struct SpanInstance {
  using object = Object;
  using morphism = Span;
  static constexpr const char* name = "span";

  static Object unit() { return Object::unit(); }
  static const Object& dom(const Span& f) { return f.dom(); }
  static const Object& cod(const Span& f) { return f.cod(); }
  static Span compose(const Span& f, const Span& g) { return otsalg::compose(f, g); }
  static Span tensor(const Span& f, const Span& g) { return otsalg::tensor(f, g); }
  static Span identity(const Object& a) { return Span::identity(a); }
  static Span swap(const Object& a, const Object& b) { return Span::swap(a, b); }
  static bool equal(const Span& f, const Span& g) { return span_equal(f, g); }
  static Object tensor_objects(const Object& a, const Object& b) { return otsalg::tensor(a, b); }
  static std::optional<Object> strip_prefix(const Object& w, const Object& p) { return otsalg::strip_prefix(w, p); }
  static std::string describe(const Object& a) { return a.describe(); }

  static Span cup(const Object& a) { return Span::cup(a); }
  static Span cap(const Object& a) { return Span::cap(a); }
  static Span copy(const Object& a) { return Span::copy(a); }
  static Span cocopy(const Object& a) { return Span::cocopy(a); }
  static Span discard(const Object& a) { return Span::discard(a); }
  static Span codiscard(const Object& a) { return Span::codiscard(a); }

  static std::size_t carrier_size(const Object& a) { return a.size(); }

  /// The bijection s -> t lifted to a span.
  static Span iso(const Object& s, const Object& t, const std::vector<std::size_t>& perm) {
    return Span::lift(FinFunction(s, t, perm));
  }

  /// Graph with one vertex per state and one edge per head element.
  static detail::StateGraph state_graph(const Object& s, const Span& f) {
    const std::size_t k = s.factor_count();
    const auto& d = f.dom();
    const auto& c = f.cod();
    auto src = otsalg::compose(f.left(), project(d, 0, k));
    auto tgt = otsalg::compose(f.right(), project(c, 0, k));
    return {FinGraph(src, tgt), otsalg::compose(f.left(), project(d, k, d.factor_count() - k)),
            otsalg::compose(f.right(), project(c, k, c.factor_count() - k))};
  }

  static void for_each_state_iso(const Object& s, const Span& f, const Object& t, const Span& g,
                                 const std::vector<std::size_t>& colors_s, const std::vector<std::size_t>& colors_t,
                                 const StateIsoVisitor& visit) {
    detail::search_state_isos(state_graph(s, f), state_graph(t, g), colors_s, colors_t, visit);
  }
};

/// Finite sets and functions with the cartesian product as tensor.
struct FinSetInstance {
  using object = Object;
  using morphism = FinFunction;
  static constexpr const char* name = "mealy";

  static Object unit() { return Object::unit(); }
  static const Object& dom(const FinFunction& f) { return f.dom(); }
  static const Object& cod(const FinFunction& f) { return f.cod(); }
  static FinFunction compose(const FinFunction& f, const FinFunction& g) { return otsalg::compose(f, g); }
  static FinFunction tensor(const FinFunction& f, const FinFunction& g) { return otsalg::tensor(f, g); }
  static FinFunction identity(const Object& a) { return FinFunction::identity(a); }
  static FinFunction swap(const Object& a, const Object& b) { return swap_map(a, b); }
  static bool equal(const FinFunction& f, const FinFunction& g) {
    if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw BoundaryMismatch("comparing functions of different types");
    return f.table() == g.table();
  }
  static Object tensor_objects(const Object& a, const Object& b) { return otsalg::tensor(a, b); }
  static std::optional<Object> strip_prefix(const Object& w, const Object& p) { return otsalg::strip_prefix(w, p); }
  static std::string describe(const Object& a) { return a.describe(); }

  static FinFunction copy(const Object& a) { return diagonal(a); }
  static FinFunction discard(const Object& a) { return terminal_map(a); }

  static std::size_t carrier_size(const Object& a) { return a.size(); }
  static FinFunction iso(const Object& s, const Object& t, const std::vector<std::size_t>& perm) {
    return FinFunction(s, t, perm);
  }

  /// Graph with one vertex per state and one edge per (state, input) pair.
  static detail::StateGraph state_graph(const Object& s, const FinFunction& f) {
    const std::size_t k = s.factor_count();
    const auto& d = f.dom();
    const auto& c = f.cod();
    auto src = project(d, 0, k);
    auto tgt = otsalg::compose(f, project(c, 0, k));
    return {FinGraph(src, tgt), project(d, k, d.factor_count() - k),
            otsalg::compose(f, project(c, k, c.factor_count() - k))};
  }

  static void for_each_state_iso(const Object& s, const FinFunction& f, const Object& t, const FinFunction& g,
                                 const std::vector<std::size_t>& colors_s, const std::vector<std::size_t>& colors_t,
                                 const StateIsoVisitor& visit) {
    detail::search_state_isos(state_graph(s, f), state_graph(t, g), colors_s, colors_t, visit);
  }
};

/// Cospans of finite sets with the coproduct as tensor.
struct CospanInstance {
  using object = Object;
  using morphism = Cospan;
  static constexpr const char* name = "cospan";

  static Object unit() { return Object::unit(); }
  static const Object& dom(const Cospan& f) { return f.dom(); }
  static const Object& cod(const Cospan& f) { return f.cod(); }
  static Cospan compose(const Cospan& f, const Cospan& g) { return otsalg::compose(f, g); }
  static Cospan tensor(const Cospan& f, const Cospan& g) { return otsalg::tensor(f, g); }
  static Cospan identity(const Object& a) { return Cospan::identity(a); }
  static Cospan swap(const Object& a, const Object& b) { return Cospan::swap(a, b); }
  static bool equal(const Cospan& f, const Cospan& g) { return cospan_equal(f, g); }
  static Object tensor_objects(const Object& a, const Object& b) { return otsalg::tensor(a, b); }
  static std::optional<Object> strip_prefix(const Object& w, const Object& p) { return otsalg::strip_prefix(w, p); }
  static std::string describe(const Object& a) { return a.describe(); }

  static Cospan cup(const Object& a) { return Cospan::cup(a); }
  static Cospan cap(const Object& a) { return Cospan::cap(a); }
  static Cospan copy(const Object& a) { return Cospan::copy(a); }
  static Cospan cocopy(const Object& a) { return Cospan::cocopy(a); }
  static Cospan discard(const Object& a) { return Cospan::discard(a); }
  static Cospan codiscard(const Object& a) { return Cospan::codiscard(a); }

  static std::size_t carrier_size(const Object& a) { return sum_object(a).size(); }

  static Cospan iso(const Object& s, const Object& t, const std::vector<std::size_t>& perm) {
    auto ts = sum_object(t);
    return Cospan(s, t, FinFunction(sum_object(s), ts, perm), FinFunction::identity(ts));
  }

  /// Graph whose edges are the state elements and whose vertices are the apex:
  /// the left leg gives targets, the right leg gives sources.
  struct MarkedGraph {
    FinGraph graph;
    FinFunction left_mark;
    FinFunction right_mark;
  };

  static MarkedGraph marked_graph(const Object& s, const Cospan& f) {
    const std::size_t ns = sum_object(s).size();
    auto es = sum_object(s);
    auto part = [&](const FinFunction& leg, std::size_t first, std::size_t count, Object dom) {
      std::vector<std::size_t> t(leg.table().begin() + static_cast<std::ptrdiff_t>(first),
                                 leg.table().begin() + static_cast<std::ptrdiff_t>(first + count));
      return FinFunction(std::move(dom), leg.cod(), std::move(t));
    };
    auto a = *otsalg::strip_prefix(f.dom(), s);
    auto b = *otsalg::strip_prefix(f.cod(), s);
    auto sa = sum_object(a), sb = sum_object(b);
    return {FinGraph(part(f.right(), 0, ns, es), part(f.left(), 0, ns, es)), part(f.left(), ns, sa.size(), sa),
            part(f.right(), ns, sb.size(), sb)};
  }

  static void for_each_state_iso(const Object& s, const Cospan& f, const Object& t, const Cospan& g,
                                 const std::vector<std::size_t>& colors_s, const std::vector<std::size_t>& colors_t,
                                 const StateIsoVisitor& visit) {
    if (!colors_s.empty() || !colors_t.empty()) throw Unsupported("coloured states over cospans");
    auto a = marked_graph(s, f), b = marked_graph(t, g);
    IsoConstraints c;
    c.vertex_marks = {{a.left_mark, b.left_mark}, {a.right_mark, b.right_mark}};
    for_each_graph_iso(a.graph, b.graph, c, [&](const GraphIso& iso) { return visit(iso.edge_map); });
  }
};

}  // namespace otsalg
