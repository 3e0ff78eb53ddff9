#pragma once

// Open transition systems: graphs with edges labelled by a left and a right
// boundary. They correspond to stateful spans of finite sets.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "otsalg/feedback.hpp"
#include "otsalg/graphs.hpp"
#include "otsalg/spans.hpp"

namespace otsalg {

class OpenTransitionSystem {
 public:
  OpenTransitionSystem() = default;
  OpenTransitionSystem(FinGraph graph, FinFunction left, FinFunction right)
      : graph_(std::move(graph)), left_(std::move(left)), right_(std::move(right)) {
    if (!(left_.dom() == graph_.edges()) || !(right_.dom() == graph_.edges()))
      throw InvalidArgument("boundary legs must be defined on the edge set");
  }

  const FinGraph& graph() const { return graph_; }
  const FinFunction& left() const { return left_; }
  const FinFunction& right() const { return right_; }
  const Object& dom() const { return left_.cod(); }
  const Object& cod() const { return right_.cod(); }
  const Object& vertices() const { return graph_.vertices(); }
  const Object& edges() const { return graph_.edges(); }

 private:
  FinGraph graph_;
  FinFunction left_;
  FinFunction right_;
};

using OTS = OpenTransitionSystem;
using SpanStateful = StatefulMorphism<SpanInstance>;

/// Sequential composition: edges are pairs agreeing on the shared boundary.
inline OTS compose(const OTS& x, const OTS& y) {
  if (!(x.cod() == y.dom()))
    throw BoundaryMismatch("transition system " + x.cod().describe() + " does not meet " + y.dom().describe());
  auto pb = pullback(x.right(), y.left());
  auto src = pair(compose(pb.p1, x.graph().src()), compose(pb.p2, y.graph().src()));
  auto tgt = pair(compose(pb.p1, x.graph().tgt()), compose(pb.p2, y.graph().tgt()));
  return OTS(FinGraph(src, tgt), compose(pb.p1, x.left()), compose(pb.p2, y.right()));
}

inline OTS tensor(const OTS& x, const OTS& y) {
  return OTS(graph_product(x.graph(), y.graph()), tensor(x.left(), y.left()), tensor(x.right(), y.right()));
}

/// A span as a one-vertex system.
inline OTS ots_from_span(const Span& s) {
  auto to_point = terminal_map(s.head());
  return OTS(FinGraph(to_point, to_point), s.left(), s.right());
}

inline OTS ots_identity(const Object& a) { return ots_from_span(Span::identity(a)); }

/// Vertices are states, edges are head elements; the state components of the
/// legs give source and target.
inline OTS k_forward(const SpanStateful& m) {
  const std::size_t k = m.state().factor_count();
  const auto& f = m.morph();
  auto src = compose(f.left(), project(f.dom(), 0, k));
  auto tgt = compose(f.right(), project(f.cod(), 0, k));
  auto l = compose(f.left(), project(f.dom(), k, f.dom().factor_count() - k));
  auto r = compose(f.right(), project(f.cod(), k, f.cod().factor_count() - k));
  return OTS(FinGraph(src, tgt), l, r);
}

inline SpanStateful k_backward(const OTS& x) {
  return SpanStateful(x.vertices(), Span(pair(x.graph().src(), x.left()), pair(x.graph().tgt(), x.right())));
}

inline IsoConstraints ots_constraints(const OTS& x, const OTS& y) {
  IsoConstraints c;
  c.edge_legs = {{x.left(), y.left()}, {x.right(), y.right()}};
  return c;
}

inline std::optional<GraphIso> ots_iso(const OTS& x, const OTS& y) {
  if (!(x.dom() == y.dom()) || !(x.cod() == y.cod()))
    throw BoundaryMismatch("comparing systems " + x.dom().describe() + " -> " + x.cod().describe() + " and " +
                           y.dom().describe() + " -> " + y.cod().describe());
  return graph_iso(x.graph(), y.graph(), ots_constraints(x, y));
}

/// Isomorphism of graphs commuting with both boundary labellings.
inline bool ots_equal(const OTS& x, const OTS& y) { return ots_iso(x, y).has_value(); }

/// Feedback over the leading boundary factors s: vertices become V × s.
inline OTS ots_fbk(const Object& s, const OTS& x) { return k_forward(store<SpanInstance>(s, k_backward(x))); }

/// Compact-closed trace over s, built from cup and cap systems.
inline OTS ots_trace(const Object& s, const OTS& x) {
  auto a = strip_prefix(x.dom(), s);
  auto b = strip_prefix(x.cod(), s);
  if (!a || !b) throw FactorizationMismatch("trace over " + s.describe() + " of " + x.dom().describe());
  auto open = tensor(ots_from_span(Span::cup(s)), ots_identity(*a));
  auto body = tensor(ots_identity(s), x);
  auto close = tensor(ots_from_span(Span::cap(s)), ots_identity(*b));
  return compose(compose(open, body), close);
}

inline OTS ots_delay(const Object& a) { return k_forward(delay<SpanInstance>(a)); }

/// Edges as (src, tgt, left, right) tuples, sorted.
inline std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> edge_multiset(const OTS& x) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> out;
  for (std::size_t e = 0; e < x.edges().size(); ++e)
    out.emplace_back(x.graph().src()(e), x.graph().tgt()(e), x.left()(e), x.right()(e));
  std::sort(out.begin(), out.end());
  return out;
}

/// NOR on the alphabet b, whose first symbol is false.
inline FinFunction nor_function(const Alphabet& b) {
  if (b.size() != 2) throw InvalidArgument("NOR needs a two-symbol alphabet");
  Object bb{b, b};
  return FinFunction(bb, Object{b}, {1, 0, 0, 0});
}

inline OTS nor_gate(const Alphabet& b = bool_alphabet()) { return ots_from_span(Span::lift(nor_function(b))); }

/// Names of the latch signals and states.
struct LatchVocabulary {
  static constexpr std::pair<int, int> set{1, 0};
  static constexpr std::pair<int, int> reset{0, 1};
  static constexpr std::pair<int, int> idle{0, 0};
  static constexpr std::pair<int, int> unspec{1, 1};
  static constexpr std::pair<int, int> not_a{1, 0};
  static constexpr std::pair<int, int> a{0, 1};
  static constexpr std::pair<int, int> t1{0, 0};
  static constexpr std::pair<int, int> t2{1, 1};

  static std::string input_name(std::pair<int, int> v) {
    if (v == set) return "Set";
    if (v == reset) return "Reset";
    if (v == idle) return "Idle";
    return "Unspec";
  }
  static std::string state_name(std::pair<int, int> v) {
    if (v == not_a) return "notA";
    if (v == a) return "A";
    if (v == t1) return "T1";
    return "T2";
  }
  /// Index of a pair in B ⊗ B.
  static std::size_t index(std::pair<int, int> v) { return static_cast<std::size_t>(v.first * 2 + v.second); }
  static std::pair<int, int> pair_of(std::size_t i) { return {static_cast<int>(i / 2), static_cast<int>(i % 2)}; }
};

/// The NOR latch: two cross-coupled NOR gates with a delay on each feedback wire.
inline OTS build_latch() {
  Object b{bool_alphabet()};
  Object bb = tensor(b, b);
  auto id = ots_identity(b);
  auto cup = ots_from_span(Span::cup(b));
  auto cap = ots_from_span(Span::cap(b));
  auto cp = ots_from_span(Span::copy(b));
  auto sw = ots_from_span(Span::swap(b, b));
  auto d = ots_delay(b);
  auto nor = nor_gate();
  auto layer1 = tensor(tensor(tensor(id, cup), cup), id);
  auto layer2 = tensor(tensor(nor, sw), nor);
  auto layer3 = tensor(tensor(cp, ots_identity(bb)), cp);
  auto layer4 = tensor(tensor(tensor(tensor(id, d), ots_identity(bb)), d), id);
  auto layer5 = tensor(tensor(tensor(id, cap), cap), id);
  return compose(compose(compose(compose(layer1, layer2), layer3), layer4), layer5);
}

/// Stateless body of the latch: (p1, p2, s, r) -> (o1, o2, o1, o2) with
/// o1 = NOR(s, p2) and o2 = NOR(p1, r).
inline OTS latch_body() {
  Object b{bool_alphabet()};
  auto id = ots_identity(b);
  auto sw = ots_from_span(Span::swap(b, b));
  auto mid = tensor(tensor(id, sw), id);
  auto shuffle = compose(compose(mid, tensor(sw, ots_identity(Object{bool_alphabet(), bool_alphabet()}))), mid);
  auto gates = tensor(nor_gate(), nor_gate());
  auto copies = tensor(ots_from_span(Span::copy(b)), ots_from_span(Span::copy(b)));
  return compose(compose(compose(shuffle, gates), copies), mid);
}

/// Vertices reachable from start using edges whose left label passes the
/// filter, within max_steps steps, with the first step at which each is reached.
inline std::vector<std::pair<std::size_t, std::size_t>> reachable(const OTS& x, std::size_t start,
                                                                  const std::vector<std::size_t>& filter,
                                                                  std::size_t max_steps) {
  const std::size_t nv = x.vertices().size();
  if (start >= nv) throw VertexOutOfRange("vertex " + std::to_string(start) + " out of range");
  for (auto f : filter)
    if (f >= x.dom().size()) throw SymbolOutOfAlphabet("input " + std::to_string(f) + " outside the left boundary");
  std::vector<bool> allowed(x.dom().size(), filter.empty());
  for (auto f : filter) allowed[f] = true;
  const std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> step(nv, unseen);
  std::vector<std::vector<std::size_t>> out(nv);
  for (std::size_t e = 0; e < x.edges().size(); ++e)
    if (allowed[x.left()(e)]) out[x.graph().src()(e)].push_back(x.graph().tgt()(e));
  std::deque<std::size_t> queue{start};
  step[start] = 0;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    if (step[v] == max_steps) continue;
    for (auto w : out[v])
      if (step[w] == unseen) {
        step[w] = step[v] + 1;
        queue.push_back(w);
      }
  }
  std::vector<std::pair<std::size_t, std::size_t>> result;
  for (std::size_t v = 0; v < nv; ++v)
    if (step[v] != unseen) result.emplace_back(v, step[v]);
  return result;
}

/// Targets of edges leaving v whose left label passes the filter.
inline std::vector<std::size_t> successors(const OTS& x, std::size_t v, const std::vector<std::size_t>& filter) {
  if (v >= x.vertices().size()) throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < x.edges().size(); ++e) {
    if (x.graph().src()(e) != v) continue;
    if (!filter.empty() && std::find(filter.begin(), filter.end(), x.left()(e)) == filter.end()) continue;
    out.push_back(x.graph().tgt()(e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace otsalg
