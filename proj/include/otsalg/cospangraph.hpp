#pragma once

// Graphs with boundary marks, composed by gluing marked vertices. They
// correspond to stateful cospans: edges are states and vertices are the apex.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "otsalg/cospans.hpp"
#include "otsalg/feedback.hpp"
#include "otsalg/graphs.hpp"

namespace otsalg {

class GraphWithBoundaries {
 public:
  GraphWithBoundaries() = default;
  GraphWithBoundaries(Object dom, Object cod, FinGraph graph, FinFunction left_mark, FinFunction right_mark)
      : dom_(std::move(dom)),
        cod_(std::move(cod)),
        graph_(std::move(graph)),
        left_mark_(std::move(left_mark)),
        right_mark_(std::move(right_mark)) {
    if (!(left_mark_.cod() == graph_.vertices()) || !(right_mark_.cod() == graph_.vertices()))
      throw InvalidArgument("marks must land in the vertex set");
    if (left_mark_.dom().size() != sum_object(dom_).size() || right_mark_.dom().size() != sum_object(cod_).size())
      throw InvalidArgument("marks do not match the boundary sizes");
  }

  const Object& dom() const { return dom_; }
  const Object& cod() const { return cod_; }
  const FinGraph& graph() const { return graph_; }
  const FinFunction& left_mark() const { return left_mark_; }
  const FinFunction& right_mark() const { return right_mark_; }

 private:
  Object dom_;
  Object cod_;
  FinGraph graph_;
  FinFunction left_mark_;
  FinFunction right_mark_;
};

using CospanStateful = StatefulMorphism<CospanInstance>;

namespace detail {

inline FinFunction joined(const FinFunction& a, const FinFunction& b, const Object& dom, const Object& cod,
                          std::size_t offset) {
  std::vector<std::size_t> t = a.table();
  for (auto v : b.table()) t.push_back(v + offset);
  return FinFunction(dom, cod, std::move(t));
}

}  // namespace detail

/// Glue the right marks of x to the left marks of y; edges are the disjoint union.
inline GraphWithBoundaries compose(const GraphWithBoundaries& x, const GraphWithBoundaries& y) {
  if (!(x.cod() == y.dom()))
    throw BoundaryMismatch("graph boundary " + x.cod().describe() + " does not meet " + y.dom().describe());
  auto po = pushout(x.right_mark(), y.left_mark());
  auto edges = coproduct(x.graph().edges(), y.graph().edges()).sum;
  auto ends = [&](const FinFunction& a, const FinFunction& b) {
    std::vector<std::size_t> t;
    for (auto v : a.table()) t.push_back(po.q1(v));
    for (auto v : b.table()) t.push_back(po.q2(v));
    return FinFunction(edges, po.apex, std::move(t));
  };
  FinGraph g(ends(x.graph().src(), y.graph().src()), ends(x.graph().tgt(), y.graph().tgt()));
  return GraphWithBoundaries(x.dom(), y.cod(), g, compose(x.left_mark(), po.q1), compose(y.right_mark(), po.q2));
}

inline GraphWithBoundaries tensor(const GraphWithBoundaries& x, const GraphWithBoundaries& y) {
  auto v = coproduct(x.graph().vertices(), y.graph().vertices()).sum;
  auto e = coproduct(x.graph().edges(), y.graph().edges()).sum;
  const std::size_t nv = x.graph().vertex_count();
  auto dom = tensor(x.dom(), y.dom()), cod = tensor(x.cod(), y.cod());
  FinGraph g(detail::joined(x.graph().src(), y.graph().src(), e, v, nv),
             detail::joined(x.graph().tgt(), y.graph().tgt(), e, v, nv));
  return GraphWithBoundaries(dom, cod, g, detail::joined(x.left_mark(), y.left_mark(), sum_object(dom), v, nv),
                             detail::joined(x.right_mark(), y.right_mark(), sum_object(cod), v, nv));
}

/// A cospan as a graph without edges.
inline GraphWithBoundaries cg_from_cospan(const Cospan& c) {
  return GraphWithBoundaries(c.dom(), c.cod(), discrete_graph(c.apex()), c.left(), c.right());
}

inline GraphWithBoundaries cg_identity(const Object& a) { return cg_from_cospan(Cospan::identity(a)); }

/// Edges are the state elements, vertices the apex; targets come from the
/// left leg and sources from the right leg.
inline GraphWithBoundaries k_cospan(const CospanStateful& m) {
  auto mg = CospanInstance::marked_graph(m.state(), m.morph());
  return GraphWithBoundaries(m.dom(), m.cod(), mg.graph, mg.left_mark, mg.right_mark);
}

inline CospanStateful k_cospan_backward(const GraphWithBoundaries& x) {
  const auto& g = x.graph();
  auto state = as_set(g.edges());
  auto dom = tensor(state, x.dom()), cod = tensor(state, x.cod());
  std::vector<std::size_t> l = g.tgt().table(), r = g.src().table();
  l.insert(l.end(), x.left_mark().table().begin(), x.left_mark().table().end());
  r.insert(r.end(), x.right_mark().table().begin(), x.right_mark().table().end());
  Cospan c(dom, cod, FinFunction(sum_object(dom), g.vertices(), std::move(l)),
           FinFunction(sum_object(cod), g.vertices(), std::move(r)));
  return CospanStateful(state, std::move(c));
}

inline std::optional<GraphIso> cg_iso(const GraphWithBoundaries& x, const GraphWithBoundaries& y) {
  if (!(x.dom() == y.dom()) || !(x.cod() == y.cod()))
    throw BoundaryMismatch("comparing graphs " + x.dom().describe() + " -> " + x.cod().describe() + " and " +
                           y.dom().describe() + " -> " + y.cod().describe());
  IsoConstraints c;
  c.vertex_marks = {{x.left_mark(), y.left_mark()}, {x.right_mark(), y.right_mark()}};
  return graph_iso(x.graph(), y.graph(), c);
}

inline bool cg_equal(const GraphWithBoundaries& x, const GraphWithBoundaries& y) { return cg_iso(x, y).has_value(); }

/// Feedback over s: one new edge from each right mark of s to the matching left mark.
inline GraphWithBoundaries cg_fbk(const Object& s, const GraphWithBoundaries& x) {
  return k_cospan(store<CospanInstance>(s, k_cospan_backward(x)));
}

/// Trace over s: the marks of s on both sides are glued together.
inline GraphWithBoundaries cg_trace(const Object& s, const GraphWithBoundaries& x) {
  auto a = strip_prefix(x.dom(), s);
  auto b = strip_prefix(x.cod(), s);
  if (!a || !b) throw FactorizationMismatch("trace over " + s.describe() + " of " + x.dom().describe());
  auto open = tensor(cg_from_cospan(Cospan::cup(s)), cg_identity(*a));
  auto body = tensor(cg_identity(s), x);
  auto close = tensor(cg_from_cospan(Cospan::cap(s)), cg_identity(*b));
  return compose(compose(open, body), close);
}

/// One edge between two vertices; the left mark is its source, the right mark its target.
inline GraphWithBoundaries edge_generator(const Object& one = Object{point_alphabet()}) {
  if (sum_object(one).size() != 1) throw InvalidArgument("the edge generator lives on a one-point boundary");
  auto v = indexed_object("V", 2, "v");
  auto e = indexed_object("E", 1, "e");
  FinGraph g(FinFunction(e, v, {0}), FinFunction(e, v, {1}));
  return GraphWithBoundaries(one, one, g, FinFunction(sum_object(one), v, {0}),
                             FinFunction(sum_object(one), v, {1}));
}

/// Graph cospans as a symmetric monoidal instance, equality up to marked isomorphism.
struct GraphCospanInstance {
  using object = Object;
  using morphism = GraphWithBoundaries;
  static constexpr const char* name = "graph-cospan";

  static Object unit() { return Object::unit(); }
  static const Object& dom(const GraphWithBoundaries& f) { return f.dom(); }
  static const Object& cod(const GraphWithBoundaries& f) { return f.cod(); }
  static GraphWithBoundaries compose(const GraphWithBoundaries& f, const GraphWithBoundaries& g) {
    return otsalg::compose(f, g);
  }
  static GraphWithBoundaries tensor(const GraphWithBoundaries& f, const GraphWithBoundaries& g) {
    return otsalg::tensor(f, g);
  }
  static GraphWithBoundaries identity(const Object& a) { return cg_identity(a); }
  static GraphWithBoundaries swap(const Object& a, const Object& b) { return cg_from_cospan(Cospan::swap(a, b)); }
  static bool equal(const GraphWithBoundaries& f, const GraphWithBoundaries& g) { return cg_equal(f, g); }
  static Object tensor_objects(const Object& a, const Object& b) { return otsalg::tensor(a, b); }
  static std::optional<Object> strip_prefix(const Object& w, const Object& p) { return otsalg::strip_prefix(w, p); }
  static std::string describe(const Object& a) { return a.describe(); }

  static GraphWithBoundaries cup(const Object& a) { return cg_from_cospan(Cospan::cup(a)); }
  static GraphWithBoundaries cap(const Object& a) { return cg_from_cospan(Cospan::cap(a)); }
  static GraphWithBoundaries copy(const Object& a) { return cg_from_cospan(Cospan::copy(a)); }
  static GraphWithBoundaries cocopy(const Object& a) { return cg_from_cospan(Cospan::cocopy(a)); }
  static GraphWithBoundaries discard(const Object& a) { return cg_from_cospan(Cospan::discard(a)); }
  static GraphWithBoundaries codiscard(const Object& a) { return cg_from_cospan(Cospan::codiscard(a)); }
};

}  // namespace otsalg
