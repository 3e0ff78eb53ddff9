#pragma once

// Finite directed multigraphs, their limits, and isomorphism search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "otsalg/kernel.hpp"

namespace otsalg {

/// A graph E ⇉ V given by source and target maps.
class FinGraph {
 public:
  FinGraph() = default;
  FinGraph(FinFunction src, FinFunction tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {
    if (!(src_.dom() == tgt_.dom()) || !(src_.cod() == tgt_.cod()))
      throw InvalidArgument("source and target maps must agree on edges and vertices");
  }

  const Object& edges() const { return src_.dom(); }
  const Object& vertices() const { return src_.cod(); }
  const FinFunction& src() const { return src_; }
  const FinFunction& tgt() const { return tgt_; }
  std::size_t edge_count() const { return edges().size(); }
  std::size_t vertex_count() const { return vertices().size(); }

 private:
  FinFunction src_;
  FinFunction tgt_;
};

/// Graph homomorphism: edge and vertex maps commuting with source and target.
struct GraphHom {
  FinGraph from;
  FinGraph to;
  FinFunction edge_map;
  FinFunction vertex_map;

  GraphHom(FinGraph f, FinGraph t, FinFunction e, FinFunction v)
      : from(std::move(f)), to(std::move(t)), edge_map(std::move(e)), vertex_map(std::move(v)) {
    for (std::size_t x = 0; x < from.edge_count(); ++x) {
      if (vertex_map(from.src()(x)) != to.src()(edge_map(x)) || vertex_map(from.tgt()(x)) != to.tgt()(edge_map(x)))
        throw InvalidArgument("edge and vertex maps do not commute with source and target");
    }
  }
};

inline FinGraph graph_product(const FinGraph& g, const FinGraph& h) {
  return FinGraph(tensor(g.src(), h.src()), tensor(g.tgt(), h.tgt()));
}

struct GraphPullback {
  FinGraph graph;
  FinFunction edge_p1, edge_p2, vertex_p1, vertex_p2;
};

/// Pullback of two homomorphisms into a common graph, computed on edges and vertices.
inline GraphPullback graph_pullback(const GraphHom& f, const GraphHom& g) {
  auto pe = pullback(f.edge_map, g.edge_map);
  auto pv = pullback(f.vertex_map, g.vertex_map);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> vindex;
  for (std::size_t i = 0; i < pv.head.size(); ++i) vindex[{pv.p1(i), pv.p2(i)}] = i;
  std::vector<std::size_t> s(pe.head.size()), t(pe.head.size());
  for (std::size_t i = 0; i < pe.head.size(); ++i) {
    s[i] = vindex.at({f.from.src()(pe.p1(i)), g.from.src()(pe.p2(i))});
    t[i] = vindex.at({f.from.tgt()(pe.p1(i)), g.from.tgt()(pe.p2(i))});
  }
  FinGraph graph(FinFunction(pe.head, pv.head, std::move(s)), FinFunction(pe.head, pv.head, std::move(t)));
  return {graph, pe.p1, pe.p2, pv.p1, pv.p2};
}

/// Discrete graph on the given vertex set.
inline FinGraph discrete_graph(const Object& vertices) {
  return FinGraph(initial_map(empty_object(), vertices), initial_map(empty_object(), vertices));
}

/// The graph with one vertex per boundary element and no edges.
inline FinGraph boundary_graph(const Object& a) { return discrete_graph(a); }

/// Extra structure an isomorphism must respect.
struct IsoConstraints {
  /// Edge labellings E_G -> L and E_H -> L that must commute with the edge bijection.
  std::vector<std::pair<FinFunction, FinFunction>> edge_legs;
  /// Vertex labellings V_G -> L and V_H -> L that must commute with the vertex bijection.
  std::vector<std::pair<FinFunction, FinFunction>> vertex_legs;
  /// Marks X -> V_G and X -> V_H: the vertex bijection must send one to the other.
  std::vector<std::pair<FinFunction, FinFunction>> vertex_marks;
  /// Plain colourings of V_G and V_H, compared for equality.
  std::vector<std::size_t> vertex_colors_g;
  std::vector<std::size_t> vertex_colors_h;
};

struct GraphIso {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;
};

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const FinGraph& g, const FinGraph& h, const IsoConstraints& c) : g_(g), h_(h) {
    feasible_ = g.vertex_count() == h.vertex_count() && g.edge_count() == h.edge_count();
    if (!feasible_) return;
    n_ = g.vertex_count();
    label_edges(c);
    if (!feasible_) return;
    color_vertices(c);
    if (!feasible_) return;
    build_adjacency();
    refine();
  }

  void run(const std::function<bool(const GraphIso&)>& visit) {
    if (!feasible_) return;
    map_.assign(n_, kNone);
    used_.assign(n_, false);
    order_.clear();
    for (std::size_t v = 0; v < n_; ++v)
      if (forced_[v] != kNone) order_.push_back(v);
    for (std::size_t v = 0; v < n_; ++v)
      if (forced_[v] == kNone) order_.push_back(v);
    stop_ = false;
    visit_ = &visit;
    extend(0);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void label_edges(const IsoConstraints& c) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::vector<std::size_t>> kg(g_.edge_count()), kh(h_.edge_count());
    for (const auto& [a, b] : c.edge_legs) {
      if (a.dom().size() != g_.edge_count() || b.dom().size() != h_.edge_count())
        throw InvalidArgument("edge labelling does not match the edge set");
      if (a.cod().size() != b.cod().size()) throw BoundaryMismatch("edge labellings have different codomains");
      for (std::size_t e = 0; e < kg.size(); ++e) kg[e].push_back(a(e));
      for (std::size_t e = 0; e < kh.size(); ++e) kh[e].push_back(b(e));
    }
    auto id = [&](const std::vector<std::size_t>& k) { return ids.emplace(k, ids.size()).first->second; };
    elab_g_.resize(kg.size());
    elab_h_.resize(kh.size());
    for (std::size_t e = 0; e < kg.size(); ++e) elab_g_[e] = id(kg[e]);
    for (std::size_t e = 0; e < kh.size(); ++e) elab_h_[e] = id(kh[e]);
  }

  void color_vertices(const IsoConstraints& c) {
    std::vector<std::vector<std::size_t>> cg(n_), ch(n_);
    if (!c.vertex_colors_g.empty() || !c.vertex_colors_h.empty()) {
      if (c.vertex_colors_g.size() != n_ || c.vertex_colors_h.size() != n_)
        throw InvalidArgument("vertex colouring does not match the vertex set");
      for (std::size_t v = 0; v < n_; ++v) {
        cg[v].push_back(c.vertex_colors_g[v]);
        ch[v].push_back(c.vertex_colors_h[v]);
      }
    }
    for (const auto& [a, b] : c.vertex_legs) {
      if (a.dom().size() != n_ || b.dom().size() != n_) throw InvalidArgument("vertex labelling does not match");
      for (std::size_t v = 0; v < n_; ++v) {
        cg[v].push_back(a(v));
        ch[v].push_back(b(v));
      }
    }
    forced_.assign(n_, kNone);
    std::vector<std::size_t> back(n_, kNone);
    std::vector<std::vector<std::size_t>> mg(n_), mh(n_);
    std::size_t mark_id = 0;
    for (const auto& [a, b] : c.vertex_marks) {
      if (a.dom().size() != b.dom().size()) throw BoundaryMismatch("vertex marks have different domains");
      if (a.cod().size() != n_ || b.cod().size() != n_) throw InvalidArgument("vertex marks do not match");
      for (std::size_t x = 0; x < a.dom().size(); ++x) {
        std::size_t u = a(x), w = b(x);
        if ((forced_[u] != kNone && forced_[u] != w) || (back[w] != kNone && back[w] != u)) {
          feasible_ = false;
          return;
        }
        forced_[u] = w;
        back[w] = u;
        mg[u].push_back((mark_id << 32) + x);
        mh[w].push_back((mark_id << 32) + x);
      }
      ++mark_id;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      std::sort(mg[v].begin(), mg[v].end());
      std::sort(mh[v].begin(), mh[v].end());
      cg[v].push_back(mg[v].size());
      ch[v].push_back(mh[v].size());
      cg[v].insert(cg[v].end(), mg[v].begin(), mg[v].end());
      ch[v].insert(ch[v].end(), mh[v].begin(), mh[v].end());
    }
    std::map<std::vector<std::size_t>, std::size_t> ids;
    color_g_.resize(n_);
    color_h_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) color_g_[v] = ids.emplace(cg[v], ids.size()).first->second;
    for (std::size_t v = 0; v < n_; ++v) color_h_[v] = ids.emplace(ch[v], ids.size()).first->second;
  }

  static std::uint64_t key(std::size_t u, std::size_t v) { return (std::uint64_t(u) << 32) | std::uint64_t(v); }

  void build_adjacency() {
    auto fill = [](const FinGraph& gr, const std::vector<std::size_t>& lab,
                   std::unordered_map<std::uint64_t, std::vector<std::size_t>>& adj) {
      for (std::size_t e = 0; e < gr.edge_count(); ++e) adj[key(gr.src()(e), gr.tgt()(e))].push_back(lab[e]);
      for (auto& [k, v] : adj) std::sort(v.begin(), v.end());
    };
    fill(g_, elab_g_, adj_g_);
    fill(h_, elab_h_, adj_h_);
  }

  // Colour refinement run on both graphs with a shared dictionary.
  void refine() {
    std::vector<std::size_t> cg = color_g_, ch = color_h_;
    std::size_t classes = 0;
    for (int round = 0; round < 64; ++round) {
      std::map<std::vector<std::size_t>, std::size_t> ids;
      auto sig = [&](const FinGraph& gr, const std::vector<std::size_t>& lab, const std::vector<std::size_t>& col,
                     std::vector<std::size_t>& out) {
        std::vector<std::vector<std::size_t>> s(n_);
        for (std::size_t v = 0; v < n_; ++v) s[v].push_back(col[v]);
        std::vector<std::vector<std::size_t>> tail(n_);
        for (std::size_t e = 0; e < gr.edge_count(); ++e) {
          std::size_t u = gr.src()(e), w = gr.tgt()(e);
          tail[u].push_back((lab[e] * 3 + (u == w ? 2 : 0)) * (n_ + 1) * 2 + col[w] * 2);
          tail[w].push_back((lab[e] * 3 + (u == w ? 2 : 1)) * (n_ + 1) * 2 + col[u] * 2 + 1);
        }
        for (std::size_t v = 0; v < n_; ++v) {
          std::sort(tail[v].begin(), tail[v].end());
          s[v].insert(s[v].end(), tail[v].begin(), tail[v].end());
        }
        out.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) out[v] = ids.emplace(s[v], ids.size()).first->second;
        (void)lab;
      };
      std::vector<std::size_t> ng, nh;
      sig(g_, elab_g_, cg, ng);
      sig(h_, elab_h_, ch, nh);
      cg = std::move(ng);
      ch = std::move(nh);
      if (ids.size() == classes) break;
      classes = ids.size();
    }
    std::vector<std::size_t> hist_g(classes + 1, 0), hist_h(classes + 1, 0);
    for (auto c : cg) ++hist_g[c];
    for (auto c : ch) ++hist_h[c];
    if (hist_g != hist_h) feasible_ = false;
    color_g_ = std::move(cg);
    color_h_ = std::move(ch);
    for (std::size_t v = 0; v < n_; ++v)
      if (forced_[v] != kNone && color_g_[v] != color_h_[forced_[v]]) feasible_ = false;
  }

  const std::vector<std::size_t>& between(const std::unordered_map<std::uint64_t, std::vector<std::size_t>>& adj,
                                          std::size_t u, std::size_t v) const {
    static const std::vector<std::size_t> none;
    auto it = adj.find(key(u, v));
    return it == adj.end() ? none : it->second;
  }

  bool consistent(std::size_t g, std::size_t h) const {
    if (between(adj_g_, g, g) != between(adj_h_, h, h)) return false;
    for (std::size_t k = 0; k < depth_; ++k) {
      std::size_t g2 = order_[k], h2 = map_[g2];
      if (between(adj_g_, g, g2) != between(adj_h_, h, h2)) return false;
      if (between(adj_g_, g2, g) != between(adj_h_, h2, h)) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (stop_) return;
    if (depth == n_) {
      finish();
      return;
    }
    std::size_t g = order_[depth];
    depth_ = depth;
    auto attempt = [&](std::size_t h) {
      if (used_[h] || color_g_[g] != color_h_[h] || !consistent(g, h)) return;
      map_[g] = h;
      used_[h] = true;
      extend(depth + 1);
      used_[h] = false;
      map_[g] = kNone;
      depth_ = depth;
    };
    if (forced_[g] != kNone) {
      attempt(forced_[g]);
      return;
    }
    for (std::size_t h = 0; h < n_ && !stop_; ++h) attempt(h);
  }

  void finish() {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::size_t>> hedges;
    for (std::size_t e = 0; e < h_.edge_count(); ++e) hedges[{h_.src()(e), h_.tgt()(e), elab_h_[e]}].push_back(e);
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> next;
    GraphIso iso{map_, std::vector<std::size_t>(g_.edge_count())};
    for (std::size_t e = 0; e < g_.edge_count(); ++e) {
      std::tuple<std::size_t, std::size_t, std::size_t> k{map_[g_.src()(e)], map_[g_.tgt()(e)], elab_g_[e]};
      iso.edge_map[e] = hedges.at(k).at(next[k]++);
    }
    if ((*visit_)(iso)) stop_ = true;
  }

  const FinGraph& g_;
  const FinGraph& h_;
  bool feasible_ = true;
  std::size_t n_ = 0;
  std::vector<std::size_t> elab_g_, elab_h_;
  std::vector<std::size_t> color_g_, color_h_;
  std::vector<std::size_t> forced_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> adj_g_, adj_h_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
  std::size_t depth_ = 0;
  bool stop_ = false;
  const std::function<bool(const GraphIso&)>* visit_ = nullptr;
};

}  // namespace detail

/// Calls visit on each isomorphism g -> h respecting the constraints, in a
/// deterministic order, until visit returns true.
inline void for_each_graph_iso(const FinGraph& g, const FinGraph& h, const IsoConstraints& c,
                               const std::function<bool(const GraphIso&)>& visit) {
  detail::IsoSearch search(g, h, c);
  search.run(visit);
}

inline std::optional<GraphIso> graph_iso(const FinGraph& g, const FinGraph& h, const IsoConstraints& c = {}) {
  std::optional<GraphIso> found;
  for_each_graph_iso(g, h, c, [&](const GraphIso& iso) {
    found = iso;
    return true;
  });
  return found;
}

}  // namespace otsalg
