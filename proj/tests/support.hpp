#pragma once

// Independent oracles and fixtures shared by the test binaries.

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "otsalg/otsalg.hpp"

namespace oracle {

using namespace otsalg;

#ifdef OTSALG_SAMPLES
inline std::string sample_path(const std::string& name) { return std::string(OTSALG_SAMPLES) + "/" + name; }

inline std::string read_sample(const std::string& name) {
  std::ifstream in(sample_path(name));
  if (!in) throw std::runtime_error("missing sample " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
#endif

/// All (x, y) with f(x) = g(y), by enumeration.
inline std::vector<std::pair<std::size_t, std::size_t>> pullback_pairs(const FinFunction& f, const FinFunction& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < f.dom().size(); ++x)
    for (std::size_t y = 0; y < g.dom().size(); ++y)
      if (f(x) == g(y)) out.emplace_back(x, y);
  return out;
}

/// Pushout classes of X + Y: connected components of the graph with an
/// edge f(z) -- g(z) for each z, labelled by their smallest member.
inline std::vector<std::size_t> pushout_labels(const FinFunction& f, const FinFunction& g) {
  const std::size_t nx = f.cod().size(), n = nx + g.cod().size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t z = 0; z < f.dom().size(); ++z) {
    adj[f(z)].push_back(nx + g(z));
    adj[nx + g(z)].push_back(f(z));
  }
  const std::size_t none = n;
  std::vector<std::size_t> label(n, none);
  for (std::size_t root = 0; root < n; ++root) {
    if (label[root] != none) continue;
    std::vector<std::size_t> stack{root};
    label[root] = root;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (label[w] == none) {
          label[w] = root;
          stack.push_back(w);
        }
    }
  }
  return label;
}

inline std::size_t class_count(const std::vector<std::size_t>& labels) {
  return std::set<std::size_t>(labels.begin(), labels.end()).size();
}

/// Relation of a span as a sorted multiset of (left, right) pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> relation(const Span& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t e = 0; e < s.head().size(); ++e) out.emplace_back(s.left()(e), s.right()(e));
  std::sort(out.begin(), out.end());
  return out;
}

/// Relational composite with multiplicities: one pair per matching head pair.
inline std::vector<std::pair<std::size_t, std::size_t>> composite_relation(const Span& f, const Span& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t e = 0; e < f.head().size(); ++e)
    for (std::size_t e2 = 0; e2 < g.head().size(); ++e2)
      if (f.right()(e) == g.left()(e2)) out.emplace_back(f.left()(e), g.right()(e2));
  std::sort(out.begin(), out.end());
  return out;
}

inline int nor(int a, int b) { return (a == 0 && b == 0) ? 1 : 0; }

/// Edges (src, tgt, input, output) of the stored latch over states (d1, d2):
/// the next state is (nor(s, d2), nor(d1, r)) and the output equals it.
inline std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> latch_edges() {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> out;
  for (int d1 = 0; d1 < 2; ++d1)
    for (int d2 = 0; d2 < 2; ++d2)
      for (int s = 0; s < 2; ++s)
        for (int r = 0; r < 2; ++r) {
          std::size_t next = std::size_t(nor(s, d2) * 2 + nor(d1, r));
          out.emplace_back(std::size_t(d1 * 2 + d2), next, std::size_t(s * 2 + r), next);
        }
  std::sort(out.begin(), out.end());
  return out;
}

/// Input/output pairs (s, r) -> (o1, o2) at which the latch body is at equilibrium.
inline std::vector<std::pair<std::size_t, std::size_t>> latch_equilibria() {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (int o1 = 0; o1 < 2; ++o1)
    for (int o2 = 0; o2 < 2; ++o2)
      for (int s = 0; s < 2; ++s)
        for (int r = 0; r < 2; ++r)
          if (nor(s, o2) == o1 && nor(o1, r) == o2) out.emplace_back(std::size_t(s * 2 + r), std::size_t(o1 * 2 + o2));
  std::sort(out.begin(), out.end());
  return out;
}

/// The latch as an explicit system on B ⊗ B built from latch_edges().
inline OTS latch_system() {
  Object b{bool_alphabet()};
  Object bb{bool_alphabet(), bool_alphabet()};
  auto edges = latch_edges();
  auto e = indexed_object("E", edges.size());
  std::vector<std::size_t> s, t, l, r;
  for (auto [a, c, i, o] : edges) {
    s.push_back(a);
    t.push_back(c);
    l.push_back(i);
    r.push_back(o);
  }
  return OTS(FinGraph(FinFunction(e, bb, s), FinFunction(e, bb, t)), FinFunction(e, bb, l), FinFunction(e, bb, r));
}

/// [[A, 0, B], [B'C, A', B'D], [D'C, C', D'D]] for x = [[A, B], [C, D]] with state k1
/// and y = [[A', B'], [C', D']] with state k2.
inline Matrix series(const MatStateful& x, const MatStateful& y) {
  const std::size_t k1 = x.state(), k2 = y.state();
  const std::size_t n = x.dom(), m = x.cod(), p = y.cod();
  const Matrix& f = x.morph();
  const Matrix& g = y.morph();
  Matrix out(k1 + k2 + p, k1 + k2 + n);
  auto get = [](const Matrix& M, std::size_t r, std::size_t c) { return M(r, c); };
  for (std::size_t r = 0; r < k1; ++r) {
    for (std::size_t c = 0; c < k1; ++c) out(r, c) = get(f, r, c);
    for (std::size_t c = 0; c < n; ++c) out(r, k1 + k2 + c) = get(f, r, k1 + c);
  }
  // Rows of y applied to the stacked vector (t, C s + D a).
  for (std::size_t r = 0; r < k2 + p; ++r) {
    for (std::size_t c = 0; c < k2; ++c) out(k1 + r, k1 + c) = get(g, r, c);
    for (std::size_t j = 0; j < m; ++j) {
      Rational w = get(g, r, k2 + j);
      if (w == 0) continue;
      for (std::size_t c = 0; c < k1; ++c) out(k1 + r, c) += w * get(f, k1 + j, c);
      for (std::size_t c = 0; c < n; ++c) out(k1 + r, k1 + k2 + c) += w * get(f, k1 + j, k1 + c);
    }
  }
  return out;
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(std::int64_t(uniform(rng, 0, 6)) - 3, std::int64_t(uniform(rng, 1, 3)));
  return m;
}

// ---------------------------------------------------------------------------
// Fixtures.

/// alpha : W -> V and h : V -> W ⊗ B with W = {w}, V = {v1, v2},
/// alpha(w) = v1, h(v1) = (w, 0), h(v2) = (w, 1).
struct Sliding {
  Alphabet w{"W", {"w"}};
  Alphabet v{"V", {"v1", "v2"}};
  Object W{w};
  Object V{v};
  Object B{bool_alphabet()};
  Span alpha = Span::lift(FinFunction(W, V, {0}));
  Span h = Span::lift(FinFunction(V, tensor(W, B), {0, 1}));

  /// alpha slid out of the loop: state W.
  OTS f() const { return k_forward(store<SpanInstance>(W, st_lift<SpanInstance>(compose(alpha, h)))); }
  /// alpha inside the loop: state V.
  OTS g() const {
    return k_forward(store<SpanInstance>(V, st_lift<SpanInstance>(compose(h, tensor(alpha, Span::identity(B))))));
  }
};

/// The three-state automaton over {a, b} with a unique final state 2. The
/// prose transition table and the listed edge set disagree; both are kept.
struct ThreeState {
  Object S = set_object("S", {"0", "1", "2"});
  Object A = set_object("A", {"a", "b"});
  Object One{point_alphabet()};
  AutStateSpace space = AutStateSpace::make(S, 0, {2});

  // t(s, a) indexed by s * 2 + a.
  std::vector<std::size_t> prose{1, 2, 2, 1, 1, 1};
  std::vector<std::size_t> listed{1, 0, 1, 2, 1, 0};

  MealyAutomaton machine(const std::vector<std::size_t>& t) const {
    return MealyAutomaton(space, A, One, FinFunction(tensor(S, A), tensor(S, One), t));
  }
};

// ---------------------------------------------------------------------------
// Random terms.

/// Untyped terms over a small vocabulary, for printer round trips.
inline dsl::Term random_term(Rng& rng, std::size_t depth) {
  using dsl::Term;
  using dsl::TermKind;
  static const std::vector<std::string> names{"B", "T", "U", "Bit'", "x_1"};
  auto obj = [&]() {
    dsl::ObjectExpr o;
    std::size_t n = uniform(rng, 0, 3);
    for (std::size_t i = 0; i < n; ++i) o.push_back(names[uniform(rng, 0, names.size() - 1)]);
    return o;
  };
  std::size_t pick = uniform(rng, 0, depth == 0 ? 9 : 15);
  switch (pick) {
    case 0: return Term::constant(TermKind::Id, {obj()});
    case 1: return Term::constant(TermKind::Swap, {obj(), obj()});
    case 2: return Term::constant(TermKind::Delay, {obj()});
    case 3: return Term::constant(TermKind::Copy, {obj()});
    case 4: return Term::constant(TermKind::Cocopy, {obj()});
    case 5: return Term::constant(TermKind::Discard, {obj()});
    case 6: return Term::constant(TermKind::Codiscard, {obj()});
    case 7: return Term::constant(pick % 2 ? TermKind::Cup : TermKind::Cap, {obj()});
    case 8: return Term::gen("nor");
    case 9: {
      std::vector<dsl::ObjectExpr> args;
      std::size_t n = uniform(rng, 1, 2);
      for (std::size_t i = 0; i < n; ++i) args.push_back(obj());
      return Term::gen("g" + std::to_string(uniform(rng, 0, 9)), args);
    }
    case 10:
    case 11: return Term::seq(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 12:
    case 13: return Term::par(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 14: return Term::fbk(obj(), random_term(rng, depth - 1));
    default: return Term::tr(obj(), random_term(rng, depth - 1));
  }
}

struct TypedSample {
  dsl::Term term;
  dsl::ObjectExpr cod;
};

/// Options for well-typed random terms.
struct TermShape {
  bool trace = true;       // allow tr
  bool frobenius = true;   // allow ccp, cds, cup, cap
  std::size_t max_wires = 3;
};

/// A well-typed term from dom over alphabets B and T, with its codomain.
inline TypedSample random_typed_term(Rng& rng, const dsl::ObjectExpr& dom, std::size_t depth, const TermShape& shape) {
  using dsl::Term;
  using dsl::TermKind;
  auto atom = [&]() { return dsl::ObjectExpr{uniform(rng, 0, 2) ? "B" : "T"}; };
  auto cat = [](dsl::ObjectExpr a, const dsl::ObjectExpr& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto split = [&](const dsl::ObjectExpr& o) {
    std::size_t k = uniform(rng, 0, o.size());
    return std::pair{dsl::ObjectExpr(o.begin(), o.begin() + k), dsl::ObjectExpr(o.begin() + k, o.end())};
  };
  std::vector<int> options{0, 1};
  if (dom.size() >= 2) options.push_back(2);
  if (dom.size() <= 1) options.push_back(3);
  if (!dom.empty()) options.push_back(4);
  if (dom == dsl::ObjectExpr{"B", "B"}) options.push_back(5);
  if (shape.frobenius && dom.size() == 2 && dom[0] == dom[1]) options.push_back(6);
  if (shape.frobenius && dom.size() + 1 <= shape.max_wires) options.push_back(7);
  if (depth > 0) {
    for (int k : {8, 8, 9, 9, 10, 10}) options.push_back(k);
    if (shape.trace) options.push_back(11);
  }
  switch (options[uniform(rng, 0, options.size() - 1)]) {
    case 0: return {Term::constant(TermKind::Id, {dom}), dom};
    case 1: return {Term::constant(TermKind::Delay, {dom}), dom};
    case 2: {
      auto [a, b] = split(dom);
      return {Term::constant(TermKind::Swap, {a, b}), cat(b, a)};
    }
    case 3: return {Term::constant(TermKind::Copy, {dom}), cat(dom, dom)};
    case 4: return {Term::constant(TermKind::Discard, {dom}), {}};
    case 5: return {Term::gen("nor"), {"B"}};
    case 6: return {Term::constant(TermKind::Cocopy, {{dom[0]}}), {dom[0]}};
    case 7: {
      auto a = atom();
      if (uniform(rng, 0, 1) || dom.size() + 2 > shape.max_wires)
        return {Term::par(Term::constant(TermKind::Codiscard, {a}), Term::constant(TermKind::Id, {dom})),
                cat(a, dom)};
      auto t = Term::par(Term::constant(TermKind::Cup, {a}), Term::constant(TermKind::Id, {dom}));
      return {t, cat(cat(a, a), dom)};
    }
    case 8: {
      auto l = random_typed_term(rng, dom, depth - 1, shape);
      if (l.cod.size() > shape.max_wires) return l;
      auto r = random_typed_term(rng, l.cod, depth - 1, shape);
      return {Term::seq(std::move(l.term), std::move(r.term)), r.cod};
    }
    case 9: {
      auto [a, b] = split(dom);
      auto l = random_typed_term(rng, a, depth - 1, shape);
      auto r = random_typed_term(rng, b, depth - 1, shape);
      return {Term::par(std::move(l.term), std::move(r.term)), cat(l.cod, r.cod)};
    }
    default: {
      // fbk[S](sw[S, D] ; (t * id[S]) ; sw[C, S]) or fbk[S](id[S] * t), likewise for tr.
      auto s = atom();
      auto inner = random_typed_term(rng, dom, depth - 1, shape);
      Term body = uniform(rng, 0, 1)
                      ? Term::seq(Term::seq(Term::constant(TermKind::Swap, {s, dom}),
                                            Term::par(std::move(inner.term), Term::constant(TermKind::Id, {s}))),
                                  Term::constant(TermKind::Swap, {inner.cod, s}))
                      : Term::par(Term::constant(TermKind::Id, {s}), std::move(inner.term));
      bool tr = shape.trace && uniform(rng, 0, 2) == 0;
      return {tr ? Term::tr(s, std::move(body)) : Term::fbk(s, std::move(body)), inner.cod};
    }
  }
}

inline dsl::Environment bt_environment() {
  return dsl::environment(dsl::parse("alphabet B = {0, 1}\nalphabet T = {t0, t1, t2}\nid[B]"));
}

/// The system of a term built directly from systems, composing by pullback of graphs.
inline OTS direct_system(const dsl::TypedTerm& t) {
  using dsl::TermKind;
  const auto& o = t.objects;
  switch (t.kind) {
    case TermKind::Seq: return compose(direct_system(t.children[0]), direct_system(t.children[1]));
    case TermKind::Par: return tensor(direct_system(t.children[0]), direct_system(t.children[1]));
    case TermKind::Fbk: return ots_fbk(o[0], direct_system(t.children[0]));
    case TermKind::Tr: return ots_trace(o[0], direct_system(t.children[0]));
    case TermKind::Id: return ots_identity(o[0]);
    case TermKind::Swap: return ots_from_span(Span::swap(o[0], o[1]));
    case TermKind::Delay: return ots_delay(o[0]);
    case TermKind::Copy: return ots_from_span(Span::copy(o[0]));
    case TermKind::Cocopy: return ots_from_span(Span::cocopy(o[0]));
    case TermKind::Discard: return ots_from_span(Span::discard(o[0]));
    case TermKind::Codiscard: return ots_from_span(Span::codiscard(o[0]));
    case TermKind::Cup: return ots_from_span(Span::cup(o[0]));
    case TermKind::Cap: return ots_from_span(Span::cap(o[0]));
    case TermKind::Gen: return nor_gate(o[0].factors()[0]);
  }
  return {};
}

}  // namespace oracle
