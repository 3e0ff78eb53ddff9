#pragma once

// Seeded random generators for objects, morphisms and systems.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "otsalg/automata.hpp"
#include "otsalg/cospangraph.hpp"
#include "otsalg/cospans.hpp"
#include "otsalg/spangraph.hpp"
#include "otsalg/spans.hpp"

namespace otsalg {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Fixed alphabets of sizes 1, 2 and 3, so that equal names always mean equal alphabets.
inline const std::vector<Alphabet>& alphabet_pool() {
  static const std::vector<Alphabet> pool{Alphabet("U", {"u"}), bool_alphabet(), Alphabet("T", {"t0", "t1", "t2"})};
  return pool;
}

inline Alphabet random_alphabet(Rng& rng, std::size_t max_size = 3) {
  return alphabet_pool()[uniform(rng, 0, std::min<std::size_t>(max_size, 3) - 1)];
}

inline Object random_object(Rng& rng, std::size_t max_factors = 2, std::size_t max_size = 3) {
  std::vector<Alphabet> f;
  std::size_t n = uniform(rng, 0, max_factors);
  for (std::size_t i = 0; i < n; ++i) f.push_back(random_alphabet(rng, max_size));
  return Object(std::move(f));
}

inline FinFunction random_function(Rng& rng, const Object& dom, const Object& cod) {
  if (cod.size() == 0 && dom.size() != 0) throw InvalidArgument("no function into the empty set");
  std::vector<std::size_t> t(dom.size());
  for (auto& v : t) v = uniform(rng, 0, cod.size() - 1);
  return FinFunction(dom, cod, std::move(t));
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Span random_span(Rng& rng, const Object& dom, const Object& cod, std::size_t max_head = 4) {
  auto head = indexed_object("E", uniform(rng, 0, max_head));
  return Span(random_function(rng, head, dom), random_function(rng, head, cod));
}

inline Cospan random_cospan(Rng& rng, const Object& dom, const Object& cod, std::size_t max_apex = 4) {
  auto sd = sum_object(dom), sc = sum_object(cod);
  std::size_t lo = (sd.size() + sc.size()) == 0 ? 0 : 1;
  auto apex = indexed_object("Q", uniform(rng, lo, std::max(lo, max_apex)), "q");
  return Cospan(dom, cod, random_function(rng, sd, apex), random_function(rng, sc, apex));
}

inline OTS random_ots(Rng& rng, const Object& dom, const Object& cod, std::size_t max_vertices = 3,
                      std::size_t max_edges = 4) {
  auto v = indexed_object("V", uniform(rng, 1, max_vertices), "v");
  auto e = indexed_object("E", uniform(rng, 0, max_edges));
  return OTS(FinGraph(random_function(rng, e, v), random_function(rng, e, v)), random_function(rng, e, dom),
             random_function(rng, e, cod));
}

inline AutStateSpace random_space(Rng& rng, const Object& states) {
  std::vector<std::size_t> finals;
  for (std::size_t s = 0; s < states.size(); ++s)
    if (uniform(rng, 0, 1)) finals.push_back(s);
  return AutStateSpace::make(states, uniform(rng, 0, states.size() - 1), finals);
}

inline MealyAutomaton random_mealy(Rng& rng, const Object& a, const Object& b, std::size_t max_states = 3) {
  auto s = indexed_object("S", uniform(rng, 1, max_states), "s");
  return MealyAutomaton(random_space(rng, s), a, b, random_function(rng, tensor(s, a), tensor(s, b)));
}

inline SpanAutomaton random_span_automaton(Rng& rng, const Object& a, const Object& b, std::size_t max_states = 3,
                                           std::size_t max_edges = 4) {
  auto x = random_ots(rng, a, b, max_states, max_edges);
  return SpanAutomaton(random_space(rng, x.vertices()), x);
}

inline GraphWithBoundaries random_marked_graph(Rng& rng, const Object& dom, const Object& cod,
                                               std::size_t max_vertices = 3, std::size_t max_edges = 3) {
  auto v = indexed_object("V", uniform(rng, 1, max_vertices), "v");
  auto e = indexed_object("E", uniform(rng, 0, max_edges));
  return GraphWithBoundaries(dom, cod, FinGraph(random_function(rng, e, v), random_function(rng, e, v)),
                             random_function(rng, sum_object(dom), v), random_function(rng, sum_object(cod), v));
}

/// Applies a random relabelling to every vertex and edge index of a system.
inline OTS shuffled(Rng& rng, const OTS& x) {
  auto pv = random_permutation(rng, x.vertices().size());
  auto pe = random_permutation(rng, x.edges().size());
  auto inv = invert_permutation(pe);
  std::vector<std::size_t> s(pe.size()), t(pe.size()), l(pe.size()), r(pe.size());
  for (std::size_t e = 0; e < pe.size(); ++e) {
    std::size_t old = inv[e];
    s[e] = pv[x.graph().src()(old)];
    t[e] = pv[x.graph().tgt()(old)];
    l[e] = x.left()(old);
    r[e] = x.right()(old);
  }
  const auto& E = x.edges();
  const auto& V = x.vertices();
  return OTS(FinGraph(FinFunction(E, V, s), FinFunction(E, V, t)), FinFunction(E, x.dom(), l),
             FinFunction(E, x.cod(), r));
}

}  // namespace otsalg
