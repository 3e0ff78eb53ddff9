#pragma once

// Automata as stateful morphisms whose state spaces carry an initial state
// and a set of final states.

#include <concepts>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "otsalg/feedback.hpp"
#include "otsalg/spangraph.hpp"

namespace otsalg {

/// A finite set of states with an initial state and a final-state predicate S -> 2.
struct AutStateSpace {
  Object states;
  std::size_t initial = 0;
  FinFunction finals;

  AutStateSpace() : finals(FinFunction(Object::unit(), two_object(), {1})) {}
  AutStateSpace(Object s, std::size_t i, FinFunction f) : states(std::move(s)), initial(i), finals(std::move(f)) {
    if (initial >= states.size()) throw VertexOutOfRange("initial state outside the state set");
    if (!(finals.dom() == states) || finals.cod().size() != 2)
      throw InvalidArgument("final states must be given as a map from the states to 2");
  }

  static AutStateSpace make(const Object& s, std::size_t initial, const std::vector<std::size_t>& final_states) {
    std::vector<std::size_t> t(s.size(), 0);
    for (auto f : final_states) {
      if (f >= s.size()) throw VertexOutOfRange("final state outside the state set");
      t[f] = 1;
    }
    return AutStateSpace(s, initial, FinFunction(s, two_object(), std::move(t)));
  }

  bool is_final(std::size_t s) const { return finals(s) == 1; }

  std::vector<std::size_t> final_states() const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < states.size(); ++s)
      if (is_final(s)) out.push_back(s);
    return out;
  }

  /// Colour of each state: 2 for initial, plus 1 for final.
  std::vector<std::size_t> colors() const {
    std::vector<std::size_t> c(states.size());
    for (std::size_t s = 0; s < c.size(); ++s) c[s] = (s == initial ? 2 : 0) + finals(s);
    return c;
  }
};

/// Product of state spaces: pairs, initial pair, final when both are final.
inline AutStateSpace space_product(const AutStateSpace& a, const AutStateSpace& b) {
  auto s = tensor(a.states, b.states);
  std::vector<std::size_t> t(s.size());
  for (std::size_t i = 0; i < a.states.size(); ++i)
    for (std::size_t j = 0; j < b.states.size(); ++j) t[i * b.states.size() + j] = a.finals(i) & b.finals(j);
  return AutStateSpace(s, a.initial * b.states.size() + b.initial, FinFunction(s, two_object(), std::move(t)));
}

/// The one-state space whose only state is initial and final.
inline AutStateSpace unit_space() { return AutStateSpace(); }

// ---------------------------------------------------------------------------
// State groupoids and the structured stateful construction.

template <class Sp, class I>
concept StateGroupoid = SmcInstance<I> && requires(const typename Sp::state& s) {
  { Sp::carrier(s) } -> std::convertible_to<typename I::object>;
  { Sp::tensor(s, s) } -> std::same_as<typename Sp::state>;
  { Sp::unit() } -> std::same_as<typename Sp::state>;
  { Sp::colors(s) } -> std::same_as<std::vector<std::size_t>>;
};

/// States with no extra structure.
template <SmcInstance I>
struct PlainStates {
  using state = typename I::object;
  static const state& carrier(const state& s) { return s; }
  static state tensor(const state& a, const state& b) { return I::tensor_objects(a, b); }
  static state unit() { return I::unit(); }
  static std::vector<std::size_t> colors(const state&) { return {}; }
};

/// Automaton state spaces; isomorphisms preserve the initial and final states.
struct AutStates {
  using state = AutStateSpace;
  static const Object& carrier(const AutStateSpace& s) { return s.states; }
  static AutStateSpace tensor(const AutStateSpace& a, const AutStateSpace& b) { return space_product(a, b); }
  static AutStateSpace unit() { return unit_space(); }
  static std::vector<std::size_t> colors(const AutStateSpace& s) { return s.colors(); }
};

template <SmcInstance I, StateGroupoid<I> Sp>
class StructuredStateful {
 public:
  using state_type = typename Sp::state;

  StructuredStateful(state_type s, typename I::morphism m) : state_(std::move(s)), body_(Sp::carrier(state_), std::move(m)) {}

  const state_type& state() const { return state_; }
  const StatefulMorphism<I>& body() const { return body_; }
  const typename I::morphism& morph() const { return body_.morph(); }
  const typename I::object& dom() const { return body_.dom(); }
  const typename I::object& cod() const { return body_.cod(); }

 private:
  state_type state_;
  StatefulMorphism<I> body_;
};

template <SmcInstance I, StateGroupoid<I> Sp>
StructuredStateful<I, Sp> gst_lift(const typename I::morphism& f) {
  return StructuredStateful<I, Sp>(Sp::unit(), f);
}

template <SmcInstance I, StateGroupoid<I> Sp>
StructuredStateful<I, Sp> gst_identity(const typename I::object& a) {
  return gst_lift<I, Sp>(I::identity(a));
}

template <SmcInstance I, StateGroupoid<I> Sp>
StructuredStateful<I, Sp> gst_compose(const StructuredStateful<I, Sp>& m, const StructuredStateful<I, Sp>& n) {
  auto body = st_compose(m.body(), n.body());
  return StructuredStateful<I, Sp>(Sp::tensor(m.state(), n.state()), body.morph());
}

template <SmcInstance I, StateGroupoid<I> Sp>
StructuredStateful<I, Sp> gst_tensor(const StructuredStateful<I, Sp>& m, const StructuredStateful<I, Sp>& n) {
  auto body = st_tensor(m.body(), n.body());
  return StructuredStateful<I, Sp>(Sp::tensor(m.state(), n.state()), body.morph());
}

template <SmcInstance I, StateGroupoid<I> Sp>
StructuredStateful<I, Sp> gst_store(const typename Sp::state& t, const StructuredStateful<I, Sp>& m) {
  auto body = store<I>(Sp::carrier(t), m.body());
  return StructuredStateful<I, Sp>(Sp::tensor(m.state(), t), body.morph());
}

template <SmcInstance I, StateGroupoid<I> Sp>
bool gst_equal(const StructuredStateful<I, Sp>& m, const StructuredStateful<I, Sp>& n) {
  return st_equal_colored(m.body(), n.body(), Sp::colors(m.state()), Sp::colors(n.state()));
}

// ---------------------------------------------------------------------------
// Mealy automata.

struct MealyAutomaton {
  AutStateSpace space;
  Object inputs;
  Object outputs;
  FinFunction trans;

  MealyAutomaton(AutStateSpace sp, Object a, Object b, FinFunction t)
      : space(std::move(sp)), inputs(std::move(a)), outputs(std::move(b)), trans(std::move(t)) {
    if (!(trans.dom() == tensor(space.states, inputs)) || !(trans.cod() == tensor(space.states, outputs)))
      throw BoundaryMismatch("transition map must be S ⊗ A -> S ⊗ B");
  }

  std::size_t next_state(std::size_t s, std::size_t a) const { return trans(s * inputs.size() + a) / outputs.size(); }
  std::size_t output(std::size_t s, std::size_t a) const { return trans(s * inputs.size() + a) % outputs.size(); }
};

/// The one-state automaton passing its input through.
inline MealyAutomaton mealy_identity(const Object& a) {
  return MealyAutomaton(unit_space(), a, a, FinFunction::identity(a));
}

/// Series composition: (s, t, a) -> (s', t', c) where x sends (s, a) to (s', b)
/// and y sends (t, b) to (t', c).
inline MealyAutomaton mealy_compose(const MealyAutomaton& x, const MealyAutomaton& y) {
  if (!(x.outputs == y.inputs))
    throw BoundaryMismatch("automaton output " + x.outputs.describe() + " does not meet " + y.inputs.describe());
  auto space = space_product(x.space, y.space);
  const std::size_t ns = x.space.states.size(), nt = y.space.states.size(), na = x.inputs.size(),
                    nc = y.outputs.size();
  std::vector<std::size_t> t(ns * nt * na);
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t u = 0; u < nt; ++u)
      for (std::size_t a = 0; a < na; ++a) {
        std::size_t b = x.output(s, a);
        t[(s * nt + u) * na + a] = ((x.next_state(s, a) * nt) + y.next_state(u, b)) * nc + y.output(u, b);
      }
  return MealyAutomaton(space, x.inputs, y.outputs,
                        FinFunction(tensor(space.states, x.inputs), tensor(space.states, y.outputs), std::move(t)));
}

/// Parallel composition: both automata step independently.
inline MealyAutomaton mealy_tensor(const MealyAutomaton& x, const MealyAutomaton& y) {
  auto space = space_product(x.space, y.space);
  auto a = tensor(x.inputs, y.inputs), b = tensor(x.outputs, y.outputs);
  const std::size_t ns = x.space.states.size(), nt = y.space.states.size();
  const std::size_t na = x.inputs.size(), na2 = y.inputs.size(), nb = x.outputs.size(), nb2 = y.outputs.size();
  std::vector<std::size_t> t(ns * nt * na * na2);
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t u = 0; u < nt; ++u)
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na2; ++j) {
          std::size_t state = x.next_state(s, i) * nt + y.next_state(u, j);
          std::size_t out = x.output(s, i) * nb2 + y.output(u, j);
          t[((s * nt + u) * na + i) * na2 + j] = state * (nb * nb2) + out;
        }
  return MealyAutomaton(space, a, b, FinFunction(tensor(space.states, a), tensor(space.states, b), std::move(t)));
}

using MealyGSt = StructuredStateful<FinSetInstance, AutStates>;

inline MealyGSt to_gst(const MealyAutomaton& x) { return MealyGSt(x.space, x.trans); }

inline MealyAutomaton from_gst(const MealyGSt& m) {
  return MealyAutomaton(m.state(), m.dom(), m.cod(), m.morph());
}

/// Isomorphism of state spaces preserving initial and final states and commuting with transitions.
inline bool aut_equal(const MealyAutomaton& x, const MealyAutomaton& y) { return gst_equal(to_gst(x), to_gst(y)); }

struct MealyRun {
  std::vector<std::size_t> outputs;
  std::size_t end_state;
  bool accepted;
};

inline MealyRun mealy_run(const MealyAutomaton& x, const std::vector<std::size_t>& word) {
  MealyRun r{{}, x.space.initial, false};
  for (auto a : word) {
    if (a >= x.inputs.size()) throw SymbolOutOfAlphabet("input " + std::to_string(a) + " outside the input alphabet");
    r.outputs.push_back(x.output(r.end_state, a));
    r.end_state = x.next_state(r.end_state, a);
  }
  r.accepted = x.space.is_final(r.end_state);
  return r;
}

inline MealyRun mealy_run(const MealyAutomaton& x, const std::vector<std::string>& word) {
  std::vector<std::size_t> idx;
  for (const auto& w : word) idx.push_back(x.inputs.find_label(w));
  return mealy_run(x, idx);
}

// ---------------------------------------------------------------------------
// Span automata: transition systems with initial and final states.

struct SpanAutomaton {
  AutStateSpace space;
  OTS system;

  SpanAutomaton(AutStateSpace sp, OTS sys) : space(std::move(sp)), system(std::move(sys)) {
    if (!(system.vertices() == space.states)) throw InvalidArgument("transition graph must live on the state set");
  }
};

inline SpanAutomaton span_aut_identity(const Object& a) { return SpanAutomaton(unit_space(), ots_identity(a)); }

inline SpanAutomaton span_aut_compose(const SpanAutomaton& x, const SpanAutomaton& y) {
  return SpanAutomaton(space_product(x.space, y.space), compose(x.system, y.system));
}

inline SpanAutomaton span_aut_tensor(const SpanAutomaton& x, const SpanAutomaton& y) {
  return SpanAutomaton(space_product(x.space, y.space), tensor(x.system, y.system));
}

inline bool aut_equal(const SpanAutomaton& x, const SpanAutomaton& y) {
  if (!(x.system.dom() == y.system.dom()) || !(x.system.cod() == y.system.cod()))
    throw BoundaryMismatch("comparing automata with different boundaries");
  auto c = ots_constraints(x.system, y.system);
  c.vertex_colors_g = x.space.colors();
  c.vertex_colors_h = y.space.colors();
  return graph_iso(x.system.graph(), y.system.graph(), c).has_value();
}

/// The transition graph of a Mealy automaton: one edge (s, a) -> t(s, a).
inline SpanAutomaton mealy_to_span(const MealyAutomaton& x) {
  return SpanAutomaton(x.space, k_forward(SpanStateful(x.space.states, Span::lift(x.trans))));
}

using SpanGSt = StructuredStateful<SpanInstance, AutStates>;

inline SpanGSt to_gst(const SpanAutomaton& x) { return SpanGSt(x.space, k_backward(x.system).morph()); }

inline SpanAutomaton from_gst(const SpanGSt& m) { return SpanAutomaton(m.state(), k_forward(m.body())); }

// ---------------------------------------------------------------------------
// Elgot automata: an entry map and an iteration map into states + outputs.

struct ElgotSystem {
  Object states;
  Object inputs;
  Object outputs;
  FinFunction start;
  FinFunction step;

  ElgotSystem(Object s, Object a, Object b, FinFunction p, FinFunction d)
      : states(std::move(s)), inputs(std::move(a)), outputs(std::move(b)), start(std::move(p)), step(std::move(d)) {
    auto sum = coproduct(states, outputs).sum;
    if (!(start.dom() == inputs) || !(start.cod() == sum) || !(step.dom() == states) || !(step.cod() == sum))
      throw BoundaryMismatch("Elgot maps must be A -> S + B and S -> S + B");
  }

  static Object sum_of(const Object& s, const Object& b) { return coproduct(s, b).sum; }
};

struct ElgotFinal {
  std::size_t output;
  std::size_t iterations;
};

struct ElgotDiverged {
  std::vector<std::size_t> visited;
};

using ElgotResult = std::variant<ElgotFinal, ElgotDiverged>;

/// Iterates until an output is produced, a state repeats, or max_steps iterations pass.
inline ElgotResult elgot_run(const ElgotSystem& e, std::size_t input, std::size_t max_steps) {
  if (input >= e.inputs.size()) throw SymbolOutOfAlphabet("input outside the alphabet");
  const std::size_t ns = e.states.size();
  std::size_t x = e.start(input);
  std::vector<bool> seen(ns, false);
  std::vector<std::size_t> visited;
  std::size_t iterations = 0;
  while (x < ns) {
    if (seen[x] || iterations == max_steps) {
      if (!seen[x]) visited.push_back(x);
      return ElgotDiverged{visited};
    }
    seen[x] = true;
    visited.push_back(x);
    x = e.step(x);
    ++iterations;
  }
  return ElgotFinal{x - ns, iterations};
}

}  // namespace otsalg
