#pragma once

// The stateful construction: morphisms (S | f : S ⊗ A -> S ⊗ B) over a
// symmetric monoidal instance, with feedback given by moving wires into the state.

#include <functional>
#include <string>
#include <vector>

#include "otsalg/instances.hpp"
#include "otsalg/mat.hpp"

namespace otsalg {

template <SmcInstance I>
class StatefulMorphism {
 public:
  using instance = I;
  using object = typename I::object;
  using morphism = typename I::morphism;

  StatefulMorphism(object state, morphism m) : state_(std::move(state)), morph_(std::move(m)) {
    auto a = I::strip_prefix(I::dom(morph_), state_);
    auto b = I::strip_prefix(I::cod(morph_), state_);
    if (!a || !b)
      throw FactorizationMismatch("morphism " + I::describe(I::dom(morph_)) + " -> " + I::describe(I::cod(morph_)) +
                                  " does not start with state " + I::describe(state_));
    dom_ = std::move(*a);
    cod_ = std::move(*b);
  }

  const object& state() const { return state_; }
  const morphism& morph() const { return morph_; }
  const object& dom() const { return dom_; }
  const object& cod() const { return cod_; }

 private:
  object state_;
  morphism morph_;
  object dom_;
  object cod_;
};

template <SmcInstance I>
StatefulMorphism<I> st_lift(const typename I::morphism& f) {
  return StatefulMorphism<I>(I::unit(), f);
}

template <SmcInstance I>
StatefulMorphism<I> st_identity(const typename I::object& a) {
  return st_lift<I>(I::identity(a));
}

template <SmcInstance I>
StatefulMorphism<I> st_compose(const StatefulMorphism<I>& m, const StatefulMorphism<I>& n) {
  if (!(m.cod() == n.dom()))
    throw BoundaryMismatch("cannot compose " + I::describe(m.cod()) + " with " + I::describe(n.dom()));
  const auto& s = m.state();
  const auto& t = n.state();
  auto f = I::compose(I::tensor(I::swap(s, t), I::identity(m.dom())), I::tensor(I::identity(t), m.morph()));
  f = I::compose(f, I::tensor(I::swap(t, s), I::identity(m.cod())));
  f = I::compose(f, I::tensor(I::identity(s), n.morph()));
  return StatefulMorphism<I>(I::tensor_objects(s, t), std::move(f));
}

template <SmcInstance I>
StatefulMorphism<I> st_tensor(const StatefulMorphism<I>& m, const StatefulMorphism<I>& n) {
  const auto& s = m.state();
  const auto& s2 = n.state();
  auto before = I::tensor(I::tensor(I::identity(s), I::swap(s2, m.dom())), I::identity(n.dom()));
  auto after = I::tensor(I::tensor(I::identity(s), I::swap(m.cod(), s2)), I::identity(n.cod()));
  auto f = I::compose(I::compose(before, I::tensor(m.morph(), n.morph())), after);
  return StatefulMorphism<I>(I::tensor_objects(s, s2), std::move(f));
}

/// Feedback: the leading boundary wires t become part of the state.
template <SmcInstance I>
StatefulMorphism<I> store(const typename I::object& t, const StatefulMorphism<I>& m) {
  if (!I::strip_prefix(m.dom(), t) || !I::strip_prefix(m.cod(), t))
    throw FactorizationMismatch("cannot store " + I::describe(t) + " from " + I::describe(m.dom()) + " -> " +
                                I::describe(m.cod()));
  return StatefulMorphism<I>(I::tensor_objects(m.state(), t), m.morph());
}

/// The delay on a: feedback of the symmetry on a ⊗ a.
template <SmcInstance I>
StatefulMorphism<I> delay(const typename I::object& a) {
  return store<I>(a, st_lift<I>(I::swap(a, a)));
}

/// Equality up to an isomorphism of states, optionally preserving vertex colours.
template <SmcInstance I>
bool st_equal_colored(const StatefulMorphism<I>& m, const StatefulMorphism<I>& n, const std::vector<std::size_t>& cm,
                      const std::vector<std::size_t>& cn) {
  if (!(m.dom() == n.dom()) || !(m.cod() == n.cod()))
    throw BoundaryMismatch("comparing " + I::describe(m.dom()) + " -> " + I::describe(m.cod()) + " with " +
                           I::describe(n.dom()) + " -> " + I::describe(n.cod()));
  if constexpr (IsoSearchInstance<I>) {
    if (I::carrier_size(m.state()) != I::carrier_size(n.state())) return false;
    if (m.state() == n.state() && cm == cn && I::equal(m.morph(), n.morph())) return true;
    bool found = false;
    I::for_each_state_iso(m.state(), m.morph(), n.state(), n.morph(), cm, cn,
                          [&](const std::vector<std::size_t>& perm) {
                            auto h = I::iso(m.state(), n.state(), perm);
                            auto hinv = I::iso(n.state(), m.state(), invert_permutation(perm));
                            auto c = I::compose(I::compose(I::tensor(hinv, I::identity(m.dom())), m.morph()),
                                                I::tensor(h, I::identity(m.cod())));
                            found = I::equal(c, n.morph());
                            return found;
                          });
    return found;
  } else {
    (void)cm;
    (void)cn;
    throw Unsupported(std::string("state equivalence is not available for the ") + I::name + " instance");
  }
}

template <SmcInstance I>
bool st_equal(const StatefulMorphism<I>& m, const StatefulMorphism<I>& n) {
  return st_equal_colored(m, n, {}, {});
}

/// Delay families used by feedback_from_delay.
template <SmcInstance I>
using DelayFamily = std::function<StatefulMorphism<I>(const typename I::object&)>;

/// (cup ⊗ id) ; (id ⊗ m) ; (id ⊗ d(s) ⊗ id) ; (cap ⊗ id) for m : s ⊗ A -> s ⊗ B.
template <CompactInstance I>
StatefulMorphism<I> feedback_from_delay(const typename I::object& s, const StatefulMorphism<I>& m,
                                        const DelayFamily<I>& d) {
  auto a = I::strip_prefix(m.dom(), s);
  auto b = I::strip_prefix(m.cod(), s);
  if (!a || !b) throw FactorizationMismatch("feedback over " + I::describe(s) + " of " + I::describe(m.dom()));
  auto open = st_tensor(st_lift<I>(I::cup(s)), st_identity<I>(*a));
  auto body = st_tensor(st_identity<I>(s), m);
  auto close = st_tensor(st_lift<I>(I::cap(s)), st_identity<I>(*b));
  auto out = st_compose(open, body);
  if (d) out = st_compose(out, st_tensor(st_tensor(st_identity<I>(s), d(s)), st_identity<I>(*b)));
  return st_compose(out, close);
}

template <CompactInstance I>
StatefulMorphism<I> feedback_from_delay(const typename I::object& s, const StatefulMorphism<I>& m) {
  return feedback_from_delay<I>(s, m, [](const typename I::object& x) { return delay<I>(x); });
}

/// Compact-closed trace: feedback with the identity in place of the delay.
template <CompactInstance I>
StatefulMorphism<I> st_trace(const typename I::object& s, const StatefulMorphism<I>& m) {
  return feedback_from_delay<I>(s, m, DelayFamily<I>{});
}

using MatStateful = StatefulMorphism<MatInstance>;

/// Feedback over l extra dimensions; only the recorded state size changes.
inline MatStateful mat_fbk(std::size_t l, const MatStateful& m) { return store<MatInstance>(l, m); }

/// Blocks of a stateful matrix with state k and boundaries l + n -> l + m.
struct MatBlocks {
  Matrix a1, a2, b1;
  Matrix a3, a4, b2;
  Matrix c1, c2, d;
};

inline MatBlocks mat_blocks(const MatStateful& x, std::size_t l) {
  const std::size_t k = x.state();
  if (x.dom() < l || x.cod() < l) throw DimensionMismatch("feedback dimension exceeds the boundary");
  const std::size_t n = x.dom() - l, m = x.cod() - l;
  const Matrix& f = x.morph();
  return {f.block(0, 0, k, k),         f.block(0, k, k, l),         f.block(0, k + l, k, n),
          f.block(k, 0, l, k),         f.block(k, k, l, l),         f.block(k, k + l, l, n),
          f.block(k + l, 0, m, k),     f.block(k + l, k, m, l),     f.block(k + l, k + l, m, n)};
}

}  // namespace otsalg
