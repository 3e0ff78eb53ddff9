#pragma once

// Randomised checks of the feedback axioms and related laws.

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "otsalg/automata.hpp"
#include "otsalg/feedback.hpp"
#include "otsalg/random.hpp"

namespace otsalg {

struct LawFailure {
  std::uint64_t seed;
  std::string witness;
};

struct LawResult {
  std::string axiom;
  std::size_t samples = 0;
  std::vector<LawFailure> failures;
  bool passed() const { return failures.empty(); }
};

struct LawReport {
  std::vector<LawResult> results;
  bool passed() const {
    for (const auto& r : results)
      if (!r.passed()) return false;
    return true;
  }
  const LawResult* find(const std::string& axiom) const {
    for (const auto& r : results)
      if (r.axiom == axiom) return &r;
    return nullptr;
  }
};

inline std::string brief(const Span& s) {
  std::ostringstream o;
  o << s.dom().describe() << "->" << s.cod().describe() << " {";
  bool first = true;
  for (auto [l, r] : normal_form(s)) {
    o << (first ? "" : " ") << s.dom().label(l) << "/" << s.cod().label(r);
    first = false;
  }
  o << "}";
  return o.str();
}

inline std::string brief(const Cospan& c) {
  std::ostringstream o;
  o << c.dom().describe() << "->" << c.cod().describe() << " apex " << c.apex().size() << " [";
  for (auto v : c.left().table()) o << v << ' ';
  o << "| ";
  for (auto v : c.right().table()) o << v << ' ';
  o << "]";
  return o.str();
}

inline std::string brief(const FinFunction& f) {
  std::ostringstream o;
  o << f.dom().describe() << "->" << f.cod().describe() << " [";
  for (std::size_t i = 0; i < f.table().size(); ++i) o << (i ? "," : "") << f.table()[i];
  o << "]";
  return o.str();
}

/// Stateful morphisms over an instance, seen as a feedback category.
template <SmcInstance I>
struct StTheory {
  using object = typename I::object;
  using state = typename I::object;
  using morphism = StatefulMorphism<I>;

  static const object& carrier(const state& s) { return s; }
  static morphism lift(const typename I::morphism& f) { return st_lift<I>(f); }
  static morphism identity(const object& a) { return st_identity<I>(a); }
  static morphism compose(const morphism& m, const morphism& n) { return st_compose(m, n); }
  static morphism tensor(const morphism& m, const morphism& n) { return st_tensor(m, n); }
  static morphism store(const state& s, const morphism& m) { return otsalg::store<I>(s, m); }
  static state unit_state() { return I::unit(); }
  static state tensor_states(const state& a, const state& b) { return I::tensor_objects(a, b); }
  static bool equal(const morphism& m, const morphism& n) { return st_equal(m, n); }
  static std::string describe(const morphism& m) { return "(" + I::describe(m.state()) + " | " + brief(m.morph()) + ")"; }
};

/// Structured stateful morphisms, seen as a feedback category.
template <SmcInstance I, StateGroupoid<I> Sp>
struct GStTheory {
  using object = typename I::object;
  using state = typename Sp::state;
  using morphism = StructuredStateful<I, Sp>;

  static const object& carrier(const state& s) { return Sp::carrier(s); }
  static morphism lift(const typename I::morphism& f) { return gst_lift<I, Sp>(f); }
  static morphism identity(const object& a) { return gst_identity<I, Sp>(a); }
  static morphism compose(const morphism& m, const morphism& n) { return gst_compose(m, n); }
  static morphism tensor(const morphism& m, const morphism& n) { return gst_tensor(m, n); }
  static morphism store(const state& s, const morphism& m) { return gst_store(s, m); }
  static state unit_state() { return Sp::unit(); }
  static state tensor_states(const state& a, const state& b) { return Sp::tensor(a, b); }
  static bool equal(const morphism& m, const morphism& n) { return gst_equal(m, n); }
  static std::string describe(const morphism& m) {
    return "(" + I::describe(Sp::carrier(m.state())) + " | " + brief(m.morph()) + ")";
  }
};

/// Random data for the stateful span theory: boundaries with at most two
/// factors of size at most 3, heads of at most 4 elements.
struct SpanSampler {
  using theory = StTheory<SpanInstance>;
  using instance = SpanInstance;
  std::size_t max_head = 4;

  Object object(Rng& rng) const { return random_object(rng, 2, 3); }
  Object state(Rng& rng) const { return random_object(rng, 1, 3); }
  Span base(Rng& rng, const Object& a, const Object& b) const { return random_span(rng, a, b, max_head); }
  SpanStateful stateful(Rng& rng, const Object& a, const Object& b) const {
    auto m = state(rng);
    return SpanStateful(m, random_span(rng, tensor(m, a), tensor(m, b), max_head));
  }
  /// A state t and a bijection s -> t, lifted.
  std::pair<Object, Span> state_iso(Rng& rng, const Object& s) const {
    auto f = s.factors();
    std::reverse(f.begin(), f.end());
    Object t(f);
    return {t, SpanInstance::iso(s, t, random_permutation(rng, s.size()))};
  }
};

struct CospanSampler {
  using theory = StTheory<CospanInstance>;
  using instance = CospanInstance;
  std::size_t max_apex = 4;

  Object object(Rng& rng) const { return random_object(rng, 2, 3); }
  Object state(Rng& rng) const { return random_object(rng, 1, 3); }
  Cospan base(Rng& rng, const Object& a, const Object& b) const { return random_cospan(rng, a, b, max_apex); }
  CospanStateful stateful(Rng& rng, const Object& a, const Object& b) const {
    auto m = state(rng);
    return CospanStateful(m, random_cospan(rng, tensor(m, a), tensor(m, b), max_apex));
  }
  std::pair<Object, Cospan> state_iso(Rng& rng, const Object& s) const {
    auto f = s.factors();
    std::reverse(f.begin(), f.end());
    Object t(f);
    return {t, CospanInstance::iso(s, t, random_permutation(rng, sum_object(s).size()))};
  }
};

/// Mealy machines: structured states over finite sets and functions.
struct MealySampler {
  using theory = GStTheory<FinSetInstance, AutStates>;
  using instance = FinSetInstance;

  Object object(Rng& rng) const { return random_object(rng, 2, 3); }
  AutStateSpace state(Rng& rng) const {
    auto s = random_object(rng, 1, 3);
    return random_space(rng, s);
  }
  FinFunction base(Rng& rng, const Object& a, const Object& b) const { return random_function(rng, a, b); }
  MealyGSt stateful(Rng& rng, const Object& a, const Object& b) const {
    auto sp = state(rng);
    return MealyGSt(sp, random_function(rng, tensor(sp.states, a), tensor(sp.states, b)));
  }
  std::pair<AutStateSpace, FinFunction> state_iso(Rng& rng, const AutStateSpace& s) const {
    auto p = random_permutation(rng, s.states.size());
    std::vector<std::size_t> finals;
    for (auto f : s.final_states()) finals.push_back(p[f]);
    auto t = AutStateSpace::make(s.states, p[s.initial], finals);
    return {t, FinFunction(s.states, s.states, p)};
  }
};

namespace detail {

inline std::uint64_t sample_seed(std::uint64_t base, std::size_t law, std::size_t i) {
  return splitmix64(base ^ (std::uint64_t(law) << 40) ^ std::uint64_t(i));
}

template <class Sampler>
using LawBody = std::function<std::pair<bool, std::string>(Rng&, const Sampler&)>;

template <class Sampler>
LawResult run_law(const std::string& name, std::size_t law_id, const LawBody<Sampler>& body, const Sampler& s,
                  std::size_t samples, std::uint64_t seed) {
  LawResult r{name, samples, {}};
  for (std::size_t i = 0; i < samples; ++i) {
    std::uint64_t ss = sample_seed(seed, law_id, i);
    Rng rng(ss);
    auto [ok, witness] = body(rng, s);
    if (!ok) r.failures.push_back({ss, witness});
  }
  return r;
}

}  // namespace detail

/// The five feedback axioms: tightening, vanishing, joining, strength, sliding.
template <class Sampler>
LawReport check_feedback_axioms(const Sampler& sampler, std::size_t samples, std::uint64_t seed) {
  using T = typename Sampler::theory;
  using I = typename Sampler::instance;
  LawReport report;
  report.results.push_back(detail::run_law<Sampler>(
      "A1 tightening", 1,
      [](Rng& rng, const Sampler& s) {
        auto a2 = s.object(rng), a = s.object(rng), b = s.object(rng), b2 = s.object(rng);
        auto st = s.state(rng);
        const auto& r = T::carrier(st);
        auto u = s.stateful(rng, a2, a);
        auto m = s.stateful(rng, I::tensor_objects(r, a), I::tensor_objects(r, b));
        auto v = s.stateful(rng, b, b2);
        auto lhs = T::compose(T::compose(u, T::store(st, m)), v);
        auto rhs = T::store(st, T::compose(T::compose(T::tensor(T::identity(r), u), m), T::tensor(T::identity(r), v)));
        return std::pair{T::equal(lhs, rhs), T::describe(u) + " ; " + T::describe(m) + " ; " + T::describe(v)};
      },
      sampler, samples, seed));
  report.results.push_back(detail::run_law<Sampler>(
      "A2 vanishing", 2,
      [](Rng& rng, const Sampler& s) {
        auto a = s.object(rng), b = s.object(rng);
        auto m = s.stateful(rng, a, b);
        return std::pair{T::equal(T::store(T::unit_state(), m), m), T::describe(m)};
      },
      sampler, samples, seed));
  report.results.push_back(detail::run_law<Sampler>(
      "A3 joining", 3,
      [](Rng& rng, const Sampler& s) {
        auto a = s.object(rng), b = s.object(rng);
        auto s1 = s.state(rng), s2 = s.state(rng);
        auto r = I::tensor_objects(T::carrier(s1), T::carrier(s2));
        auto m = s.stateful(rng, I::tensor_objects(r, a), I::tensor_objects(r, b));
        auto lhs = T::store(s2, T::store(s1, m));
        auto rhs = T::store(T::tensor_states(s1, s2), m);
        return std::pair{T::equal(lhs, rhs), T::describe(m)};
      },
      sampler, samples, seed));
  report.results.push_back(detail::run_law<Sampler>(
      "A4 strength", 4,
      [](Rng& rng, const Sampler& s) {
        auto a = s.object(rng), b = s.object(rng), a2 = s.object(rng), b2 = s.object(rng);
        auto st = s.state(rng);
        const auto& r = T::carrier(st);
        auto m = s.stateful(rng, I::tensor_objects(r, a), I::tensor_objects(r, b));
        auto g = s.stateful(rng, a2, b2);
        auto lhs = T::tensor(T::store(st, m), g);
        auto rhs = T::store(st, T::tensor(m, g));
        return std::pair{T::equal(lhs, rhs), T::describe(m) + " (x) " + T::describe(g)};
      },
      sampler, samples, seed));
  report.results.push_back(detail::run_law<Sampler>(
      "A5 sliding", 5,
      [](Rng& rng, const Sampler& s) {
        auto a = s.object(rng), b = s.object(rng);
        auto st = s.state(rng);
        auto [st2, h] = s.state_iso(rng, st);
        const auto& r = T::carrier(st);
        const auto& r2 = T::carrier(st2);
        auto m = s.stateful(rng, I::tensor_objects(r2, a), I::tensor_objects(r, b));
        auto lhs = T::store(st2, T::compose(m, T::lift(I::tensor(h, I::identity(b)))));
        auto rhs = T::store(st, T::compose(T::lift(I::tensor(h, I::identity(a))), m));
        return std::pair{T::equal(lhs, rhs), T::describe(m) + " slid along " + brief(h)};
      },
      sampler, samples, seed));
  return report;
}

/// Associativity, units, and the interchange law for composition and tensor.
template <class Sampler>
LawReport check_category_laws(const Sampler& sampler, std::size_t samples, std::uint64_t seed) {
  using T = typename Sampler::theory;
  LawReport report;
  report.results.push_back(detail::run_law<Sampler>(
      "associativity", 11,
      [](Rng& rng, const Sampler& s) {
        auto a = s.object(rng), b = s.object(rng), c = s.object(rng), d = s.object(rng);
        auto f = s.stateful(rng, a, b), g = s.stateful(rng, b, c), h = s.stateful(rng, c, d);
        return std::pair{T::equal(T::compose(T::compose(f, g), h), T::compose(f, T::compose(g, h))),
                         T::describe(f) + " ; " + T::describe(g) + " ; " + T::describe(h)};
      },
      sampler, samples, seed));
  report.results.push_back(detail::run_law<Sampler>(
      "unitality", 12,
      [](Rng& rng, const Sampler& s) {
        auto a = s.object(rng), b = s.object(rng);
        auto f = s.stateful(rng, a, b);
        bool ok = T::equal(T::compose(T::identity(a), f), f) && T::equal(T::compose(f, T::identity(b)), f);
        return std::pair{ok, T::describe(f)};
      },
      sampler, samples, seed));
  report.results.push_back(detail::run_law<Sampler>(
      "interchange", 13,
      [](Rng& rng, const Sampler& s) {
        auto a = s.object(rng), b = s.object(rng), c = s.object(rng);
        auto a2 = s.object(rng), b2 = s.object(rng), c2 = s.object(rng);
        auto f = s.stateful(rng, a, b), f2 = s.stateful(rng, b, c);
        auto g = s.stateful(rng, a2, b2), g2 = s.stateful(rng, b2, c2);
        auto lhs = T::compose(T::tensor(f, g), T::tensor(f2, g2));
        auto rhs = T::tensor(T::compose(f, f2), T::compose(g, g2));
        return std::pair{T::equal(lhs, rhs), T::describe(f) + " " + T::describe(g)};
      },
      sampler, samples, seed));
  report.results.push_back(detail::run_law<Sampler>(
      "tensor associativity", 14,
      [](Rng& rng, const Sampler& s) {
        auto f = s.stateful(rng, s.object(rng), s.object(rng));
        auto g = s.stateful(rng, s.object(rng), s.object(rng));
        auto h = s.stateful(rng, s.object(rng), s.object(rng));
        return std::pair{T::equal(T::tensor(T::tensor(f, g), h), T::tensor(f, T::tensor(g, h))), T::describe(f)};
      },
      sampler, samples, seed));
  return report;
}

/// Delay on the unit is the identity, delays tensor, and delays commute with isomorphisms.
template <class Sampler>
LawReport check_delay_laws(const Sampler& sampler, std::size_t samples, std::uint64_t seed) {
  using I = typename Sampler::instance;
  LawReport report;
  report.results.push_back(detail::run_law<Sampler>(
      "delay unit", 21,
      [](Rng&, const Sampler&) {
        return std::pair{st_equal(delay<I>(I::unit()), st_identity<I>(I::unit())), std::string("delay on I")};
      },
      sampler, samples, seed));
  report.results.push_back(detail::run_law<Sampler>(
      "delay monoidal", 22,
      [](Rng& rng, const Sampler& s) {
        auto a = s.object(rng), b = s.object(rng);
        return std::pair{st_equal(st_tensor(delay<I>(a), delay<I>(b)), delay<I>(I::tensor_objects(a, b))),
                         I::describe(a) + " " + I::describe(b)};
      },
      sampler, samples, seed));
  report.results.push_back(detail::run_law<Sampler>(
      "delay natural on isos", 23,
      [](Rng& rng, const Sampler& s) {
        auto a = s.state(rng);
        auto [b, h] = s.state_iso(rng, a);
        auto lh = st_lift<I>(h);
        return std::pair{st_equal(st_compose(delay<I>(a), lh), st_compose(lh, delay<I>(b))), brief(h)};
      },
      sampler, samples, seed));
  return report;
}

/// Whether feedback of the symmetry equals the identity on a.
template <SmcInstance I>
bool yanking_holds(const typename I::object& a) {
  return st_equal(store<I>(a, st_lift<I>(I::swap(a, a))), st_identity<I>(a));
}

/// Special commutative Frobenius laws for copy/cocopy/discard/codiscard, and
/// the snake equations for cup and cap, on every pool alphabet of size at most max_size.
template <FrobeniusInstance I>
LawReport check_frobenius(std::size_t max_size = 3) {
  using M = typename I::morphism;
  struct Law {
    std::string name;
    std::function<std::pair<M, M>(const Object&)> sides;
  };
  auto c = [](const M& f, const M& g) { return I::compose(f, g); };
  auto t = [](const M& f, const M& g) { return I::tensor(f, g); };
  std::vector<Law> laws{
      {"monoid associativity", [&](const Object& a) {
         auto id = I::identity(a);
         return std::pair{c(t(I::cocopy(a), id), I::cocopy(a)), c(t(id, I::cocopy(a)), I::cocopy(a))};
       }},
      {"monoid left unit", [&](const Object& a) {
         return std::pair{c(t(I::codiscard(a), I::identity(a)), I::cocopy(a)), I::identity(a)};
       }},
      {"monoid right unit", [&](const Object& a) {
         return std::pair{c(t(I::identity(a), I::codiscard(a)), I::cocopy(a)), I::identity(a)};
       }},
      {"monoid commutativity", [&](const Object& a) { return std::pair{c(I::swap(a, a), I::cocopy(a)), I::cocopy(a)}; }},
      {"comonoid coassociativity", [&](const Object& a) {
         auto id = I::identity(a);
         return std::pair{c(I::copy(a), t(I::copy(a), id)), c(I::copy(a), t(id, I::copy(a)))};
       }},
      {"comonoid left counit", [&](const Object& a) {
         return std::pair{c(I::copy(a), t(I::discard(a), I::identity(a))), I::identity(a)};
       }},
      {"comonoid right counit", [&](const Object& a) {
         return std::pair{c(I::copy(a), t(I::identity(a), I::discard(a))), I::identity(a)};
       }},
      {"comonoid cocommutativity", [&](const Object& a) { return std::pair{c(I::copy(a), I::swap(a, a)), I::copy(a)}; }},
      {"frobenius left", [&](const Object& a) {
         auto id = I::identity(a);
         return std::pair{c(t(I::copy(a), id), t(id, I::cocopy(a))), c(I::cocopy(a), I::copy(a))};
       }},
      {"frobenius right", [&](const Object& a) {
         auto id = I::identity(a);
         return std::pair{c(t(id, I::copy(a)), t(I::cocopy(a), id)), c(I::cocopy(a), I::copy(a))};
       }},
      {"special", [&](const Object& a) { return std::pair{c(I::copy(a), I::cocopy(a)), I::identity(a)}; }},
  };
  if constexpr (CompactInstance<I>) {
    laws.push_back({"snake left", [&](const Object& a) {
                      auto id = I::identity(a);
                      return std::pair{c(t(I::cup(a), id), t(id, I::cap(a))), id};
                    }});
    laws.push_back({"snake right", [&](const Object& a) {
                      auto id = I::identity(a);
                      return std::pair{c(t(id, I::cup(a)), t(I::cap(a), id)), id};
                    }});
    laws.push_back({"cup from unit", [&](const Object& a) {
                      return std::pair{I::cup(a), c(I::codiscard(a), I::copy(a))};
                    }});
    laws.push_back({"cap from counit", [&](const Object& a) {
                      return std::pair{I::cap(a), c(I::cocopy(a), I::discard(a))};
                    }});
  }
  LawReport report;
  for (const auto& law : laws) {
    LawResult r{law.name, 0, {}};
    for (const auto& al : alphabet_pool()) {
      if (al.size() > max_size) continue;
      Object a{al};
      auto [lhs, rhs] = law.sides(a);
      ++r.samples;
      if (!I::equal(lhs, rhs)) r.failures.push_back({al.size(), "alphabet " + al.name()});
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace otsalg
