#include <gtest/gtest.h>

#include "support.hpp"

using namespace otsalg;

namespace {

Object B() { return Object{bool_alphabet()}; }

/// Conjugate the state of m by a random permutation.
template <class I>
StatefulMorphism<I> relabelled(Rng& rng, const StatefulMorphism<I>& m) {
  auto s = m.state();
  auto perm = random_permutation(rng, I::carrier_size(s));
  auto h = I::iso(s, s, perm);
  auto hinv = I::iso(s, s, invert_permutation(perm));
  auto f = I::compose(I::compose(I::tensor(hinv, I::identity(m.dom())), m.morph()), I::tensor(h, I::identity(m.cod())));
  return StatefulMorphism<I>(s, f);
}

}  // namespace

TEST(Stateful, StateMustPrefixBothBoundaries) {
  Object t{Alphabet("T", {"t0", "t1", "t2"})};
  EXPECT_THROW(SpanStateful(t, Span::identity(B())), FactorizationMismatch);
  SpanStateful m(B(), Span::identity(tensor(B(), t)));
  EXPECT_EQ(m.dom(), t);
  EXPECT_EQ(m.cod(), t);
}

TEST(Stateful, CompositionTensorsStates) {
  auto d = delay<SpanInstance>(B());
  auto dd = st_compose(d, d);
  EXPECT_EQ(dd.state(), tensor(B(), B()));
  EXPECT_THROW(st_compose(d, st_identity<SpanInstance>(tensor(B(), B()))), BoundaryMismatch);
}

TEST(Stateful, StoreRequiresPrefix) {
  auto m = st_identity<SpanInstance>(B());
  Object t{Alphabet("T", {"t0", "t1", "t2"})};
  EXPECT_THROW(store<SpanInstance>(t, m), FactorizationMismatch);
  auto s = store<SpanInstance>(B(), m);
  EXPECT_EQ(s.state(), B());
  EXPECT_TRUE(s.dom().is_unit());
}

TEST(Delay, OutputsThePreviousInput) {
  // Edges of the delay on B: from state v on input a, go to a and emit v.
  auto x = k_forward(delay<SpanInstance>(B()));
  ASSERT_EQ(x.vertices().size(), 2u);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> expected;
  for (std::size_t v = 0; v < 2; ++v)
    for (std::size_t a = 0; a < 2; ++a) expected.emplace_back(v, a, a, v);
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(edge_multiset(x), expected);
}

TEST(Equality, RelabelledStatesAreEqual) {
  Rng rng(41);
  SpanSampler sp;
  CospanSampler co;
  for (int i = 0; i < 60; ++i) {
    auto a = sp.object(rng), b = sp.object(rng);
    auto m = sp.stateful(rng, a, b);
    EXPECT_TRUE(st_equal(m, relabelled(rng, m)));
    auto c = co.stateful(rng, a, b);
    EXPECT_TRUE(st_equal(c, relabelled(rng, c)));
  }
}

TEST(Equality, DelayIsNotIdentity) {
  EXPECT_FALSE(st_equal(delay<SpanInstance>(B()), st_identity<SpanInstance>(B())));
  EXPECT_FALSE(st_equal(delay<CospanInstance>(B()), st_identity<CospanInstance>(B())));
  EXPECT_FALSE(st_equal(st_compose(delay<SpanInstance>(B()), delay<SpanInstance>(B())), delay<SpanInstance>(B())));
}

TEST(Equality, DifferentStateSizesDiffer) {
  auto m = st_identity<SpanInstance>(B());
  EXPECT_FALSE(st_equal(m, store<SpanInstance>(B(), st_lift<SpanInstance>(Span::identity(tensor(B(), B()))))));
}

TEST(Equality, BoundaryMismatchThrows) {
  Object t{Alphabet("T", {"t0", "t1", "t2"})};
  EXPECT_THROW(st_equal(st_identity<SpanInstance>(B()), st_identity<SpanInstance>(t)), BoundaryMismatch);
}

TEST(Equality, MatHasNoStateSearch) {
  auto m = st_identity<MatInstance>(std::size_t{2});
  EXPECT_THROW(st_equal(m, m), Unsupported);
}

TEST(Axioms, SpansSatisfyFeedbackAxioms) {
  auto r = check_feedback_axioms(SpanSampler{}, 200, 7);
  for (const auto& l : r.results) EXPECT_TRUE(l.passed()) << l.axiom << ": " << l.failures.front().witness;
}

TEST(Axioms, CospansSatisfyFeedbackAxioms) {
  auto r = check_feedback_axioms(CospanSampler{}, 150, 7);
  for (const auto& l : r.results) EXPECT_TRUE(l.passed()) << l.axiom << ": " << l.failures.front().witness;
}

TEST(Axioms, CategoryLaws) {
  for (const auto& r : {check_category_laws(SpanSampler{}, 100, 3), check_category_laws(CospanSampler{}, 100, 3)})
    for (const auto& l : r.results) EXPECT_TRUE(l.passed()) << l.axiom << ": " << l.failures.front().witness;
}

TEST(Axioms, DelayLaws) {
  for (const auto& r : {check_delay_laws(SpanSampler{}, 60, 5), check_delay_laws(CospanSampler{}, 60, 5)})
    for (const auto& l : r.results) EXPECT_TRUE(l.passed()) << l.axiom << ": " << l.failures.front().witness;
}

TEST(Yanking, FailsForFeedbackHoldsForTrace) {
  for (const auto& a : alphabet_pool()) {
    Object o{a};
    if (a.size() > 1) {
      EXPECT_FALSE(yanking_holds<SpanInstance>(o));
      EXPECT_FALSE(yanking_holds<CospanInstance>(o));
    }
    EXPECT_TRUE(span_equal(span_trace(o, Span::swap(o, o)), Span::identity(o)));
    EXPECT_TRUE(st_equal(st_trace<SpanInstance>(o, st_lift<SpanInstance>(Span::swap(o, o))),
                         st_identity<SpanInstance>(o)));
  }
}

TEST(FeedbackFromDelay, MatchesStore) {
  Rng rng(42);
  SpanSampler sp;
  CospanSampler co;
  for (int i = 0; i < 60; ++i) {
    auto s = sp.state(rng), a = sp.object(rng), b = sp.object(rng);
    auto m = sp.stateful(rng, tensor(s, a), tensor(s, b));
    EXPECT_TRUE(st_equal(feedback_from_delay<SpanInstance>(s, m), store<SpanInstance>(s, m)));
    auto c = co.stateful(rng, tensor(s, a), tensor(s, b));
    EXPECT_TRUE(st_equal(feedback_from_delay<CospanInstance>(s, c), store<CospanInstance>(s, c)));
  }
}

TEST(Trace, StatelessTraceMatchesSpanTrace) {
  Rng rng(43);
  for (int i = 0; i < 40; ++i) {
    auto s = random_object(rng, 1, 3), a = random_object(rng), b = random_object(rng);
    auto f = random_span(rng, tensor(s, a), tensor(s, b));
    EXPECT_TRUE(st_equal(st_trace<SpanInstance>(s, st_lift<SpanInstance>(f)), st_lift<SpanInstance>(span_trace(s, f))));
  }
}

TEST(Trace, CospanTraceMatches) {
  Rng rng(44);
  for (int i = 0; i < 40; ++i) {
    auto s = random_object(rng, 1, 3), a = random_object(rng), b = random_object(rng);
    auto f = random_cospan(rng, tensor(s, a), tensor(s, b));
    EXPECT_TRUE(st_equal(st_trace<CospanInstance>(s, st_lift<CospanInstance>(f)),
                         st_lift<CospanInstance>(cospan_trace(s, f))));
  }
}
