#include <gtest/gtest.h>

#include "support.hpp"

using namespace otsalg;
using V = LatchVocabulary;

namespace {

Object B() { return Object{bool_alphabet()}; }

OTS from_sample(const std::string& name) {
  return k_forward(std::get<SpanStateful>(dsl::run_program(oracle::read_sample(name), dsl::InstanceKind::Span)));
}

/// Vertex of the latch system x corresponding to the oracle state pair v.
std::size_t vertex_of(const OTS& x, std::pair<int, int> v) {
  auto iso = ots_iso(oracle::latch_system(), x);
  EXPECT_TRUE(iso);
  return iso ? iso->vertex_map[V::index(v)] : 0;
}

std::size_t steps_to(const OTS& x, std::size_t from, std::size_t to, std::pair<int, int> input, std::size_t max) {
  for (auto [v, step] : reachable(x, from, {V::index(input)}, max))
    if (v == to) return step;
  return max + 1;
}

}  // namespace

TEST(OTS, CompositionSynchronisesOnSharedLabels) {
  Rng rng(61);
  for (int i = 0; i < 60; ++i) {
    auto a = random_object(rng), b = random_object(rng), c = random_object(rng);
    auto x = random_ots(rng, a, b), y = random_ots(rng, b, c);
    auto xy = compose(x, y);
    EXPECT_EQ(xy.edges().size(), oracle::pullback_pairs(x.right(), y.left()).size());
    EXPECT_EQ(xy.vertices().size(), x.vertices().size() * y.vertices().size());
    for (std::size_t e = 0; e < xy.edges().size(); ++e) EXPECT_LT(xy.left()(e), a.size());
  }
  EXPECT_THROW(compose(ots_identity(B()), ots_identity(Object{Alphabet("T", {"t0", "t1", "t2"})})), BoundaryMismatch);
}

TEST(OTS, ShuffledCopiesAreEqual) {
  Rng rng(62);
  for (int i = 0; i < 80; ++i) {
    auto x = random_ots(rng, random_object(rng), random_object(rng), 4, 6);
    EXPECT_TRUE(ots_equal(x, shuffled(rng, x)));
  }
}

TEST(OTS, LabelsAreRespectedByEquality) {
  // Same graph, different right labels.
  auto x = ots_from_span(Span::identity(B()));
  auto y = ots_from_span(Span::lift(FinFunction(B(), B(), {1, 0})));
  EXPECT_FALSE(ots_equal(x, y));
}

TEST(KFunctor, PreservesComposition) {
  Rng rng(63);
  SpanSampler sp;
  for (int i = 0; i < 80; ++i) {
    auto a = sp.object(rng), b = sp.object(rng), c = sp.object(rng);
    auto f = sp.stateful(rng, a, b), g = sp.stateful(rng, b, c);
    EXPECT_TRUE(ots_equal(k_forward(st_compose(f, g)), compose(k_forward(f), k_forward(g))));
    EXPECT_TRUE(ots_equal(k_forward(st_tensor(f, g)), tensor(k_forward(f), k_forward(g))));
  }
}

TEST(KFunctor, PreservesIdentity) {
  EXPECT_TRUE(ots_equal(k_forward(st_identity<SpanInstance>(B())), ots_identity(B())));
}

TEST(KFunctor, RoundTrips) {
  Rng rng(64);
  SpanSampler sp;
  for (int i = 0; i < 80; ++i) {
    auto x = random_ots(rng, random_object(rng), random_object(rng));
    auto y = k_forward(k_backward(x));
    EXPECT_EQ(edge_multiset(y), edge_multiset(x));
    EXPECT_EQ(y.vertices(), x.vertices());
    auto m = sp.stateful(rng, sp.object(rng), sp.object(rng));
    EXPECT_TRUE(st_equal(k_backward(k_forward(m)), m));
  }
}

TEST(OTSFeedback, DelayDerivedAgreesWithStore) {
  Rng rng(65);
  for (int i = 0; i < 60; ++i) {
    auto s = random_object(rng, 1, 3), a = random_object(rng), b = random_object(rng);
    auto x = random_ots(rng, tensor(s, a), tensor(s, b));
    auto via_delay = k_forward(feedback_from_delay<SpanInstance>(s, k_backward(x)));
    EXPECT_TRUE(ots_equal(via_delay, ots_fbk(s, x)));
  }
}

TEST(OTSFeedback, StateIsVertexTimesWire) {
  Rng rng(66);
  auto x = random_ots(rng, tensor(B(), B()), tensor(B(), B()));
  auto f = ots_fbk(B(), x);
  EXPECT_EQ(f.vertices().size(), x.vertices().size() * 2);
  EXPECT_EQ(f.edges().size(), x.edges().size());
  EXPECT_THROW(ots_fbk(Object{Alphabet("T", {"t0", "t1", "t2"})}, x), FactorizationMismatch);
}

TEST(Latch, ProgrammaticMatchesOracle) {
  auto x = build_latch();
  EXPECT_EQ(x.vertices().size(), 4u);
  EXPECT_EQ(x.edges().size(), 16u);
  EXPECT_TRUE(ots_equal(x, oracle::latch_system()));
}

TEST(Latch, FeedbackEdgesMatchOracleExactly) {
  auto x = from_sample("latch_fbk.ckt");
  EXPECT_EQ(x.vertices().size(), 4u);
  EXPECT_EQ(edge_multiset(x), oracle::latch_edges());
  EXPECT_TRUE(ots_equal(x, from_sample("latch.ckt")));
}

TEST(Latch, TraceKeepsEquilibria) {
  auto x = from_sample("latch_tr.ckt");
  EXPECT_EQ(x.vertices().size(), 1u);
  std::vector<std::pair<std::size_t, std::size_t>> got;
  for (auto [s, t, l, r] : edge_multiset(x)) got.emplace_back(l, r);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, oracle::latch_equilibria());
  std::vector<std::pair<std::size_t, std::size_t>> named{{V::index(V::unspec), V::index(V::t1)},
                                                         {V::index(V::idle), V::index(V::a)},
                                                         {V::index(V::idle), V::index(V::not_a)},
                                                         {V::index(V::set), V::index(V::a)},
                                                         {V::index(V::reset), V::index(V::not_a)}};
  std::sort(named.begin(), named.end());
  EXPECT_EQ(got, named);
}

TEST(Latch, BodyTracedProgrammatically) {
  auto traced = ots_trace(tensor(B(), B()), latch_body());
  EXPECT_TRUE(ots_equal(traced, from_sample("latch_tr.ckt")));
  EXPECT_TRUE(ots_equal(ots_fbk(tensor(B(), B()), latch_body()), from_sample("latch_fbk.ckt")));
}

TEST(Latch, SetAndResetSettleWithinTwoSteps) {
  auto x = build_latch();
  auto a = vertex_of(x, V::a), not_a = vertex_of(x, V::not_a);
  for (std::size_t v = 0; v < 4; ++v) {
    EXPECT_LE(steps_to(x, v, a, V::set, 2), 2u);
    EXPECT_LE(steps_to(x, v, not_a, V::reset, 2), 2u);
  }
}

TEST(Latch, IdleKeepsStateOrBounces) {
  auto x = build_latch();
  auto a = vertex_of(x, V::a), not_a = vertex_of(x, V::not_a);
  auto t1 = vertex_of(x, V::t1), t2 = vertex_of(x, V::t2);
  std::vector<std::size_t> idle{V::index(V::idle)};
  EXPECT_EQ(successors(x, a, idle), std::vector<std::size_t>{a});
  EXPECT_EQ(successors(x, not_a, idle), std::vector<std::size_t>{not_a});
  EXPECT_EQ(successors(x, t1, idle), std::vector<std::size_t>{t2});
  EXPECT_EQ(successors(x, t2, idle), std::vector<std::size_t>{t1});
}

TEST(Reachability, BoundsAndErrors) {
  auto x = build_latch();
  auto r = reachable(x, 0, {}, 0);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], std::make_pair(std::size_t{0}, std::size_t{0}));
  EXPECT_THROW(reachable(x, 9, {}, 3), VertexOutOfRange);
  EXPECT_THROW(reachable(x, 0, {7}, 3), SymbolOutOfAlphabet);
  EXPECT_THROW(successors(x, 4, {}), VertexOutOfRange);
}

TEST(Sliding, ExtraTransitionDistinguishes) {
  oracle::Sliding fx;
  auto f = fx.f(), g = fx.g();
  EXPECT_EQ(f.vertices().size(), 1u);
  EXPECT_EQ(f.edges().size(), 1u);
  EXPECT_EQ(g.vertices().size(), 2u);
  EXPECT_EQ(g.edges().size(), 2u);
  EXPECT_FALSE(ots_equal(f, g));
}

TEST(Sliding, DslProgramsAgreeWithFixture) {
  oracle::Sliding fx;
  auto gens = io::generators_from_json(nlohmann::json::parse(oracle::read_sample("sliding.json")));
  auto f = k_forward(std::get<SpanStateful>(
      dsl::run_program(oracle::read_sample("sliding_f.ckt"), dsl::InstanceKind::Span, gens)));
  auto g = k_forward(std::get<SpanStateful>(
      dsl::run_program(oracle::read_sample("sliding_g.ckt"), dsl::InstanceKind::Span, gens)));
  EXPECT_EQ(f.vertices().size(), 1u);
  EXPECT_EQ(g.vertices().size(), 2u);
  EXPECT_EQ(edge_multiset(f), edge_multiset(fx.f()));
  EXPECT_EQ(edge_multiset(g), edge_multiset(fx.g()));
}
