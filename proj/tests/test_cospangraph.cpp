#include <gtest/gtest.h>

#include "support.hpp"

using namespace otsalg;

namespace {

Object One() { return Object{point_alphabet()}; }
Object B() { return Object{bool_alphabet()}; }

bool same_tables(const GraphWithBoundaries& x, const GraphWithBoundaries& y) {
  return x.dom() == y.dom() && x.cod() == y.cod() && x.graph().src().table() == y.graph().src().table() &&
         x.graph().tgt().table() == y.graph().tgt().table() && x.left_mark().table() == y.left_mark().table() &&
         x.right_mark().table() == y.right_mark().table() && x.graph().vertex_count() == y.graph().vertex_count();
}

}  // namespace

TEST(EdgeGenerator, TraceMakesASelfLoop) {
  auto t = cg_trace(One(), edge_generator());
  EXPECT_EQ(t.graph().vertex_count(), 1u);
  ASSERT_EQ(t.graph().edge_count(), 1u);
  EXPECT_EQ(t.graph().src()(0), t.graph().tgt()(0));
  EXPECT_TRUE(t.dom().is_unit());
}

TEST(EdgeGenerator, FeedbackAddsAReturnEdge) {
  auto f = cg_fbk(One(), edge_generator());
  EXPECT_EQ(f.graph().vertex_count(), 2u);
  ASSERT_EQ(f.graph().edge_count(), 2u);
  // A directed 2-cycle: the edges run in opposite directions.
  EXPECT_EQ(f.graph().src()(0), f.graph().tgt()(1));
  EXPECT_EQ(f.graph().src()(1), f.graph().tgt()(0));
  EXPECT_NE(f.graph().src()(0), f.graph().tgt()(0));
  EXPECT_FALSE(cg_equal(f, cg_trace(One(), edge_generator())));
}

TEST(EdgeGenerator, NeedsOnePointBoundary) { EXPECT_THROW(edge_generator(B()), InvalidArgument); }

TEST(MarkedGraph, CompositionGluesMarks) {
  auto e = edge_generator();
  auto path = compose(e, e);
  EXPECT_EQ(path.graph().vertex_count(), 3u);
  EXPECT_EQ(path.graph().edge_count(), 2u);
  // The shared vertex is the target of the first edge and the source of the second.
  EXPECT_EQ(path.graph().tgt()(0), path.graph().src()(1));
  EXPECT_THROW(compose(e, cg_identity(B())), BoundaryMismatch);
}

TEST(MarkedGraph, IdentityIsNeutral) {
  Rng rng(71);
  for (int i = 0; i < 40; ++i) {
    auto a = random_object(rng), b = random_object(rng);
    auto x = random_marked_graph(rng, a, b);
    EXPECT_TRUE(cg_equal(compose(cg_identity(a), x), x));
    EXPECT_TRUE(cg_equal(compose(x, cg_identity(b)), x));
  }
}

TEST(MarkedGraph, MarksDistinguish) {
  auto e = edge_generator();
  auto flipped = GraphWithBoundaries(e.dom(), e.cod(), e.graph(), e.right_mark(), e.left_mark());
  EXPECT_FALSE(cg_equal(e, flipped));
}

TEST(KCospan, PreservesCompositionAndTensor) {
  Rng rng(72);
  CospanSampler co;
  for (int i = 0; i < 80; ++i) {
    auto a = co.object(rng), b = co.object(rng), c = co.object(rng);
    auto f = co.stateful(rng, a, b), g = co.stateful(rng, b, c);
    EXPECT_TRUE(cg_equal(k_cospan(st_compose(f, g)), compose(k_cospan(f), k_cospan(g))));
    EXPECT_TRUE(cg_equal(k_cospan(st_tensor(f, g)), tensor(k_cospan(f), k_cospan(g))));
  }
}

TEST(KCospan, RoundTrips) {
  Rng rng(73);
  CospanSampler co;
  for (int i = 0; i < 80; ++i) {
    auto x = random_marked_graph(rng, random_object(rng), random_object(rng));
    EXPECT_TRUE(same_tables(k_cospan(k_cospan_backward(x)), x));
    auto m = co.stateful(rng, co.object(rng), co.object(rng));
    EXPECT_TRUE(st_equal(k_cospan_backward(k_cospan(m)), m));
  }
}

TEST(KCospan, FeedbackAgreesWithDelayConstruction) {
  Rng rng(74);
  for (int i = 0; i < 40; ++i) {
    auto s = random_object(rng, 1, 3), a = random_object(rng), b = random_object(rng);
    auto x = random_marked_graph(rng, tensor(s, a), tensor(s, b));
    auto via_delay = k_cospan(feedback_from_delay<CospanInstance>(s, k_cospan_backward(x)));
    EXPECT_TRUE(cg_equal(via_delay, cg_fbk(s, x)));
  }
}

TEST(KCospan, TraceAddsNoEdges) {
  Rng rng(75);
  for (int i = 0; i < 40; ++i) {
    auto s = random_object(rng, 1, 2), a = random_object(rng), b = random_object(rng);
    auto x = random_marked_graph(rng, tensor(s, a), tensor(s, b));
    EXPECT_EQ(cg_trace(s, x).graph().edge_count(), x.graph().edge_count());
    EXPECT_EQ(cg_fbk(s, x).graph().edge_count(), x.graph().edge_count() + sum_object(s).size());
  }
}

TEST(Frobenius, GraphCospansSatisfyAllLaws) {
  auto r = check_frobenius<GraphCospanInstance>();
  EXPECT_EQ(r.results.size(), 15u);
  for (const auto& l : r.results) EXPECT_TRUE(l.passed()) << l.axiom;
}

TEST(Frobenius, CospansAndSpans) {
  for (const auto& r : {check_frobenius<CospanInstance>(), check_frobenius<SpanInstance>()})
    for (const auto& l : r.results) {
      EXPECT_TRUE(l.passed()) << l.axiom;
      EXPECT_GT(l.samples, 0u);
    }
}
