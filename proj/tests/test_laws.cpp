#include <gtest/gtest.h>

#include "support.hpp"

using namespace otsalg;

namespace {

/// Equality that refuses to look for a state isomorphism.
struct StrictTheory : StTheory<SpanInstance> {
  static bool equal(const SpanStateful& m, const SpanStateful& n) {
    return m.state() == n.state() && span_equal(m.morph(), n.morph());
  }
};

struct StrictSampler : SpanSampler {
  using theory = StrictTheory;
};

}  // namespace

TEST(LawReport, NamesAndCounts) {
  auto r = check_feedback_axioms(SpanSampler{}, 10, 1);
  ASSERT_EQ(r.results.size(), 5u);
  for (const char* name : {"A1 tightening", "A2 vanishing", "A3 joining", "A4 strength", "A5 sliding"}) {
    const auto* l = r.find(name);
    ASSERT_NE(l, nullptr) << name;
    EXPECT_EQ(l->samples, 10u);
  }
  EXPECT_EQ(r.find("yanking"), nullptr);
  EXPECT_TRUE(r.passed());
}

TEST(LawReport, StrictEqualityBreaksSliding) {
  auto r = check_feedback_axioms(StrictSampler{}, 100, 7);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find("A5 sliding")->passed());
  EXPECT_TRUE(r.find("A2 vanishing")->passed());
}

TEST(LawReport, FailuresAreReproducible) {
  auto a = check_feedback_axioms(StrictSampler{}, 50, 11);
  auto b = check_feedback_axioms(StrictSampler{}, 50, 11);
  const auto* fa = a.find("A5 sliding");
  const auto* fb = b.find("A5 sliding");
  ASSERT_FALSE(fa->failures.empty());
  ASSERT_EQ(fa->failures.size(), fb->failures.size());
  for (std::size_t i = 0; i < fa->failures.size(); ++i) {
    EXPECT_EQ(fa->failures[i].seed, fb->failures[i].seed);
    EXPECT_EQ(fa->failures[i].witness, fb->failures[i].witness);
  }
  auto c = check_feedback_axioms(StrictSampler{}, 50, 12);
  EXPECT_NE(c.find("A5 sliding")->failures.front().seed, fa->failures.front().seed);
}

TEST(Laws, GraphCospanFrobeniusNames) {
  auto r = check_frobenius<GraphCospanInstance>(2);
  for (const char* name : {"special", "frobenius left", "snake right", "cap from counit"}) {
    ASSERT_NE(r.find(name), nullptr) << name;
    EXPECT_TRUE(r.find(name)->passed());
  }
}

TEST(Laws, YankingSeparatesFeedbackFromTrace) {
  Object b{bool_alphabet()};
  EXPECT_FALSE(yanking_holds<SpanInstance>(b));
  EXPECT_FALSE(yanking_holds<CospanInstance>(b));
  EXPECT_TRUE(yanking_holds<SpanInstance>(Object{point_alphabet()}));
}

TEST(Laws, JsonReportCarriesFailures) {
  auto r = check_feedback_axioms(StrictSampler{}, 20, 7);
  auto j = io::to_json(r);
  bool saw_failure = false;
  for (const auto& law : j["laws"]) {
    if (law["axiom"] == "A5 sliding") {
      EXPECT_FALSE(law["passed"].get<bool>());
      saw_failure = !law["failures"].empty();
    }
  }
  EXPECT_TRUE(saw_failure);
}
