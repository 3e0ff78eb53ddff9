#include <gtest/gtest.h>

#include "support.hpp"

using namespace otsalg;
using nlohmann::json;

namespace {

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Json, ObjectsAndFunctions) {
  Rng rng(101);
  for (int i = 0; i < 30; ++i) {
    auto a = random_object(rng), b = random_object(rng);
    auto f = random_function(rng, a, b);
    EXPECT_EQ(io::object_from_json(io::to_json(a)), a);
    EXPECT_EQ(io::function_from_json(io::to_json(f)), f);
  }
}

TEST(Json, CarrierShorthands) {
  EXPECT_EQ(io::carrier_from_json(json(3), "S", "s").size(), 3u);
  auto named = io::carrier_from_json(json::parse(R"(["p", "q"])"), "S", "s");
  EXPECT_EQ(named.labels(), (std::vector<std::string>{"p", "q"}));
  EXPECT_TRUE(io::carrier_from_json(json::array(), "S", "s").is_unit());
  EXPECT_THROW(io::carrier_from_json(json(-1), "S", "s"), InvalidArgument);
  EXPECT_THROW(io::carrier_from_json(json("x"), "S", "s"), InvalidArgument);
}

TEST(Json, SystemsRoundTrip) {
  Rng rng(102);
  for (int i = 0; i < 30; ++i) {
    auto x = random_ots(rng, random_object(rng), random_object(rng));
    auto y = io::ots_from_json(io::to_json(x));
    EXPECT_EQ(edge_multiset(y), edge_multiset(x));
    EXPECT_EQ(y.vertices().size(), x.vertices().size());
    EXPECT_TRUE(ots_equal(x, y));
  }
}

TEST(Json, MarkedGraphsRoundTrip) {
  Rng rng(103);
  for (int i = 0; i < 30; ++i) {
    auto x = random_marked_graph(rng, random_object(rng), random_object(rng));
    auto j = io::to_json(x);
    EXPECT_EQ(j["kind"], "marked-graph");
    EXPECT_TRUE(cg_equal(io::marked_graph_from_json(j), x));
  }
}

TEST(Json, AutomataRoundTrip) {
  Rng rng(104);
  for (int i = 0; i < 30; ++i) {
    auto a = random_object(rng, 1, 3), b = random_object(rng, 1, 3);
    auto m = random_mealy(rng, a, b);
    auto back = io::mealy_from_json(io::to_json(m));
    EXPECT_EQ(back.trans.table(), m.trans.table());
    EXPECT_EQ(back.space.initial, m.space.initial);
    EXPECT_EQ(back.space.final_states(), m.space.final_states());
    auto s = random_span_automaton(rng, a, b);
    auto sb = io::span_automaton_from_json(io::to_json(s));
    EXPECT_TRUE(aut_equal(sb, s));
  }
}

TEST(Json, MealyTablesAreReadable) {
  oracle::ThreeState fx;
  auto j = io::to_json(fx.machine(fx.prose));
  EXPECT_EQ(j["next"], json::parse("[[1, 2], [2, 1], [1, 1]]"));
  EXPECT_EQ(j["finals"], json::parse("[2]"));
}

TEST(Json, Rationals) {
  EXPECT_EQ(io::format(Rational(3, 6)), "1/2");
  EXPECT_EQ(io::format(Rational(-4)), "-4");
  EXPECT_EQ(io::rational_from_json(json("-2/4")), Rational(-1, 2));
  EXPECT_EQ(io::rational_from_json(json(7)), Rational(7));
  EXPECT_THROW(io::rational_from_json(json("x/2")), InvalidArgument);
}

TEST(Json, MatricesRoundTrip) {
  Rng rng(105);
  auto m = oracle::random_matrix(rng, 3, 2);
  EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
  EXPECT_EQ(io::matrix_from_json(json::parse(R"([[1, "1/2"], [0, 3]])"))(0, 1), Rational(1, 2));
  EXPECT_THROW(io::matrix_from_json(json::parse("[[1, 2], [3]]")), DimensionMismatch);
}

TEST(Json, SpanCarriesNormalForm) {
  auto j = io::to_json(Span::copy(Object{bool_alphabet()}));
  EXPECT_EQ(j["kind"], "span");
  EXPECT_EQ(j["normal_form"], json::parse("[[0, 0], [1, 3]]"));
}

TEST(Json, Generators) {
  auto gens = io::generators_from_json(json::parse(oracle::read_sample("sliding.json")));
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].name, "alpha");
  EXPECT_EQ(gens[1].cod, (dsl::ObjectExpr{"W", "B"}));
  EXPECT_EQ(gens[1].rows.size(), 2u);
}

TEST(Dot, SystemsLabelEdgesWithSignals) {
  auto dot = io::to_dot(build_latch());
  EXPECT_TRUE(contains(dot, "digraph ots"));
  EXPECT_TRUE(contains(dot, "[label=\"(1,0) / (0,1)\"]"));
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 16);
}

TEST(Dot, AutomataMarkInitialAndFinal) {
  oracle::ThreeState fx;
  auto dot = io::to_dot(fx.machine(fx.prose));
  EXPECT_TRUE(contains(dot, "start -> v0;"));
  EXPECT_TRUE(contains(dot, "v2 [shape=doublecircle"));
  EXPECT_TRUE(contains(dot, "v0 [shape=circle"));
}

TEST(Dot, MarkedGraphsDrawBoundaries) {
  auto dot = io::to_dot(edge_generator());
  EXPECT_TRUE(contains(dot, "l0 -> v0 [style=dashed"));
  EXPECT_TRUE(contains(dot, "v1 -> r0 [style=dashed"));
  EXPECT_TRUE(contains(dot, "v0 -> v1"));
}

TEST(Dot, Quoting) { EXPECT_EQ(io::quoted("a\"b\\"), "\"a\\\"b\\\\\""); }
