#pragma once

// JSON and Graphviz output, and JSON input for hand-written systems.
//
// Carriers in input files may be an integer n (elements e0..e{n-1}), a list
// of element names, or a list of alphabets {"name", "symbols"}.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "otsalg/automata.hpp"
#include "otsalg/cospangraph.hpp"
#include "otsalg/dsl.hpp"
#include "otsalg/laws.hpp"
#include "otsalg/spangraph.hpp"

namespace otsalg::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Output.

inline json to_json(const Alphabet& a) { return {{"name", a.name()}, {"symbols", a.symbols()}}; }

inline json to_json(const Object& o) {
  json out = json::array();
  for (const auto& a : o.factors()) out.push_back(to_json(a));
  return out;
}

inline json to_json(const FinFunction& f) {
  return {{"dom", to_json(f.dom())}, {"cod", to_json(f.cod())}, {"table", f.table()}};
}

inline json to_json(const Span& s) {
  json nf = json::array();
  for (auto [l, r] : normal_form(s)) nf.push_back({l, r});
  return {{"kind", "span"},          {"dom", to_json(s.dom())},        {"cod", to_json(s.cod())},
          {"head", to_json(s.head())}, {"left", s.left().table()},       {"right", s.right().table()},
          {"normal_form", nf}};
}

inline json to_json(const Cospan& c) {
  return {{"kind", "cospan"},          {"dom", to_json(c.dom())},  {"cod", to_json(c.cod())},
          {"apex", to_json(c.apex())}, {"left", c.left().table()}, {"right", c.right().table()}};
}

inline std::string format(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline json to_json(const Rational& r) { return format(r); }

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"kind", "matrix"}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

inline json to_json(const FinGraph& g) {
  return {{"vertices", to_json(g.vertices())},
          {"edges", to_json(g.edges())},
          {"src", g.src().table()},
          {"tgt", g.tgt().table()}};
}

inline json to_json(const OTS& x) {
  json j = to_json(x.graph());
  j["kind"] = "ots";
  j["dom"] = to_json(x.dom());
  j["cod"] = to_json(x.cod());
  j["left"] = x.left().table();
  j["right"] = x.right().table();
  return j;
}

inline json to_json(const GraphWithBoundaries& x) {
  json j = to_json(x.graph());
  j["kind"] = "marked-graph";
  j["dom"] = to_json(x.dom());
  j["cod"] = to_json(x.cod());
  j["left_mark"] = x.left_mark().table();
  j["right_mark"] = x.right_mark().table();
  return j;
}

inline json to_json(const AutStateSpace& s) {
  return {{"states", to_json(s.states)}, {"initial", s.initial}, {"finals", s.final_states()}};
}

inline json to_json(const MealyAutomaton& m) {
  json next = json::array(), out = json::array();
  for (std::size_t s = 0; s < m.space.states.size(); ++s) {
    json n = json::array(), o = json::array();
    for (std::size_t a = 0; a < m.inputs.size(); ++a) {
      n.push_back(m.next_state(s, a));
      o.push_back(m.output(s, a));
    }
    next.push_back(n);
    out.push_back(o);
  }
  json j = to_json(m.space);
  j["kind"] = "mealy";
  j["inputs"] = to_json(m.inputs);
  j["outputs"] = to_json(m.outputs);
  j["trans"] = m.trans.table();
  j["next"] = next;
  j["output"] = out;
  return j;
}

inline json to_json(const SpanAutomaton& a) {
  json j = to_json(a.system);
  j["kind"] = "span-automaton";
  j["initial"] = a.space.initial;
  j["finals"] = a.space.final_states();
  return j;
}

template <class I>
json to_json(const StatefulMorphism<I>& m) {
  json j{{"kind", "stateful"}, {"morph", to_json(m.morph())}};
  if constexpr (std::is_same_v<typename I::object, std::size_t>) {
    j["state"] = m.state();
    j["dom"] = m.dom();
    j["cod"] = m.cod();
  } else {
    j["state"] = to_json(m.state());
    j["dom"] = to_json(m.dom());
    j["cod"] = to_json(m.cod());
  }
  return j;
}

inline json to_json(const LawReport& r) {
  json laws = json::array();
  for (const auto& l : r.results) {
    json fails = json::array();
    for (const auto& f : l.failures) fails.push_back({{"seed", f.seed}, {"witness", f.witness}});
    laws.push_back({{"axiom", l.axiom}, {"samples", l.samples}, {"passed", l.passed()}, {"failures", fails}});
  }
  return {{"passed", r.passed()}, {"laws", laws}};
}

// ---------------------------------------------------------------------------
// Input.

inline Alphabet alphabet_from_json(const json& j) {
  return Alphabet(j.at("name").get<std::string>(), j.at("symbols").get<std::vector<std::string>>());
}

/// A carrier given as a count, a list of names, or a list of alphabets.
inline Object carrier_from_json(const json& j, const std::string& name, const std::string& prefix) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    auto n = j.get<long long>();
    if (n < 0) throw InvalidArgument("negative carrier size for " + name);
    return indexed_object(name, static_cast<std::size_t>(n), prefix);
  }
  if (!j.is_array()) throw InvalidArgument("carrier " + name + " must be a count or a list");
  if (!j.empty() && j[0].is_string()) return set_object(name, j.get<std::vector<std::string>>());
  std::vector<Alphabet> f;
  for (const auto& a : j) f.push_back(alphabet_from_json(a));
  return Object(std::move(f));
}

inline Object object_from_json(const json& j) { return carrier_from_json(j, "X", "x"); }

inline FinFunction table_from_json(const json& j, const Object& dom, const Object& cod) {
  return FinFunction(dom, cod, j.get<std::vector<std::size_t>>());
}

inline FinFunction function_from_json(const json& j) {
  auto dom = object_from_json(j.at("dom"));
  auto cod = object_from_json(j.at("cod"));
  return table_from_json(j.at("table"), dom, cod);
}

inline FinGraph graph_from_json(const json& j) {
  auto v = carrier_from_json(j.at("vertices"), "V", "v");
  auto e = carrier_from_json(j.at("edges"), "E", "e");
  return FinGraph(table_from_json(j.at("src"), e, v), table_from_json(j.at("tgt"), e, v));
}

inline OTS ots_from_json(const json& j) {
  auto g = graph_from_json(j);
  auto dom = object_from_json(j.at("dom"));
  auto cod = object_from_json(j.at("cod"));
  return OTS(g, table_from_json(j.at("left"), g.edges(), dom), table_from_json(j.at("right"), g.edges(), cod));
}

inline GraphWithBoundaries marked_graph_from_json(const json& j) {
  auto g = graph_from_json(j);
  auto dom = object_from_json(j.at("dom"));
  auto cod = object_from_json(j.at("cod"));
  return GraphWithBoundaries(dom, cod, g, table_from_json(j.at("left_mark"), sum_object(dom), g.vertices()),
                             table_from_json(j.at("right_mark"), sum_object(cod), g.vertices()));
}

inline AutStateSpace space_from_json(const json& j, const Object& states) {
  return AutStateSpace::make(states, j.value("initial", std::size_t{0}),
                             j.value("finals", std::vector<std::size_t>{}));
}

inline MealyAutomaton mealy_from_json(const json& j) {
  auto s = carrier_from_json(j.at("states"), "S", "s");
  auto a = object_from_json(j.at("inputs"));
  auto b = object_from_json(j.at("outputs"));
  return MealyAutomaton(space_from_json(j, s), a, b, table_from_json(j.at("trans"), tensor(s, a), tensor(s, b)));
}

inline SpanAutomaton span_automaton_from_json(const json& j) {
  auto x = ots_from_json(j);
  return SpanAutomaton(space_from_json(j, x.vertices()), x);
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  auto s = j.get<std::string>();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw InvalidArgument("not a rational number: " + s);
  }
}

inline Matrix matrix_from_json(const json& j) {
  const auto& rows = j.is_object() ? j.at("data") : j;
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  if (j.is_object()) {
    r = j.value("rows", r);
    c = j.value("cols", c);
  }
  std::vector<Rational> data;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged matrix rows");
    for (const auto& v : row) data.push_back(rational_from_json(v));
  }
  return Matrix(r, c, std::move(data));
}

/// Generators file: {"generators": [{"name", "dom", "cod", "rows"?, "matrix"?}]},
/// where dom and cod are lists of alphabet names and rows are [[left symbols], [right symbols]].
inline std::vector<dsl::GeneratorDef> generators_from_json(const json& j) {
  std::vector<dsl::GeneratorDef> out;
  for (const auto& g : j.at("generators")) {
    dsl::GeneratorDef d;
    d.name = g.at("name").get<std::string>();
    d.dom = g.at("dom").get<std::vector<std::string>>();
    d.cod = g.at("cod").get<std::vector<std::string>>();
    for (const auto& row : g.value("rows", json::array()))
      d.rows.emplace_back(row.at(0).get<std::vector<std::string>>(), row.at(1).get<std::vector<std::string>>());
    if (g.contains("matrix")) d.matrix = matrix_from_json(g.at("matrix"));
    out.push_back(std::move(d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graphviz.

inline std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

namespace detail {

inline void dot_edges(std::ostringstream& os, const OTS& x) {
  const auto& g = x.graph();
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    os << "  v" << g.src()(e) << " -> v" << g.tgt()(e) << " [label="
       << quoted(x.dom().label(x.left()(e)) + " / " + x.cod().label(x.right()(e))) << "];\n";
}

}  // namespace detail

/// Vertices labelled by their state tuples (or the given names), edges by "input / output".
inline std::string to_dot(const OTS& x, const std::vector<std::string>& names = {}) {
  std::ostringstream os;
  os << "digraph ots {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < x.vertices().size(); ++v)
    os << "  v" << v << " [label=" << quoted(v < names.size() ? names[v] : x.vertices().label(v)) << "];\n";
  detail::dot_edges(os, x);
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const SpanAutomaton& a, const std::vector<std::string>& names = {}) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n  start [shape=none, label=\"\"];\n";
  for (std::size_t v = 0; v < a.space.states.size(); ++v)
    os << "  v" << v << " [shape=" << (a.space.is_final(v) ? "doublecircle" : "circle")
       << ", label=" << quoted(v < names.size() ? names[v] : a.space.states.label(v)) << "];\n";
  os << "  start -> v" << a.space.initial << ";\n";
  detail::dot_edges(os, a.system);
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const MealyAutomaton& m) { return to_dot(mealy_to_span(m)); }

/// Boundary points drawn as small nodes with dashed arrows to their marked vertices.
inline std::string to_dot(const GraphWithBoundaries& x) {
  std::ostringstream os;
  const auto& g = x.graph();
  os << "digraph marked {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  v" << v << " [label=" << quoted(g.vertices().label(v)) << "];\n";
  auto dom = sum_object(x.dom()), cod = sum_object(x.cod());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    os << "  l" << i << " [shape=plaintext, label=" << quoted(dom.label(i)) << "];\n";
    os << "  l" << i << " -> v" << x.left_mark()(i) << " [style=dashed, arrowhead=none];\n";
  }
  for (std::size_t i = 0; i < cod.size(); ++i) {
    os << "  r" << i << " [shape=plaintext, label=" << quoted(cod.label(i)) << "];\n";
    os << "  v" << x.right_mark()(i) << " -> r" << i << " [style=dashed, arrowhead=none];\n";
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    os << "  v" << g.src()(e) << " -> v" << g.tgt()(e) << " [label=" << quoted(g.edges().label(e)) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace otsalg::io
