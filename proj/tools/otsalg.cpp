// Command-line front end: evaluate circuits, check laws, compare systems.
//
// Exit codes: 0 success, 1 a check failed (laws, iso), 2 usage or input error.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "otsalg/otsalg.hpp"

using namespace otsalg;
using json = nlohmann::json;

namespace {

struct Style {
  bool on = false;
  std::string paint(const std::string& s, const char* code) const {
    return on ? std::string("\x1b[") + code + "m" + s + "\x1b[0m" : s;
  }
  std::string good(const std::string& s) const { return paint(s, "32"); }
  std::string bad(const std::string& s) const { return paint(s, "31"); }
};

Style style() {
  const char* env = std::getenv("OTSALG_COLOR");
  if (env && std::string(env) == "0") return {false};
  return {isatty(STDOUT_FILENO) != 0};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

json read_json(const std::string& path) { return json::parse(read_file(path)); }

std::vector<dsl::GeneratorDef> load_generators(const std::string& path) {
  if (path.empty()) return {};
  return io::generators_from_json(read_json(path));
}

void print_ots(std::ostream& os, const OTS& x) {
  os << "vertices: " << x.vertices().size() << "\nedges: " << x.edges().size() << "\n";
  for (std::size_t e = 0; e < x.edges().size(); ++e)
    os << "  " << x.vertices().label(x.graph().src()(e)) << " -> " << x.vertices().label(x.graph().tgt()(e)) << "  "
       << x.dom().label(x.left()(e)) << " / " << x.cod().label(x.right()(e)) << "\n";
}

void print_marked(std::ostream& os, const GraphWithBoundaries& x) {
  const auto& g = x.graph();
  os << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count() << "\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    os << "  " << g.edges().label(e) << ": " << g.vertices().label(g.src()(e)) << " -> "
       << g.vertices().label(g.tgt()(e)) << "\n";
  auto marks = [&](const char* side, const Object& b, const FinFunction& m) {
    os << side << " marks:";
    for (std::size_t i = 0; i < b.size(); ++i) os << " " << b.label(i) << "=" << g.vertices().label(m(i));
    os << "\n";
  };
  marks("left", sum_object(x.dom()), x.left_mark());
  marks("right", sum_object(x.cod()), x.right_mark());
}

struct EvalOptions {
  std::string instance = "span";
  std::string in;
  std::string gen;
  std::string dot;
  std::string json_out;
};

int run_eval(const EvalOptions& o) {
  auto kind = dsl::parse_instance(o.instance);
  auto result = dsl::run_program(read_file(o.in), kind, load_generators(o.gen));
  std::string dot;
  json j;
  std::ostringstream os;
  os << "instance: " << o.instance << "\n";
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        using I = typename M::instance;
        os << "type: " << I::describe(m.dom()) << " -> " << I::describe(m.cod()) << "\n";
        os << "state: " << I::describe(m.state()) << "\n";
        if constexpr (std::is_same_v<I, SpanInstance>) {
          auto x = k_forward(m);
          print_ots(os, x);
          dot = io::to_dot(x);
          j = io::to_json(x);
        } else if constexpr (std::is_same_v<I, CospanInstance>) {
          auto x = k_cospan(m);
          print_marked(os, x);
          dot = io::to_dot(x);
          j = io::to_json(x);
        } else if constexpr (std::is_same_v<I, FinSetInstance>) {
          const auto& f = m.morph();
          os << "transitions: " << f.dom().size() << "\n";
          for (std::size_t i = 0; i < f.dom().size(); ++i) os << "  " << f.dom().label(i) << " -> " << f.cod().label(f(i)) << "\n";
          dot = io::to_dot(k_forward(SpanStateful(m.state(), Span::lift(f))));
          j = io::to_json(m);
        } else {
          const auto& f = m.morph();
          os << "matrix: " << f.rows() << "x" << f.cols() << "\n";
          for (std::size_t r = 0; r < f.rows(); ++r) {
            os << " ";
            for (std::size_t c = 0; c < f.cols(); ++c) os << " " << io::format(f(r, c));
            os << "\n";
          }
          j = io::to_json(m);
        }
      },
      result);
  std::cout << os.str();
  if (!o.dot.empty()) {
    if (dot.empty()) throw Unsupported("DOT output is not available for the " + o.instance + " instance");
    write_file(o.dot, dot);
  }
  if (!o.json_out.empty()) write_file(o.json_out, j.dump(2) + "\n");
  return 0;
}

struct LawOptions {
  std::string instance = "span";
  std::size_t samples = 200;
  std::uint64_t seed = 7;
  std::string json_out;
};

LawReport merged(std::initializer_list<LawReport> parts) {
  LawReport out;
  for (const auto& p : parts) out.results.insert(out.results.end(), p.results.begin(), p.results.end());
  return out;
}

int run_laws(const LawOptions& o) {
  auto kind = dsl::parse_instance(o.instance);
  LawReport report;
  std::string yanking;
  Object b{bool_alphabet()};
  switch (kind) {
    case dsl::InstanceKind::Span:
      report = merged({check_feedback_axioms(SpanSampler{}, o.samples, o.seed),
                       check_category_laws(SpanSampler{}, o.samples, o.seed),
                       check_delay_laws(SpanSampler{}, o.samples, o.seed), check_frobenius<SpanInstance>()});
      yanking = yanking_holds<SpanInstance>(b) ? "holds" : "fails";
      break;
    case dsl::InstanceKind::Cospan:
      report = merged({check_feedback_axioms(CospanSampler{}, o.samples, o.seed),
                       check_category_laws(CospanSampler{}, o.samples, o.seed),
                       check_delay_laws(CospanSampler{}, o.samples, o.seed), check_frobenius<CospanInstance>()});
      yanking = yanking_holds<CospanInstance>(b) ? "holds" : "fails";
      break;
    case dsl::InstanceKind::Mealy:
      report = merged({check_feedback_axioms(MealySampler{}, o.samples, o.seed),
                       check_category_laws(MealySampler{}, o.samples, o.seed)});
      break;
    case dsl::InstanceKind::Mat:
      throw Unsupported("law checking needs state equivalence, which the mat instance does not provide");
  }
  auto st = style();
  for (const auto& r : report.results) {
    std::cout << (r.passed() ? st.good("PASS") : st.bad("FAIL")) << "  " << r.axiom << "  (" << r.samples
              << " samples, " << r.failures.size() << " failures)\n";
    for (const auto& f : r.failures) std::cout << "      seed " << f.seed << ": " << f.witness << "\n";
  }
  if (!yanking.empty()) std::cout << "info  yanking on the delay " << yanking << " (feedback is not a trace)\n";
  std::cout << "seed " << o.seed << "\n";
  if (!o.json_out.empty()) {
    auto j = io::to_json(report);
    j["instance"] = o.instance;
    j["seed"] = o.seed;
    write_file(o.json_out, j.dump(2) + "\n");
  }
  return report.passed() ? 0 : 1;
}

int run_iso(const std::string& a, const std::string& b) {
  auto ja = read_json(a), jb = read_json(b);
  std::string ka = ja.value("kind", "ots"), kb = jb.value("kind", "ots");
  if (ka != kb) throw InvalidArgument("cannot compare a " + ka + " with a " + kb);
  bool same = false;
  if (ka == "ots") {
    same = ots_equal(io::ots_from_json(ja), io::ots_from_json(jb));
  } else if (ka == "marked-graph") {
    same = cg_equal(io::marked_graph_from_json(ja), io::marked_graph_from_json(jb));
  } else if (ka == "span-automaton") {
    same = aut_equal(io::span_automaton_from_json(ja), io::span_automaton_from_json(jb));
  } else if (ka == "mealy") {
    same = aut_equal(io::mealy_from_json(ja), io::mealy_from_json(jb));
  } else {
    throw InvalidArgument("iso does not handle kind '" + ka + "'");
  }
  auto st = style();
  std::cout << (same ? st.good("isomorphic") : st.bad("not isomorphic")) << "\n";
  return same ? 0 : 1;
}

struct ReachOptions {
  std::string in;
  std::string gen;
  std::string from;
  std::vector<std::string> inputs;
  std::size_t max_steps = 16;
};

OTS load_system(const std::string& path, const std::string& gen) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return io::ots_from_json(read_json(path));
  auto r = dsl::run_program(read_file(path), dsl::InstanceKind::Span, load_generators(gen));
  return k_forward(std::get<SpanStateful>(r));
}

std::size_t lookup(const Object& o, const std::string& key, const char* what) {
  for (std::size_t i = 0; i < o.size(); ++i)
    if (o.label(i) == key) return i;
  throw SymbolOutOfAlphabet(std::string("unknown ") + what + " '" + key + "'");
}

int run_reach(const ReachOptions& o) {
  auto x = load_system(o.in, o.gen);
  std::size_t start = lookup(x.vertices(), o.from, "vertex");
  std::vector<std::size_t> filter;
  for (const auto& s : o.inputs) filter.push_back(lookup(x.dom(), s, "input"));
  for (auto [v, step] : reachable(x, start, filter, o.max_steps))
    std::cout << x.vertices().label(v) << "  " << step << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open transition systems: evaluate circuits, check laws, compare systems"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* ev = app.add_subcommand("eval", "Evaluate a circuit file in an instance");
  ev->add_option("--instance", eval.instance, "span, cospan, mealy or mat")->capture_default_str();
  ev->add_option("--in", eval.in, "Circuit source (.ckt)")->required();
  ev->add_option("--gen", eval.gen, "JSON file with user generators");
  ev->add_option("--dot", eval.dot, "Write Graphviz output here");
  ev->add_option("--json", eval.json_out, "Write JSON output here");

  LawOptions laws;
  auto* lw = app.add_subcommand("laws", "Check the feedback, category and structure laws on random samples");
  lw->add_option("--instance", laws.instance, "span, cospan or mealy")->capture_default_str();
  lw->add_option("--samples", laws.samples, "Samples per law")->capture_default_str();
  lw->add_option("--seed", laws.seed, "Base seed")->capture_default_str();
  lw->add_option("--json", laws.json_out, "Write the report as JSON here");

  std::string iso_a, iso_b;
  auto* is = app.add_subcommand("iso", "Decide whether two systems in JSON files are isomorphic");
  is->add_option("a", iso_a, "First system")->required();
  is->add_option("b", iso_b, "Second system")->required();

  ReachOptions reach;
  auto* rc = app.add_subcommand("reach", "List vertices reachable from a vertex under restricted inputs");
  rc->add_option("--in", reach.in, "Circuit source (.ckt) or system (.json)")->required();
  rc->add_option("--gen", reach.gen, "JSON file with user generators");
  rc->add_option("--from", reach.from, "Start vertex label, e.g. (0,1)")->required();
  rc->add_option("--input", reach.inputs, "Allowed left label (repeatable); all when omitted");
  rc->add_option("--max-steps", reach.max_steps, "Step bound")->capture_default_str();

  std::string print_in;
  auto* pr = app.add_subcommand("print", "Parse and pretty-print a circuit file");
  pr->add_option("--in", print_in, "Circuit source (.ckt)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ev) return run_eval(eval);
    if (*lw) return run_laws(laws);
    if (*is) return run_iso(iso_a, iso_b);
    if (*rc) return run_reach(reach);
    if (*pr) {
      std::cout << dsl::print(dsl::parse(read_file(print_in)));
      return 0;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
  }
  return 2;
}
