// superext: diagrams, K-polynomials and extension graphs from the command line.
//
// Exit codes: 0 ok, 2 usage, 3 validation, 4 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "superext/diagrams.hpp"
#include "superext/error.hpp"
#include "superext/extgraph.hpp"
#include "superext/graph_io.hpp"
#include "superext/kpoly.hpp"
#include "superext/parse.hpp"
#include "superext/verify.hpp"
#include "superext/weights.hpp"

using namespace superext;

namespace {

constexpr int kUsage = 2;
constexpr int kValidation = 3;
constexpr int kVerification = 4;

struct RunConfig {
  std::string command;
  std::string algebra;
  std::string block = "B0";
  std::vector<std::string> weights;
  std::optional<std::string> min;
  std::string max = "4";
  std::string kind = "k0";
  std::string format = "ascii";
  std::string output;
  bool oracle = false;
  bool ext = false;
  bool general = false;
  std::size_t cap = kDefaultEnumerationCap;

  std::string canonical() const {
    std::ostringstream o;
    o << "command=" << command << " algebra=" << algebra << " block=" << block;
    for (const auto& w : weights) o << " weight=\"" << w << "\"";
    if (command == "graph" || command == "verify") {
      if (min) o << " min=" << format_half(parse_half(*min));
      o << " max=" << format_half(parse_half(max));
      if (command == "graph") o << " kind=" << kind << " format=" << format;
      o << " cap=" << cap;
    }
    if (command == "kpoly") o << " oracle=" << (oracle ? "on" : "off") << " ext=" << (ext ? "on" : "off");
    if (command == "diagram") o << " general=" << (general ? "on" : "off");
    return o.str();
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_diagram(const RunConfig& cfg, std::ostream& out) {
  if (cfg.general) {
    const GeneralQWeight w = parse_general_q(cfg.weights.at(0));
    const WeightDiagram d = qdiagram_of(w);
    out << "diagram: " << render_ascii(d) << "\n";
    out << "arcs: " << render_arches(arcs(d)) << "\n";
    out << "core: " << core_of(w).to_string() << "\n";
    out << "atypicality: " << atypicality(w) << "\n";
    out << "stable: " << yes_no(is_stable(w)) << "\n";
    const auto [ctx, red] = reduce(w);
    out << "reduced: " << ctx.name() << ": " << format_weight(red) << "\n";
    return 0;
  }
  const AlgebraContext ctx = parse_algebra(cfg.algebra, cfg.block);
  const BlockWeight w = parse_block_weight(ctx, cfg.weights.at(0));
  const WeightDiagram d = diagram_of(w);
  out << "diagram: " << render_ascii(d) << "\n";
  out << "arcs: " << render_arches(arcs(d)) << "\n";
  out << "tail: " << tail(w) << "\n";
  out << "pari: " << pari_abs(w) << "\n";
  out << "weight: " << to_epsilon_delta(w) << "\n";
  return 0;
}

int cmd_kpoly(const RunConfig& cfg, std::ostream& out) {
  const AlgebraContext ctx = parse_algebra(cfg.algebra, cfg.block);
  const BlockWeight lambda = parse_block_weight(ctx, cfg.weights.at(0));
  const BlockWeight nu = parse_block_weight(ctx, cfg.weights.at(1));
  const KPoly k = kpoly(lambda, nu);
  out << "K=" << k.to_string() << ", k0=" << (lambda == nu ? k.constant_term() : k_zero(lambda, nu));
  int rc = 0;
  if (cfg.oracle) {
    if (ctx.family != Family::Q) throw Error(ErrorCode::UsageError, "--oracle needs a q algebra");
    const KPoly r = kpoly_q_recursive(lambda, nu);
    if (r == k) {
      out << ", MATCH";
    } else {
      out << ", MISMATCH (recursion " << r.to_string() << ")";
      rc = kVerification;
    }
  }
  out << "\n";
  if (lambda != nu) out << "k_hat=" << k_hat(lambda, nu).to_string() << ", s_zero=" << s_zero(lambda, nu) << "\n";
  if (cfg.ext) out << "ext=" << ext_block(lambda, nu).to_string() << "\n";
  return rc;
}

std::vector<BlockWeight> window_of(const RunConfig& cfg, const AlgebraContext& ctx) {
  const int hi = parse_half(cfg.max);
  const std::optional<int> lo = cfg.min ? std::optional<int>(parse_half(*cfg.min)) : std::nullopt;
  return enumerate_block(ctx, hi, lo, cfg.cap);
}

int cmd_graph(const RunConfig& cfg, std::ostream& out) {
  const AlgebraContext ctx = parse_algebra(cfg.algebra, cfg.block);
  const auto ws = window_of(cfg, ctx);
  ExtGraph g;
  if (cfg.kind == "k0") {
    g = k0_graph(ws);
  } else if (cfg.kind == "ext") {
    g = ext_graph(ws);
  } else {
    if (ctx.family != Family::Q) throw Error(ErrorCode::UsageError, "ext1 graphs are defined for q only");
    std::vector<GeneralQWeight> lifted;
    for (const auto& w : ws) lifted.push_back(lift_block_weight(w));
    g = ext1_graph_q(lifted);
  }
  std::string text;
  if (cfg.format == "json")
    text = graph_to_json(g);
  else if (cfg.format == "dot")
    text = graph_to_dot(g);
  else
    text = graph_to_ascii(g);
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw Error(ErrorCode::UsageError, "cannot write " + cfg.output);
    f << text;
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const AlgebraContext ctx = parse_algebra(cfg.algebra, cfg.block);
  Window w{ctx, parse_half(cfg.max), cfg.min ? std::optional<int>(parse_half(*cfg.min)) : std::nullopt};
  window_of(cfg, ctx);  // cap check before the heavy work
  std::vector<CheckResult> results = verify_block(w);
  CheckResult iso{"window-iso"};
  for (int p = 0; p <= 1; ++p) iso.merge(check_window_isomorphism(std::max(1, ctx.n), p));
  results.push_back(iso);
  results.push_back(check_golden_tables());
  results.push_back(check_closed_formulas());
  results.push_back(check_graph_figures());
  results.push_back(check_general_q_examples());
  bool all = true;
  for (const auto& r : results) {
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << "  " << (r.checked - r.failed) << "/" << r.checked << "\n";
    for (const auto& f : r.failures) out << "    " << f << "\n";
    all = all && r.ok();
  }
  return all ? 0 : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superext: weight diagrams, K-polynomials and extension graphs"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool explain = false;
  app.add_flag("--explain", explain, "print the canonical configuration and exit");

  auto common = [&](CLI::App* sub) {
    sub->add_option("algebra", cfg.algebra, "gl(n|n), osp(M|2n) or q(m)")->required();
    sub->add_option("--block", cfg.block, "B0 or B1/2")->check(CLI::IsMember({"B0", "B1/2", "BHalf"}));
    sub->add_flag("--explain", explain, "print the canonical configuration and exit");
  };

  auto* diagram = app.add_subcommand("diagram", "weight diagram and arches of one weight");
  common(diagram);
  diagram->add_option("weight", cfg.weights, "coordinates, e.g. \"2,1\" or \"+ 1,1\"")->required()->expected(1);
  diagram->add_flag("--general", cfg.general, "read a general q_m weight");

  auto* kp = app.add_subcommand("kpoly", "K-polynomial of a pair of weights");
  common(kp);
  kp->add_option("weights", cfg.weights, "lambda and nu")->required()->expected(2);
  kp->add_flag("--oracle", cfg.oracle, "compare with the q recursion");
  kp->add_flag("--ext", cfg.ext, "also print ext(lambda;nu)");

  auto* graph = app.add_subcommand("graph", "K0, ext or Ext^1 graph over a window");
  common(graph);
  graph->add_option("--kind", cfg.kind)->check(CLI::IsMember({"k0", "ext", "ext1"}));
  graph->add_option("--format", cfg.format)->check(CLI::IsMember({"ascii", "json", "dot"}));
  graph->add_option("-o,--output", cfg.output, "write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run the property suite over a window");
  common(verify);

  for (auto* sub : {graph, verify}) {
    sub->add_option_function<std::string>("--min", [&](const std::string& s) { cfg.min = s; }, "lower bound");
    sub->add_option("--max", cfg.max, "upper bound");
    sub->add_option("--cap", cfg.cap, "enumeration cap");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    if (explain) {
      std::cout << cfg.canonical() << "\n";
      return 0;
    }
    std::ostringstream out;
    int rc = 0;
    if (cfg.command == "diagram") rc = cmd_diagram(cfg, out);
    if (cfg.command == "kpoly") rc = cmd_kpoly(cfg, out);
    if (cfg.command == "graph") rc = cmd_graph(cfg, out);
    if (cfg.command == "verify") rc = cmd_verify(cfg, out);
    std::cout << out.str();
    return rc;
  } catch (const Error& e) {
    std::cerr << "superext: " << e.what() << "\n";
    return e.code() == ErrorCode::UsageError ? kUsage : kValidation;
  } catch (const std::exception& e) {
    std::cerr << "superext: " << e.what() << "\n";
    return kValidation;
  }
}
