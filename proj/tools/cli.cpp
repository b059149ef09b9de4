#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "totalchroma/extension.hpp"
#include "totalchroma/generators.hpp"
#include "totalchroma/io.hpp"
#include "totalchroma/totalizer.hpp"

namespace totalchroma::cli {
namespace {

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TOTALCHROMA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw PreconditionError(std::string("TOTALCHROMA_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

PipelineMode parse_mode(const std::string& s) {
  return s == "strict" ? PipelineMode::kStrict : PipelineMode::kOpportunistic;
}

struct TotalArgs {
  std::string input;
  std::string algorithm = "general";
  double eps = 0.4;
  std::string mode = "opportunistic";
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string report_path;
  bool timings = false;
};

int cmd_total(const TotalArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = parse_graph(read_text_file(a.input));
  if (a.algorithm == "general") {
    const TotalColoring tc = total_color_general(g);
    const Color budget = general_total_budget(g);
    if (auto bad = verify_total_coloring(tc, g, budget)) {
      err << "error: produced coloring is invalid: " << bad->describe() << "\n";
      return kExitError;
    }
    if (!a.out_path.empty()) write_text_file(a.out_path, total_coloring_to_json(tc, g));
    if (!a.report_path.empty()) {
      nlohmann::json j = {{"algorithm", "general"},     {"n", g.num_vertices()}, {"max_degree", g.max_degree()},
                          {"budget", budget},           {"k", tc.k},             {"colors_used", tc.colors_used()},
                          {"outcome", "colored"}};
      write_text_file(a.report_path, j.dump(2));
    }
    out << "general: n=" << g.num_vertices() << " Delta=" << g.max_degree() << " colors=" << tc.colors_used()
        << " budget=" << budget << "\n";
    return kExitOk;
  }

  const DenseRegularOutcome res = total_color_dense_regular(g, a.eps, parse_mode(a.mode), resolve_seed(a.seed));
  if (!a.report_path.empty()) write_text_file(a.report_path, res.report.to_json(a.timings));
  if (const auto* f = std::get_if<StepFailure>(&res.result)) {
    out << "step failure at " << f->describe() << "\n";
    for (const auto& c : res.report.ledger)
      out << "  step " << c.step << (c.holds ? "  ok    " : "  FAILS ") << c.name << ": " << c.lhs << " "
          << c.relation << " " << c.rhs << "\n";
    return kExitStepFailure;
  }
  const auto& tc = std::get<TotalColoring>(res.result);
  const auto budget = static_cast<Color>(res.report.params.r + 2);
  if (auto bad = verify_total_coloring(tc, g, budget)) {
    err << "error: produced coloring is invalid: " << bad->describe() << "\n";
    return kExitError;
  }
  if (!a.out_path.empty()) write_text_file(a.out_path, total_coloring_to_json(tc, g));
  out << "dense: n=" << g.num_vertices() << " r=" << res.report.params.r << " colors=" << tc.colors_used()
      << " budget=" << budget << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, std::optional<Color> budget,
               std::ostream& out) {
  const Graph g = parse_graph(read_text_file(graph_path));
  const TotalColoring tc = total_coloring_from_json(read_text_file(coloring_path), g);
  const Color b = budget.value_or(tc.k);
  if (auto bad = verify_total_coloring(tc, g, b)) {
    out << "invalid: " << bad->describe() << "\n";
    return kExitError;
  }
  out << "valid: colors=" << tc.colors_used() << " budget=" << b << "\n";
  return kExitOk;
}

struct GenArgs {
  Vertex n = 0;
  std::optional<Vertex> r;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;
  std::string out_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.r.has_value() == a.p.has_value()) throw PreconditionError("gen needs exactly one of --r and --p");
  const std::uint64_t seed = resolve_seed(a.seed);
  const Graph g = a.r ? gen_random_regular(a.n, *a.r, seed) : gen_gnp(a.n, *a.p, seed);
  const std::string text = serialize_graph(g);
  if (a.out_path.empty())
    out << text;
  else
    write_text_file(a.out_path, text);
  return kExitOk;
}

struct BenchArgs {
  std::vector<Vertex> sizes;
  int trials = 1;
  double ratio = 0.7;
  std::string mode = "opportunistic";
  std::optional<std::uint64_t> seed;
  std::string report_path;
};

// Degree near ratio*n that admits an r-regular graph and stays below 3n/4.
Vertex bench_degree(Vertex n, double ratio) {
  auto r = static_cast<Vertex>(ratio * n + 0.5);
  while (r > 0 && (4LL * r >= 3LL * n || (static_cast<long long>(n) * r) % 2 != 0)) --r;
  if (2LL * r <= n) throw PreconditionError("no admissible degree above n/2 for n = " + std::to_string(n));
  return r;
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const std::uint64_t base = resolve_seed(a.seed);
  std::ostringstream csv;
  csv << "n,r,trial,seed,mode,outcome,colors_used,budget,failed_step,failed_inequality";
  for (int s = 0; s <= 5; ++s) csv << ",step" << s << "_ms";
  csv << ",total_ms,exchanges\n";
  int ok = 0, runs = 0;
  for (Vertex n : a.sizes) {
    const Vertex r = bench_degree(n, a.ratio);
    const double eps = std::min(0.99, 2.0 * r / n - 1);
    for (int t = 0; t < a.trials; ++t) {
      const std::uint64_t seed = base + static_cast<std::uint64_t>(t);
      const Graph g = gen_random_regular(n, r, seed);
      const auto t0 = std::chrono::steady_clock::now();
      const DenseRegularOutcome res = total_color_dense_regular(g, eps, parse_mode(a.mode), seed);
      const double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      ++runs;
      std::string outcome = "step_failure";
      Color used = 0;
      if (const auto* tc = std::get_if<TotalColoring>(&res.result)) {
        if (verify_total_coloring(*tc, g, r + 2)) throw InternalError("bench produced an invalid coloring");
        outcome = "colored";
        used = tc->colors_used();
        ++ok;
      }
      csv << n << "," << r << "," << t << "," << seed << "," << a.mode << "," << outcome << "," << used << ","
          << r + 2 << ",";
      if (res.report.failure)
        csv << res.report.failure->step << "," << csv_quote(res.report.failure->inequality);
      else
        csv << ",";
      std::vector<double> ms(6, 0.0);
      for (const auto& [step, v] : res.report.step_ms) ms[static_cast<std::size_t>(step)] = v;
      for (double v : ms) csv << "," << v;
      csv << "," << total << "," << res.report.exchanges << "\n";
    }
  }
  if (a.report_path.empty())
    out << csv.str();
  else
    write_text_file(a.report_path, csv.str());
  out << "bench: " << ok << "/" << runs << " runs produced a verified coloring\n";
  return kExitOk;
}

struct ExtendArgs {
  std::string input;
  std::vector<EdgeId> matching;
  std::optional<Vertex> x;
  std::optional<Color> palette;
  std::string out_path;
};

int cmd_extend(const ExtendArgs& a, std::ostream& out, std::ostream& err) {
  const Hypergraph h = parse_hypergraph(read_text_file(a.input));
  ExtensionOptions opts;
  opts.palette = a.palette;
  const ExtensionResult res = extend_hypergraph(h, a.matching, a.x, opts);
  if (auto bad = verify_edge_coloring(res.coloring)) {
    err << "error: produced coloring is invalid: " << bad->describe() << "\n";
    return kExitError;
  }
  if (!a.out_path.empty()) write_text_file(a.out_path, edge_coloring_to_json(res.coloring));
  out << "extend: edges=" << h.num_edges() << " palette=" << res.coloring.palette()
      << " rainbow=" << res.rainbow.size() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total coloring of graphs"};
  app.require_subcommand(1);

  TotalArgs total;
  auto* c_total = app.add_subcommand("total", "Totally color a graph");
  c_total->add_option("input", total.input, "Graph file")->required();
  c_total->add_option("--algorithm", total.algorithm)->check(CLI::IsMember({"general", "dense"}));
  c_total->add_option("--eps", total.eps, "Density margin for --algorithm dense");
  c_total->add_option("--mode", total.mode)->check(CLI::IsMember({"strict", "opportunistic"}));
  c_total->add_option("--seed", total.seed);
  c_total->add_option("--out", total.out_path, "Coloring JSON");
  c_total->add_option("--report", total.report_path, "Run report JSON");
  c_total->add_flag("--timings", total.timings, "Include step timings in the report");

  std::string v_graph, v_coloring;
  std::optional<Color> v_budget;
  auto* c_verify = app.add_subcommand("verify", "Check a total coloring");
  c_verify->add_option("graph", v_graph)->required();
  c_verify->add_option("coloring", v_coloring)->required();
  c_verify->add_option("--budget", v_budget);

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "Generate a random graph");
  c_gen->add_option("--n", gen.n)->required();
  c_gen->add_option("--r", gen.r, "Degree of a random regular graph");
  c_gen->add_option("--p", gen.p, "Edge probability of G(n, p)");
  c_gen->add_option("--seed", gen.seed);
  c_gen->add_option("--out", gen.out_path);

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Run the dense pipeline over several sizes");
  c_bench->add_option("--sizes", bench.sizes)->required()->delimiter(',');
  c_bench->add_option("--trials", bench.trials)->check(CLI::PositiveNumber);
  c_bench->add_option("--ratio", bench.ratio, "Degree as a fraction of n");
  c_bench->add_option("--mode", bench.mode)->check(CLI::IsMember({"strict", "opportunistic"}));
  c_bench->add_option("--seed", bench.seed);
  c_bench->add_option("--report", bench.report_path, "CSV output");

  ExtendArgs ext;
  auto* c_ext = app.add_subcommand("extend", "Edge-color a hypergraph with a rainbow matching");
  c_ext->add_option("input", ext.input, "Hypergraph file")->required();
  c_ext->add_option("--matching", ext.matching)->delimiter(',');
  c_ext->add_option("--x", ext.x);
  c_ext->add_option("--palette", ext.palette);
  c_ext->add_option("--out", ext.out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*c_total) return cmd_total(total, out, err);
    if (*c_verify) return cmd_verify(v_graph, v_coloring, v_budget, out);
    if (*c_gen) return cmd_gen(gen, out);
    if (*c_bench) return cmd_bench(bench, out);
    if (*c_ext) return cmd_extend(ext, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace totalchroma::cli
