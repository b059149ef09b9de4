#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "totalchroma/coloring.hpp"
#include "totalchroma/graph.hpp"

namespace totalchroma {

/// Delta + 2 * ceil(n / (Delta + 1)).
Color general_total_budget(const Graph& g);

/// Total coloring within general_total_budget(g): an equitable (Delta+1)
/// vertex coloring is turned into a hypergraph whose large classes are
/// hyperedges and whose singleton classes hang off an extra vertex, and the
/// hypergraph extension colors everything at once. Complete graphs, where every
/// class is a singleton, are colored directly.
TotalColoring total_color_general(const Graph& g);

enum class PipelineMode { kStrict, kOpportunistic };

/// One inequality of the dense-regular construction evaluated on an instance.
struct InequalityCheck {
  int step = 0;
  std::string name;
  std::string relation;  // "<", "<=", ">", ">=", "=="
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
  /// Depends only on (n, r, eps) rather than on the run's state.
  bool a_priori = false;
};

/// The construction stopped at `step` because `inequality` failed (strict
/// mode) or a concrete sub-step found nothing to work with.
struct StepFailure {
  int step = 0;
  std::string inequality;
  double lhs = 0;
  double rhs = 0;
  std::string detail;
  std::string describe() const;
};

/// Instance constants: n = 2m (even) or 2m - 1 (odd),
/// k = ceil((r + 2 + m^{2/3}) / 2) + 4 and l = ceil(m^{5/6}) + 1.
struct PipelineParams {
  Vertex n = 0;
  long long r = 0;
  long long m = 0;
  long long k = 0;
  long long ell = 0;
  bool odd = false;
  double eps = 0;
  static PipelineParams compute(Vertex n, long long r, double eps);
};

/// Inequalities that depend only on the instance constants, in step order.
std::vector<InequalityCheck> a_priori_inequalities(const PipelineParams& p);

struct RunReport {
  PipelineParams params;
  PipelineMode mode = PipelineMode::kOpportunistic;
  std::uint64_t seed = 0;
  std::vector<InequalityCheck> ledger;
  std::vector<std::pair<int, double>> step_ms;
  std::uint64_t balance_switches = 0;
  std::uint64_t exchanges = 0;
  std::uint64_t short_paths = 0;  // five-edge alternating paths
  std::uint64_t long_paths = 0;   // seven-edge alternating paths
  /// (|E(R_A)|, |E(R_B)|) after each color class is completed in Step 3.
  std::vector<std::pair<std::size_t, std::size_t>> r_sizes;
  std::vector<Color> color_permutation;
  std::optional<StepFailure> failure;
  Color colors_used = 0;
  /// Timings vary between runs, so they are left out unless asked for.
  std::string to_json(bool with_timings = false) const;
};

/// All bookkeeping of the dense-regular construction. Q is stored with every
/// edge that can ever belong to it; `in_q` marks the current members.
struct PipelineState {
  PipelineParams params;
  /// G's edges keep their ids, then M, then the edges at x.
  Graph q;
  EdgeId g_edges = 0;
  std::vector<char> in_q;
  Vertex x = kNoVertex;  // n; a vertex of q only when n is odd
  /// Edge of q joining x to v, kNoEdge when there is none.
  std::vector<EdgeId> x_edge;
  Bipartition bip;
  /// pairs[i-1] = (x_i, y_i) with x_i in A. The first |M| pairs are M.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  /// 1-based pair index of every vertex of q (0 for x).
  std::vector<int> pair_of;
  std::vector<EdgeId> m_edges;
  std::vector<EdgeId> m_star;
  std::vector<char> in_m_star;  // by pair index
  /// m1[c-1] is the rainbow edge colored c.
  std::vector<EdgeId> m1;
  std::vector<EdgeId> mx[4];
  PartialEdgeColoring phi;
  std::vector<char> reserved;
  std::vector<long long> r_deg_a;
  std::vector<long long> r_deg_b;
  std::size_t r_a_size = 0;
  std::size_t r_b_size = 0;

  bool is_m_edge(EdgeId e) const;
  bool crossing(EdgeId e) const;
};

/// The five-step Delta+2 construction for r-regular G with
/// (1+eps)n/2 <= r < 3n/4. Steps can be driven one at a time; each returns
/// false once a StepFailure has been recorded.
class DenseRegularPipeline {
 public:
  DenseRegularPipeline(const Graph& g, double eps, PipelineMode mode, std::uint64_t seed = 0);

  bool step0();
  bool step1();
  bool step2();
  bool step3();
  bool step4();
  bool step5();
  /// Steps 0-5. Opportunistic mode first rules out instances whose Step 5
  /// palette is already too small by counting.
  bool run();

  const PipelineState& state() const { return s_; }
  const RunReport& report() const { return report_; }
  const std::optional<TotalColoring>& result() const { return result_; }
  /// Called after every Step 3 exchange.
  void set_exchange_observer(std::function<void(const PipelineState&)> f) { observer_ = std::move(f); }

 private:
  bool begin(int step);
  bool check(int step, const std::string& name, double lhs, const std::string& rel, double rhs);
  bool fail(int step, const std::string& what, double lhs, double rhs, const std::string& detail);
  bool check_a_priori(int step);
  void uncolor(EdgeId e);
  bool good(EdgeId e) const;
  bool usable(EdgeId e) const;
  EdgeId partner_edge(Vertex w, Color i) const;
  bool connect(Vertex from, Vertex to, Color i, EdgeId forbidden, EdgeId out[3]) const;
  bool find_mixed_path(Vertex a, Vertex b, Color i, std::vector<EdgeId>& to_color, std::vector<EdgeId>& to_clear);
  bool find_same_side_path(Vertex a, Vertex a2, Color i, std::vector<EdgeId>& to_color,
                           std::vector<EdgeId>& to_clear);
  void timed(int step, std::chrono::steady_clock::time_point t0);

  const Graph& g_;
  PipelineMode mode_;
  std::uint64_t seed_;
  PipelineState s_;
  RunReport report_;
  std::optional<TotalColoring> result_;
  std::function<void(const PipelineState&)> observer_;
  std::vector<InequalityCheck> a_priori_;
  int done_ = -1;
  // Step 3 scratch.
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> cross_;
  std::vector<char> excluded_;
  std::vector<char> near_mx3_b_;
  double good_limit_ = 0;
};

struct DenseRegularOutcome {
  std::variant<TotalColoring, StepFailure> result;
  RunReport report;
  bool ok() const { return std::holds_alternative<TotalColoring>(result); }
};

/// Runs DenseRegularPipeline to completion. PreconditionError when g is not
/// regular or r is outside [(1+eps)n/2, 3n/4).
DenseRegularOutcome total_color_dense_regular(const Graph& g, double eps, PipelineMode mode, std::uint64_t seed = 0);

}  // namespace totalchroma
