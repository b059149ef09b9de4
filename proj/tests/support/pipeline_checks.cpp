#include "pipeline_checks.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "test_support.hpp"

namespace totalchroma::testing {
namespace {

struct RSides {
  long long a = 0;
  long long b = 0;
  long long max_degree = 0;
};

// Uncolored edges of Q inside A and inside B.
RSides r_sides(const PipelineState& s) {
  RSides out;
  std::vector<long long> deg(static_cast<std::size_t>(s.q.num_vertices()), 0);
  for (EdgeId e = 0; e < s.q.num_edges(); ++e) {
    if (!s.in_q[static_cast<std::size_t>(e)] || s.phi.is_colored(e)) continue;
    const auto& ends = s.q.edge(e);
    if (s.bip.in_a(ends.u) != s.bip.in_a(ends.v)) continue;
    (s.bip.in_a(ends.u) ? out.a : out.b) += 1;
    ++deg[static_cast<std::size_t>(ends.u)];
    ++deg[static_cast<std::size_t>(ends.v)];
  }
  out.max_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  return out;
}

std::optional<std::string> colored_outside_q(const PipelineState& s) {
  for (EdgeId e = 0; e < s.q.num_edges(); ++e)
    if (s.phi.is_colored(e) && !s.in_q[static_cast<std::size_t>(e)])
      return "edge " + std::to_string(e) + " outside Q is colored";
  return std::nullopt;
}

std::optional<std::string> m1_in_order(const PipelineState& s) {
  std::set<Color> seen;
  for (std::size_t i = 0; i < s.m1.size(); ++i) {
    const Color c = s.phi.color(s.m1[i]);
    if (c != static_cast<Color>(i + 1))
      return "M_1 edge " + std::to_string(i) + " has color " + std::to_string(c);
    seen.insert(c);
  }
  if (seen.size() != s.m1.size()) return "M_1 is not rainbow";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_step1(const PipelineState& s) {
  const auto k = static_cast<Color>(s.params.k);
  if (s.m1.size() != static_cast<std::size_t>(k)) return "|M_1| differs from k";
  if (auto bad = m1_in_order(s)) return bad;
  std::vector<long long> count(static_cast<std::size_t>(k) + 1, 0);
  for (Vertex v = 0; v < s.q.num_vertices(); ++v) {
    std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
    for (const auto& inc : s.q.incident(v)) {
      const Color c = s.phi.color(inc.edge);
      if (c >= 1 && c <= k) seen[static_cast<std::size_t>(c)] = 1;
    }
    for (Color c = 1; c <= k; ++c) count[static_cast<std::size_t>(c)] += !seen[static_cast<std::size_t>(c)];
  }
  const auto [lo, hi] = std::minmax_element(count.begin() + 1, count.end());
  if (*hi - *lo > 4) return "missing-count gap " + std::to_string(*hi - *lo) + " exceeds 4";
  if (auto bad = colored_outside_q(s)) return bad;
  return edge_clash(s.phi.host(), snapshot(s.phi));
}

std::optional<std::string> check_step3_exit(const PipelineState& s) {
  const auto k = static_cast<Color>(s.params.k);
  const auto m = static_cast<double>(s.params.m);
  const double p56 = std::pow(m, 5.0 / 6.0);
  if (auto bad = colors_are_perfect_matchings(s.q, s.in_q, s.phi, 1, k)) return bad;
  const RSides r = r_sides(s);
  if (r.a != r.b) return "|E(R_A)| = " + std::to_string(r.a) + " but |E(R_B)| = " + std::to_string(r.b);
  if (static_cast<double>(r.a) >= 4 * std::pow(m, 5.0 / 3.0)) return "R_A is too large";
  if (static_cast<double>(r.max_degree) >= p56) return "R degree " + std::to_string(r.max_degree);
  for (Vertex v = 0; v < s.q.num_vertices(); ++v) {
    long long c = 0;
    for (const auto& inc : s.q.incident(v))
      if (s.in_q[static_cast<std::size_t>(inc.edge)] && s.phi.is_colored(inc.edge) && s.crossing(inc.edge)) ++c;
    if (static_cast<double>(c) >= 2 * p56) return "crossing degree at vertex " + std::to_string(v) + " has " + std::to_string(c);
  }
  return std::nullopt;
}

std::optional<std::string> check_step4_exit(const PipelineState& s) {
  const auto k = static_cast<Color>(s.params.k);
  const auto ell = static_cast<Color>(s.params.ell);
  if (auto bad = colors_are_perfect_matchings(s.q, s.in_q, s.phi, 1, k + ell)) return bad;
  if (auto bad = m1_in_order(s)) return bad;
  return edge_clash(s.phi.host(), snapshot(s.phi));
}

void ExchangeAudit::attach(DenseRegularPipeline& p) {
  const PipelineState& s = p.state();
  colors_ = snapshot(s.phi);
  in_q_ = s.in_q;
  colored_ = std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != kUncolored; });
  const RSides r = r_sides(s);
  r_a_ = r.a;
  r_b_ = r.b;
  if (auto bad = edge_clash(s.phi.host(), colors_)) problems_.push_back("before Step 3: " + *bad);
  p.set_exchange_observer([this](const PipelineState& st) {
    if (++calls_ % stride_ == 0) audit(st);
  });
}

void ExchangeAudit::audit(const PipelineState& s) {
  ++audits_;
  const long long window = calls_ - audited_calls_;
  audited_calls_ = calls_;
  const std::string at = "exchange " + std::to_string(calls_) + ": ";
  long long colored = colored_, r_a = r_a_, r_b = r_b_;
  // Contribution of edge e to (colored, R_A, R_B) under the given state.
  auto tally = [&](EdgeId e, Color c, bool member, long long sign) {
    if (c != kUncolored) {
      colored += sign;
      return;
    }
    if (!member) return;
    const auto& ends = s.q.edge(e);
    if (s.bip.in_a(ends.u) != s.bip.in_a(ends.v)) return;
    (s.bip.in_a(ends.u) ? r_a : r_b) += sign;
  };
  for (EdgeId e = 0; e < s.q.num_edges(); ++e) {
    const auto i = static_cast<std::size_t>(e);
    const Color c = s.phi.color(e);
    const bool member = s.in_q[i] != 0;
    if (c == colors_[i] && s.in_q[i] == in_q_[i]) continue;
    tally(e, colors_[i], in_q_[i] != 0, -1);
    tally(e, c, member, +1);
    colors_[i] = c;
    in_q_[i] = s.in_q[i];
    if (c == kUncolored) continue;
    if (!member) problems_.push_back(at + "edge " + std::to_string(e) + " outside Q is colored");
    const auto& ends = s.q.edge(e);
    for (Vertex v : {ends.u, ends.v})
      for (const auto& inc : s.q.incident(v))
        if (inc.edge != e && s.phi.color(inc.edge) == c)
          problems_.push_back(at + "edges " + std::to_string(e) + " and " + std::to_string(inc.edge) + " share color " +
                              std::to_string(c));
  }
  if (colored - colored_ != window)
    problems_.push_back(at + "colored edges grew by " + std::to_string(colored - colored_) + " over " +
                        std::to_string(window) + " exchanges");
  if (r_a - r_a_ > 2 * window || r_b - r_b_ > 2 * window)
    problems_.push_back(at + "R_A or R_B grew by more than 2 per exchange");
  colored_ = colored;
  r_a_ = r_a;
  r_b_ = r_b;
}

}  // namespace totalchroma::testing
