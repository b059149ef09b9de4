#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "totalchroma/equitable.hpp"
#include "totalchroma/extension.hpp"
#include "totalchroma/matching.hpp"
#include "totalchroma/partition.hpp"
#include "totalchroma/totalizer.hpp"

namespace totalchroma {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = (b != 0 && r > kSaturated / b) ? kSaturated : r * b;
  return r;
}

// ceil(m^{e/p}), exact while m^e fits in 64 bits.
long long ceil_root(long long m, int e, int p) {
  const auto target = saturating_pow(static_cast<std::uint64_t>(m), e);
  auto t = static_cast<long long>(std::ceil(std::pow(static_cast<long double>(m), static_cast<long double>(e) / p)));
  if (target == kSaturated) return t;
  while (t > 0 && saturating_pow(static_cast<std::uint64_t>(t - 1), p) >= target) --t;
  while (saturating_pow(static_cast<std::uint64_t>(t), p) < target) ++t;
  return t;
}

struct Powers {
  double p23, p56, p53;
  explicit Powers(long long m) {
    const auto md = static_cast<double>(m);
    p23 = std::cbrt(md * md);
    p56 = std::pow(md, 5.0 / 6.0);
    p53 = md * p23;
  }
};

std::string sz(std::size_t v) { return std::to_string(v); }

}  // namespace

std::string StepFailure::describe() const {
  std::string s = "step " + std::to_string(step) + ": " + inequality + " (lhs " + std::to_string(lhs) + ", rhs " +
                  std::to_string(rhs) + ")";
  if (!detail.empty()) s += ": " + detail;
  return s;
}

PipelineParams PipelineParams::compute(Vertex n, long long r, double eps) {
  PipelineParams p;
  p.n = n;
  p.r = r;
  p.eps = eps;
  p.odd = n % 2 == 1;
  p.m = (static_cast<long long>(n) + 1) / 2;
  // 2k' >= r + 2 + m^{2/3} exactly when 2k' - r - 2 >= ceil(m^{2/3}).
  const long long twice = r + 2 + ceil_root(p.m, 2, 3);
  p.k = (twice + 1) / 2 + 4;
  p.ell = ceil_root(p.m, 5, 6) + 1;
  return p;
}

std::vector<InequalityCheck> a_priori_inequalities(const PipelineParams& p) {
  const Powers w(p.m);
  const auto m = static_cast<double>(p.m);
  const auto r = static_cast<double>(p.r);
  const auto k = static_cast<double>(p.k);
  const auto ell = static_cast<double>(p.ell);
  const double target = 0.5 * (1 + 0.5 * p.eps) * m;
  const double side_degree = 0.5 * ((1 + p.eps) * m - w.p23);
  std::vector<InequalityCheck> out;
  auto add = [&](int step, std::string name, double lhs, std::string rel, double rhs) {
    InequalityCheck c{step, std::move(name), std::move(rel), lhs, rhs, false, true};
    if (c.relation == "<") c.holds = lhs < rhs;
    if (c.relation == "<=") c.holds = lhs <= rhs;
    if (c.relation == ">") c.holds = lhs > rhs;
    if (c.relation == ">=") c.holds = lhs >= rhs;
    out.push_back(std::move(c));
  };
  if (p.odd) {
    add(1, "k-1 <= |M|", k - 1, "<=", m - 2);
    add(1, "|M*| < k-1", 0.5 * (r - 2), "<", k - 1);
    add(2, "(r-2)/2 - 2(m^{2/3}+5) - 4l >= 1", 0.5 * (r - 2) - 2 * (w.p23 + 5) - 4 * ell, ">=", 1);
  } else {
    add(1, "k <= |M|", k, "<=", m - 1);
  }
  add(3, "16m^{5/6} + 3m^{2/3} + 2l < 19m^{5/6}", 16 * w.p56 + 3 * w.p23 + 2 * ell, "<", 19 * w.p56);
  add(3, "|N_1(v)| lower bound > (1+eps/2)m/2", side_degree - 22 * w.p56, ">", target);
  add(4, "delta(H_i) lower bound > (1+eps/2)m/2", side_degree - 4 * w.p56 - 2 * (4 * w.p56 + 1) - 2, ">", target);
  add(5, "r - k - l > (1+eps/2)m/2", r - k - ell, ">", target);
  add(5, "m - 1 - k + (m^{2/3}+5) + l < m/2", m - 1 - k + (w.p23 + 5) + ell, "<", 0.5 * m);
  return out;
}

bool PipelineState::is_m_edge(EdgeId e) const {
  return e >= g_edges && e < g_edges + static_cast<EdgeId>(m_edges.size());
}

bool PipelineState::crossing(EdgeId e) const {
  const auto& ends = q.edge(e);
  return bip.in_a(ends.u) != bip.in_a(ends.v);
}

DenseRegularPipeline::DenseRegularPipeline(const Graph& g, double eps, PipelineMode mode, std::uint64_t seed)
    : g_(g), mode_(mode), seed_(seed) {
  const Vertex n = g.num_vertices();
  const auto reg = g.regular_degree();
  if (n == 0 || !reg) throw PreconditionError("the dense pipeline needs a nonempty regular graph");
  if (!(eps > 0 && eps < 1)) throw PreconditionError("eps must lie in (0, 1)");
  const auto r = static_cast<long long>(*reg);
  if (4 * r >= 3 * static_cast<long long>(n))
    throw PreconditionError("r = " + std::to_string(r) + " >= 3n/4: graphs this dense are outside the pipeline's range");
  if (static_cast<double>(r) + 1e-9 * n < 0.5 * (1 + eps) * n)
    throw PreconditionError("r = " + std::to_string(r) + " is below (1+eps)n/2");
  if (n % 2 == 1 && r % 2 == 1) throw PreconditionError("odd n with odd r is not a regular graph");
  s_.params = PipelineParams::compute(n, r, eps);
  report_.params = s_.params;
  report_.mode = mode;
  report_.seed = seed;
  a_priori_ = a_priori_inequalities(s_.params);
}

bool DenseRegularPipeline::begin(int step) {
  if (report_.failure) return false;
  if (done_ != step - 1)
    throw PreconditionError("step " + std::to_string(step) + " requested after step " + std::to_string(done_));
  return check_a_priori(step);
}

void DenseRegularPipeline::timed(int step, Clock::time_point t0) {
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  report_.step_ms.emplace_back(step, ms);
  done_ = step;
}

bool DenseRegularPipeline::check(int step, const std::string& name, double lhs, const std::string& rel, double rhs) {
  bool holds = lhs == rhs;
  if (rel == "<") holds = lhs < rhs;
  if (rel == "<=") holds = lhs <= rhs;
  if (rel == ">") holds = lhs > rhs;
  if (rel == ">=") holds = lhs >= rhs;
  report_.ledger.push_back({step, name, rel, lhs, rhs, holds, false});
  if (!holds && mode_ == PipelineMode::kStrict) return fail(step, name, lhs, rhs, "measured value violates the bound");
  return true;
}

bool DenseRegularPipeline::check_a_priori(int step) {
  for (const auto& c : a_priori_) {
    if (c.step != step) continue;
    report_.ledger.push_back(c);
    if (!c.holds && mode_ == PipelineMode::kStrict)
      return fail(step, c.name, c.lhs, c.rhs, "does not hold for n = " + std::to_string(s_.params.n));
  }
  return true;
}

bool DenseRegularPipeline::fail(int step, const std::string& what, double lhs, double rhs, const std::string& detail) {
  if (!report_.failure) report_.failure = StepFailure{step, what, lhs, rhs, detail};
  return false;
}

void DenseRegularPipeline::uncolor(EdgeId e) {
  s_.phi.unassign(e);
  if (s_.crossing(e)) return;
  const auto& ends = s_.q.edge(e);
  auto& deg = s_.bip.in_a(ends.u) ? s_.r_deg_a : s_.r_deg_b;
  ++deg[static_cast<std::size_t>(ends.u)];
  ++deg[static_cast<std::size_t>(ends.v)];
  ++(s_.bip.in_a(ends.u) ? s_.r_a_size : s_.r_b_size);
}

// ---------------------------------------------------------------- Step 0

bool DenseRegularPipeline::step0() {
  if (!begin(0)) return false;
  const auto t0 = Clock::now();
  const PipelineParams& p = s_.params;
  const Vertex n = p.n;
  const Powers w(p.m);

  Matching spine;
  try {
    spine = spine_matching(g_);
  } catch (const CoverageShortfall& e) {
    return fail(0, "complement matching leaves < 4 vertices unsaturated", static_cast<double>(e.unsaturated()), 4,
                e.what());
  }
  const double coverage = static_cast<double>(n) - static_cast<double>(n) / static_cast<double>(n - p.r);
  if (!check(0, "|V(M)| >= n - n/(n-r)", 2.0 * static_cast<double>(spine.size()), ">=", coverage)) return false;
  const std::vector<Vertex> mates = spine.mates(n);
  std::vector<Vertex> loose;
  for (Vertex v = 0; v < n; ++v)
    if (mates[static_cast<std::size_t>(v)] == kNoVertex) loose.push_back(v);
  if (loose.size() != (p.odd ? 3U : 2U))
    throw InternalError("spine matching left " + sz(loose.size()) + " vertices unsaturated");

  const Vertex nq = p.odd ? n + 1 : n;
  s_.q = Graph(nq);
  for (const auto& e : g_.edges()) s_.q.add_edge(e.u, e.v);
  s_.g_edges = g_.num_edges();
  std::vector<EdgeId> m_ids;
  for (const auto& e : spine.edges) m_ids.push_back(s_.q.add_edge(e.u, e.v));
  s_.x_edge.assign(static_cast<std::size_t>(nq), kNoEdge);
  const std::size_t star = p.odd ? static_cast<std::size_t>(p.r - 2) / 2 : 0;
  if (star > spine.size()) throw InternalError("M* larger than M");
  if (p.odd) {
    s_.x = n;
    for (Vertex v = 0; v < n; ++v) s_.x_edge[static_cast<std::size_t>(v)] = s_.q.add_edge(s_.x, v);
  }
  s_.in_q.assign(static_cast<std::size_t>(s_.q.num_edges()), 1);
  if (p.odd) {
    // x starts adjacent to V(M*) and the three unsaturated vertices only.
    std::vector<char> near(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < star; ++i) near[static_cast<std::size_t>(spine.edges[i].u)] = near[static_cast<std::size_t>(spine.edges[i].v)] = 1;
    for (Vertex v : loose) near[static_cast<std::size_t>(v)] = 1;
    for (Vertex v = 0; v < n; ++v)
      s_.in_q[static_cast<std::size_t>(s_.x_edge[static_cast<std::size_t>(v)])] = near[static_cast<std::size_t>(v)];
  }

  std::vector<EdgeEnds> pairs(spine.edges.begin(), spine.edges.end());
  if (p.odd) {
    pairs.push_back(EdgeEnds::normalized(s_.x, loose[0]));
    pairs.push_back(EdgeEnds::normalized(loose[1], loose[2]));
  } else {
    pairs.push_back(EdgeEnds::normalized(loose[0], loose[1]));
  }
  Graph present(nq);
  for (EdgeId e = 0; e < s_.q.num_edges(); ++e)
    if (s_.in_q[static_cast<std::size_t>(e)]) present.add_edge(s_.q.edge(e).u, s_.q.edge(e).v);

  PartitionOptions popt;
  popt.seed = seed_;
  Bipartition bip;
  try {
    bip = balanced_partition(present, pairs, popt);
  } catch (const RetryExhausted& e) {
    bip = e.best();
  }
  if (p.odd && bip.in_b(s_.x)) {
    std::vector<bool> flipped(static_cast<std::size_t>(nq));
    for (Vertex v = 0; v < nq; ++v) flipped[static_cast<std::size_t>(v)] = bip.in_b(v);
    bip = Bipartition(std::move(flipped));
  }
  s_.bip = bip;
  if (!check(0, "P3: |d_A(v) - d_B(v)| <= m^{2/3}", static_cast<double>(max_degree_imbalance(present, bip)), "<=",
             w.p23))
    return false;

  s_.pairs.clear();
  for (const auto& e : pairs) s_.pairs.emplace_back(bip.in_a(e.u) ? e.u : e.v, bip.in_a(e.u) ? e.v : e.u);
  if (p.odd && s_.pairs[static_cast<std::size_t>(p.m - 2)].first != s_.x)
    throw InternalError("x is not the A-end of its pair");
  s_.m_edges = m_ids;
  s_.pair_of.assign(static_cast<std::size_t>(nq), 0);
  for (std::size_t i = 0; i < s_.pairs.size(); ++i) {
    s_.pair_of[static_cast<std::size_t>(s_.pairs[i].first)] = static_cast<int>(i + 1);
    s_.pair_of[static_cast<std::size_t>(s_.pairs[i].second)] = static_cast<int>(i + 1);
  }
  if (p.odd) s_.pair_of[static_cast<std::size_t>(s_.x)] = 0;
  s_.in_m_star.assign(s_.pairs.size() + 1, 0);
  s_.m_star.clear();
  for (std::size_t i = 0; i < star; ++i) {
    s_.in_m_star[i + 1] = 1;
    s_.m_star.push_back(m_ids[i]);
  }

  // Degree bounds inside the sides, and |E(Q_A)| = |E(Q_B)|.
  std::vector<long long> side_deg(static_cast<std::size_t>(nq), 0);
  long long ea = 0, eb = 0;
  for (const auto& e : present.edges()) {
    if (bip.in_a(e.u) != bip.in_a(e.v)) continue;
    ++side_deg[static_cast<std::size_t>(e.u)];
    ++side_deg[static_cast<std::size_t>(e.v)];
    ++(bip.in_a(e.u) ? ea : eb);
  }
  const auto [lo, hi] = std::minmax_element(side_deg.begin(), side_deg.end());
  if (!check(0, "delta(Q_A), delta(Q_B) >= (r - m^{2/3})/2", static_cast<double>(*lo), ">=",
             0.5 * (static_cast<double>(p.r) - w.p23)))
    return false;
  if (!check(0, "Delta(Q_A), Delta(Q_B) <= (r + 2 + m^{2/3})/2", static_cast<double>(*hi), "<=",
             0.5 * (static_cast<double>(p.r) + 2 + w.p23)))
    return false;
  if (!check(0, "|E(Q_A)| = |E(Q_B)|", static_cast<double>(ea), "==", static_cast<double>(eb))) return false;

  s_.phi = PartialEdgeColoring(s_.q, static_cast<Color>(p.k));
  s_.reserved.assign(static_cast<std::size_t>(s_.q.num_edges()), 0);
  s_.r_deg_a.assign(static_cast<std::size_t>(nq), 0);
  s_.r_deg_b.assign(static_cast<std::size_t>(nq), 0);
  s_.r_a_size = s_.r_b_size = 0;
  timed(0, t0);
  return true;
}

// ---------------------------------------------------------------- Step 1

bool DenseRegularPipeline::step1() {
  if (!begin(1)) return false;
  const auto t0 = Clock::now();
  const PipelineParams& p = s_.params;
  const Powers w(p.m);
  const auto k = static_cast<Color>(p.k);
  const std::size_t from_m = p.odd ? static_cast<std::size_t>(k) - 1 : static_cast<std::size_t>(k);
  if (from_m > s_.m_edges.size())
    return fail(1, p.odd ? "k-1 <= |M|" : "k <= |M|", static_cast<double>(from_m),
                static_cast<double>(s_.m_edges.size()), "M is too small to hold M_1");
  if (p.odd && !check(1, "|M*| < k-1", static_cast<double>(s_.m_star.size()), "<", static_cast<double>(k - 1)))
    return false;

  std::vector<EdgeId> m1(s_.m_edges.begin(), s_.m_edges.begin() + static_cast<std::ptrdiff_t>(from_m));
  if (p.odd) m1.push_back(s_.x_edge[static_cast<std::size_t>(s_.pairs[static_cast<std::size_t>(p.m - 1)].first)]);

  const Vertex nq = s_.q.num_vertices();
  Graph qab(nq);
  std::vector<EdgeId> to_q;
  std::vector<EdgeId> ab_of(static_cast<std::size_t>(s_.q.num_edges()), kNoEdge);
  auto take = [&](EdgeId e) {
    if (ab_of[static_cast<std::size_t>(e)] != kNoEdge) return;
    ab_of[static_cast<std::size_t>(e)] = qab.add_edge(s_.q.edge(e).u, s_.q.edge(e).v);
    to_q.push_back(e);
  };
  for (EdgeId e = 0; e < s_.q.num_edges(); ++e)
    if (s_.in_q[static_cast<std::size_t>(e)] && !s_.crossing(e)) take(e);
  for (EdgeId e : m1) take(e);
  std::vector<EdgeId> m1_ab;
  for (EdgeId e : m1) m1_ab.push_back(ab_of[static_cast<std::size_t>(e)]);

  const auto bound = static_cast<double>(qab.max_degree()) + 3;
  if (!check(1, "Delta(Q_AB) + 3 <= k", bound, "<=", k)) return false;
  ExtensionOptions opts;
  opts.palette = k;
  opts.allow_below_bound = bound > k;
  PartialEdgeColoring phi0;
  try {
    phi0 = extend_hypergraph(Hypergraph::from_graph(qab), m1_ab, std::nullopt, opts).coloring;
    const BalanceStats bs = balance_missing(phi0, m1_ab);
    report_.balance_switches = bs.switches;
  } catch (const InternalError& e) {
    return fail(1, "k-edge-coloring of Q_AB with M_1 rainbow", bound, k, e.what());
  }
  if (!check(1, "missing-count gap <= 4", static_cast<double>(missing_gap(phi0)), "<=", 4)) return false;

  // Rename so that the i-th edge of M_1 carries color i.
  std::vector<Color> perm(static_cast<std::size_t>(k), kUncolored);
  for (std::size_t i = 0; i < m1_ab.size(); ++i) perm[static_cast<std::size_t>(phi0.color(m1_ab[i]) - 1)] = static_cast<Color>(i + 1);
  report_.color_permutation = perm;
  for (EdgeId e = 0; e < qab.num_edges(); ++e)
    s_.phi.assign(to_q[static_cast<std::size_t>(e)], perm[static_cast<std::size_t>(phi0.color(e) - 1)]);
  s_.m1 = m1;

  std::size_t worst_v = 0;
  std::vector<std::size_t> per_color(static_cast<std::size_t>(k) + 1, 0);
  for (Vertex v = 0; v < nq; ++v) {
    const auto miss = s_.phi.missing(v).to_vector();
    worst_v = std::max(worst_v, miss.size());
    for (Color c : miss) ++per_color[static_cast<std::size_t>(c)];
  }
  if (!check(1, "|missing(v)| <= m^{2/3} + 5", static_cast<double>(worst_v), "<=", w.p23 + 5)) return false;
  const auto worst_c = *std::max_element(per_color.begin(), per_color.end());
  if (!check(1, "|missing^-1(i)| < 4m^{2/3}", static_cast<double>(worst_c), "<", 4 * w.p23)) return false;
  timed(1, t0);
  return true;
}

// ---------------------------------------------------------------- Step 2

bool DenseRegularPipeline::step2() {
  if (!begin(2)) return false;
  const auto t0 = Clock::now();
  const PipelineParams& p = s_.params;
  if (!p.odd) {
    timed(2, t0);
    return true;
  }
  const Powers w(p.m);
  const auto k = static_cast<Color>(p.k);
  const Vertex x = s_.x;
  auto xe = [&](Vertex v) { return s_.x_edge[static_cast<std::size_t>(v)]; };
  auto pair = [&](int i) { return s_.pairs[static_cast<std::size_t>(i - 1)]; };
  const int star_pairs = static_cast<int>(k) - 1;  // M* lives among the first k-1 pairs

  const std::vector<Color> miss_x = s_.phi.missing(x).to_vector();
  if (!check(2, "|missing(x)| <= m^{2/3} + 5", static_cast<double>(miss_x.size()), "<=", w.p23 + 5)) return false;

  // Move every color missing at x onto an edge of M*.
  std::size_t displaced = 0;
  for (Color i : miss_x) {
    if (i >= k) throw InternalError("color " + std::to_string(i) + " missing at x lies on xx_m");
    if (s_.in_m_star[static_cast<std::size_t>(i)]) continue;
    int j = 0;
    for (int t = 1; t <= star_pairs && j == 0; ++t)
      if (s_.in_m_star[static_cast<std::size_t>(t)] && !s_.phi.is_missing(x, t)) j = t;
    if (j == 0) return fail(2, "M* edge with a color present at x", 0, 1, "no candidate for color " + std::to_string(i));
    const auto [xj, yj] = pair(j);
    const auto [xi, yi] = pair(i);
    const Color c = s_.phi.color(xe(xj));
    if (c == kUncolored) throw InternalError("edge x x_j is uncolored");
    s_.phi.unassign(xe(xj));
    s_.in_q[static_cast<std::size_t>(xe(xj))] = 0;
    s_.in_q[static_cast<std::size_t>(xe(yj))] = 0;
    s_.in_q[static_cast<std::size_t>(xe(xi))] = 1;
    s_.in_q[static_cast<std::size_t>(xe(yi))] = 1;
    s_.in_m_star[static_cast<std::size_t>(j)] = 0;
    s_.in_m_star[static_cast<std::size_t>(i)] = 1;
    const EdgeId clash = s_.phi.edge_with_color(xi, c);
    if (clash != kNoEdge) {
      uncolor(clash);
      ++displaced;
    }
    s_.phi.assign(xe(xi), c);
  }
  if (!check(2, "edges uncolored while clearing x <= m^{2/3} + 5", static_cast<double>(displaced), "<=", w.p23 + 5)) return false;

  std::vector<int> sets[4];
  std::vector<char> blocked(static_cast<std::size_t>(k) + 1, 0);
  // Colors still missing at x go onto the far edges of their M* pairs.
  for (Color i : s_.phi.missing(x).to_vector()) {
    if (!s_.in_m_star[static_cast<std::size_t>(i)]) throw InternalError("color missing at x is not on M*");
    sets[0].push_back(i);
  }
  for (int i : sets[0]) {
    uncolor(s_.m_edges[static_cast<std::size_t>(i - 1)]);
    s_.phi.assign(xe(pair(i).second), i);
    blocked[static_cast<std::size_t>(i)] = 1;
  }
  // Their partners at x free up the M_1 edges of the same colors.
  for (int i : sets[0]) {
    const Color c = s_.phi.color(xe(pair(i).first));
    if (c == kUncolored || c >= k) throw InternalError("x x_i has no M-colored partner");
    sets[1].push_back(c);
    blocked[static_cast<std::size_t>(c)] = 1;
  }
  for (int c : sets[1]) uncolor(s_.m_edges[static_cast<std::size_t>(c - 1)]);
  // Choosing x_jy_j forces the M_1 edge colored phi(xx_j) into
  // M_x^4, so the picks must be independent in j -> phi(xx_j). That map is
  // injective, hence a union of paths and cycles; alternate nodes along each
  // component give a largest disjoint choice.
  std::vector<Color> next(static_cast<std::size_t>(k), 0);
  std::vector<char> cand(static_cast<std::size_t>(k), 0), has_pred(static_cast<std::size_t>(k), 0);
  for (int j = 1; j <= star_pairs; ++j)
    cand[static_cast<std::size_t>(j)] = s_.in_m_star[static_cast<std::size_t>(j)] && !blocked[static_cast<std::size_t>(j)];
  for (int j = 1; j <= star_pairs; ++j) {
    if (!cand[static_cast<std::size_t>(j)]) continue;
    const Color c = s_.phi.color(xe(pair(j).first));
    if (c == kUncolored || c >= k || blocked[static_cast<std::size_t>(c)])
      throw InternalError("x x_j carries an unexpected color");
    if (cand[static_cast<std::size_t>(c)]) {
      next[static_cast<std::size_t>(j)] = c;
      has_pred[static_cast<std::size_t>(c)] = 1;
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  auto walk = [&](int head, bool cycle) {
    std::vector<int> comp;
    for (int j = head; j != 0 && !seen[static_cast<std::size_t>(j)]; j = next[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      comp.push_back(j);
    }
    const std::size_t usable_len = cycle && comp.size() % 2 == 1 ? comp.size() - 1 : comp.size();
    for (std::size_t t = 0; t < usable_len && sets[2].size() < static_cast<std::size_t>(p.ell); t += 2) {
      sets[2].push_back(comp[t]);
      sets[3].push_back(s_.phi.color(xe(pair(comp[t]).first)));
    }
  };
  for (int j = 1; j <= star_pairs; ++j)
    if (cand[static_cast<std::size_t>(j)] && !has_pred[static_cast<std::size_t>(j)]) walk(j, false);
  for (int j = 1; j <= star_pairs; ++j)
    if (cand[static_cast<std::size_t>(j)] && !seen[static_cast<std::size_t>(j)]) walk(j, true);
  if (sets[2].size() < static_cast<std::size_t>(p.ell))
    return fail(2, "|M_x^3| = l", static_cast<double>(sets[2].size()), static_cast<double>(p.ell),
                "M* has too few edges for the disjoint choice of M_x^3 and M_x^4");
  for (int t : {2, 3})
    for (int c : sets[t]) uncolor(s_.m_edges[static_cast<std::size_t>(c - 1)]);

  for (int t = 0; t < 4; ++t) {
    s_.mx[t].clear();
    for (int c : sets[t]) {
      s_.mx[t].push_back(s_.m_edges[static_cast<std::size_t>(c - 1)]);
      const EdgeId now = s_.phi.edge_with_color(x, c);
      if (now == kNoEdge) throw InternalError("color " + std::to_string(c) + " is missing at x after Step 2");
      s_.m1[static_cast<std::size_t>(c - 1)] = now;
    }
  }
  s_.m_star.clear();
  for (int t = 1; t <= star_pairs; ++t)
    if (s_.in_m_star[static_cast<std::size_t>(t)]) s_.m_star.push_back(s_.m_edges[static_cast<std::size_t>(t - 1)]);
  const std::size_t removed = sets[0].size() + sets[1].size() + sets[2].size() + sets[3].size();
  if (!check(2, "uncolored M-edges <= 2(m^{2/3}+5) + 2l", static_cast<double>(removed), "<=",
             2 * (w.p23 + 5) + 2 * static_cast<double>(p.ell)))
    return false;
  timed(2, t0);
  return true;
}

// ---------------------------------------------------------------- Step 3

bool DenseRegularPipeline::good(EdgeId e) const {
  const auto& ends = s_.q.edge(e);
  for (Vertex v : {ends.u, ends.v}) {
    const auto i = static_cast<std::size_t>(v);
    if (static_cast<double>(s_.r_deg_a[i]) >= good_limit_ || static_cast<double>(s_.r_deg_b[i]) >= good_limit_) return false;
    if (near_mx3_b_[i]) return false;
  }
  return true;
}

bool DenseRegularPipeline::usable(EdgeId e) const {
  const auto i = static_cast<std::size_t>(e);
  return s_.in_q[i] && !s_.reserved[i] && !s_.phi.is_colored(e) && s_.crossing(e) && !s_.q.edge(e).contains(s_.x);
}

// The good i-colored edge at w staying on w's side, when its far end may be used.
EdgeId DenseRegularPipeline::partner_edge(Vertex w, Color i) const {
  const EdgeId f = s_.phi.edge_with_color(w, i);
  if (f == kNoEdge || s_.crossing(f) || !good(f)) return kNoEdge;
  if (excluded_[static_cast<std::size_t>(s_.q.edge(f).other(w))]) return kNoEdge;
  return f;
}

// from -u- b2 =i= b1 -u- to: out = {from b2, b2 b1, b1 to}.
bool DenseRegularPipeline::connect(Vertex from, Vertex to, Color i, EdgeId forbidden, EdgeId out[3]) const {
  for (const auto& [b2, e1] : cross_[static_cast<std::size_t>(from)]) {
    if (excluded_[static_cast<std::size_t>(b2)] || s_.phi.is_colored(e1)) continue;
    const EdgeId f = partner_edge(b2, i);
    if (f == kNoEdge || f == forbidden) continue;
    const Vertex b1 = s_.q.edge(f).other(b2);
    const auto e2 = s_.q.find_edge(to, b1);
    if (!e2 || !usable(*e2)) continue;
    out[0] = e1;
    out[1] = f;
    out[2] = *e2;
    return true;
  }
  return false;
}

bool DenseRegularPipeline::find_mixed_path(Vertex a, Vertex b, Color i, std::vector<EdgeId>& to_color,
                                           std::vector<EdgeId>& to_clear) {
  // a -u- b1 =i= b2 -u- a2 =i= a1 -u- b
  for (const auto& [a1, e0] : cross_[static_cast<std::size_t>(b)]) {
    if (excluded_[static_cast<std::size_t>(a1)] || s_.phi.is_colored(e0)) continue;
    const EdgeId fa = partner_edge(a1, i);
    if (fa == kNoEdge) continue;
    EdgeId tail[3];
    if (!connect(s_.q.edge(fa).other(a1), a, i, kNoEdge, tail)) continue;
    to_color = {e0, tail[0], tail[2]};
    to_clear = {fa, tail[1]};
    return true;
  }
  return false;
}

bool DenseRegularPipeline::find_same_side_path(Vertex a, Vertex a_star, Color i, std::vector<EdgeId>& to_color,
                                               std::vector<EdgeId>& to_clear) {
  // a -u- b1 =i= b2 -u- a2 =i= a2* -u- b2* =i= b1* -u- a*
  for (const auto& [b1s, e0] : cross_[static_cast<std::size_t>(a_star)]) {
    if (excluded_[static_cast<std::size_t>(b1s)] || s_.phi.is_colored(e0)) continue;
    const EdgeId fs = partner_edge(b1s, i);
    if (fs == kNoEdge) continue;
    const Vertex b2s = s_.q.edge(fs).other(b1s);
    for (const auto& [a2s, e1] : cross_[static_cast<std::size_t>(b2s)]) {
      if (excluded_[static_cast<std::size_t>(a2s)] || s_.phi.is_colored(e1)) continue;
      const EdgeId fa = partner_edge(a2s, i);
      if (fa == kNoEdge) continue;
      EdgeId tail[3];
      if (!connect(s_.q.edge(fa).other(a2s), a, i, fs, tail)) continue;
      to_color = {e0, e1, tail[0], tail[2]};
      to_clear = {fs, fa, tail[1]};
      return true;
    }
  }
  return false;
}

bool DenseRegularPipeline::step3() {
  if (!begin(3)) return false;
  const auto t0 = Clock::now();
  const PipelineParams& p = s_.params;
  const Powers w(p.m);
  const auto k = static_cast<Color>(p.k);
  const Vertex nq = s_.q.num_vertices();
  const auto nqs = static_cast<std::size_t>(nq);

  for (EdgeId e : s_.m_edges)
    if (!s_.phi.is_colored(e)) s_.reserved[static_cast<std::size_t>(e)] = 1;
  if (p.odd)
    for (int t : {static_cast<int>(p.m) - 1, static_cast<int>(p.m)})
      s_.reserved[static_cast<std::size_t>(s_.x_edge[static_cast<std::size_t>(s_.pairs[static_cast<std::size_t>(t - 1)].second)])] = 1;

  cross_.assign(nqs, {});
  for (EdgeId e = 0; e < s_.q.num_edges(); ++e) {
    const auto i = static_cast<std::size_t>(e);
    if (!s_.in_q[i] || s_.reserved[i] || !s_.crossing(e) || s_.q.edge(e).contains(s_.x)) continue;
    const auto& ends = s_.q.edge(e);
    cross_[static_cast<std::size_t>(ends.u)].emplace_back(ends.v, e);
    cross_[static_cast<std::size_t>(ends.v)].emplace_back(ends.u, e);
  }
  for (auto& row : cross_) std::sort(row.begin(), row.end());
  excluded_.assign(nqs, 0);
  near_mx3_b_.assign(nqs, 0);
  if (p.odd) {
    excluded_[static_cast<std::size_t>(s_.x)] = 1;
    for (EdgeId e : s_.mx[2]) {
      const auto& ends = s_.q.edge(e);
      for (Vertex v : {ends.u, ends.v}) {
        excluded_[static_cast<std::size_t>(v)] = 1;
        if (s_.bip.in_b(v)) near_mx3_b_[static_cast<std::size_t>(v)] = 1;
      }
    }
  }
  good_limit_ = w.p56 - 1;

  std::size_t incidences = 0;
  for (Vertex v = 0; v < nq; ++v) incidences += s_.phi.missing(v).size();
  if (!check(3, "MCC pairs < 2m^{5/3}", static_cast<double>(incidences) / 2, "<", 2 * w.p53)) return false;

  std::vector<EdgeId> to_color, to_clear;
  for (Color i = 1; i <= k; ++i) {
    const auto& ends = s_.q.edge(s_.m1[static_cast<std::size_t>(i - 1)]);
    const char saved[2] = {excluded_[static_cast<std::size_t>(ends.u)], excluded_[static_cast<std::size_t>(ends.v)]};
    excluded_[static_cast<std::size_t>(ends.u)] = excluded_[static_cast<std::size_t>(ends.v)] = 1;

    std::vector<Vertex> side[2];
    for (Vertex v = 0; v < nq; ++v)
      if (s_.phi.is_missing(v, i)) side[s_.bip.in_a(v) ? 0 : 1].push_back(v);
    std::vector<std::pair<Vertex, Vertex>> mcc;
    const std::size_t mixed = std::min(side[0].size(), side[1].size());
    for (std::size_t t = 0; t < mixed; ++t) mcc.emplace_back(side[0][t], side[1][t]);
    for (const auto& rest : side) {
      if ((rest.size() - mixed) % 2 != 0)
        throw InternalError("color " + std::to_string(i) + " is missing at an odd number of vertices");
      for (std::size_t t = mixed; t + 1 < rest.size(); t += 2) mcc.emplace_back(rest[t], rest[t + 1]);
    }

    for (const auto& [a, b] : mcc) {
      const bool same = s_.bip.in_a(a) == s_.bip.in_a(b);
      const bool found = same ? find_same_side_path(a, b, i, to_color, to_clear)
                              : find_mixed_path(s_.bip.in_a(a) ? a : b, s_.bip.in_a(a) ? b : a, i, to_color, to_clear);
      if (!found) {
        excluded_[static_cast<std::size_t>(ends.u)] = saved[0];
        excluded_[static_cast<std::size_t>(ends.v)] = saved[1];
        return fail(3, "alternating path for an MCC pair", 0, 1,
                    "color " + std::to_string(i) + ", pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
      for (EdgeId e : to_clear) uncolor(e);
      for (EdgeId e : to_color) s_.phi.assign(e, i);
      ++report_.exchanges;
      ++(same ? report_.long_paths : report_.short_paths);
      if (observer_) observer_(s_);
    }
    excluded_[static_cast<std::size_t>(ends.u)] = saved[0];
    excluded_[static_cast<std::size_t>(ends.v)] = saved[1];
    report_.r_sizes.emplace_back(s_.r_a_size, s_.r_b_size);
  }

  for (Vertex v = 0; v < nq; ++v)
    if (!s_.phi.missing(v).empty()) throw InternalError("vertex " + std::to_string(v) + " still misses a color after Step 3");
  if (!check(3, "|E(R_A)| = |E(R_B)|", static_cast<double>(s_.r_a_size), "==", static_cast<double>(s_.r_b_size)))
    return false;
  if (!check(3, "|E(R_A)| < 4m^{5/3}", static_cast<double>(std::max(s_.r_a_size, s_.r_b_size)), "<", 4 * w.p53))
    return false;
  long long max_r = 0;
  for (std::size_t v = 0; v < nqs; ++v) max_r = std::max({max_r, s_.r_deg_a[v], s_.r_deg_b[v]});
  if (!check(3, "Delta(R_A), Delta(R_B) < m^{5/6}", static_cast<double>(max_r), "<", w.p56)) return false;
  std::size_t max_cross = 0;
  for (Vertex v = 0; v < nq; ++v) {
    std::size_t c = 0;
    for (const auto& inc : s_.q.incident(v))
      if (s_.in_q[static_cast<std::size_t>(inc.edge)] && s_.phi.is_colored(inc.edge) && s_.crossing(inc.edge)) ++c;
    max_cross = std::max(max_cross, c);
  }
  if (!check(3, "colored Q[A,B]-degree < 2m^{5/6}", static_cast<double>(max_cross), "<", 2 * w.p56)) return false;
  timed(3, t0);
  return true;
}

// ---------------------------------------------------------------- Step 4

bool DenseRegularPipeline::step4() {
  if (!begin(4)) return false;
  const auto t0 = Clock::now();
  const PipelineParams& p = s_.params;
  const auto k = static_cast<Color>(p.k);
  const auto ell = static_cast<Color>(p.ell);
  const Vertex nq = s_.q.num_vertices();

  Graph r_side[2] = {Graph(nq), Graph(nq)};
  std::vector<EdgeId> to_q[2];
  for (EdgeId e = 0; e < s_.q.num_edges(); ++e) {
    if (!s_.in_q[static_cast<std::size_t>(e)] || s_.phi.is_colored(e) || s_.crossing(e)) continue;
    const auto& ends = s_.q.edge(e);
    const int t = s_.bip.in_a(ends.u) ? 0 : 1;
    r_side[t].add_edge(ends.u, ends.v);
    to_q[t].push_back(e);
  }
  const auto need = static_cast<double>(std::max(r_side[0].max_degree(), r_side[1].max_degree())) + 1;
  if (!check(4, "Delta(R_A u R_B) + 1 <= l", need, "<=", ell)) return false;
  if (need > ell) return fail(4, "Delta(R_A u R_B) + 1 <= l", need, ell, "too few colors for a Vizing coloring");
  if (r_side[0].num_edges() != r_side[1].num_edges())
    return fail(4, "|E(R_A)| = |E(R_B)|", r_side[0].num_edges(), r_side[1].num_edges(), "class sizes cannot be matched");

  // Color each side separately, balance, then pair classes of equal size.
  s_.phi.extend_palette(k + ell);
  for (int t = 0; t < 2; ++t) {
    PartialEdgeColoring c = vizing_edge_coloring(r_side[t], ell);
    balance_class_sizes(c);
    std::vector<std::size_t> count(static_cast<std::size_t>(ell), 0);
    for (EdgeId e = 0; e < r_side[t].num_edges(); ++e) ++count[static_cast<std::size_t>(c.color(e) - 1)];
    std::vector<Color> order(static_cast<std::size_t>(ell));
    for (Color i = 0; i < ell; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](Color a, Color b) {
      return count[static_cast<std::size_t>(a)] > count[static_cast<std::size_t>(b)];
    });
    std::vector<Color> rename(static_cast<std::size_t>(ell));
    for (Color j = 0; j < ell; ++j) rename[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] = k + 1 + j;
    for (EdgeId e = 0; e < r_side[t].num_edges(); ++e)
      s_.phi.assign(to_q[t][static_cast<std::size_t>(e)], rename[static_cast<std::size_t>(c.color(e) - 1)]);
  }

  std::vector<EdgeId> candidates;
  for (EdgeId e = 0; e < s_.q.num_edges(); ++e)
    if (s_.in_q[static_cast<std::size_t>(e)] && s_.crossing(e) && !s_.is_m_edge(e) && !s_.q.edge(e).contains(s_.x))
      candidates.push_back(e);
  std::vector<Vertex> ys;
  if (p.odd) {
    for (EdgeId e : s_.mx[2]) ys.push_back(s_.bip.in_b(s_.q.edge(e).u) ? s_.q.edge(e).u : s_.q.edge(e).v);
    std::sort(ys.begin(), ys.end());
  }

  double worst_degree = std::numeric_limits<double>::infinity();
  std::vector<Vertex> local(static_cast<std::size_t>(nq), kNoVertex);
  for (Color t = 0; t < ell; ++t) {
    const Color i = k + 1 + t;
    if (p.odd) {
      const Vertex y = ys[static_cast<std::size_t>(t)];
      const EdgeId e = s_.x_edge[static_cast<std::size_t>(y)];
      if (!s_.in_q[static_cast<std::size_t>(e)] || s_.phi.is_colored(e) || !s_.phi.is_missing(y, i))
        return fail(4, "x y available for color k+j", 0, 1, "vertex " + std::to_string(y));
      s_.phi.assign(e, i);
    }
    std::vector<Vertex> verts;
    std::vector<bool> side_a;
    std::size_t in_a = 0;
    for (Vertex v = 0; v < nq; ++v) {
      local[static_cast<std::size_t>(v)] = kNoVertex;
      if (!s_.phi.is_missing(v, i)) continue;
      local[static_cast<std::size_t>(v)] = static_cast<Vertex>(verts.size());
      verts.push_back(v);
      side_a.push_back(s_.bip.in_a(v));
      in_a += s_.bip.in_a(v) ? 1 : 0;
    }
    if (2 * in_a != verts.size())
      return fail(4, "|A - A_i| = |B - B_i|", static_cast<double>(in_a), static_cast<double>(verts.size() - in_a),
                  "color " + std::to_string(i));
    Graph h(static_cast<Vertex>(verts.size()));
    std::vector<EdgeId> h_to_q;
    for (EdgeId e : candidates) {
      if (s_.phi.is_colored(e)) continue;
      const auto& ends = s_.q.edge(e);
      const Vertex lu = local[static_cast<std::size_t>(ends.u)], lv = local[static_cast<std::size_t>(ends.v)];
      if (lu == kNoVertex || lv == kNoVertex) continue;
      h.add_edge(lu, lv);
      h_to_q.push_back(e);
    }
    if (!verts.empty()) worst_degree = std::min(worst_degree, static_cast<double>(h.min_degree()));
    try {
      const Matching f = bipartite_perfect_matching(h, Bipartition(std::move(side_a)));
      for (const auto& e : f.edges) s_.phi.assign(h_to_q[static_cast<std::size_t>(*h.find_edge(e.u, e.v))], i);
    } catch (const NoPerfectMatching& e) {
      return fail(4, "H_i has a perfect matching", static_cast<double>(e.neighborhood().size()),
                  static_cast<double>(e.violator().size()), "color " + std::to_string(i) + ": " + e.what());
    }
  }
  if (!check(4, "delta(H_i) > (1+eps/2)m/2", worst_degree, ">", 0.5 * (1 + 0.5 * p.eps) * static_cast<double>(p.m)))
    return false;
  for (Vertex v = 0; v < nq; ++v)
    if (!s_.phi.missing(v).empty())
      throw InternalError("vertex " + std::to_string(v) + " misses a color after Step 4");
  timed(4, t0);
  return true;
}

// ---------------------------------------------------------------- Step 5

bool DenseRegularPipeline::step5() {
  if (!begin(5)) return false;
  const auto t0 = Clock::now();
  const PipelineParams& p = s_.params;
  const auto base = static_cast<Color>(p.k + p.ell);
  const Vertex n = p.n;

  std::vector<char> omit(static_cast<std::size_t>(s_.q.num_edges()), 0);
  std::vector<char> pair_omitted(s_.pairs.size() + 1, 0);
  if (p.odd) {
    for (int t : {0, 2})
      for (EdgeId e : s_.mx[t]) {
        omit[static_cast<std::size_t>(e)] = 1;
        pair_omitted[static_cast<std::size_t>(s_.pair_of[static_cast<std::size_t>(s_.q.edge(e).u)])] = 1;
      }
    for (EdgeId e : s_.m_star)
      for (Vertex v : {s_.q.edge(e).u, s_.q.edge(e).v})
        if (s_.bip.in_b(v)) omit[static_cast<std::size_t>(s_.x_edge[static_cast<std::size_t>(v)])] = 1;
  }

  Graph g0(n);
  std::vector<EdgeId> g0_to_q;
  std::vector<Vertex> x_ends;
  Matching m2;
  for (EdgeId e = 0; e < s_.q.num_edges(); ++e) {
    const auto i = static_cast<std::size_t>(e);
    if (!s_.in_q[i] || omit[i] || s_.phi.is_colored(e)) continue;
    const auto& ends = s_.q.edge(e);
    if (ends.contains(s_.x)) {
      x_ends.push_back(ends.other(s_.x));
      continue;
    }
    if (!s_.crossing(e)) throw InternalError("an edge inside a side is uncolored after Step 4");
    g0.add_edge(ends.u, ends.v);
    g0_to_q.push_back(e);
    if (s_.is_m_edge(e)) m2.edges.push_back(ends);
  }
  std::vector<Vertex> x_nb;
  const auto& last = s_.pairs[static_cast<std::size_t>(p.m - 1)];
  if (p.odd) {
    x_nb = {s_.pairs[static_cast<std::size_t>(p.m - 2)].second, last.second};
    std::sort(x_ends.begin(), x_ends.end());
    std::vector<Vertex> want = x_nb;
    std::sort(want.begin(), want.end());
    if (x_ends != want)
      return fail(5, "d_{R*}(x) = 2", static_cast<double>(x_ends.size()), 2, "x keeps unexpected uncolored edges");
  } else {
    x_nb = {last.first, last.second};
  }

  std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
  for (const auto& e : g0.edges()) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  for (Vertex v : x_nb) ++deg[static_cast<std::size_t>(v)];
  const auto delta = static_cast<double>(std::max<std::size_t>(*std::max_element(deg.begin(), deg.end()), 2));
  const auto m2_need = static_cast<double>(m2.size() + x_nb.size());
  if (!check(5, "|M_2| < m/2", static_cast<double>(m2.size()), "<", 0.5 * static_cast<double>(p.m))) return false;
  if (!check(5, p.odd ? "Delta(R*) >= |M_2| + d(x)" : "Delta(R*) + 1 >= |M_2| + d(x)", p.odd ? delta : delta + 1,
             ">=", m2_need))
    return false;

  std::vector<bool> side(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = s_.bip.in_a(v);
  NearBipartiteResult res;
  try {
    res = extend_near_bipartite(g0, Bipartition(std::move(side)), m2, x_nb);
  } catch (const PreconditionError& e) {
    return fail(5, "k' >= |M_2| + d(x)", m2_need, delta + 1, e.what());
  } catch (const InternalError& e) {
    return fail(5, "near-bipartite extension of R*", m2_need, delta + 1, e.what());
  }
  if (!check(5, "k + l + k' <= r + 2", static_cast<double>(base + res.k), "<=", static_cast<double>(p.r + 2)))
    return false;
  if (base + res.k > p.r + 2)
    return fail(5, "k + l + k' <= r + 2", static_cast<double>(base + res.k), static_cast<double>(p.r + 2),
                "the last phase needs more colors than remain");

  s_.phi.extend_palette(base + res.k);
  for (EdgeId e = 0; e < g0.num_edges(); ++e)
    s_.phi.assign(g0_to_q[static_cast<std::size_t>(e)], base + res.coloring.color(e));
  std::vector<Color> x_color(static_cast<std::size_t>(n), kUncolored);
  for (const auto& inc : res.graph.incident(res.x)) {
    const Color c = base + res.coloring.color(inc.edge);
    if (p.odd)
      s_.phi.assign(s_.x_edge[static_cast<std::size_t>(inc.neighbor)], c);
    else
      x_color[static_cast<std::size_t>(inc.neighbor)] = c;
  }

  TotalColoring tc;
  tc.k = base + res.k;
  tc.edge_colors.assign(s_.phi.colors().begin(), s_.phi.colors().begin() + s_.g_edges);
  tc.vertex_colors.resize(static_cast<std::size_t>(n));
  const auto num_m = static_cast<int>(s_.m_edges.size());
  for (Vertex v = 0; v < n; ++v) {
    const int pi = s_.pair_of[static_cast<std::size_t>(v)];
    Color c = kUncolored;
    if (pi >= 1 && pi <= num_m && !pair_omitted[static_cast<std::size_t>(pi)])
      c = s_.phi.color(s_.m_edges[static_cast<std::size_t>(pi - 1)]);
    else if (p.odd)
      c = s_.phi.color(s_.x_edge[static_cast<std::size_t>(v)]);
    else
      c = x_color[static_cast<std::size_t>(v)];
    tc.vertex_colors[static_cast<std::size_t>(v)] = c;
  }
  if (auto bad = verify_total_coloring(tc, g_, static_cast<Color>(p.r + 2)))
    throw InternalError("dense pipeline produced an invalid total coloring: " + bad->describe());
  report_.colors_used = tc.colors_used();
  result_ = std::move(tc);
  timed(5, t0);
  return true;
}

bool DenseRegularPipeline::run() {
  const PipelineParams& p = s_.params;
  if (mode_ == PipelineMode::kOpportunistic && done_ < 0) {
    // |M_2| is at least m-1-k (plus l when n is odd), and the last phase has
    // r+2-k-l colors for it and the two edges at x.
    const long long m2 = p.m - 1 - p.k + (p.odd ? p.ell : 0);
    const long long room = p.r + 2 - p.k - p.ell;
    InequalityCheck c{5, "|M_2| + 2 <= r + 2 - k - l (projected)", "<=", static_cast<double>(m2 + 2),
                      static_cast<double>(room), m2 + 2 <= room, true};
    report_.ledger.push_back(c);
    if (!c.holds)
      return fail(5, c.name, c.lhs, c.rhs, "the final palette is too small for this instance; steps 1-4 were skipped");
  }
  return step0() && step1() && step2() && step3() && step4() && step5();
}

DenseRegularOutcome total_color_dense_regular(const Graph& g, double eps, PipelineMode mode, std::uint64_t seed) {
  DenseRegularPipeline pipe(g, eps, mode, seed);
  pipe.run();
  if (pipe.result()) return {*pipe.result(), pipe.report()};
  if (!pipe.report().failure) throw InternalError("pipeline stopped without a result or a failure");
  return {*pipe.report().failure, pipe.report()};
}

}  // namespace totalchroma
