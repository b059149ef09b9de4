#include <json.hpp>

#include "totalchroma/totalizer.hpp"

namespace totalchroma {

std::string RunReport::to_json(bool with_timings) const {
  using nlohmann::json;
  json j;
  j["params"] = {{"n", params.n}, {"r", params.r},   {"m", params.m},    {"k", params.k},
                 {"ell", params.ell}, {"odd", params.odd}, {"eps", params.eps}};
  j["mode"] = mode == PipelineMode::kStrict ? "strict" : "opportunistic";
  j["seed"] = seed;
  json ledger_json = json::array();
  for (const auto& c : ledger)
    ledger_json.push_back({{"step", c.step},
                           {"name", c.name},
                           {"lhs", c.lhs},
                           {"relation", c.relation},
                           {"rhs", c.rhs},
                           {"holds", c.holds},
                           {"kind", c.a_priori ? "a_priori" : "measured"}});
  j["ledger"] = std::move(ledger_json);
  if (with_timings) {
    json steps = json::array();
    for (const auto& [step, ms] : step_ms) steps.push_back({{"step", step}, {"ms", ms}});
    j["step_ms"] = std::move(steps);
  }
  j["balance_switches"] = balance_switches;
  j["exchanges"] = {{"total", exchanges}, {"five_edge_paths", short_paths}, {"seven_edge_paths", long_paths}};
  json traj = json::array();
  for (const auto& [a, b] : r_sizes) traj.push_back({a, b});
  j["r_sizes"] = std::move(traj);
  j["color_permutation"] = color_permutation;
  if (failure) {
    j["outcome"] = "step_failure";
    j["failure"] = {{"step", failure->step},
                    {"inequality", failure->inequality},
                    {"lhs", failure->lhs},
                    {"rhs", failure->rhs},
                    {"detail", failure->detail}};
  } else {
    j["outcome"] = colors_used > 0 ? "colored" : "incomplete";
    j["colors_used"] = colors_used;
  }
  return j.dump(2);
}

}  // namespace totalchroma
