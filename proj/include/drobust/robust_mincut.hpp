#pragma once

// Thresholded 2-approximation for demand-robust mincut.
//
// Sort terminals by their standalone mincut value C(t), largest first. Any
// threshold on the optimum's second-stage cost selects a prefix of that
// order, so only |T|+1 first-stage candidates exist: the minimum cut
// separating the root from each prefix (the empty prefix buys nothing).
// Every candidate is evaluated exactly and the cheapest is returned.

#include <algorithm>
#include <utility>
#include <vector>

#include "drobust/counters.hpp"
#include "drobust/error.hpp"
#include "drobust/evaluate.hpp"
#include "drobust/flow.hpp"
#include "drobust/graph.hpp"

namespace drobust {

struct ThresholdCandidate {
  std::size_t prefix_length = 0;
  std::vector<Vertex> prefix;
  Cut cut;  // empty for the empty prefix
  EvalReport report;
};

struct ThresholdTrace {
  std::vector<std::pair<Vertex, Weight>> sorted_terminals;  // (t, C(t)), non-increasing C(t)
  std::vector<ThresholdCandidate> candidates;               // prefix lengths 0..|T|
  std::size_t chosen = 0;
};

struct RobustMincutResult {
  Solution solution;
  ThresholdTrace trace;
};

inline RobustMincutResult solve_robust_mincut(const Instance& inst, CallCounters* counters = nullptr) {
  if (inst.problem != Problem::mincut) throw Error(Errc::wrong_problem, "instance is not a mincut instance");
  require_valid(inst);
  const Graph& g = inst.graph;

  ThresholdTrace trace;
  FlowWorkspace flow;
  for (Vertex t : inst.terminals) {
    Vertex sinks[] = {t};
    trace.sorted_terminals.emplace_back(t, flow.min_cut(g, inst.root, sinks, {}, counters).capacity);
  }
  std::sort(trace.sorted_terminals.begin(), trace.sorted_terminals.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  Evaluator eval(inst, counters);
  for (std::size_t j = 0; j <= inst.terminals.size(); ++j) {
    ThresholdCandidate cand;
    cand.prefix_length = j;
    for (std::size_t i = 0; i < j; ++i) cand.prefix.push_back(trace.sorted_terminals[i].first);
    if (j > 0) cand.cut = flow.min_cut(g, inst.root, cand.prefix, {}, counters);
    cand.report = eval.evaluate(cand.cut.edge_ids);
    trace.candidates.push_back(std::move(cand));
  }

  for (std::size_t j = 1; j < trace.candidates.size(); ++j) {
    const auto& c = trace.candidates[j].report;
    const auto& best = trace.candidates[trace.chosen].report;
    if (c.total_cost < best.total_cost ||
        (c.total_cost == best.total_cost && c.first_stage_cost < best.first_stage_cost)) {
      trace.chosen = j;
    }
  }

  RobustMincutResult out;
  out.solution.report = trace.candidates[trace.chosen].report;
  out.trace = std::move(trace);
  return out;
}

}  // namespace drobust
