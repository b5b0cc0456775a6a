#pragma once

// Farthest-terminal algorithm for demand-robust shortest path.
//
// Grow S from the root by repeatedly adding the terminal farthest from S
// while |S| <= min(lambda, |T|), then buy a Steiner tree on S in the first
// stage. A gamma-approximate Steiner tree gives a (gamma + 2)-approximation.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "drobust/counters.hpp"
#include "drobust/error.hpp"
#include "drobust/evaluate.hpp"
#include "drobust/graph.hpp"
#include "drobust/oracle.hpp"
#include "drobust/shortest_paths.hpp"
#include "drobust/steiner.hpp"

namespace drobust {

enum class SteinerMethod { mehlhorn, exact };

constexpr std::string_view to_string(SteinerMethod m) {
  return m == SteinerMethod::mehlhorn ? "mehlhorn" : "exact";
}

struct FarthestTrace {
  std::vector<FarthestPick> picks;  // in pick order
  std::vector<Vertex> final_S;      // sorted, includes the root
  Weight f;                         // distance of the last pick; 0 without picks
  bool f_defined = false;
  SteinerResult steiner;
};

struct RobustSpResult {
  Solution solution;
  FarthestTrace trace;
};

/// floor(min(lambda, |T|)): the number of farthest-terminal picks.
inline std::size_t farthest_pick_count(const Instance& inst) {
  if (inst.lambda.denominator == 0) return 0;
  std::uint64_t by_lambda = inst.lambda.numerator / inst.lambda.denominator;
  return static_cast<std::size_t>(std::min<std::uint64_t>(by_lambda, inst.terminals.size()));
}

inline RobustSpResult solve_robust_sp(const Instance& inst, SteinerMethod method,
                                      CallCounters* counters = nullptr) {
  if (inst.problem != Problem::shortest_path) {
    throw Error(Errc::wrong_problem, "instance is not a shortest-path instance");
  }
  require_valid(inst);
  if (method == SteinerMethod::exact && 1 + farthest_pick_count(inst) > kExactSteinerMaxTerminals) {
    throw Error(Errc::exact_too_large, "exact Steiner tree limited to 9 vertices in S");
  }
  const Graph& g = inst.graph;

  FarthestTrace trace;
  std::vector<Vertex> S{inst.root};
  auto within_guard = [&](std::size_t size) {
    // size <= lambda, compared exactly, and size <= |T|
    return static_cast<detail::u128>(size) * inst.lambda.denominator <= inst.lambda.numerator &&
           size <= inst.terminals.size();
  };
  while (within_guard(S.size())) {
    auto pick = farthest_terminal(g, S, inst.terminals, counters);
    if (counters) ++counters->farthest_iterations;
    S.push_back(pick.terminal);
    trace.picks.push_back(pick);
  }
  if (!trace.picks.empty()) {
    trace.f = trace.picks.back().distance;
    trace.f_defined = true;
  }
  trace.final_S = S;
  std::sort(trace.final_S.begin(), trace.final_S.end());

  if (method == SteinerMethod::mehlhorn) {
    trace.steiner = mehlhorn_steiner(g, trace.final_S, counters);
  } else {
    if (counters) ++counters->steiner_calls;
    trace.steiner = exact_steiner_tree(g, trace.final_S);
  }

  RobustSpResult out;
  out.solution.report = evaluate(inst, trace.steiner.edge_ids, counters);
  out.trace = std::move(trace);
  return out;
}

enum class TraceViolation {
  pick_count,
  set_mismatch,
  f_mismatch,
  twice_around_tree,
  terminal_beyond_f,
  pairwise_below_f,
  size_window,
  tree_terminals,
};

constexpr std::string_view to_string(TraceViolation v) {
  switch (v) {
    case TraceViolation::pick_count: return "PICK_COUNT";
    case TraceViolation::set_mismatch: return "SET_MISMATCH";
    case TraceViolation::f_mismatch: return "F_MISMATCH";
    case TraceViolation::twice_around_tree: return "TWICE_AROUND_TREE";
    case TraceViolation::terminal_beyond_f: return "TERMINAL_BEYOND_F";
    case TraceViolation::pairwise_below_f: return "PAIRWISE_BELOW_F";
    case TraceViolation::size_window: return "SIZE_WINDOW";
    case TraceViolation::tree_terminals: return "TREE_TERMINALS";
  }
  return "UNKNOWN";
}

/// Re-derives the run-time guarantees of a farthest-terminal run from scratch.
inline std::vector<TraceViolation> check_trace(const Instance& inst, const FarthestTrace& trace) {
  std::vector<TraceViolation> out;
  const Graph& g = inst.graph;
  const std::size_t s_size = trace.final_S.size();

  if (trace.picks.size() != farthest_pick_count(inst)) out.push_back(TraceViolation::pick_count);

  std::vector<Vertex> expected{inst.root};
  for (const auto& p : trace.picks) expected.push_back(p.terminal);
  std::sort(expected.begin(), expected.end());
  if (expected != trace.final_S) out.push_back(TraceViolation::set_mismatch);

  Weight last = trace.picks.empty() ? Weight{} : trace.picks.back().distance;
  if (trace.f != last) out.push_back(TraceViolation::f_mismatch);
  const std::uint64_t f = trace.f.micros;

  // |S| * f <= 2 * tree weight (the tree weight bounds st(S) from above)
  if (static_cast<detail::u128>(s_size) * f > static_cast<detail::u128>(2) * trace.steiner.weight.micros) {
    out.push_back(TraceViolation::twice_around_tree);
  }

  auto to_S = multi_source_dijkstra(g, trace.final_S, std::span<const char>{});
  for (Vertex t : inst.terminals) {
    if (!to_S.reachable(t) || to_S.dist[t] > f) {
      out.push_back(TraceViolation::terminal_beyond_f);
      break;
    }
  }

  bool pairwise_ok = true;
  for (std::size_t i = 0; i < s_size && pairwise_ok; ++i) {
    Vertex src[] = {trace.final_S[i]};
    auto dm = multi_source_dijkstra(g, src, std::span<const char>{});
    for (std::size_t j = i + 1; j < s_size; ++j) {
      if (dm.dist[trace.final_S[j]] < f) {
        pairwise_ok = false;
        break;
      }
    }
  }
  if (!pairwise_ok) out.push_back(TraceViolation::pairwise_below_f);

  // lambda <= |S| <= lambda + 1 whenever |T| >= lambda
  const auto num = static_cast<detail::u128>(inst.lambda.numerator);
  const auto den = static_cast<detail::u128>(inst.lambda.denominator);
  if (static_cast<detail::u128>(inst.terminals.size()) * den >= num) {
    detail::u128 scaled = static_cast<detail::u128>(s_size) * den;
    if (scaled < num || scaled > num + den) out.push_back(TraceViolation::size_window);
  }

  if (trace.steiner.terminals != trace.final_S) out.push_back(TraceViolation::tree_terminals);
  return out;
}

}  // namespace drobust
