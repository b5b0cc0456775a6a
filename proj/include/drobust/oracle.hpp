#pragma once

// Exact optima for certification at desk scale. Deliberately brute force:
// the robust oracle enumerates every first-stage edge subset, the Steiner
// oracle is the Dreyfus-Wagner subset dynamic program.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "drobust/counters.hpp"
#include "drobust/error.hpp"
#include "drobust/evaluate.hpp"
#include "drobust/graph.hpp"
#include "drobust/shortest_paths.hpp"
#include "drobust/steiner.hpp"

namespace drobust {

inline constexpr std::size_t kOracleMaxEdges = 20;
inline constexpr std::size_t kExactSteinerMaxTerminals = 9;

struct OracleResult {
  Rational optimum_total;
  EdgeSet optimal_first_stage;
  std::uint64_t subsets_examined = 0;
  EvalReport report;
};

/// Minimum two-stage cost over all 2^|E| first-stage edge sets. Ties prefer
/// fewer edges, then the lexicographically smaller id list.
inline OracleResult exact_robust(const Instance& inst, std::size_t max_edges = kOracleMaxEdges,
                                 CallCounters* counters = nullptr) {
  require_valid(inst);
  const std::size_t m = inst.graph.edge_count();
  if (m > std::min(max_edges, kOracleMaxEdges)) {
    throw Error(Errc::too_large, std::to_string(m) + " edges (limit " +
                                     std::to_string(std::min(max_edges, kOracleMaxEdges)) + ")");
  }
  Evaluator eval(inst, counters);
  OracleResult out;
  std::uint64_t best_mask = 0;
  bool have = false;
  std::vector<EdgeId> subset;
  subset.reserve(m);
  auto ids_of = [m](std::uint64_t mask) {
    std::vector<EdgeId> ids;
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) ids.push_back(static_cast<EdgeId>(e));
    }
    return ids;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    subset.clear();
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) subset.push_back(static_cast<EdgeId>(e));
    }
    Rational total = eval.total_cost(subset);
    ++out.subsets_examined;
    bool better = !have || total < out.optimum_total;
    if (have && total == out.optimum_total) {
      int pc = std::popcount(mask), best_pc = std::popcount(best_mask);
      better = pc < best_pc || (pc == best_pc && subset < ids_of(best_mask));
    }
    if (better) {
      have = true;
      out.optimum_total = total;
      best_mask = mask;
    }
  }
  out.optimal_first_stage = ids_of(best_mask);
  out.report = eval.evaluate(out.optimal_first_stage);
  return out;
}

/// Minimum Steiner tree by Dreyfus-Wagner over terminal subsets.
inline SteinerResult exact_steiner_tree(const Graph& g, std::span<const Vertex> terminal_list) {
  auto terminals = detail::sorted_unique(terminal_list);
  if (terminals.empty()) throw Error(Errc::disconnected_terminals, "no terminals");
  if (terminals.size() > kExactSteinerMaxTerminals) {
    throw Error(Errc::too_many_terminals, std::to_string(terminals.size()) + " terminals (limit 9)");
  }
  for (Vertex t : terminals) {
    if (!g.contains(t)) throw Error(Errc::vertex_out_of_range, "terminal " + std::to_string(t));
  }
  if (terminals.size() == 1) return finalize_tree(g, {}, terminals, Rational::integer(1));

  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max() / 4;
  const std::size_t n = g.vertex_count();
  const std::size_t k = terminals.size();
  const std::size_t full = (std::size_t{1} << k) - 1;

  enum class Step : std::uint8_t { none, leaf, split, edge };
  struct Cell {
    std::uint64_t cost = kInf;
    Step step = Step::none;
    std::uint32_t arg = 0;  // submask for split, edge id for edge
  };
  std::vector<std::vector<Cell>> dp(full + 1, std::vector<Cell>(n + 1));

  using Key = std::pair<std::uint64_t, Vertex>;
  auto settle = [&](std::vector<Cell>& row) {
    std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
    for (Vertex v = 1; v <= n; ++v) {
      if (row[v].cost < kInf) heap.emplace(row[v].cost, v);
    }
    std::vector<char> done(n + 1, 0);
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (done[x] || d != row[x].cost) continue;
      done[x] = 1;
      for (EdgeId e : g.incident(x)) {
        Vertex y = g.edge(e).other(x);
        std::uint64_t nd = d + g.edge(e).weight.micros;
        if (!done[y] && nd < row[y].cost) {
          row[y] = Cell{nd, Step::edge, e};
          heap.emplace(nd, y);
        }
      }
    }
  };

  for (std::size_t i = 0; i < k; ++i) {
    auto& row = dp[std::size_t{1} << i];
    row[terminals[i]] = Cell{0, Step::leaf, 0};
    settle(row);
  }
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    auto& row = dp[mask];
    const std::size_t low = mask & (~mask + 1);
    // Submasks holding the lowest bit enumerate each unordered split once.
    for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;
      const auto& a = dp[sub];
      const auto& b = dp[mask ^ sub];
      for (Vertex v = 1; v <= n; ++v) {
        std::uint64_t c = a[v].cost + b[v].cost;
        if (c < row[v].cost) row[v] = Cell{c, Step::split, static_cast<std::uint32_t>(sub)};
      }
    }
    settle(row);
  }

  const Vertex anchor = terminals.front();
  if (dp[full][anchor].cost >= kInf) {
    throw Error(Errc::disconnected_terminals, "terminals span more than one component");
  }

  std::vector<EdgeId> edges;
  std::function<void(std::size_t, Vertex)> collect = [&](std::size_t mask, Vertex v) {
    const Cell& c = dp[mask][v];
    switch (c.step) {
      case Step::leaf:
      case Step::none:
        return;
      case Step::edge:
        edges.push_back(c.arg);
        collect(mask, g.edge(c.arg).other(v));
        return;
      case Step::split:
        collect(c.arg, v);
        collect(mask ^ c.arg, v);
        return;
    }
  };
  collect(full, anchor);
  auto result = finalize_tree(g, edges, terminals, Rational::integer(1));
  if (result.weight.micros != dp[full][anchor].cost) {
    throw std::logic_error("Steiner reconstruction disagrees with the dynamic program");
  }
  return result;
}

}  // namespace drobust
