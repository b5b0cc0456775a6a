#pragma once

// Adversary best response for a fixed first-stage edge set.
//
// Each terminal is a scenario. For mincut the response is a minimum root-t cut
// and for shortest path a shortest root-t path; in both cases first-stage
// edges are priced at zero. The adversary picks the most expensive terminal.

#include <span>
#include <string>
#include <vector>

#include "drobust/counters.hpp"
#include "drobust/error.hpp"
#include "drobust/flow.hpp"
#include "drobust/graph.hpp"
#include "drobust/numeric.hpp"
#include "drobust/shortest_paths.hpp"

namespace drobust {

struct TerminalResponse {
  Vertex terminal = 0;
  Weight response_cost;
  std::vector<EdgeId> response_edges;  // cut edges (sorted) or path edges (root to terminal)
};

struct EvalReport {
  Problem problem = Problem::mincut;
  EdgeSet first_stage_edges;
  Weight first_stage_cost;
  std::vector<TerminalResponse> per_terminal;  // instance terminal order
  Vertex worst_terminal = 0;
  Weight second_stage_cost;
  Rational total_cost;
};

/// A solver's answer; the report is the adversary's evaluation of it.
struct Solution {
  EvalReport report;

  const EdgeSet& first_stage() const { return report.first_stage_edges; }
  Rational total_cost() const { return report.total_cost; }
};

/// Evaluates many first-stage sets against one instance, reusing scratch space.
class Evaluator {
 public:
  explicit Evaluator(const Instance& inst, CallCounters* counters = nullptr)
      : inst_(inst), counters_(counters), mask_(inst.graph.edge_count(), 0) {}

  EvalReport evaluate(std::span<const EdgeId> first_stage) {
    EvalReport rep;
    rep.problem = inst_.problem;
    rep.first_stage_edges = normalize_edges(EdgeSet(first_stage.begin(), first_stage.end()));
    load_mask(rep.first_stage_edges);
    rep.first_stage_cost = weight_of(inst_.graph, rep.first_stage_edges);

    if (inst_.problem == Problem::mincut) {
      for (Vertex t : inst_.terminals) {
        Vertex sinks[] = {t};
        Cut cut = flow_.min_cut(inst_.graph, inst_.root, sinks, mask_, counters_);
        rep.per_terminal.push_back({t, cut.capacity, std::move(cut.edge_ids)});
      }
    } else {
      Vertex src[] = {inst_.root};
      auto dm = multi_source_dijkstra(inst_.graph, src, std::span<const char>(mask_), counters_);
      for (Vertex t : inst_.terminals) {
        if (!dm.reachable(t)) throw Error(Errc::unreachable, "terminal " + std::to_string(t));
        auto path = path_from_map(inst_.graph, dm, t);
        rep.per_terminal.push_back({t, path.length, std::move(path.edge_ids)});
      }
    }

    bool first = true;
    for (const auto& r : rep.per_terminal) {
      if (first || r.response_cost > rep.second_stage_cost ||
          (r.response_cost == rep.second_stage_cost && r.terminal < rep.worst_terminal)) {
        rep.second_stage_cost = r.response_cost;
        rep.worst_terminal = r.terminal;
        first = false;
      }
    }
    rep.total_cost = two_stage_total(rep.first_stage_cost, inst_.lambda, rep.second_stage_cost);
    return rep;
  }

  /// Total cost only; same computation as evaluate() without building certificates.
  Rational total_cost(std::span<const EdgeId> first_stage) {
    load_mask(first_stage);
    Weight first;
    for (std::size_t e = 0; e < mask_.size(); ++e) {
      if (mask_[e]) first += inst_.graph.edge(static_cast<EdgeId>(e)).weight;
    }
    Weight second;
    if (inst_.problem == Problem::mincut) {
      for (Vertex t : inst_.terminals) {
        Vertex sinks[] = {t};
        second = std::max(second, flow_.min_cut(inst_.graph, inst_.root, sinks, mask_, counters_).capacity);
      }
    } else {
      Vertex src[] = {inst_.root};
      auto dm = multi_source_dijkstra(inst_.graph, src, std::span<const char>(mask_), counters_);
      for (Vertex t : inst_.terminals) second = std::max(second, dm.distance(t));
    }
    return two_stage_total(first, inst_.lambda, second);
  }

 private:
  void load_mask(std::span<const EdgeId> edges) {
    std::fill(mask_.begin(), mask_.end(), 0);
    for (EdgeId e : edges) {
      if (e >= mask_.size()) throw Error(Errc::invalid_edge_id, "edge id " + std::to_string(e));
      mask_[e] = 1;
    }
  }

  const Instance& inst_;
  CallCounters* counters_;
  FlowWorkspace flow_;
  std::vector<char> mask_;
};

inline EvalReport evaluate(const Instance& inst, std::span<const EdgeId> first_stage,
                           CallCounters* counters = nullptr) {
  Evaluator ev(inst, counters);
  return ev.evaluate(first_stage);
}

}  // namespace drobust
