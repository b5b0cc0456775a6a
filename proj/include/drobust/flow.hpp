#pragma once

// Exact max-flow / min-cut on undirected capacitated graphs.
//
// Highest-label push-relabel with the gap heuristic. The run ends with a
// proper flow (excess that cannot reach the sink is returned to the source),
// so residual reachability from the source yields the minimum cut with the
// smallest source side.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "drobust/counters.hpp"
#include "drobust/error.hpp"
#include "drobust/graph.hpp"

namespace drobust {

struct Cut {
  EdgeSet edge_ids;
  Weight capacity;
  std::vector<Vertex> source_side;  // sorted, contains the source
};

namespace detail {

class PushRelabel {
 public:
  using Cap = std::int64_t;

  void reset(std::size_t node_count) {
    n_ = node_count;
    head_.assign(n_, -1);
    to_.clear();
    cap_.clear();
    next_.clear();
  }

  // Adds u->v with capacity `fwd` and v->u with capacity `bwd`; returns the u->v arc.
  int add_pair(std::size_t u, std::size_t v, Cap fwd, Cap bwd) {
    int a = static_cast<int>(to_.size());
    push_arc(u, v, fwd);
    push_arc(v, u, bwd);
    return a;
  }

  Cap run(std::size_t s, std::size_t t) {
    s_ = s;
    t_ = t;
    height_.assign(n_, 0);
    excess_.assign(n_, 0);
    current_.assign(head_.begin(), head_.end());
    count_.assign(2 * n_ + 1, 0);
    buckets_.assign(2 * n_ + 1, {});
    highest_ = 0;

    height_[s] = n_;
    count_[0] = n_ - 1;
    count_[n_] = 1;
    for (int a = head_[s]; a != -1; a = next_[a]) {
      Cap c = cap_[a];
      if (c <= 0) continue;
      std::size_t v = static_cast<std::size_t>(to_[a]);
      cap_[a] -= c;
      cap_[a ^ 1] += c;
      excess_[s] -= c;
      if (v != t && v != s && excess_[v] == 0) activate(v);
      excess_[v] += c;
    }

    while (true) {
      while (highest_ > 0 && buckets_[highest_].empty()) --highest_;
      if (buckets_[highest_].empty()) break;
      std::size_t u = buckets_[highest_].back();
      buckets_[highest_].pop_back();
      discharge(u, s, t);
    }
    return excess_[t];
  }

  // Nodes reachable from s through arcs with residual capacity.
  std::vector<char> residual_reach(std::size_t s) const {
    std::vector<char> seen(n_, 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (int a = head_[x]; a != -1; a = next_[a]) {
        auto y = static_cast<std::size_t>(to_[a]);
        if (cap_[a] > 0 && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

 private:
  void push_arc(std::size_t u, std::size_t v, Cap c) {
    to_.push_back(static_cast<int>(v));
    cap_.push_back(c);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
  }

  void activate(std::size_t v) {
    buckets_[height_[v]].push_back(v);
    highest_ = std::max(highest_, height_[v]);
  }

  void discharge(std::size_t u, std::size_t s, std::size_t t) {
    while (excess_[u] > 0) {
      int& a = current_[u];
      if (a == -1) {
        relabel(u);
        if (height_[u] >= 2 * n_) return;
        continue;
      }
      auto v = static_cast<std::size_t>(to_[a]);
      if (cap_[a] > 0 && height_[u] == height_[v] + 1) {
        Cap delta = std::min(excess_[u], cap_[a]);
        cap_[a] -= delta;
        cap_[a ^ 1] += delta;
        excess_[u] -= delta;
        if (v != s && v != t && excess_[v] == 0) activate(v);
        excess_[v] += delta;
      } else {
        a = next_[a];
      }
    }
  }

  void relabel(std::size_t u) {
    std::size_t old = height_[u];
    std::size_t best = 2 * n_;
    for (int a = head_[u]; a != -1; a = next_[a]) {
      if (cap_[a] > 0) best = std::min(best, height_[static_cast<std::size_t>(to_[a])] + 1);
    }
    --count_[old];
    height_[u] = best;
    ++count_[best];
    current_[u] = head_[u];

    // Gap: nothing left at `old` below n, so nodes strictly between old and n
    // can no longer reach the sink.
    if (old < n_ && count_[old] == 0) {
      for (std::size_t x = 0; x < n_; ++x) {
        if (height_[x] > old && height_[x] < n_) {
          --count_[height_[x]];
          height_[x] = n_ + 1;
          ++count_[height_[x]];
          current_[x] = head_[x];
        }
      }
      // Active nodes moved by the gap sit in stale buckets; rebuild.
      for (auto& b : buckets_) b.clear();
      highest_ = 0;
      for (std::size_t x = 0; x < n_; ++x) {
        if (x != u && x != s_ && x != t_ && excess_[x] > 0) {
          buckets_[height_[x]].push_back(x);
          highest_ = std::max(highest_, height_[x]);
        }
      }
    }
  }

  std::size_t n_ = 0;
  std::size_t s_ = 0, t_ = 0;
  std::vector<int> head_, to_, next_, current_;
  std::vector<Cap> cap_, excess_;
  std::vector<std::size_t> height_, count_;
  std::vector<std::vector<std::size_t>> buckets_;
  std::size_t highest_ = 0;
};

}  // namespace detail

/// Reusable scratch space for repeated cut computations on one graph.
class FlowWorkspace {
 public:
  /// Minimum cut separating `source` from every vertex in `sinks`, with edges
  /// flagged in `zeroed` (may be empty) treated as capacity 0.
  Cut min_cut(const Graph& g, Vertex source, std::span<const Vertex> sinks,
              std::span<const char> zeroed, CallCounters* counters = nullptr) {
    if (counters) ++counters->flow_calls;
    const std::size_t n = g.vertex_count();
    const bool super = sinks.size() != 1;
    const std::size_t sink_node = super ? n + 1 : sinks.front();
    net_.reset(n + 2);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(static_cast<EdgeId>(e));
      auto c = static_cast<detail::PushRelabel::Cap>(
          !zeroed.empty() && zeroed[e] ? 0 : ed.weight.micros);
      net_.add_pair(ed.u, ed.v, c, c);
    }
    if (super) {
      auto inf = static_cast<detail::PushRelabel::Cap>(g.total_weight().micros + 1);
      for (Vertex u : sinks) net_.add_pair(u, sink_node, inf, 0);
    }
    auto value = net_.run(source, sink_node);
    auto side = net_.residual_reach(source);

    Cut cut;
    for (Vertex v = 1; v <= n; ++v) {
      if (side[v]) cut.source_side.push_back(v);
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (!zeroed.empty() && zeroed[e]) continue;
      const Edge& ed = g.edge(static_cast<EdgeId>(e));
      if (side[ed.u] != side[ed.v]) {
        cut.edge_ids.push_back(static_cast<EdgeId>(e));
        cut.capacity += ed.weight;
      }
    }
    if (static_cast<std::uint64_t>(value) != cut.capacity.micros) {
      throw std::logic_error("max-flow value disagrees with extracted cut");
    }
    return cut;
  }

 private:
  detail::PushRelabel net_;
};

/// Minimum source-sink cut with the `zeroed` edges priced at zero.
inline Cut max_flow_min_cut(const Graph& g, Vertex source, Vertex sink, std::span<const EdgeId> zeroed = {},
                            CallCounters* counters = nullptr) {
  if (!g.contains(source) || !g.contains(sink) || source == sink) {
    throw Error(Errc::vertex_out_of_range,
                "source " + std::to_string(source) + ", sink " + std::to_string(sink));
  }
  auto mask = edge_mask(g, zeroed);
  FlowWorkspace ws;
  Vertex sinks[] = {sink};
  return ws.min_cut(g, source, sinks, mask, counters);
}

/// Minimum cut separating `root` from every vertex in `targets`.
inline Cut min_r_U_cut(const Graph& g, Vertex root, std::span<const Vertex> targets,
                       CallCounters* counters = nullptr) {
  if (targets.empty()) throw Error(Errc::empty_u, "target set is empty");
  if (!g.contains(root)) throw Error(Errc::vertex_out_of_range, "root " + std::to_string(root));
  for (Vertex u : targets) {
    if (u == root) throw Error(Errc::root_in_u, "root " + std::to_string(root) + " in target set");
    if (!g.contains(u)) throw Error(Errc::vertex_out_of_range, "target " + std::to_string(u));
  }
  FlowWorkspace ws;
  return ws.min_cut(g, root, targets, {}, counters);
}

inline constexpr std::size_t kBruteForceCutMaxVertices = 20;

/// Reference min-cut value by enumerating every vertex bipartition.
inline Weight brute_force_min_cut(const Graph& g, Vertex source, Vertex sink,
                                  std::span<const EdgeId> zeroed = {}) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceCutMaxVertices) {
    throw Error(Errc::too_large, std::to_string(n) + " vertices (limit 20)");
  }
  if (!g.contains(source) || !g.contains(sink) || source == sink) {
    throw Error(Errc::vertex_out_of_range, "bad source/sink");
  }
  auto mask = edge_mask(g, zeroed);
  std::vector<Vertex> free;
  for (Vertex v = 1; v <= n; ++v) {
    if (v != source && v != sink) free.push_back(v);
  }
  std::vector<char> side(n + 1, 0);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
    std::fill(side.begin(), side.end(), 0);
    side[source] = 1;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (bits >> i & 1) side[free[i]] = 1;
    }
    std::uint64_t cap = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(static_cast<EdgeId>(e));
      if (!mask[e] && side[ed.u] != side[ed.v]) cap += ed.weight.micros;
    }
    best = std::min(best, cap);
  }
  return Weight{best};
}

}  // namespace drobust
