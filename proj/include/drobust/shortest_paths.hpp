#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "drobust/counters.hpp"
#include "drobust/error.hpp"
#include "drobust/graph.hpp"

namespace drobust {

inline constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// Result of a (multi-source) Dijkstra run. Vertices tie between sources go
/// to the smaller source id, which the Steiner heuristic relies on.
struct DistanceMap {
  std::vector<std::uint64_t> dist;  // micro-units; kUnreachable if not reached
  std::vector<EdgeId> parent_edge;  // kNoEdge at sources and unreached vertices
  std::vector<Vertex> origin;       // nearest source; 0 if unreached

  bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
  Weight distance(Vertex v) const { return Weight{dist[v]}; }
};

inline DistanceMap multi_source_dijkstra(const Graph& g, std::span<const Vertex> sources,
                                         std::span<const char> zeroed = {},
                                         CallCounters* counters = nullptr) {
  if (counters) ++counters->dijkstra_calls;
  const std::size_t n = g.vertex_count();
  DistanceMap out;
  out.dist.assign(n + 1, kUnreachable);
  out.parent_edge.assign(n + 1, kNoEdge);
  out.origin.assign(n + 1, 0);

  // Key (distance, origin, vertex): lexicographic order keeps relaxations
  // monotone and settles every vertex with its smallest-id nearest source.
  using Key = std::tuple<std::uint64_t, Vertex, Vertex>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  for (Vertex s : sources) {
    if (!g.contains(s)) throw Error(Errc::vertex_out_of_range, "source " + std::to_string(s));
    if (out.origin[s] == s) continue;
    out.dist[s] = 0;
    out.origin[s] = s;
    heap.emplace(0, s, s);
  }
  std::vector<char> done(n + 1, 0);
  while (!heap.empty()) {
    auto [d, o, x] = heap.top();
    heap.pop();
    if (done[x] || d != out.dist[x] || o != out.origin[x]) continue;
    done[x] = 1;
    for (EdgeId e : g.incident(x)) {
      const Edge& ed = g.edge(e);
      Vertex y = ed.other(x);
      if (done[y] || out.origin[y] == y) continue;  // sources keep themselves
      std::uint64_t nd = d + (!zeroed.empty() && zeroed[e] ? 0 : ed.weight.micros);
      if (nd < out.dist[y] || (nd == out.dist[y] && o < out.origin[y])) {
        out.dist[y] = nd;
        out.origin[y] = o;
        out.parent_edge[y] = e;
        heap.emplace(nd, o, y);
      }
    }
  }
  return out;
}

inline DistanceMap multi_source_dijkstra(const Graph& g, std::span<const Vertex> sources,
                                         std::span<const EdgeId> zeroed_ids,
                                         CallCounters* counters = nullptr) {
  auto mask = edge_mask(g, zeroed_ids);
  return multi_source_dijkstra(g, sources, std::span<const char>(mask), counters);
}

struct FarthestPick {
  Vertex terminal = 0;
  Weight distance;
};

/// Terminal outside `S` that is farthest from `S`; ties go to the smaller id.
inline FarthestPick farthest_terminal(const Graph& g, std::span<const Vertex> S,
                                      std::span<const Vertex> terminals,
                                      CallCounters* counters = nullptr) {
  if (S.empty()) throw Error(Errc::no_candidate, "empty source set");
  auto dm = multi_source_dijkstra(g, S, std::span<const char>{}, counters);
  std::optional<FarthestPick> best;
  for (Vertex t : terminals) {
    if (!g.contains(t)) throw Error(Errc::vertex_out_of_range, "terminal " + std::to_string(t));
    if (dm.origin[t] == t) continue;  // t is in S
    if (!dm.reachable(t)) throw Error(Errc::unreachable, "terminal " + std::to_string(t));
    Weight d = dm.distance(t);
    if (!best || d > best->distance || (d == best->distance && t < best->terminal)) {
      best = FarthestPick{t, d};
    }
  }
  if (!best) throw Error(Errc::no_candidate, "every terminal already in S");
  return *best;
}

struct PathResult {
  Weight length;
  std::vector<EdgeId> edge_ids;  // root-to-target order
};

inline PathResult path_from_map(const Graph& g, const DistanceMap& dm, Vertex target) {
  PathResult out;
  out.length = dm.distance(target);
  Vertex x = target;
  while (dm.parent_edge[x] != kNoEdge) {
    EdgeId e = dm.parent_edge[x];
    out.edge_ids.push_back(e);
    x = g.edge(e).other(x);
  }
  std::reverse(out.edge_ids.begin(), out.edge_ids.end());
  return out;
}

/// Shortest root-target path with `zeroed` edges priced at zero.
inline PathResult shortest_path_edges(const Graph& g, Vertex root, Vertex target,
                                      std::span<const EdgeId> zeroed = {},
                                      CallCounters* counters = nullptr) {
  if (!g.contains(root) || !g.contains(target)) {
    throw Error(Errc::vertex_out_of_range, "root/target outside graph");
  }
  auto mask = edge_mask(g, zeroed);
  Vertex src[] = {root};
  auto dm = multi_source_dijkstra(g, src, std::span<const char>(mask), counters);
  if (!dm.reachable(target)) throw Error(Errc::unreachable, "target " + std::to_string(target));
  return path_from_map(g, dm, target);
}

}  // namespace drobust
