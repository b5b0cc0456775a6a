#pragma once

// Test-only reference implementations and random graph generators. Nothing
// here shares code paths with the library algorithms it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "drobust/graph.hpp"

namespace drobust::testing {

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p, std::uint64_t max_units,
                          bool allow_zero = false) {
  std::vector<EdgeTriple> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> w(allow_zero ? 0 : 1, max_units);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (coin(rng) < p) edges.push_back({u, v, Weight::from_units(w(rng))});
    }
  }
  // An occasional parallel edge.
  if (!edges.empty() && coin(rng) < 0.3) {
    auto e = edges[rng() % edges.size()];
    edges.push_back({e.v, e.u, Weight::from_units(w(rng))});
  }
  return build_graph(n, edges);
}

inline std::vector<char> random_mask(std::mt19937_64& rng, std::size_t m, double p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<char> mask(m, 0);
  for (auto& b : mask) b = coin(rng) < p;
  return mask;
}

inline std::vector<EdgeId> ids_from_mask(const std::vector<char>& mask) {
  std::vector<EdgeId> ids;
  for (std::size_t e = 0; e < mask.size(); ++e) {
    if (mask[e]) ids.push_back(static_cast<EdgeId>(e));
  }
  return ids;
}

/// Is there an s-t path avoiding edges flagged in `removed`?
inline bool connected(const Graph& g, Vertex s, Vertex t, const std::vector<char>& removed) {
  return reachable_from(g, s, &removed)[t] != 0;
}

/// Shortest s-t length by enumerating every simple path; UINT64_MAX if none.
inline std::uint64_t brute_shortest(const Graph& g, Vertex s, Vertex t, const std::vector<char>& zeroed) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<char> on_path(g.vertex_count() + 1, 0);
  std::function<void(Vertex, std::uint64_t)> dfs = [&](Vertex x, std::uint64_t len) {
    if (x == t) {
      best = std::min(best, len);
      return;
    }
    on_path[x] = 1;
    for (EdgeId e : g.incident(x)) {
      Vertex y = g.edge(e).other(x);
      if (on_path[y]) continue;
      dfs(y, len + (zeroed.empty() || !zeroed[e] ? g.edge(e).weight.micros : 0));
    }
    on_path[x] = 0;
  };
  dfs(s, 0);
  return best;
}

/// Minimum weight of an edge subset connecting all terminals, by exhaustion.
inline std::uint64_t exhaustive_steiner(const Graph& g, const std::vector<Vertex>& terminals) {
  const std::size_t m = g.edge_count();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::uint64_t w = 0;
    std::vector<char> removed(m, 1);
    for (std::size_t e = 0; e < m; ++e) {
      if (bits >> e & 1) {
        removed[e] = 0;
        w += g.edge(static_cast<EdgeId>(e)).weight.micros;
      }
    }
    if (w >= best) continue;
    auto reach = reachable_from(g, terminals.front(), &removed);
    if (std::all_of(terminals.begin(), terminals.end(), [&](Vertex t) { return reach[t] != 0; })) best = w;
  }
  return best;
}

/// Minimum r-U cut value over every bipartition with r on one side and U on the other.
inline std::uint64_t brute_min_r_U_cut(const Graph& g, Vertex r, const std::vector<Vertex>& targets) {
  const std::size_t n = g.vertex_count();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    auto in = [&](Vertex v) { return (bits >> (v - 1) & 1) != 0; };
    if (!in(r)) continue;
    if (std::any_of(targets.begin(), targets.end(), in)) continue;
    std::uint64_t c = 0;
    for (const auto& e : g.edges()) {
      if (in(e.u) != in(e.v)) c += e.weight.micros;
    }
    best = std::min(best, c);
  }
  return best;
}

/// True if the edges form a forest in which every listed terminal is in one tree.
inline bool is_tree_spanning(const Graph& g, const std::vector<EdgeId>& edges, const std::vector<Vertex>& terminals) {
  std::vector<char> removed(g.edge_count(), 1);
  std::vector<char> touched(g.vertex_count() + 1, 0);
  for (EdgeId e : edges) {
    removed[e] = 0;
    touched[g.edge(e).u] = touched[g.edge(e).v] = 1;
  }
  for (Vertex t : terminals) touched[t] = 1;
  std::size_t vertices = static_cast<std::size_t>(std::count(touched.begin(), touched.end(), 1));
  if (edges.size() + 1 != vertices) return false;
  auto reach = reachable_from(g, terminals.front(), &removed);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (touched[v] && !reach[v]) return false;
  }
  return true;
}

}  // namespace drobust::testing
