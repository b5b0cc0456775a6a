#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "drobust/counters.hpp"
#include "drobust/error.hpp"
#include "drobust/graph.hpp"
#include "drobust/numeric.hpp"
#include "drobust/shortest_paths.hpp"

namespace drobust {

struct SteinerResult {
  EdgeSet edge_ids;
  Weight weight;
  std::vector<Vertex> terminals;  // sorted
  Rational gamma_bound;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::vector<Vertex> sorted_unique(std::span<const Vertex> vs) {
  std::vector<Vertex> out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Turns a connected candidate edge set into a tree spanning `terminals`:
/// spanning forest by (weight, id), then iterative removal of non-terminal leaves.
inline SteinerResult finalize_tree(const Graph& g, std::span<const EdgeId> candidates,
                                   std::span<const Vertex> terminals, Rational gamma) {
  SteinerResult out;
  out.terminals = detail::sorted_unique(terminals);
  out.gamma_bound = gamma;

  std::vector<EdgeId> order = normalize_edges(EdgeSet(candidates.begin(), candidates.end()));
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return g.edge(a).weight < g.edge(b).weight;
  });
  detail::DisjointSets dsu(g.vertex_count() + 1);
  std::vector<char> in_tree(g.edge_count(), 0);
  std::vector<std::size_t> degree(g.vertex_count() + 1, 0);
  for (EdgeId e : order) {
    const Edge& ed = g.edge(e);
    if (dsu.unite(ed.u, ed.v)) {
      in_tree[e] = 1;
      ++degree[ed.u];
      ++degree[ed.v];
    }
  }
  for (Vertex t : out.terminals) {
    if (dsu.find(t) != dsu.find(out.terminals.front())) {
      throw Error(Errc::disconnected_terminals, "terminal " + std::to_string(t) + " not connected");
    }
  }

  std::vector<char> is_terminal(g.vertex_count() + 1, 0);
  for (Vertex t : out.terminals) is_terminal[t] = 1;
  std::vector<Vertex> leaves;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (degree[v] == 1 && !is_terminal[v]) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    Vertex v = leaves.back();
    leaves.pop_back();
    if (degree[v] != 1) continue;
    for (EdgeId e : g.incident(v)) {
      if (!in_tree[e]) continue;
      in_tree[e] = 0;
      --degree[v];
      Vertex w = g.edge(e).other(v);
      if (--degree[w] == 1 && !is_terminal[w]) leaves.push_back(w);
      break;
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) {
      out.edge_ids.push_back(e);
      out.weight += g.edge(e).weight;
    }
  }
  return out;
}

/// Distance-network 2-approximation: Voronoi regions around the terminals,
/// minimum spanning tree of the induced terminal graph, expansion to paths.
inline SteinerResult mehlhorn_steiner(const Graph& g, std::span<const Vertex> terminal_list,
                                      CallCounters* counters = nullptr) {
  if (terminal_list.empty()) throw Error(Errc::disconnected_terminals, "no terminals");
  if (counters) ++counters->steiner_calls;
  auto terminals = detail::sorted_unique(terminal_list);
  for (Vertex t : terminals) {
    if (!g.contains(t)) throw Error(Errc::vertex_out_of_range, "terminal " + std::to_string(t));
  }
  if (terminals.size() == 1) return finalize_tree(g, {}, terminals, Rational::integer(2));

  auto vor = multi_source_dijkstra(g, terminals, std::span<const char>{}, counters);

  // Cheapest boundary edge per pair of regions; ties go to the smaller edge id.
  std::map<std::pair<Vertex, Vertex>, std::pair<std::uint64_t, EdgeId>> bridges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!vor.reachable(ed.u) || !vor.reachable(ed.v)) continue;
    Vertex a = vor.origin[ed.u], b = vor.origin[ed.v];
    if (a == b) continue;
    std::uint64_t d = vor.dist[ed.u] + ed.weight.micros + vor.dist[ed.v];
    auto key = std::minmax(a, b);
    auto it = bridges.find(key);
    if (it == bridges.end() || std::make_pair(d, e) < it->second) bridges[key] = {d, e};
  }

  using AuxEdge = std::tuple<std::uint64_t, Vertex, Vertex, EdgeId>;
  std::vector<AuxEdge> aux;
  aux.reserve(bridges.size());
  for (const auto& [key, val] : bridges) aux.emplace_back(val.first, key.first, key.second, val.second);
  std::sort(aux.begin(), aux.end());

  detail::DisjointSets dsu(g.vertex_count() + 1);
  std::vector<EdgeId> expanded;
  std::size_t joined = 0;
  for (const auto& [d, a, b, e] : aux) {
    if (!dsu.unite(a, b)) continue;
    ++joined;
    expanded.push_back(e);
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      while (vor.parent_edge[x] != kNoEdge) {
        expanded.push_back(vor.parent_edge[x]);
        x = g.edge(vor.parent_edge[x]).other(x);
      }
    }
  }
  if (joined + 1 != terminals.size()) {
    throw Error(Errc::disconnected_terminals, "terminals span more than one component");
  }
  return finalize_tree(g, expanded, terminals, Rational::integer(2));
}

}  // namespace drobust
