#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drobust/error.hpp"
#include "drobust/numeric.hpp"

namespace drobust {

/// Vertex ids are 1-based; edge ids are 0-based input order.
using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight weight;

  Vertex other(Vertex x) const { return x == u ? v : u; }
};

struct EdgeTriple {
  Vertex u = 0;
  Vertex v = 0;
  Weight weight;
};

/// Immutable undirected multigraph. Parallel edges are kept apart by id.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const { return adjacency_[v]; }
  bool contains(Vertex v) const { return v >= 1 && v <= vertex_count_; }

  Weight total_weight() const {
    Weight sum;
    for (const auto& e : edges_) sum += e.weight;
    return sum;
  }

  friend Graph build_graph(std::size_t vertex_count, std::span<const EdgeTriple> edge_triples);

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;  // index 0 unused
};

// Keeps Σ weights × λ-numerator below 2^62; see validate_instance.
inline constexpr std::uint64_t kWeightBudget = std::uint64_t{1} << 62;

inline Graph build_graph(std::size_t vertex_count, std::span<const EdgeTriple> edge_triples) {
  if (vertex_count == 0) throw Error(Errc::out_of_range_vertex, "graph needs at least one vertex");
  Graph g;
  g.vertex_count_ = vertex_count;
  g.adjacency_.assign(vertex_count + 1, {});
  g.edges_.reserve(edge_triples.size());
  std::uint64_t total = 0;
  for (const auto& t : edge_triples) {
    if (t.u < 1 || t.u > vertex_count || t.v < 1 || t.v > vertex_count) {
      throw Error(Errc::out_of_range_vertex,
                  "edge " + std::to_string(g.edges_.size()) + " endpoint outside 1.." +
                      std::to_string(vertex_count));
    }
    if (t.u == t.v) {
      throw Error(Errc::self_loop, "edge " + std::to_string(g.edges_.size()) + " at vertex " +
                                       std::to_string(t.u));
    }
    if (t.weight.micros >= kWeightBudget || total + t.weight.micros >= kWeightBudget) {
      throw Error(Errc::weight_overflow, "total edge weight exceeds 2^62 micro-units");
    }
    total += t.weight.micros;
    auto id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back(Edge{t.u, t.v, t.weight});
    g.adjacency_[t.u].push_back(id);
    g.adjacency_[t.v].push_back(id);
  }
  return g;
}

inline Graph build_graph(std::size_t vertex_count, std::initializer_list<EdgeTriple> edge_triples) {
  return build_graph(vertex_count, std::span<const EdgeTriple>(edge_triples.begin(), edge_triples.size()));
}

enum class Problem { mincut, shortest_path };

constexpr std::string_view to_string(Problem p) {
  return p == Problem::mincut ? "mincut" : "sp";
}

struct Instance {
  Graph graph;
  Problem problem = Problem::mincut;
  Vertex root = 1;
  std::vector<Vertex> terminals;
  Inflation lambda;
};

enum class Violation {
  root_out_of_range,
  terminal_out_of_range,
  root_is_terminal,
  duplicate_terminal,
  no_terminals,
  unreachable_terminal,
  lambda_below_one,
  weight_overflow,
};

constexpr std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::root_out_of_range: return "ROOT_OUT_OF_RANGE";
    case Violation::terminal_out_of_range: return "TERMINAL_OUT_OF_RANGE";
    case Violation::root_is_terminal: return "ROOT_IS_TERMINAL";
    case Violation::duplicate_terminal: return "DUPLICATE_TERMINAL";
    case Violation::no_terminals: return "NO_TERMINALS";
    case Violation::unreachable_terminal: return "UNREACHABLE_TERMINAL";
    case Violation::lambda_below_one: return "LAMBDA_BELOW_ONE";
    case Violation::weight_overflow: return "WEIGHT_OVERFLOW";
  }
  return "UNKNOWN";
}

/// Vertices reachable from `from`, ignoring edges flagged in `removed`.
inline std::vector<char> reachable_from(const Graph& g, Vertex from,
                                        const std::vector<char>* removed = nullptr) {
  std::vector<char> seen(g.vertex_count() + 1, 0);
  if (!g.contains(from)) return seen;
  std::vector<Vertex> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      if (removed && (*removed)[e]) continue;
      Vertex y = g.edge(e).other(x);
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

/// Empty result means the instance is valid. Each violated invariant is named once.
inline std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  auto flag = [&](Violation v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  const Graph& g = inst.graph;
  bool root_ok = g.contains(inst.root);
  if (!root_ok) flag(Violation::root_out_of_range);
  if (inst.terminals.empty()) flag(Violation::no_terminals);

  std::vector<Vertex> sorted = inst.terminals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) flag(Violation::duplicate_terminal);

  std::vector<char> reach;
  if (root_ok) reach = reachable_from(g, inst.root);
  for (Vertex t : inst.terminals) {
    if (!g.contains(t)) {
      flag(Violation::terminal_out_of_range);
      continue;
    }
    if (t == inst.root) flag(Violation::root_is_terminal);
    if (root_ok && !reach[t]) flag(Violation::unreachable_terminal);
  }

  if (!inst.lambda.at_least_one()) flag(Violation::lambda_below_one);
  detail::u128 budget = static_cast<detail::u128>(g.total_weight().micros) *
                        std::max<std::uint64_t>(inst.lambda.numerator, 1);
  if (budget >= kWeightBudget) flag(Violation::weight_overflow);
  return out;
}

/// Admitted but outside the algorithms' usual assumptions.
inline std::vector<std::string> instance_warnings(const Instance& inst) {
  std::vector<std::string> out;
  if (inst.lambda.denominator != 0 && inst.lambda.numerator == inst.lambda.denominator) {
    out.emplace_back("inflation factor equals 1; first-stage purchases are never strictly cheaper");
  }
  return out;
}

inline void require_valid(const Instance& inst) {
  auto violations = validate_instance(inst);
  if (violations.empty()) return;
  std::string msg;
  for (auto v : violations) {
    if (!msg.empty()) msg += ",";
    msg += to_string(v);
  }
  throw Error(Errc::invalid_instance, msg);
}

/// Sorted, de-duplicated edge ids.
using EdgeSet = std::vector<EdgeId>;

inline EdgeSet normalize_edges(EdgeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline Weight weight_of(const Graph& g, std::span<const EdgeId> edges) {
  Weight sum;
  for (EdgeId e : edges) sum += g.edge(e).weight;
  return sum;
}

/// Edge-indexed 0/1 mask; throws INVALID_EDGE_ID on out-of-range ids.
inline std::vector<char> edge_mask(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<char> mask(g.edge_count(), 0);
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) throw Error(Errc::invalid_edge_id, "edge id " + std::to_string(e));
    mask[e] = 1;
  }
  return mask;
}

}  // namespace drobust
