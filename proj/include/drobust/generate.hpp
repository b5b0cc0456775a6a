#pragma once

// Seeded instance generators.
//
// Randomness comes from SplitMix64 (Steele, Lea, Flood 2014):
//   state += 0x9E3779B97F4A7C15
//   z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Bounded draws reject values below (2^64 mod bound) and reduce modulo bound,
// so every platform produces the same corpus for the same seed.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "drobust/error.hpp"
#include "drobust/graph.hpp"
#include "drobust/numeric.hpp"

namespace drobust {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

enum class GenModel { gnp, grid, star, tree_plus_chords };

constexpr std::string_view to_string(GenModel m) {
  switch (m) {
    case GenModel::gnp: return "gnp";
    case GenModel::grid: return "grid";
    case GenModel::star: return "star";
    case GenModel::tree_plus_chords: return "tree";
  }
  return "unknown";
}

struct GenSpec {
  GenModel model = GenModel::gnp;
  Problem problem = Problem::mincut;
  std::size_t vertices = 8;           // ignored for grid
  std::uint64_t edge_probability_micros = 500'000;  // gnp: p * 10^6
  std::size_t grid_rows = 3;
  std::size_t grid_cols = 3;
  std::size_t chords = 2;             // tree_plus_chords: extra random edges
  std::size_t terminal_count = 3;
  Weight weight_lo = Weight::from_units(1);
  Weight weight_hi = Weight::from_units(10);
  Weight weight_step = Weight::from_units(1);  // weights are lo + k * step <= hi
  Inflation lambda = Inflation::make(2, 1);
  std::uint64_t seed = 0;
  std::size_t max_edges = 0;          // 0 means unlimited; larger draws are retried
  std::size_t max_retries = 100;
};

inline Instance generate(const GenSpec& spec) {
  const std::size_t n = spec.model == GenModel::grid ? spec.grid_rows * spec.grid_cols : spec.vertices;
  auto infeasible = [](const std::string& why) { return Error(Errc::infeasible_spec, why); };
  if (n < 2) throw infeasible("need at least 2 vertices");
  if (spec.terminal_count == 0 || spec.terminal_count >= n) {
    throw infeasible("terminal count must be in 1..vertices-1");
  }
  if (spec.weight_lo > spec.weight_hi || spec.weight_step.micros == 0) throw infeasible("bad weight range");
  if (spec.edge_probability_micros > kMicrosPerUnit) throw infeasible("edge probability above 1");
  if (!spec.lambda.at_least_one()) throw infeasible("inflation factor below 1");

  SplitMix64 rng(spec.seed);
  const std::uint64_t steps = (spec.weight_hi.micros - spec.weight_lo.micros) / spec.weight_step.micros + 1;
  auto draw_weight = [&] { return Weight{spec.weight_lo.micros + spec.weight_step.micros * rng.below(steps)}; };

  for (std::size_t attempt = 0; attempt < spec.max_retries; ++attempt) {
    std::vector<EdgeTriple> edges;
    auto add = [&](std::size_t u, std::size_t v) {
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), draw_weight()});
    };
    switch (spec.model) {
      case GenModel::gnp:
        for (std::size_t u = 1; u <= n; ++u) {
          for (std::size_t v = u + 1; v <= n; ++v) {
            if (rng.below(kMicrosPerUnit) < spec.edge_probability_micros) add(u, v);
          }
        }
        break;
      case GenModel::grid:
        for (std::size_t r = 0; r < spec.grid_rows; ++r) {
          for (std::size_t c = 0; c < spec.grid_cols; ++c) {
            std::size_t id = r * spec.grid_cols + c + 1;
            if (c + 1 < spec.grid_cols) add(id, id + 1);
            if (r + 1 < spec.grid_rows) add(id, id + spec.grid_cols);
          }
        }
        break;
      case GenModel::star:
        for (std::size_t v = 2; v <= n; ++v) add(1, v);
        break;
      case GenModel::tree_plus_chords:
        for (std::size_t v = 2; v <= n; ++v) add(1 + rng.below(v - 1), v);
        for (std::size_t k = 0; k < spec.chords; ++k) {
          std::size_t u = 1 + rng.below(n);
          std::size_t v = 1 + rng.below(n - 1);
          if (v >= u) ++v;
          add(std::min(u, v), std::max(u, v));
        }
        break;
    }

    // Terminals: partial Fisher-Yates over 2..n, reported in ascending order.
    std::vector<Vertex> pool;
    for (std::size_t v = 2; v <= n; ++v) pool.push_back(static_cast<Vertex>(v));
    for (std::size_t i = 0; i < spec.terminal_count; ++i) {
      std::size_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    std::vector<Vertex> terminals(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(spec.terminal_count));
    std::sort(terminals.begin(), terminals.end());

    if (spec.max_edges != 0 && edges.size() > spec.max_edges) continue;
    Instance inst;
    inst.graph = build_graph(n, edges);
    inst.problem = spec.problem;
    inst.root = 1;
    inst.terminals = std::move(terminals);
    inst.lambda = spec.lambda;
    if (validate_instance(inst).empty()) return inst;
  }
  throw Error(Errc::connectivity_retries_exceeded,
              std::to_string(spec.max_retries) + " attempts without a valid instance");
}

}  // namespace drobust
