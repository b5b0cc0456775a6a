#pragma once

// The seeded desk-scale corpus used to certify approximation ratios:
// GNP and tree-plus-chords graphs on 5..8 vertices with at most 14 edges,
// integer weights 1..10, 2..4 terminals and inflation 3/2, 2 or 5.

#include <cstdint>
#include <string>
#include <vector>

#include "drobust/generate.hpp"
#include "drobust/graph.hpp"

namespace drobust {

struct CorpusEntry {
  std::string id;
  std::uint64_t seed = 0;
  Instance instance;
};

inline constexpr std::size_t kCertificationMaxEdges = 14;

inline GenSpec certification_spec(std::size_t index, std::uint64_t base_seed, Problem problem) {
  static constexpr std::uint64_t kLambdaNum[] = {3, 2, 5};
  static constexpr std::uint64_t kLambdaDen[] = {2, 1, 1};
  GenSpec spec;
  spec.problem = problem;
  spec.model = index % 2 == 0 ? GenModel::gnp : GenModel::tree_plus_chords;
  spec.terminal_count = 2 + (index / 2) % 3;
  const std::size_t li = (index / 6) % 3;
  spec.lambda = Inflation::make(kLambdaNum[li], kLambdaDen[li]);
  spec.vertices = 5 + (index / 18) % 4;
  spec.chords = 1 + (index / 72) % 4;
  spec.edge_probability_micros = 450'000;
  spec.weight_lo = Weight::from_units(1);
  spec.weight_hi = Weight::from_units(10);
  spec.weight_step = Weight::from_units(1);
  spec.max_edges = kCertificationMaxEdges;
  spec.seed = base_seed + index;
  return spec;
}

inline std::vector<CorpusEntry> certification_corpus(std::size_t count, std::uint64_t base_seed, Problem problem) {
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto spec = certification_spec(i, base_seed, problem);
    out.push_back({"mixed-" + std::to_string(i), spec.seed, generate(spec)});
  }
  return out;
}

}  // namespace drobust
