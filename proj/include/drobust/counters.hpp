#pragma once

#include <cstdint>

namespace drobust {

/// Optional instrumentation passed down by callers that want operation counts.
struct CallCounters {
  std::uint64_t flow_calls = 0;
  std::uint64_t dijkstra_calls = 0;
  std::uint64_t steiner_calls = 0;
  std::uint64_t farthest_iterations = 0;

  CallCounters& operator+=(const CallCounters& o) {
    flow_calls += o.flow_calls;
    dijkstra_calls += o.dijkstra_calls;
    steiner_calls += o.steiner_calls;
    farthest_iterations += o.farthest_iterations;
    return *this;
  }
};

}  // namespace drobust
