#include <gtest/gtest.h>

#include "drobust/corpus.hpp"
#include "drobust/instance_io.hpp"
#include "drobust/oracle.hpp"
#include "drobust/robust_mincut.hpp"
#include "drobust/robust_sp.hpp"

namespace drobust {
namespace {

std::string total_of(const Instance& inst, std::vector<EdgeId> ids) {
  return format_cost(evaluate(inst, ids).total_cost);
}

TEST(ExactRobust, StarMincutSubsets) {
  auto inst = parse_instance("p robust mincut\nn 3\ne 1 2 4\ne 1 3 1\nr 1\nt 2 3\nl 2\n");
  EXPECT_EQ(total_of(inst, {}), "8");
  EXPECT_EQ(total_of(inst, {0}), "6");
  EXPECT_EQ(total_of(inst, {1}), "9");
  EXPECT_EQ(total_of(inst, {0, 1}), "5");
  auto res = exact_robust(inst);
  EXPECT_EQ(format_cost(res.optimum_total), "5");
  EXPECT_EQ(res.optimal_first_stage, (EdgeSet{0, 1}));
  EXPECT_EQ(res.subsets_examined, 4u);
}

TEST(ExactRobust, PathShortestPathSubsets) {
  auto inst = parse_instance("p robust sp\nn 3\ne 1 2 1\ne 2 3 1\nr 1\nt 3\nl 3\n");
  EXPECT_EQ(total_of(inst, {}), "6");
  EXPECT_EQ(total_of(inst, {0}), "4");
  EXPECT_EQ(total_of(inst, {1}), "4");
  EXPECT_EQ(total_of(inst, {0, 1}), "2");
  EXPECT_EQ(format_cost(exact_robust(inst).optimum_total), "2");
}

TEST(ExactRobust, ThreeSpokeStarBuysNothing) {
  auto inst = parse_instance("p robust sp\nn 4\ne 1 2 1\ne 1 3 1\ne 1 4 1\nr 1\nt 2 3 4\nl 2\n");
  auto res = exact_robust(inst);
  EXPECT_EQ(format_cost(res.optimum_total), "2");
  EXPECT_TRUE(res.optimal_first_stage.empty());
  EXPECT_EQ(res.subsets_examined, 8u);
}

TEST(ExactRobust, TieBreakPrefersFewerEdgesThenLowerIds) {
  // Two parallel unit edges, lambda 1: buying nothing, edge 0, or edge 1 alone all cost 1.
  auto inst = parse_instance("p robust sp\nn 2\ne 1 2 1\ne 1 2 1\nr 1\nt 2\nl 1\n");
  auto res = exact_robust(inst);
  EXPECT_TRUE(res.optimal_first_stage.empty());
  inst.lambda = Inflation::make(2, 1);
  res = exact_robust(inst);
  EXPECT_EQ(res.optimal_first_stage, (EdgeSet{0}));
}

TEST(ExactRobust, TooLarge) {
  std::vector<EdgeTriple> edges;
  for (int i = 0; i < 21; ++i) edges.push_back({1, 2, Weight::from_units(1)});
  Instance inst;
  inst.graph = build_graph(2, edges);
  inst.terminals = {2};
  inst.lambda = Inflation::make(2, 1);
  try {
    exact_robust(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
  }
  try {
    exact_robust(inst, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
  }
}

TEST(ExactRobust, LambdaOneNeverWorseThanBuyingNothing) {
  for (auto problem : {Problem::mincut, Problem::shortest_path}) {
    for (auto& entry : certification_corpus(30, 77, problem)) {
      entry.instance.lambda = Inflation::make(1, 1);
      EXPECT_LE(exact_robust(entry.instance).optimum_total, evaluate(entry.instance, {}).total_cost);
    }
  }
}

TEST(ExactRobust, SelfConsistentAndDominatesSolvers) {
  for (auto problem : {Problem::mincut, Problem::shortest_path}) {
    for (const auto& entry : certification_corpus(40, 300, problem)) {
      const auto& inst = entry.instance;
      auto opt = exact_robust(inst);
      EXPECT_EQ(opt.subsets_examined, std::uint64_t{1} << inst.graph.edge_count());
      EXPECT_EQ(evaluate(inst, opt.optimal_first_stage).total_cost, opt.optimum_total);
      EXPECT_EQ(opt.report.total_cost, opt.optimum_total);
      if (problem == Problem::mincut) {
        EXPECT_LE(opt.optimum_total, solve_robust_mincut(inst).solution.total_cost());
      } else {
        EXPECT_LE(opt.optimum_total, solve_robust_sp(inst, SteinerMethod::mehlhorn).solution.total_cost());
        EXPECT_LE(opt.optimum_total, solve_robust_sp(inst, SteinerMethod::exact).solution.total_cost());
      }
    }
  }
}

}  // namespace
}  // namespace drobust
