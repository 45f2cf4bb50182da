#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "delegation/error.hpp"
#include "delegation/reduce.hpp"
#include "delegation/solve.hpp"
#include "test_support.hpp"

namespace delegation {
namespace {

using testing::Q;
using testing::X;

Graph triangle() { return make_graph(3, {{1, 2}, {2, 3}, {1, 3}}); }
Graph path4() { return make_graph(4, {{1, 2}, {2, 3}, {3, 4}}); }
Graph cycle5() { return make_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}); }

TEST(Graph, ValidationAndDegree) {
  EXPECT_THROW(make_graph(3, {{1, 1}}), SemanticError);
  EXPECT_THROW(make_graph(3, {{1, 4}}), SemanticError);
  EXPECT_THROW(make_graph(3, {{1, 2}, {2, 1}}), SemanticError);
  EXPECT_EQ(triangle().max_degree(), 2U);
  EXPECT_EQ(make_graph(4, {{2, 1}}).edges.front(), (std::pair<std::size_t, std::size_t>{1, 2}));
}

TEST(Graph, ParseEdgeList) {
  std::istringstream in("# triangle\n1 2\n\n2 3\n3 1\n");
  const auto g = parse_edge_list(in);
  EXPECT_EQ(g.vertex_count, 3U);
  EXPECT_EQ(g.edges.size(), 3U);
  std::istringstream isolated("n 5\n1 2\n");
  EXPECT_EQ(parse_edge_list(isolated).vertex_count, 5U);
  std::istringstream bad("1 x\n");
  EXPECT_THROW(parse_edge_list(bad), InputError);
}

TEST(VertexCover, MinCover) {
  EXPECT_EQ(min_vertex_cover(triangle()), 2U);
  EXPECT_EQ(min_vertex_cover(make_graph(2, {})), 0U);
  EXPECT_EQ(min_vertex_cover(path4()), 2U);
  EXPECT_EQ(min_vertex_cover(cycle5()), 3U);
}

TEST(VertexCover, ConstructionCounts) {
  const auto inst = reduce_vertex_cover(triangle());
  EXPECT_EQ(inst.size(), 4U);
  EXPECT_EQ(inst.profiles().size(), 6U);
  EXPECT_EQ(inst.kind(), Kind::Correlated);
}

struct VcCase {
  Graph g;
  Menu opt;
  Rational value;
};

TEST(VertexCover, FrozenOptima) {
  const std::vector<VcCase> cases{
      {triangle(), Menu{1, 2, 4}, Q(11, 3)},
      {make_graph(2, {{1, 2}}), Menu{1, 3}, Q(10, 3)},
      {make_graph(2, {}), Menu{3}, Q(3)},
      {path4(), Menu{1, 3, 5}, Q(25, 7)},
      {cycle5(), Menu{1, 2, 4, 6}, Q(37, 10)},
  };
  for (const auto& c : cases) {
    const auto r = brute_force_opt(reduce_vertex_cover(c.g));
    EXPECT_EQ(r.menu, c.opt);
    EXPECT_EQ(r.value.std_part(), c.value);
    EXPECT_EQ(vertex_cover_optimum(c.g, min_vertex_cover(c.g)), c.value);
  }
}

TEST(VertexCover, IdentityOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 1; u <= n; ++u) {
      for (std::size_t v = u + 1; v <= n; ++v) {
        if (rng() % 2) edges.emplace_back(u, v);
      }
    }
    const auto g = make_graph(n, edges);
    const auto r = brute_force_opt(reduce_vertex_cover(g));
    EXPECT_EQ(r.value.std_part(), vertex_cover_optimum(g, min_vertex_cover(g)));
    EXPECT_TRUE(r.menu.contains(n + 1));
  }
}

TEST(Partition, HasPartition) {
  EXPECT_TRUE(has_partition({{1, 1, 2}}));
  EXPECT_FALSE(has_partition({{1, 1, 3}}));
  EXPECT_FALSE(has_partition({{1, 1, 4}}));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    PartitionInstance p;
    for (int i = 0; i < 8; ++i) p.c.push_back(1 + static_cast<long>(rng() % 9));
    bool found = false;
    for (unsigned mask = 0; mask < 256 && !found; ++mask) {
      long s = 0;
      for (int i = 0; i < 8; ++i) {
        if (mask >> i & 1) s += p.c[i];
      }
      found = 2 * s == p.total();
    }
    EXPECT_EQ(has_partition(p), found);
  }
}

TEST(Partition, MinimalM) {
  EXPECT_EQ(min_partition_m({{1, 1, 2}}), Q(27648));
  EXPECT_EQ(min_partition_m({{1, 1, 3}}), Q(93312));
  EXPECT_THROW(reduce_integer_partition({{1, 1, 2}}, Q(27647)), SemanticError);
  EXPECT_THROW(reduce_integer_partition({{1, 0}}, Q(100000)), SemanticError);
}

TEST(Partition, ProbabilitiesWellFormed) {
  const PartitionInstance p{{2, 3, 5}};
  const auto red = reduce_integer_partition(p, min_partition_m(p));
  for (std::size_t i = 1; i <= 3; ++i) {
    Rational mass = 0;
    for (const auto& o : red.instance.action(i).support) {
      EXPECT_GT(o.prob, 0);
      EXPECT_LT(o.prob, 1);
      mass += o.prob;
    }
    EXPECT_EQ(mass, 1);
  }
}

TEST(Partition, DecisionMatchesOracle) {
  for (const PartitionInstance& p :
       {PartitionInstance{{1, 1, 2}}, PartitionInstance{{1, 1, 3}},
        PartitionInstance{{1, 1, 4}}, PartitionInstance{{2, 3, 5}}}) {
    const auto red = reduce_integer_partition(p, min_partition_m(p));
    const auto r = brute_force_opt(red.instance);
    EXPECT_EQ(r.menu, Menu({3, 4}));
    EXPECT_EQ(r.value.std_part() >= red.decision_threshold, has_partition(p));
  }
}

}  // namespace
}  // namespace delegation
