#pragma once

#include <cstddef>
#include <istream>
#include <utility>
#include <vector>

#include "delegation/instance.hpp"

namespace delegation {

/// Simple undirected graph on vertices 1..vertex_count.
struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t max_degree() const;
};

/// Validates and normalizes (u < v, sorted). Throws SemanticError on
/// loops, duplicate edges or out-of-range endpoints.
Graph make_graph(std::size_t vertex_count,
                 std::vector<std::pair<std::size_t, std::size_t>> edges);

/// Edge-list text: one "u v" pair per line, 1-indexed. Blank lines and
/// lines starting with '#' are skipped. An optional "n <count>" line fixes
/// the vertex count (needed for isolated vertices); otherwise it is the
/// largest endpoint.
Graph parse_edge_list(std::istream& in);

/// Bounded-degree vertex cover as correlated delegation. Vertex i is action
/// i (bias 0); action n+1 is the default action. Profiles: one per edge
/// {i,j} (5 to i and j, default action active) and one per vertex i (2 to
/// i, default action active), all equally likely. The default action gives
/// the agent 1 and the principal 3, so the optimum is
/// (5m + 3n - k)/(m + n) with k the minimum cover size.
Instance reduce_vertex_cover(const Graph& graph);

/// (5m + 3n - k)/(m + n).
Rational vertex_cover_optimum(const Graph& graph, std::size_t cover_size);

/// Exact minimum vertex cover size by subset enumeration (n <= 20).
std::size_t min_vertex_cover(const Graph& graph);

struct PartitionInstance {
  std::vector<long> c;

  long total() const;
  long max() const;
};

/// Smallest M satisfying M >= 2C, M >= 4·n·c_max and M >= 128·n^3·c_max^3.
Rational min_partition_m(const PartitionInstance& p);

struct PartitionReduction {
  Instance instance;
  Rational decision_threshold;
};

/// Integer Partition as independent delegation with n+1 actions and δ = ι.
///
/// Actions 1..n have bias B = M^2(1 - C/2M) and value 1+2ι with probability
/// p_i = c_i/M^3 + c_i^2/(2M^4(1 - C/2M)), 1 with probability q_i = c_i/M,
/// 0 otherwise. Action n+1 has bias 0 and value 0 or B+1+ι with probability
/// 1/2 each. A partition exists iff the optimal menu's standard part reaches
/// `decision_threshold` = (B+1)/2 + (2C^2 - 1)/(32M^2).
/// Throws SemanticError when M violates a lower bound of the construction.
PartitionReduction reduce_integer_partition(const PartitionInstance& p,
                                            const Rational& m);

/// Subset-sum check for a split into two halves of equal sum.
bool has_partition(const PartitionInstance& p);

}  // namespace delegation
