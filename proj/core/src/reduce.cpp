#include "delegation/reduce.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "delegation/error.hpp"

namespace delegation {

std::size_t Graph::max_degree() const {
  std::vector<std::size_t> deg(vertex_count + 1, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Graph make_graph(std::size_t vertex_count,
                 std::vector<std::pair<std::size_t, std::size_t>> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) throw SemanticError("self-loop at vertex " + std::to_string(u));
    if (u == 0 || v == 0 || u > vertex_count || v > vertex_count) {
      throw SemanticError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range 1.." + std::to_string(vertex_count));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw SemanticError("duplicate edge");
  }
  return Graph{vertex_count, std::move(edges)};
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::size_t> declared;
  std::size_t largest = 0;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    auto fail = [&] {
      throw InputError("edge list line " + std::to_string(lineno) + ": expected \"u v\", got \"" +
                       line + "\"");
    };
    if (line[first] == 'n') {
      std::string tag;
      long count = -1;
      if (!(ls >> tag >> count) || tag != "n" || count < 0) fail();
      declared = static_cast<std::size_t>(count);
      continue;
    }
    long u = 0, v = 0;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest) || u < 1 || v < 1) fail();
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    largest = std::max({largest, edges.back().first, edges.back().second});
  }
  return make_graph(declared ? *declared : largest, std::move(edges));
}

Instance reduce_vertex_cover(const Graph& graph) {
  const std::size_t n = graph.vertex_count;
  if (n == 0) throw SemanticError("vertex cover reduction needs at least one vertex");
  const std::size_t def = n;  // 0-based slot of the default action

  std::vector<Action> actions(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    actions[i].bias = XNum(0);
    actions[i].label = "v" + std::to_string(i + 1);
  }
  // Agent utility 1, principal utility 3.
  actions[def].bias = XNum(-2);
  actions[def].label = "default";
  const XNum default_value(3);

  const Rational p(1, static_cast<unsigned long>(graph.edges.size() + n));
  std::vector<Profile> profiles;
  for (const auto& [u, v] : graph.edges) {
    Profile prof{p, std::vector<XNum>(n + 1)};
    prof.values[u - 1] = XNum(5);
    prof.values[v - 1] = XNum(5);
    prof.values[def] = default_value;
    profiles.push_back(std::move(prof));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Profile prof{p, std::vector<XNum>(n + 1)};
    prof.values[i] = XNum(2);
    prof.values[def] = default_value;
    profiles.push_back(std::move(prof));
  }
  return Instance::correlated(std::move(actions), std::move(profiles));
}

Rational vertex_cover_optimum(const Graph& graph, std::size_t cover_size) {
  const long m = static_cast<long>(graph.edges.size());
  const long n = static_cast<long>(graph.vertex_count);
  Rational r(5 * m + 3 * n - static_cast<long>(cover_size), m + n);
  r.canonicalize();
  return r;
}

std::size_t min_vertex_cover(const Graph& graph) {
  const std::size_t n = graph.vertex_count;
  if (n > 20) throw CapExceeded("min_vertex_cover supports at most 20 vertices");
  std::size_t best = n;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountl(mask));
    if (size >= best) continue;
    const bool covers = std::all_of(graph.edges.begin(), graph.edges.end(), [&](const auto& e) {
      return (mask >> (e.first - 1) & 1UL) || (mask >> (e.second - 1) & 1UL);
    });
    if (covers) best = size;
  }
  return best;
}

long PartitionInstance::total() const {
  long s = 0;
  for (long x : c) s += x;
  return s;
}

long PartitionInstance::max() const {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

namespace {

void check_partition(const PartitionInstance& p) {
  if (p.c.empty()) throw SemanticError("partition instance needs at least one integer");
  for (long x : p.c) {
    if (x <= 0) throw SemanticError("partition integers must be positive");
  }
}

}  // namespace

Rational min_partition_m(const PartitionInstance& p) {
  check_partition(p);
  const mpz_class n = static_cast<long>(p.c.size());
  const mpz_class cmax = p.max();
  mpz_class m = 2 * mpz_class(p.total());
  m = std::max<mpz_class>(m, 4 * n * cmax);
  m = std::max<mpz_class>(m, 128 * n * n * n * cmax * cmax * cmax);
  return Rational(m);
}

PartitionReduction reduce_integer_partition(const PartitionInstance& p, const Rational& m) {
  check_partition(p);
  if (m.get_den() != 1) throw SemanticError("M must be an integer");
  const long n = static_cast<long>(p.c.size());
  const Rational c_total = p.total();
  const Rational cmax = p.max();
  if (m < 2 * c_total) {
    throw SemanticError("M = " + to_string(m) + " violates M >= 2C = " +
                        to_string(Rational(2 * c_total)));
  }
  if (m < 4 * n * cmax) {
    throw SemanticError("M = " + to_string(m) + " violates M >= 4·n·c_max = " +
                        to_string(Rational(4 * n * cmax)));
  }
  const Rational cubic = 128 * n * n * n * cmax * cmax * cmax;
  if (m < cubic) {
    throw SemanticError("M = " + to_string(m) + " violates M >= 128·n^3·c_max^3 = " +
                        to_string(cubic));
  }

  const Rational scale = 1 - c_total / (2 * m);   // 1 - C/2M
  const Rational high_bias = m * m * scale;        // M^2 (1 - C/2M)
  const Rational m2 = m * m, m3 = m2 * m, m4 = m3 * m;

  // With these probabilities the principal's utility from S plus the anchor
  // is (B+1)/2 + sum(S)·sum(not S)/(4M^2) up to O(n^3 c_max^3 / M^3). The
  // second-order term of p_i must be added for the first-order terms of
  // the high and low realizations to cancel.

  std::vector<Action> actions;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    const Rational ci = p.c[i];
    const Rational pi = ci / m3 + ci * ci / (2 * m4 * scale);
    const Rational qi = ci / m;
    const Rational rest = 1 - pi - qi;
    if (pi <= 0 || qi <= 0 || rest <= 0) {
      throw SemanticError("integer " + std::to_string(i + 1) +
                          ": realization probabilities leave (0, 1)");
    }
    Action a;
    a.bias = XNum(high_bias);
    a.label = "c" + std::to_string(i + 1);
    a.support = {Outcome{XNum(1, 2), pi}, Outcome{XNum(1), qi}, Outcome{XNum(0), rest}};
    actions.push_back(std::move(a));
  }
  Action anchor;
  anchor.bias = XNum(0);
  anchor.label = "anchor";
  anchor.support = {Outcome{XNum(0), Rational(1, 2)},
                    Outcome{XNum(high_bias + 1, 1), Rational(1, 2)}};
  actions.push_back(std::move(anchor));

  // A perfect split reaches C^2/(16M^2) above (B+1)/2; any other split is at
  // least 1/(16M^2) lower (odd C included), so cut halfway.
  Rational threshold = (high_bias + 1) / 2 + (2 * c_total * c_total - 1) / (32 * m2);
  return PartitionReduction{Instance::independent(std::move(actions)), std::move(threshold)};
}

bool has_partition(const PartitionInstance& p) {
  check_partition(p);
  const long total = p.total();
  if (total % 2 != 0) return false;
  const auto half = static_cast<std::size_t>(total / 2);
  std::vector<char> reachable(half + 1, 0);
  reachable[0] = 1;
  for (long x : p.c) {
    const auto step = static_cast<std::size_t>(x);
    for (std::size_t s = half; s >= step && s > 0; --s) {
      if (reachable[s - step]) reachable[s] = 1;
    }
  }
  return reachable[half] != 0;
}

}  // namespace delegation
