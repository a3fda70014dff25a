#pragma once

// Graph fixtures and seeded planted-structure generators for the test suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "concentra/graph.hpp"
#include "concentra/rng.hpp"

namespace concentra::testing {

inline std::vector<std::string> numbered_labels(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  const auto width = std::to_string(n == 0 ? 0 : n - 1).size();
  for (std::size_t i = 0; i < n; ++i) {
    auto s = std::to_string(i);
    out.push_back(prefix + std::string(width - s.size(), '0') + s);
  }
  return out;
}

inline Graph make_graph(std::size_t n, const std::vector<Edge>& edges, const std::string& prefix = "v") {
  return Graph::from_edges(numbered_labels(n, prefix), edges);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) e.push_back({u, v});
  return make_graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  return make_graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId u = 0; u < n; ++u) e.push_back({u, static_cast<VertexId>((u + 1) % n)});
  return make_graph(n, e);
}

// Vertex 0 is the center.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (VertexId v = 1; v <= leaves; ++v) e.push_back({0, v});
  return make_graph(leaves + 1, e);
}

inline Graph edgeless(std::size_t n) { return make_graph(n, {}); }

// Cliques of the given sizes on consecutive ids; `bridges` adds an edge between
// the first vertices of consecutive cliques.
inline Graph cliques(const std::vector<std::size_t>& sizes, bool bridges) {
  std::vector<Edge> e;
  VertexId base = 0;
  std::vector<VertexId> firsts;
  for (auto s : sizes) {
    firsts.push_back(base);
    for (VertexId u = 0; u < s; ++u)
      for (VertexId v = u + 1; v < s; ++v) e.push_back({base + u, base + v});
    base += static_cast<VertexId>(s);
  }
  if (bridges)
    for (std::size_t i = 0; i + 1 < firsts.size(); ++i) e.push_back({firsts[i], firsts[i + 1]});
  return make_graph(base, e);
}

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed, std::uint64_t stream = 0) {
  CounterRng rng(seed, stream);
  std::vector<Edge> e;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.uniform() < p) e.push_back({u, v});
  return make_graph(n, e);
}

// Stochastic block model: `blocks` blocks of `size` consecutive vertices.
struct Planted {
  Graph graph;
  std::vector<std::size_t> truth;  // block of each vertex
};

inline Planted planted_partition(std::size_t blocks, std::size_t size, double p_in, double p_out,
                                 std::uint64_t seed) {
  const auto n = blocks * size;
  CounterRng rng(seed, 0x5b);
  std::vector<Edge> e;
  std::vector<std::size_t> truth(n);
  for (std::size_t v = 0; v < n; ++v) truth[v] = v / size;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.uniform() < (truth[u] == truth[v] ? p_in : p_out)) e.push_back({u, v});
  return {make_graph(n, e), truth};
}

// Clique on vertices 0..c-1 inside G(n, p) on the periphery. Each clique
// member links to exactly round(q (n - c)) periphery vertices, with
// q = p + (1 - p) boost, so the clique holds the top degrees.
inline Graph planted_rich_club(std::size_t n, std::size_t c, double p, double boost, std::uint64_t seed) {
  CounterRng rng(seed, 0xc1);
  std::vector<Edge> e;
  for (VertexId u = 0; u < c; ++u)
    for (VertexId v = u + 1; v < c; ++v) e.push_back({u, v});
  const double q = p + (1.0 - p) * boost;
  const auto links = static_cast<std::size_t>(std::lround(q * static_cast<double>(n - c)));
  for (VertexId u = 0; u < c; ++u) {
    std::vector<VertexId> periphery(n - c);
    std::iota(periphery.begin(), periphery.end(), static_cast<VertexId>(c));
    for (std::size_t i = 0; i < links; ++i) {
      std::swap(periphery[i], periphery[i + rng.below(n - c - i)]);
      e.push_back({u, periphery[i]});
    }
  }
  for (VertexId u = c; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.uniform() < p) e.push_back({u, v});
  return make_graph(n, e, "x");
}

// Ten hubs forming K10 minus the edge (hub8, hub9). Each hub links to nine
// random vertices of a 30-vertex periphery, which is itself G(30, 0.05).
inline Graph one_missing_edge_club(std::uint64_t seed) {
  const std::size_t hubs = 10, n = 40, links = 9;
  CounterRng rng(seed, 0x44);
  std::vector<Edge> e;
  for (VertexId u = 0; u < hubs; ++u)
    for (VertexId v = u + 1; v < hubs; ++v)
      if (!(u == 8 && v == 9)) e.push_back({u, v});
  for (VertexId u = 0; u < hubs; ++u) {
    std::vector<VertexId> periphery(n - hubs);
    std::iota(periphery.begin(), periphery.end(), static_cast<VertexId>(hubs));
    for (std::size_t i = 0; i < links; ++i) {
      std::swap(periphery[i], periphery[i + rng.below(n - hubs - i)]);
      e.push_back({u, periphery[i]});
    }
  }
  for (VertexId u = hubs; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.uniform() < 0.05) e.push_back({u, v});
  return make_graph(n, e, "h");
}

// Club 0..c-1 (clique) plus two periphery blocks A and B of `size` vertices.
// Blocks are dense inside and sparse between. Every club member links to
// round(p_club * size) randomly chosen vertices of each block, so the club
// leans towards neither block.
struct PlantedHemicycle {
  Graph graph;
  VertexSet club;
  std::vector<int> block;  // -1 for club, 0 or 1 otherwise
};

inline PlantedHemicycle planted_hemicycle(std::size_t c, std::size_t size, double p_in, double p_out,
                                          double p_club, std::uint64_t seed) {
  const auto n = c + 2 * size;
  CounterRng rng(seed, 0x4e);
  std::vector<int> block(n);
  for (std::size_t v = 0; v < n; ++v) block[v] = v < c ? -1 : static_cast<int>((v - c) / size);
  std::vector<Edge> e;
  for (VertexId u = 0; u < c; ++u)
    for (VertexId v = u + 1; v < c; ++v) e.push_back({u, v});
  const auto per_block = static_cast<std::size_t>(std::lround(p_club * static_cast<double>(size)));
  for (VertexId u = 0; u < c; ++u)
    for (std::size_t b = 0; b < 2; ++b) {
      std::vector<VertexId> members(size);
      std::iota(members.begin(), members.end(), static_cast<VertexId>(c + b * size));
      for (std::size_t i = 0; i < per_block; ++i) {
        std::swap(members[i], members[i + rng.below(size - i)]);
        e.push_back({u, members[i]});
      }
    }
  for (VertexId u = c; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.uniform() < (block[u] == block[v] ? p_in : p_out)) e.push_back({u, v});
  VertexSet club(c);
  std::iota(club.begin(), club.end(), VertexId{0});
  return {make_graph(n, e, "p"), club, block};
}

// Random partition of 0..n-1 into at most `k` nonempty classes.
inline std::vector<VertexSet> random_classes(std::size_t n, std::size_t k, CounterRng& rng) {
  std::vector<VertexSet> classes(k);
  for (VertexId v = 0; v < n; ++v) classes[rng.below(k)].push_back(v);
  classes.erase(std::remove_if(classes.begin(), classes.end(), [](const VertexSet& c) { return c.empty(); }),
                classes.end());
  return classes;
}

// Same graph with labels replaced and vertex ids permuted: new id of old
// vertex v is perm[v]; its label becomes "q" + original label.
inline Graph relabel(const Graph& g, const std::vector<VertexId>& perm) {
  std::vector<std::string> labels(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) labels[perm[v]] = "q" + g.label(v);
  std::vector<Edge> e;
  for (const auto& edge : g.edges()) e.push_back({perm[edge.u], perm[edge.v]});
  return Graph::from_edges(std::move(labels), e);
}

inline std::vector<VertexId> random_permutation(std::size_t n, CounterRng& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

}  // namespace concentra::testing
