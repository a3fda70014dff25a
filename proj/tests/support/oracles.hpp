#pragma once

// Brute-force references. Nothing here calls into the routines it checks:
// distances come from Floyd-Warshall, shortest paths from explicit
// enumeration, modularity from pairwise edge counting, optima from
// exhaustive search.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "concentra/graph.hpp"

namespace concentra::testing {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (VertexId u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (VertexId v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Σ over unordered pairs {s, t} of (#shortest s-t paths through v) / (#shortest s-t paths),
// by enumerating every path of minimal length.
inline std::vector<double> brute_force_betweenness(const Graph& g) {
  const auto n = g.vertex_count();
  const auto d = floyd_warshall(g);
  std::vector<double> out(n, 0.0);
  std::vector<VertexId> trail;
  std::vector<char> on_trail(n, 0);
  for (VertexId s = 0; s < n; ++s)
    for (VertexId t = s + 1; t < n; ++t) {
      if (d[s][t] >= kInf) continue;
      std::vector<long> through(n, 0);
      long total = 0;
      std::function<void(VertexId)> walk = [&](VertexId v) {
        if (v == t) {
          if (static_cast<int>(trail.size()) - 1 == d[s][t]) {
            ++total;
            for (std::size_t i = 1; i + 1 < trail.size(); ++i) ++through[trail[i]];
          }
          return;
        }
        if (static_cast<int>(trail.size()) - 1 >= d[s][t]) return;
        for (VertexId w = 0; w < n; ++w) {
          if (!g.adjacent(v, w) || on_trail[w]) continue;
          on_trail[w] = 1;
          trail.push_back(w);
          walk(w);
          trail.pop_back();
          on_trail[w] = 0;
        }
      };
      trail = {s};
      on_trail.assign(n, 0);
      on_trail[s] = 1;
      walk(s);
      for (VertexId v = 0; v < n; ++v) out[v] += static_cast<double>(through[v]) / static_cast<double>(total);
    }
  return out;
}

// Modularity by direct counting over vertex pairs.
inline double direct_modularity(const Graph& g, const std::vector<VertexSet>& classes) {
  double m = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v)) m += 1;
  double M = 0.0;
  for (const auto& c : classes) {
    double inside = 0, degrees = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (g.adjacent(c[i], c[j])) inside += 1;
      for (VertexId w = 0; w < g.vertex_count(); ++w)
        if (w != c[i] && g.adjacent(c[i], w)) degrees += 1;
    }
    M += inside / m - (degrees / (2 * m)) * (degrees / (2 * m));
  }
  return M;
}

// Visits every set partition of 0..n-1 (restricted growth strings).
inline void for_each_set_partition(std::size_t n, const std::function<void(const std::vector<VertexSet>&)>& fn) {
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      std::vector<VertexSet> classes(used);
      for (VertexId v = 0; v < n; ++v) classes[a[v]].push_back(v);
      fn(classes);
      return;
    }
    for (std::size_t c = 0; c <= used; ++c) {
      a[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) return;
  a[0] = 0;
  rec(1, 1);
}

struct BestPartition {
  double modularity = -1.0;
  std::vector<VertexSet> classes;
};

inline BestPartition exhaustive_max_modularity(const Graph& g) {
  BestPartition best;
  for_each_set_partition(g.vertex_count(), [&](const std::vector<VertexSet>& classes) {
    const double M = direct_modularity(g, classes);
    if (M > best.modularity + 1e-12) best = {M, classes};
  });
  return best;
}

// Canonical form for comparing partitions: each class sorted, classes sorted.
inline std::vector<VertexSet> canonical(std::vector<VertexSet> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

// Fraction of vertices labelled consistently with `truth` under the best
// one-to-one matching of found classes to true blocks.
inline double agreement(const std::vector<VertexSet>& found, const std::vector<std::size_t>& truth) {
  const std::size_t blocks = *std::max_element(truth.begin(), truth.end()) + 1;
  const std::size_t k = found.size();
  std::vector<std::vector<std::size_t>> overlap(k, std::vector<std::size_t>(blocks, 0));
  for (std::size_t c = 0; c < k; ++c)
    for (auto v : found[c]) ++overlap[c][truth[v]];
  // brute-force assignment over permutations of the larger side
  const std::size_t size = std::max(k, blocks);
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = 0;
  do {
    std::size_t hit = 0;
    for (std::size_t c = 0; c < k; ++c)
      if (perm[c] < blocks) hit += overlap[c][perm[c]];
    best = std::max(best, hit);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(truth.size());
}

// C1 and C2 by enumerating vertex triples.
struct BruteClustering {
  double c1 = 0.0;
  double c2 = 0.0;
};

inline BruteClustering brute_force_clustering(const Graph& g) {
  const auto n = g.vertex_count();
  double c1 = 0.0;
  long triangles = 0, triples = 0;
  for (VertexId v = 0; v < n; ++v) {
    long nb = 0, links = 0;
    for (VertexId a = 0; a < n; ++a) {
      if (a == v || !g.adjacent(v, a)) continue;
      ++nb;
      for (VertexId b = a + 1; b < n; ++b) {
        if (b == v || !g.adjacent(v, b)) continue;
        ++triples;
        if (g.adjacent(a, b)) ++links;
      }
    }
    triangles += links;  // each triangle counted once per corner
    if (nb >= 2) c1 += static_cast<double>(links) / (static_cast<double>(nb * (nb - 1)) / 2.0);
  }
  return {c1 / static_cast<double>(n), triples == 0 ? 0.0 : static_cast<double>(triangles) / static_cast<double>(triples)};
}

}  // namespace concentra::testing
