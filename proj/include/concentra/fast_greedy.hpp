#pragma once

#include <cstdint>
#include <vector>

#include "concentra/communities.hpp"

namespace concentra {

struct HierarchicalResult {
  Partition partition;
  Dendrogram dendrogram;
};

namespace detail {

// Per-slot state shared by the agglomerative partitioners. Slot i starts as
// the singleton {i}; merging j into i leaves j inactive.
struct Agglomeration {
  const Graph& g;
  std::size_t n;
  std::int64_t m;
  std::vector<char> active;
  std::vector<std::size_t> cluster;  // dendrogram cluster id of each slot
  std::vector<VertexId> rank;        // label rank of the slot's smallest label
  std::vector<std::size_t> size;
  std::vector<std::int64_t> degree;  // degree sum
  std::vector<std::int64_t> inside;  // edges inside
  std::vector<std::int64_t> cross;   // n x n edge counts between slots
  std::int64_t numerator = 0;        // 4 m^2 M of the current level
  Dendrogram dendrogram;

  explicit Agglomeration(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        m(static_cast<std::int64_t>(graph.edge_count())),
        active(n, 1),
        cluster(n),
        rank(n),
        size(n, 1),
        degree(n),
        inside(n, 0),
        cross(n * n, 0) {
    for (VertexId v = 0; v < n; ++v) {
      cluster[v] = v;
      rank[v] = g.label_rank(v);
      degree[v] = static_cast<std::int64_t>(g.degree(v));
      numerator -= degree[v] * degree[v];
      for (auto w : g.neighbors(v)) cross[std::size_t{v} * n + w] = 1;
    }
    dendrogram.leaves = n;
    dendrogram.level_modularity.push_back(numerator_to_modularity(numerator, graph.edge_count()));
  }

  std::int64_t links(std::size_t i, std::size_t j) const { return cross[i * n + j]; }

  // Exact modularity change of merging i and j, times 4 m^2.
  std::int64_t gain(std::size_t i, std::size_t j) const {
    return 4 * m * links(i, j) - 2 * degree[i] * degree[j];
  }

  // Lexicographic order on (smaller rank, larger rank) of the two classes.
  bool pair_precedes(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    const auto a = std::minmax(rank[i], rank[j]);
    const auto b = std::minmax(rank[k], rank[l]);
    return a < b;
  }

  // Merges slot j into slot i.
  void merge(std::size_t i, std::size_t j, double score) {
    numerator += gain(i, j);
    inside[i] += inside[j] + links(i, j);
    degree[i] += degree[j];
    size[i] += size[j];
    for (std::size_t k = 0; k < n; ++k) {
      cross[i * n + k] += cross[j * n + k];
      cross[k * n + i] = cross[i * n + k];
      cross[j * n + k] = cross[k * n + j] = 0;
    }
    cross[i * n + i] = 0;
    const bool i_first = rank[i] < rank[j];
    dendrogram.merges.push_back({i_first ? cluster[i] : cluster[j], i_first ? cluster[j] : cluster[i], score});
    rank[i] = std::min(rank[i], rank[j]);
    cluster[i] = n + dendrogram.merges.size() - 1;
    active[j] = 0;
    dendrogram.level_modularity.push_back(
        numerator_to_modularity(numerator, static_cast<std::size_t>(m)));
  }

  HierarchicalResult finish(const char* method) {
    HierarchicalResult out;
    out.partition = make_partition(g, dendrogram.classes_at(dendrogram.best_level()), method);
    out.dendrogram = std::move(dendrogram);
    return out;
  }
};

}  // namespace detail

// Clauset-Newman-Moore style greedy agglomeration: from singletons, repeatedly
// merge the pair of classes whose union increases modularity the most (exact
// integer gains; ties to the lexicographically smallest pair of class labels).
// Non-adjacent pairs are eligible too, so the dendrogram always ends in a
// single class. Returns the earliest level of maximal modularity.
inline HierarchicalResult fast_greedy(const Graph& g) {
  if (g.edge_count() == 0) throw UndefinedInput("fast-greedy needs at least one edge");
  detail::Agglomeration state(g);
  const auto n = state.n;
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t bi = n, bj = n;
    std::int64_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!state.active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!state.active[j]) continue;
        const auto gain = state.gain(i, j);
        if (bi == n || gain > best || (gain == best && state.pair_precedes(i, j, bi, bj))) {
          best = gain;
          bi = i;
          bj = j;
        }
      }
    }
    state.merge(bi, bj, detail::numerator_to_modularity(best, g.edge_count()));
  }
  return state.finish("fast_greedy");
}

}  // namespace concentra
