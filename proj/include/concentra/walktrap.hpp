#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "concentra/fast_greedy.hpp"

namespace concentra {

inline constexpr int kDefaultWalkLength = 4;

// Pons-Latapy walktrap. Every vertex gets a self-loop, P = D^-1 (A + I), and
// a class C is described by P^t_C. = mean of its members' rows of P^t. The
// pair of adjacent classes with the smallest Ward increment
//   Δσ(C1, C2) = (1/n) |C1||C2| / (|C1| + |C2|) * Σ_k (P^t_C1k - P^t_C2k)^2 / d(k)
// is merged until no adjacent pair is left; remaining classes (separate
// components) are then merged by the same criterion so the dendrogram ends in
// one class. The cut is the earliest level of maximal modularity.
inline HierarchicalResult walktrap(const Graph& g, int t = kDefaultWalkLength) {
  if (g.edge_count() == 0) throw UndefinedInput("walktrap needs at least one edge");
  if (t < 1) throw Error("walk length must be at least 1");
  const auto n = g.vertex_count();

  Eigen::VectorXd inv_degree(n);
  Eigen::MatrixXd step = Eigen::MatrixXd::Zero(n, n);
  for (VertexId v = 0; v < n; ++v) {
    const double d = static_cast<double>(g.degree(v) + 1);
    inv_degree(v) = 1.0 / d;
    step(v, v) = 1.0 / d;
    for (auto w : g.neighbors(v)) step(v, w) = 1.0 / d;
  }
  Eigen::MatrixXd walk = step;
  for (int i = 1; i < t; ++i) walk = (walk * step).eval();

  detail::Agglomeration state(g);
  const double inv_n = 1.0 / static_cast<double>(n);
  auto increment = [&](std::size_t i, std::size_t j) {
    const double si = static_cast<double>(state.size[i]);
    const double sj = static_cast<double>(state.size[j]);
    const double r2 = (walk.row(i) - walk.row(j)).array().square().matrix().dot(inv_degree);
    return inv_n * si * sj / (si + sj) * r2;
  };
  Eigen::MatrixXd sigma(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sigma(i, j) = sigma(j, i) = increment(i, j);

  for (std::size_t stage = 0; stage + 1 < n; ++stage) {
    std::size_t bi = n, bj = n;
    bool best_adjacent = false;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!state.active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!state.active[j]) continue;
        const bool adjacent = state.links(i, j) > 0;
        if (best_adjacent && !adjacent) continue;
        const double s = sigma(i, j);
        if (bi == n || (adjacent && !best_adjacent) || s < best ||
            (s == best && state.pair_precedes(i, j, bi, bj))) {
          best = s;
          bi = i;
          bj = j;
          best_adjacent = adjacent;
        }
      }
    }
    const double si = static_cast<double>(state.size[bi]);
    const double sj = static_cast<double>(state.size[bj]);
    walk.row(bi) = (si * walk.row(bi) + sj * walk.row(bj)) / (si + sj);
    state.merge(bi, bj, best);
    for (std::size_t k = 0; k < n; ++k)
      if (state.active[k] && k != bi) sigma(bi, k) = sigma(k, bi) = increment(bi, k);
  }
  return state.finish("walktrap");
}

}  // namespace concentra
