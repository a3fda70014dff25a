#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <vector>

#include "concentra/communities.hpp"
#include "concentra/rng.hpp"

namespace concentra {

struct SpectralOptions {
  std::size_t kmax = 0;       // 0: ceil(sqrt(n)) + 2
  std::size_t restarts = 16;  // k-means restarts per k
  std::uint64_t seed = 0;
  std::size_t max_iterations = 300;
};

inline std::size_t default_kmax(std::size_t n) {
  return static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))) + 2;
}

struct KMeansResult {
  std::vector<std::size_t> assignment;
  double inertia = 0.0;  // within-cluster sum of squares
};

// Lloyd iterations from farthest-point seeding: the first center is the row
// `first`, each further center the row farthest from the chosen ones (lowest
// index on ties). Assignment ties go to the lower cluster index; an emptied
// cluster keeps its previous center.
inline KMeansResult kmeans(const Eigen::MatrixXd& points, std::size_t k, std::size_t first,
                           std::size_t max_iterations) {
  const auto n = static_cast<std::size_t>(points.rows());
  Eigen::MatrixXd centers(k, points.cols());
  centers.row(0) = points.row(first);
  Eigen::VectorXd nearest = (points.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (std::size_t c = 1; c < k; ++c) {
    Eigen::Index far = 0;
    nearest.maxCoeff(&far);
    centers.row(c) = points.row(far);
    nearest = nearest.cwiseMin((points.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }

  KMeansResult out;
  out.assignment.assign(n, k);
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) {
        const double d = (points.row(i) - centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (out.assignment[i] != best) {
        out.assignment[i] = best;
        changed = true;
      }
    }
    if (!changed) break;
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      sums.row(out.assignment[i]) += points.row(i);
      ++counts[out.assignment[i]];
    }
    for (std::size_t c = 0; c < k; ++c)
      if (counts[c] > 0) centers.row(c) = sums.row(c) / static_cast<double>(counts[c]);
  }
  out.inertia = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    out.inertia += (points.row(i) - centers.row(out.assignment[i])).squaredNorm();
  return out;
}

namespace detail {

// Normalized Laplacian I - D^-1/2 A D^-1/2 of a graph without isolated
// vertices, eigenvalues ascending.
inline Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> laplacian_eigen(const Graph& g) {
  const auto n = g.vertex_count();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(n, n);
  std::vector<double> inv_sqrt(n);
  for (VertexId v = 0; v < n; ++v) inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  for (VertexId v = 0; v < n; ++v)
    for (auto w : g.neighbors(v)) lap(v, w) = -inv_sqrt[v] * inv_sqrt[w];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "normalized Laplacian eigen-solver did not converge (n = " << n << ")";
    throw NumericalError(msg.str());
  }
  const double residual =
      (lap * solver.eigenvectors() - solver.eigenvectors() * solver.eigenvalues().asDiagonal())
          .cwiseAbs()
          .maxCoeff();
  if (!(residual < 1e-8 * std::max(1.0, static_cast<double>(n)))) {
    std::ostringstream msg;
    msg << "normalized Laplacian eigen-decomposition inaccurate: max residual " << residual;
    throw NumericalError(msg.str());
  }
  return solver;
}

}  // namespace detail

// Spectral partitioning on the normalized Laplacian, run per connected
// component. For each component and each k in 1..kmax (k = 1 keeps the
// component whole) the vertices are embedded by the k eigenvectors of
// smallest eigenvalue and clustered by k-means (best of `restarts` seeded
// runs by inertia); the k with the largest contribution to the modularity of
// the whole graph is kept, smallest k on ties.
inline Partition spectral_partition(const Graph& g, const SpectralOptions& opt = {}) {
  if (g.edge_count() == 0) throw UndefinedInput("spectral partitioning needs at least one edge");
  const auto kmax = opt.kmax == 0 ? default_kmax(g.vertex_count()) : opt.kmax;
  if (kmax < 2) throw Error("kmax must be at least 2");
  const auto m = static_cast<std::int64_t>(g.edge_count());

  std::vector<VertexSet> classes;
  const auto comps = connected_components(g);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& comp = comps[ci];
    if (comp.size() <= 2) {
      classes.push_back(comp);
      continue;
    }
    const auto sub = induced_subgraph(g, comp);
    const auto eig = detail::laplacian_eigen(sub);
    const auto nc = comp.size();

    // Contribution of a labelling of `sub` to 4 m^2 M of g.
    auto contribution = [&](const std::vector<std::size_t>& assign, std::size_t k) {
      std::vector<std::int64_t> inside(k, 0), degree(k, 0);
      for (VertexId v = 0; v < nc; ++v) {
        degree[assign[v]] += static_cast<std::int64_t>(sub.degree(v));
        for (auto w : sub.neighbors(v))
          if (v < w && assign[v] == assign[w]) ++inside[assign[v]];
      }
      std::int64_t num = 0;
      for (std::size_t c = 0; c < k; ++c) num += 4 * m * inside[c] - degree[c] * degree[c];
      return num;
    };

    std::vector<std::size_t> best_assign(nc, 0);
    std::int64_t best_score = contribution(best_assign, 1);
    for (std::size_t k = 2; k <= std::min(kmax, nc); ++k) {
      const Eigen::MatrixXd embedding = eig.eigenvectors().leftCols(static_cast<Eigen::Index>(k));
      KMeansResult run_best;
      bool have = false;
      for (std::size_t r = 0; r < opt.restarts; ++r) {
        CounterRng rng(opt.seed, (std::uint64_t{ci} << 40) | (std::uint64_t{k} << 20) | r);
        auto run = kmeans(embedding, k, rng.below(nc), opt.max_iterations);
        if (!have || run.inertia < run_best.inertia) {
          run_best = std::move(run);
          have = true;
        }
      }
      const auto score = contribution(run_best.assignment, k);
      if (score > best_score) {
        best_score = score;
        best_assign = run_best.assignment;
      }
    }
    std::map<std::size_t, VertexSet> grouped;
    for (VertexId v = 0; v < nc; ++v) grouped[best_assign[v]].push_back(comp[v]);
    for (auto& [key, members] : grouped) classes.push_back(std::move(members));
  }
  return make_partition(g, std::move(classes), "spectral");
}

}  // namespace concentra
