#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "concentra/graph.hpp"

namespace concentra {

// ---------------------------------------------------------------------------
// Czekanovski-Dice dissimilarity

// Symmetric dissimilarities over `vertices` (ids of the source graph).
struct DissimilarityMatrix {
  VertexSet vertices;
  Eigen::MatrixXd values;
  bool squared = false;  // entries are δ² rather than δ
  std::vector<std::string> warnings;

  std::size_t size() const noexcept { return vertices.size(); }

  std::optional<std::size_t> index_of(VertexId v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }
};

struct DiceOptions {
  bool closed_neighborhoods = false;  // use Γ_v ∪ {v}
  bool squared = false;               // store δ² instead of δ
};

namespace detail {

inline std::vector<VertexId> neighborhood(const Graph& g, VertexId v, bool closed) {
  std::vector<VertexId> out(g.neighbors(v).begin(), g.neighbors(v).end());
  if (closed) out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

inline std::size_t common_count(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::size_t i = 0, j = 0, c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

}  // namespace detail

// δ²(v, w) = |Γ_v Δ Γ_w| / (|Γ_v| + |Γ_w|) over the given vertices, each of
// which must have at least one neighbour.
inline DissimilarityMatrix czekanovski_dice(const Graph& g, std::span<const VertexId> scope,
                                            const DiceOptions& opt = {}) {
  DissimilarityMatrix out;
  out.vertices.assign(scope.begin(), scope.end());
  out.squared = opt.squared;
  const auto n = scope.size();
  std::vector<std::vector<VertexId>> hood(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(scope[i]) == 0)
      throw DegenerateInput("isolated vertex '" + g.label(scope[i]) + "' has no Czekanovski-Dice dissimilarity");
    hood[i] = detail::neighborhood(g, scope[i], opt.closed_neighborhoods);
  }
  out.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double total = static_cast<double>(hood[i].size() + hood[j].size());
      const double common = static_cast<double>(detail::common_count(hood[i], hood[j]));
      const double d2 = (total - 2.0 * common) / total;
      const double value = opt.squared ? d2 : std::sqrt(d2);
      out.values(i, j) = out.values(j, i) = value;
    }
  return out;
}

// Over every vertex of degree >= 1; isolated vertices are skipped with a
// warning.
inline DissimilarityMatrix czekanovski_dice(const Graph& g, const DiceOptions& opt = {}) {
  VertexSet scope;
  std::vector<std::string> warnings;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0)
      warnings.push_back("isolated vertex '" + g.label(v) + "' skipped");
    else
      scope.push_back(v);
  }
  auto out = czekanovski_dice(g, scope, opt);
  out.warnings = std::move(warnings);
  return out;
}

// δ̄(j) = mean of δ(k, j) over club members k, for every j of the matrix not
// in the club (in matrix order).
struct ClubDistance {
  VertexId vertex;
  double dbar;
};

inline std::vector<ClubDistance> mean_distance_to_club(const DissimilarityMatrix& dm,
                                                       std::span<const VertexId> club) {
  if (club.empty()) throw Error("rich-club is empty");
  std::vector<std::size_t> rows;
  std::vector<char> in_club(dm.size(), 0);
  for (auto v : club) {
    const auto idx = dm.index_of(v);
    if (!idx) throw Error("club member is outside the dissimilarity matrix");
    if (!in_club[*idx]) rows.push_back(*idx);
    in_club[*idx] = 1;
  }
  std::vector<ClubDistance> out;
  for (std::size_t j = 0; j < dm.size(); ++j) {
    if (in_club[j]) continue;
    double sum = 0.0;
    for (auto k : rows) sum += dm.values(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
    out.push_back({dm.vertices[j], sum / static_cast<double>(rows.size())});
  }
  return out;
}

namespace detail {

inline std::pair<double, double> checked_range(std::span<const double> values, const char* what) {
  if (values.empty()) throw DegenerateInput(std::string(what) + ": no values");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (!(*hi - *lo > 1e-12 * std::max(1.0, std::abs(*hi))))
    throw DegenerateInput(std::string(what) + ": all values are equal");
  return {*lo, *hi};
}

}  // namespace detail

// r(j) = 0.8 (δ̄(j) - max δ̄) / (max δ̄ - min δ̄) + 1, in [0.2, 1]. Evaluated as
// 0.2 + 0.8 (δ̄(j) - min δ̄) / (max δ̄ - min δ̄) so both ends are hit exactly.
inline std::vector<double> radial_coords(std::span<const double> dbar) {
  const auto [lo, hi] = detail::checked_range(dbar, "radial coordinates");
  std::vector<double> r;
  r.reserve(dbar.size());
  for (double x : dbar) r.push_back(std::clamp(0.2 + 0.8 * (x - lo) / (hi - lo), 0.2, 1.0));
  return r;
}

// θ(j) = π (c1(j) - min c1) / (max c1 - min c1), in [0, π].
inline std::vector<double> angular_coords(std::span<const double> c1) {
  const auto [lo, hi] = detail::checked_range(c1, "angular coordinates");
  std::vector<double> theta;
  theta.reserve(c1.size());
  for (double x : c1) theta.push_back(std::clamp(std::numbers::pi * (x - lo) / (hi - lo), 0.0, std::numbers::pi));
  return theta;
}

// ---------------------------------------------------------------------------
// Classical scaling

// Flips v so that its entry of largest magnitude is positive (first such
// entry on ties).
inline void apply_sign_convention(Eigen::Ref<Eigen::VectorXd> v) {
  Eigen::Index pick = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (std::abs(v(i)) > std::abs(v(pick))) pick = i;
  if (v.size() > 0 && v(pick) < 0) v = -v;
}

struct GramMatrix {
  Eigen::MatrixXd W;
  Eigen::VectorXd eigenvalues;   // non-increasing
  Eigen::MatrixXd eigenvectors;  // columns match eigenvalues, sign convention applied
};

// Torgerson double centering w_ij = -1/2 (d_ij² - d_i.² - d_.j² + d_..²), the
// dotted terms being row, column and grand means of the squared distances.
inline GramMatrix gram_from_distances(const Eigen::MatrixXd& d) {
  if (d.rows() != d.cols()) throw Error("distance matrix must be square");
  const auto n = d.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(d(i, i)) > 1e-12) throw Error("distance matrix must have a zero diagonal");
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (std::abs(d(i, j) - d(j, i)) > 1e-12) throw Error("distance matrix must be symmetric");
  }
  GramMatrix out;
  if (n == 0) return out;
  const Eigen::MatrixXd sq = d.array().square();
  const Eigen::VectorXd row_mean = sq.rowwise().mean();
  const Eigen::RowVectorXd col_mean = sq.colwise().mean();
  const double grand = sq.mean();
  out.W = -0.5 * ((sq.colwise() - row_mean).rowwise() - col_mean).array() - 0.5 * grand;
  out.W = 0.5 * (out.W + out.W.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(out.W);
  if (solver.info() != Eigen::Success) throw NumericalError("Gram matrix eigen-solver did not converge");
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  for (Eigen::Index c = 0; c < n; ++c) apply_sign_convention(out.eigenvectors.col(c));
  return out;
}

struct Embedding {
  Eigen::MatrixXd X;  // rows = items, columns = principal coordinates
  Eigen::VectorXd eigenvalues;

  Eigen::Index dimensions() const noexcept { return X.cols(); }
};

// X = Q √Λ over eigenvalues above `tol` (default 1e-10 λ_max).
inline Embedding principal_coordinates(const GramMatrix& gram, std::optional<double> tol = std::nullopt) {
  Embedding out;
  const auto n = gram.eigenvalues.size();
  if (n == 0) return out;
  const double lmax = gram.eigenvalues(0);
  const double cutoff = tol.value_or(1e-10 * std::max(lmax, 0.0));
  const double lmin = gram.eigenvalues(n - 1);
  if (lmin < -100.0 * cutoff && lmin < -1e-12) {
    throw NumericalError("distances are not Euclidean: Gram eigenvalue " + std::to_string(lmin));
  }
  Eigen::Index keep = 0;
  while (keep < n && gram.eigenvalues(keep) > cutoff) ++keep;
  if (n == 1) keep = 0;
  out.eigenvalues = gram.eigenvalues.head(keep);
  out.X = gram.eigenvectors.leftCols(keep) * out.eigenvalues.cwiseSqrt().asDiagonal();
  return out;
}

// Projection of an embedding onto the orthogonal complement of the direction
// carrying an external variable c̃.
struct ProjectedEmbedding {
  Eigen::VectorXd correlations;  // corr(c̃, column j of X)
  Eigen::VectorXd a;             // unit direction removed
  Eigen::MatrixXd Y;             // X (I - a a')
  Eigen::VectorXd first_component;  // first principal component of Y, sign convention applied
};

namespace detail {

inline double correlation(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const Eigen::VectorXd xc = x.array() - x.mean();
  const Eigen::VectorXd yc = y.array() - y.mean();
  const double den = xc.norm() * yc.norm();
  return den == 0.0 ? 0.0 : xc.dot(yc) / den;
}

}  // namespace detail

// a_j ∝ corr(c̃, c_j) · ‖c_j‖, i.e. a ∝ X' (c̃ - mean c̃), normalized to unit
// length; this is the direction whose removal leaves every principal
// component of Y uncorrelated with c̃.
inline ProjectedEmbedding project_out_variable(const Embedding& emb, const Eigen::VectorXd& ctilde) {
  if (ctilde.size() != emb.X.rows()) throw Error("variable length does not match the embedding");
  const Eigen::VectorXd cc = ctilde.array() - ctilde.mean();
  if (!(cc.norm() > 1e-12 * std::max(1.0, ctilde.cwiseAbs().maxCoeff())))
    throw DegenerateInput("projected variable is constant");

  ProjectedEmbedding out;
  const auto p = emb.X.cols();
  out.correlations.resize(p);
  for (Eigen::Index j = 0; j < p; ++j) out.correlations(j) = detail::correlation(emb.X.col(j), ctilde);
  if (p == 0 || out.correlations.cwiseAbs().maxCoeff() < 1e-10)
    throw DegenerateInput("variable is uncorrelated with every principal component; nothing to project out");

  const Eigen::MatrixXd centered = emb.X.rowwise() - emb.X.colwise().mean();
  out.a = centered.transpose() * cc;
  out.a.normalize();
  out.Y = emb.X - (emb.X * out.a) * out.a.transpose();

  const Eigen::MatrixXd yc = out.Y.rowwise() - out.Y.colwise().mean();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> pca(yc.transpose() * yc);
  if (pca.info() != Eigen::Success) throw NumericalError("projected PCA did not converge");
  out.first_component = yc * pca.eigenvectors().col(p - 1);
  apply_sign_convention(out.first_component);
  return out;
}

// ---------------------------------------------------------------------------
// Hemicycle layout

struct HemicyclePoint {
  VertexId vertex;
  double dbar;
  double r;
  double theta;
};

struct HemicycleLayout {
  VertexSet club;
  std::vector<HemicyclePoint> points;  // non-club vertices in id order
  double first_component_correlation = 0.0;  // corr(un-projected c_1, δ̄)
  Eigen::Index dimensions = 0;
  std::vector<std::string> warnings;
};

struct HemicycleOptions {
  bool closed_neighborhoods = false;
};

// Radius from the mean dissimilarity to the club, angle from the first
// principal component of the non-club vertices' classical-scaling embedding
// after projecting out that mean dissimilarity. Club members sit at the center.
inline HemicycleLayout hemicycle_layout(const Graph& g, std::span<const VertexId> club,
                                        const HemicycleOptions& opt = {}) {
  if (club.empty()) throw Error("rich-club is empty");
  HemicycleLayout out;
  out.club.assign(club.begin(), club.end());
  std::sort(out.club.begin(), out.club.end());
  out.club.erase(std::unique(out.club.begin(), out.club.end()), out.club.end());

  const auto dm = czekanovski_dice(g, {.closed_neighborhoods = opt.closed_neighborhoods});
  out.warnings = dm.warnings;
  for (auto v : out.club)
    if (!dm.index_of(v)) throw Error("club member '" + g.label(v) + "' is isolated");
  if (out.club.size() >= dm.size()) throw Error("rich-club must leave at least one non-isolated vertex");

  const auto dbar = mean_distance_to_club(dm, out.club);
  std::vector<double> dbar_values;
  std::vector<Eigen::Index> rows;
  for (const auto& cd : dbar) {
    dbar_values.push_back(cd.dbar);
    rows.push_back(static_cast<Eigen::Index>(*dm.index_of(cd.vertex)));
  }
  const auto r = radial_coords(dbar_values);

  const auto k = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = dm.values(rows[i], rows[j]);
  const auto emb = principal_coordinates(gram_from_distances(sub));
  out.dimensions = emb.dimensions();
  const Eigen::VectorXd ctilde = Eigen::Map<const Eigen::VectorXd>(dbar_values.data(), k);
  if (emb.dimensions() > 0) out.first_component_correlation = detail::correlation(emb.X.col(0), ctilde);
  const auto projected = project_out_variable(emb, ctilde);
  const std::vector<double> c1(projected.first_component.data(), projected.first_component.data() + k);
  const auto theta = angular_coords(c1);

  for (std::size_t i = 0; i < dbar.size(); ++i) out.points.push_back({dbar[i].vertex, dbar[i].dbar, r[i], theta[i]});
  return out;
}

}  // namespace concentra
