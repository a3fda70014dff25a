#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "concentra/graph.hpp"
#include "concentra/parallel.hpp"

namespace concentra {

// Symmetric hop-distance matrix with an explicit unreachable marker.
class DistanceTable {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  DistanceTable() = default;
  explicit DistanceTable(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t size() const noexcept { return n_; }
  std::int32_t at(VertexId u, VertexId v) const { return d_[std::size_t{u} * n_ + v]; }
  bool reachable(VertexId u, VertexId v) const { return at(u, v) != kUnreachable; }

  std::span<const std::int32_t> row(VertexId u) const {
    return {d_.data() + std::size_t{u} * n_, n_};
  }
  std::span<std::int32_t> row(VertexId u) { return {d_.data() + std::size_t{u} * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int32_t> d_;
};

namespace detail {

inline void bfs_row(const Graph& g, VertexId source, std::span<std::int32_t> dist,
                    std::vector<VertexId>& queue) {
  std::fill(dist.begin(), dist.end(), DistanceTable::kUnreachable);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto v = queue[head];
    for (auto w : g.neighbors(v)) {
      if (dist[w] == DistanceTable::kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
}

// Median with the two middle values averaged for even counts.
inline double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const auto n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace detail

inline DistanceTable all_pairs_distances(const Graph& g, unsigned threads = 1) {
  DistanceTable table(g.vertex_count());
  parallel_for(g.vertex_count(), threads, [&](std::size_t s) {
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());
    detail::bfs_row(g, static_cast<VertexId>(s), table.row(static_cast<VertexId>(s)), queue);
  });
  return table;
}

// ---------------------------------------------------------------------------
// Density and path lengths

inline double density(const Graph& g) {
  const double n = static_cast<double>(g.vertex_count());
  if (g.vertex_count() < 2) throw UndefinedInput("density needs at least 2 vertices");
  return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

inline double mean_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw UndefinedInput("mean degree of an empty graph");
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());
}

// How a vertex's mean distance is averaged before taking the median for L.
//   kIncludeSelf: sum of distances / n_c (the zero self-distance counts);
//                 this is the convention behind the published random-graph L.
//   kExcludeSelf: sum of distances / (n_c - 1).
enum class PathLengthConvention { kIncludeSelf, kExcludeSelf };

struct PathMetrics {
  double lbar = 0.0;  // mean over unordered reachable pairs
  double L = 0.0;     // median over vertices of the per-vertex mean distance
  int D = 0;          // diameter
  std::vector<double> vertex_means;
  std::size_t component_size = 0;
};

// Path metrics restricted to the vertices of `component`, which must be
// connected in `g`. `dist` must cover `g`.
inline PathMetrics path_metrics_on(const DistanceTable& dist, std::span<const VertexId> component,
                                   PathLengthConvention conv = PathLengthConvention::kIncludeSelf) {
  const auto nc = component.size();
  if (nc < 2) throw UndefinedInput("path metrics need a component with at least 2 vertices");
  PathMetrics out;
  out.component_size = nc;
  std::uint64_t total = 0;
  int diameter = 0;
  const double divisor =
      conv == PathLengthConvention::kIncludeSelf ? static_cast<double>(nc) : static_cast<double>(nc - 1);
  out.vertex_means.reserve(nc);
  for (auto v : component) {
    std::uint64_t row = 0;
    for (auto w : component) {
      const auto d = dist.at(v, w);
      if (d == DistanceTable::kUnreachable) throw Error("path metrics component is not connected");
      row += static_cast<std::uint64_t>(d);
      diameter = std::max(diameter, d);
    }
    total += row;
    out.vertex_means.push_back(static_cast<double>(row) / divisor);
  }
  const double pairs = static_cast<double>(nc) * static_cast<double>(nc - 1);
  out.lbar = static_cast<double>(total) / pairs;  // each unordered pair counted twice
  out.L = detail::median(out.vertex_means);
  out.D = diameter;
  return out;
}

// Computed on the largest connected component.
inline PathMetrics path_metrics(const Graph& g,
                                PathLengthConvention conv = PathLengthConvention::kIncludeSelf) {
  const auto comp = largest_component(g);
  if (comp.size() < 2) throw UndefinedInput("largest component has fewer than 2 vertices");
  return path_metrics_on(all_pairs_distances(g), comp, conv);
}

// ---------------------------------------------------------------------------
// Clustering

// Mean neighbourhood density; vertices of degree <= 1 contribute 0.
inline double clustering_c1(const Graph& g) {
  if (g.vertex_count() == 0) throw UndefinedInput("clustering of an empty graph");
  double sum = 0.0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    const auto k = nb.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (g.adjacent(nb[i], nb[j])) ++links;
    sum += 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return sum / static_cast<double>(g.vertex_count());
}

inline std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t t = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (auto v : g.neighbors(u)) {
      if (v <= u) continue;
      for (auto w : g.neighbors(v))
        if (w > v && g.adjacent(u, w)) ++t;
    }
  return t;
}

inline std::uint64_t connected_triple_count(const Graph& g) {
  std::uint64_t t = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t k = g.degree(v);
    t += k * (k - (k > 0 ? 1 : 0)) / 2;
  }
  return t;
}

// 3 * triangles / connected triples.
inline double transitivity(const Graph& g) {
  const auto triples = connected_triple_count(g);
  if (triples == 0) throw UndefinedInput("C2 undefined: graph has no connected triple");
  return 3.0 * static_cast<double>(triangle_count(g)) / static_cast<double>(triples);
}

struct Clustering {
  double C1 = 0.0;
  double C2 = 0.0;
};

inline Clustering clustering(const Graph& g) { return {clustering_c1(g), transitivity(g)}; }

// ---------------------------------------------------------------------------
// Centralities

struct CentralityScores {
  std::vector<double> degree;       // |Γ_v| / (n - 1)
  std::vector<double> betweenness;  // Σ_{s<t, s,t≠v} σ_st(v) / σ_st
  std::vector<double> closeness;    // (n_c - 1) / Σ_t d(v, t) within the component
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw NumericalError("shortest-path count overflows 64 bits");
  return r;
}

// Brandes accumulation from one source; adds δ_s(v) to `acc` (which counts
// each unordered pair twice over all sources).
struct BrandesWorkspace {
  std::vector<std::int32_t> dist;
  std::vector<std::uint64_t> sigma;
  std::vector<double> delta;
  std::vector<VertexId> order;

  explicit BrandesWorkspace(std::size_t n) : dist(n), sigma(n), delta(n) { order.reserve(n); }

  void run(const Graph& g, VertexId s, std::span<double> acc) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const auto v = order[head];
      for (auto w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] = checked_add(sigma[w], sigma[v]);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto w = *it;
      const double coeff = (1.0 + delta[w]) / static_cast<double>(sigma[w]);
      const auto pred = dist[w] - 1;
      for (auto v : g.neighbors(w))
        if (dist[v] == pred) delta[v] += static_cast<double>(sigma[v]) * coeff;
      if (w != s) acc[w] += delta[w];
    }
  }
};

}  // namespace detail

// Exact shortest-path betweenness; per-source passes may run concurrently and
// are reduced in vertex order.
inline std::vector<double> betweenness(const Graph& g, unsigned threads = 1) {
  const auto n = g.vertex_count();
  if (threads <= 1) {
    std::vector<double> out(n, 0.0);
    detail::BrandesWorkspace ws(n);
    for (VertexId s = 0; s < n; ++s) ws.run(g, s, out);
    for (auto& b : out) b *= 0.5;
    return out;
  }
  std::vector<double> per_source(n * n, 0.0);
  parallel_for(n, threads, [&](std::size_t s) {
    detail::BrandesWorkspace ws(n);
    ws.run(g, static_cast<VertexId>(s), std::span<double>(per_source.data() + s * n, n));
  });
  std::vector<double> out(n, 0.0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t v = 0; v < n; ++v) out[v] += per_source[s * n + v];
  for (auto& b : out) b *= 0.5;
  return out;
}

inline std::vector<double> closeness(const Graph& g, const DistanceTable& dist) {
  const auto n = g.vertex_count();
  std::vector<double> out(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    std::uint64_t sum = 0;
    std::size_t reach = 0;
    for (VertexId w = 0; w < n; ++w) {
      const auto d = dist.at(v, w);
      if (d > 0) {
        sum += static_cast<std::uint64_t>(d);
        ++reach;
      }
    }
    out[v] = sum == 0 ? 0.0 : static_cast<double>(reach) / static_cast<double>(sum);
  }
  return out;
}

inline std::vector<double> degree_centrality(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  for (VertexId v = 0; v < n; ++v)
    out[v] = static_cast<double>(g.degree(v)) / static_cast<double>(n - 1);
  return out;
}

inline CentralityScores centralities(const Graph& g, unsigned threads = 1) {
  return {degree_centrality(g), betweenness(g, threads), closeness(g, all_pairs_distances(g, threads))};
}

enum class CentralityKind { kDegree, kBetweenness, kCloseness };

inline const char* to_string(CentralityKind kind) {
  switch (kind) {
    case CentralityKind::kDegree: return "degree";
    case CentralityKind::kBetweenness: return "betweenness";
    case CentralityKind::kCloseness: return "closeness";
  }
  return "?";
}

// Bound used for betweenness centralization.
//   kOrderedPairs:   Σ (b_max - b_v) / ((n-1)^2 (n-2)); the star scores 1/2.
//                    Same scaling as R igraph's centralization.betweenness with
//                    its default directed = TRUE, which produced the published
//                    random-graph C_B.
//   kUnorderedPairs: Σ (b_max - b_v) / ((n-1)^2 (n-2) / 2); Freeman's bound for
//                    undirected graphs, the star scores 1.
enum class BetweennessScale { kOrderedPairs, kUnorderedPairs };

// Freeman centralization Σ (c_max - c_v) over the star-graph maximum of that
// sum. `scores` are the per-vertex values for `kind` as produced by
// centralities().
inline double centralization_from(CentralityKind kind, std::span<const double> scores,
                                  BetweennessScale scale_kind = BetweennessScale::kOrderedPairs) {
  const auto n = scores.size();
  if (n < 3) throw UndefinedInput("centralization needs at least 3 vertices");
  const double nd = static_cast<double>(n);
  double scale = 1.0;
  double bound = 0.0;
  switch (kind) {
    case CentralityKind::kDegree:
      bound = nd - 2.0;
      break;
    case CentralityKind::kBetweenness:
      // pair-normalize the vertex scores, then divide by the star maximum
      scale = (scale_kind == BetweennessScale::kUnorderedPairs ? 2.0 : 1.0) /
              ((nd - 1.0) * (nd - 2.0));
      bound = nd - 1.0;
      break;
    case CentralityKind::kCloseness:
      bound = (nd - 1.0) * (nd - 2.0) / (2.0 * nd - 3.0);
      break;
  }
  const double top = *std::max_element(scores.begin(), scores.end()) * scale;
  CompensatedSum sum;
  for (double c : scores) sum.add(top - c * scale);
  return std::clamp(sum.value() / bound, 0.0, 1.0);
}

inline double centralization(const Graph& g, CentralityKind kind,
                             BetweennessScale scale = BetweennessScale::kOrderedPairs) {
  if (g.vertex_count() < 3) throw UndefinedInput("centralization needs at least 3 vertices");
  switch (kind) {
    case CentralityKind::kDegree:
      return centralization_from(kind, degree_centrality(g));
    case CentralityKind::kBetweenness:
      return centralization_from(kind, betweenness(g), scale);
    case CentralityKind::kCloseness:
      if (connected_components(g).size() != 1)
        throw UndefinedInput("closeness centralization needs a connected graph");
      return centralization_from(kind, closeness(g, all_pairs_distances(g)));
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Structural summary

// Undefined indices (e.g. C2 without connected triples) are left empty.
struct StructuralIndices {
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<double> d;
  std::optional<double> k;
  std::optional<double> lbar;
  std::optional<double> L;
  std::optional<double> D;
  std::optional<double> C1;
  std::optional<double> C2;
  std::optional<double> C_D;
  std::optional<double> C_B;
  std::optional<double> C_P;

  // Component policy: lbar, L, D and C_P use the largest connected
  // component; all other indices use the whole graph.
  std::size_t component_count = 0;
  std::size_t analyzed_component_size = 0;
  PathLengthConvention path_convention = PathLengthConvention::kIncludeSelf;
  BetweennessScale betweenness_scale = BetweennessScale::kOrderedPairs;
};

inline constexpr const char* kComponentPolicy =
    "lbar, L, D and C_P on the largest connected component; other indices on the whole graph";

struct SummaryOptions {
  PathLengthConvention path_convention = PathLengthConvention::kIncludeSelf;
  BetweennessScale betweenness_scale = BetweennessScale::kOrderedPairs;
  unsigned threads = 1;
};

inline constexpr std::size_t kIndexCount = 12;

// Table-order view of every index as (name, value).
inline std::array<std::pair<const char*, std::optional<double>>, kIndexCount> index_values(
    const StructuralIndices& s) {
  return {{{"n", static_cast<double>(s.n)},
           {"m", static_cast<double>(s.m)},
           {"d", s.d},
           {"k", s.k},
           {"lbar", s.lbar},
           {"L", s.L},
           {"D", s.D},
           {"C1", s.C1},
           {"C2", s.C2},
           {"C_D", s.C_D},
           {"C_B", s.C_B},
           {"C_P", s.C_P}}};
}

inline StructuralIndices structural_summary(const Graph& g, const SummaryOptions& opt = {}) {
  StructuralIndices s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  s.path_convention = opt.path_convention;
  s.betweenness_scale = opt.betweenness_scale;
  if (s.n >= 2) s.d = density(g);
  if (s.n >= 1) {
    s.k = mean_degree(g);
    s.C1 = clustering_c1(g);
  }
  if (connected_triple_count(g) > 0) s.C2 = transitivity(g);

  const auto comps = connected_components(g);
  s.component_count = comps.size();
  const VertexSet lcc = comps.empty() ? VertexSet{} : comps.front();
  s.analyzed_component_size = lcc.size();

  const auto dist = all_pairs_distances(g, opt.threads);
  if (lcc.size() >= 2) {
    const auto pm = path_metrics_on(dist, lcc, opt.path_convention);
    s.lbar = pm.lbar;
    s.L = pm.L;
    s.D = static_cast<double>(pm.D);
  }
  if (s.n >= 3) {
    s.C_D = centralization_from(CentralityKind::kDegree, degree_centrality(g));
    s.C_B = centralization_from(CentralityKind::kBetweenness, betweenness(g, opt.threads),
                                 opt.betweenness_scale);
  }
  if (lcc.size() >= 3) {
    if (comps.size() == 1) {
      s.C_P = centralization_from(CentralityKind::kCloseness, closeness(g, dist));
    } else {
      const auto sub = induced_subgraph(g, lcc);
      s.C_P = centralization_from(CentralityKind::kCloseness, closeness(sub, all_pairs_distances(sub)));
    }
  }
  return s;
}

}  // namespace concentra
