#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "concentra/graph.hpp"
#include "concentra/metrics.hpp"

namespace concentra {

// Non-increasing degree; equal degrees in ascending label order.
inline VertexSet degree_order(const Graph& g) {
  auto order = all_vertices(g);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return g.label_rank(a) < g.label_rank(b);
  });
  return order;
}

struct RichClubRank {
  std::size_t r = 0;              // prefix size, 1-based
  VertexId vertex = 0;            // vertex added at this rank
  std::size_t degree = 0;         // its degree in the whole graph
  std::size_t internal_edges = 0; // edges inside the top-r prefix
  double phi = 1.0;               // density of the top-r prefix; phi(1) = 1
  int diameter = 0;               // of the prefix's largest component
  bool connected = true;          // prefix induces a connected subgraph
};

struct RichClubProfile {
  std::vector<RichClubRank> ranks;  // ranks[r - 1]

  std::size_t size() const noexcept { return ranks.size(); }
  const RichClubRank& at(std::size_t r) const { return ranks.at(r - 1); }
};

inline RichClubProfile rich_club_profile(const Graph& g) {
  const auto n = g.vertex_count();
  if (n < 2) throw UndefinedInput("rich-club profile needs at least 2 vertices");
  const auto order = degree_order(g);
  std::vector<char> in_prefix(n, 0);
  RichClubProfile out;
  out.ranks.reserve(n);
  std::size_t edges = 0;
  for (std::size_t r = 1; r <= n; ++r) {
    const auto v = order[r - 1];
    for (auto w : g.neighbors(v))
      if (in_prefix[w]) ++edges;
    in_prefix[v] = 1;

    RichClubRank rank;
    rank.r = r;
    rank.vertex = v;
    rank.degree = g.degree(v);
    rank.internal_edges = edges;
    if (r >= 2) {
      const double rd = static_cast<double>(r);
      rank.phi = 2.0 * static_cast<double>(edges) / (rd * (rd - 1.0));
      const auto sub = induced_subgraph(g, std::span<const VertexId>(order.data(), r));
      const auto comps = connected_components(sub);
      rank.connected = comps.size() == 1;
      const auto dist = all_pairs_distances(sub);
      int diam = 0;
      for (auto a : comps.front())
        for (auto b : comps.front()) diam = std::max(diam, dist.at(a, b));
      rank.diameter = diam;
    }
    out.ranks.push_back(rank);
  }
  return out;
}

struct RichClubResult {
  VertexSet members;  // degree-order prefix
  std::size_t size = 0;
  double density = 0.0;
  std::size_t missing_edges = 0;
  double tau = 0.0;
  std::size_t rmin = 0;
  // Diagnostics at the first rank past the club (absent when the club is
  // the whole graph).
  std::optional<double> next_phi;
  int diameter = 0;
  std::optional<int> next_diameter;
};

inline constexpr double kDefaultTau = 0.95;
inline constexpr std::size_t kDefaultRmin = 3;

// Largest prefix r >= rmin with phi(r) >= tau, or nothing.
inline std::optional<RichClubResult> detect_rich_club(const RichClubProfile& profile,
                                                      double tau = kDefaultTau,
                                                      std::size_t rmin = kDefaultRmin) {
  if (!(tau > 0.0)) throw Error("rich-club threshold must be positive");
  if (rmin < 2) throw Error("rich-club minimum size must be at least 2");
  for (std::size_t r = profile.size(); r >= rmin && r >= 1; --r) {
    const auto& rank = profile.at(r);
    if (rank.phi < tau) continue;
    RichClubResult out;
    out.size = r;
    out.density = rank.phi;
    out.missing_edges = r * (r - 1) / 2 - rank.internal_edges;
    out.tau = tau;
    out.rmin = rmin;
    out.diameter = rank.diameter;
    for (std::size_t i = 1; i <= r; ++i) out.members.push_back(profile.at(i).vertex);
    if (r < profile.size()) {
      out.next_phi = profile.at(r + 1).phi;
      out.next_diameter = profile.at(r + 1).diameter;
    }
    return out;
  }
  return std::nullopt;
}

inline std::optional<RichClubResult> detect_rich_club(const Graph& g, double tau = kDefaultTau,
                                                      std::size_t rmin = kDefaultRmin) {
  return detect_rich_club(rich_club_profile(g), tau, rmin);
}

struct CentralityByDegreeRow {
  std::size_t rank = 0;
  VertexId vertex = 0;
  std::size_t degree = 0;
  double betweenness = 0.0;
  double closeness = 0.0;
};

// Betweenness and closeness of every vertex, listed in degree order.
inline std::vector<CentralityByDegreeRow> centrality_by_degree_report(const Graph& g,
                                                                      unsigned threads = 1) {
  const auto scores = centralities(g, threads);
  const auto order = degree_order(g);
  std::vector<CentralityByDegreeRow> rows;
  rows.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto v = order[i];
    rows.push_back({i + 1, v, g.degree(v), scores.betweenness[v], scores.closeness[v]});
  }
  return rows;
}

}  // namespace concentra
