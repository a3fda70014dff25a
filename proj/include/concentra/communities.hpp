#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "concentra/graph.hpp"

namespace concentra {

// Disjoint classes covering the vertices of the graph they were computed on.
// Classes are kept canonical: members sorted by id, classes ordered by size
// (descending) then smallest label.
struct Partition {
  std::vector<VertexSet> classes;
  std::string method;
  double modularity = 0.0;

  std::size_t class_count() const noexcept { return classes.size(); }

  // membership[v] = index of v's class; `n` is the vertex count.
  std::vector<std::size_t> membership(std::size_t n) const {
    std::vector<std::size_t> out(n, static_cast<std::size_t>(-1));
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (auto v : classes[c]) out.at(v) = c;
    return out;
  }
};

namespace detail {

inline void require_cover(const Graph& g, std::span<const VertexSet> classes) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::size_t total = 0;
  for (const auto& c : classes) {
    if (c.empty()) throw Error("partition has an empty class");
    for (auto v : c) {
      if (v >= g.vertex_count()) throw Error("partition names a vertex outside the graph");
      if (seen[v]) throw Error("partition classes overlap at '" + g.label(v) + "'");
      seen[v] = 1;
      ++total;
    }
  }
  if (total != g.vertex_count()) throw Error("partition does not cover every vertex");
}

// 4 m^2 M as an exact integer: Σ_i (4 m m_i - D_i^2), with m_i the edges
// inside class i and D_i its degree sum.
inline std::int64_t modularity_numerator(const Graph& g, std::span<const VertexSet> classes) {
  std::vector<std::size_t> member(g.vertex_count());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto v : classes[c]) member[v] = c;
  std::vector<std::int64_t> inside(classes.size(), 0), degree(classes.size(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    degree[member[v]] += static_cast<std::int64_t>(g.degree(v));
    for (auto w : g.neighbors(v))
      if (v < w && member[v] == member[w]) ++inside[member[v]];
  }
  const auto m = static_cast<std::int64_t>(g.edge_count());
  std::int64_t num = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) num += 4 * m * inside[c] - degree[c] * degree[c];
  return num;
}

inline double numerator_to_modularity(std::int64_t num, std::size_t m) {
  const double md = static_cast<double>(m);
  return static_cast<double>(num) / (4.0 * md * md);
}

}  // namespace detail

// M = Σ_i [ m_i / m - (Σ_{u∈V_i} d(u) / 2m)^2 ].
inline double modularity(const Graph& g, std::span<const VertexSet> classes) {
  if (g.edge_count() == 0) throw UndefinedInput("modularity is undefined on a graph without edges");
  detail::require_cover(g, classes);
  return detail::numerator_to_modularity(detail::modularity_numerator(g, classes), g.edge_count());
}

inline double modularity(const Graph& g, const Partition& p) { return modularity(g, p.classes); }

// Canonicalizes the classes and scores them (modularity 0 when m = 0).
inline Partition make_partition(const Graph& g, std::vector<VertexSet> classes, std::string method) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  detail::require_cover(g, classes);
  order_groups(g, classes);
  Partition p;
  p.classes = std::move(classes);
  p.method = std::move(method);
  p.modularity = g.edge_count() == 0 ? 0.0 : modularity(g, p.classes);
  return p;
}

// `labels[v]` is any class key per vertex; equal keys share a class.
template <typename Key>
Partition partition_from_labels(const Graph& g, std::span<const Key> labels, std::string method) {
  std::map<Key, VertexSet> groups;
  for (VertexId v = 0; v < g.vertex_count(); ++v) groups[labels[v]].push_back(v);
  std::vector<VertexSet> classes;
  for (auto& [key, members] : groups) classes.push_back(std::move(members));
  return make_partition(g, std::move(classes), std::move(method));
}

// ---------------------------------------------------------------------------
// Dendrograms

// Agglomerative merge history over n leaves. Cluster ids 0..n-1 are the
// singletons; the k-th merge creates cluster n + k.
struct Dendrogram {
  struct Merge {
    std::size_t a = 0;
    std::size_t b = 0;
    double score = 0.0;  // criterion value that selected this merge
  };

  std::size_t leaves = 0;
  std::vector<Merge> merges;
  std::vector<double> level_modularity;  // level l = after l merges

  std::size_t levels() const noexcept { return merges.size() + 1; }

  // Classes after the first `level` merges, as leaf sets.
  std::vector<VertexSet> classes_at(std::size_t level) const {
    if (level > merges.size()) throw Error("dendrogram level out of range");
    std::vector<VertexSet> clusters(leaves + level);
    std::vector<char> alive(leaves + level, 0);
    for (std::size_t v = 0; v < leaves; ++v) {
      clusters[v] = {static_cast<VertexId>(v)};
      alive[v] = 1;
    }
    for (std::size_t k = 0; k < level; ++k) {
      const auto& mg = merges[k];
      auto& dst = clusters[leaves + k];
      dst = std::move(clusters[mg.a]);
      dst.insert(dst.end(), clusters[mg.b].begin(), clusters[mg.b].end());
      alive[mg.a] = alive[mg.b] = 0;
      alive[leaves + k] = 1;
    }
    std::vector<VertexSet> out;
    for (std::size_t c = 0; c < clusters.size(); ++c)
      if (alive[c]) out.push_back(std::move(clusters[c]));
    return out;
  }

  // Earliest level of maximal modularity.
  std::size_t best_level() const {
    std::size_t best = 0;
    for (std::size_t l = 1; l < level_modularity.size(); ++l)
      if (level_modularity[l] > level_modularity[best]) best = l;
    return best;
  }
};

// ---------------------------------------------------------------------------
// Stable communities

// Meet (common refinement) of partitions of the same graph, keeping classes of
// at least `smin` vertices, largest first.
inline std::vector<VertexSet> stable_communities(const Graph& g, std::span<const Partition> partitions,
                                                 std::size_t smin) {
  if (partitions.size() < 2) throw Error("stable communities need at least two partitions");
  const auto n = g.vertex_count();
  std::vector<std::vector<std::size_t>> memberships;
  for (const auto& p : partitions) {
    auto mem = p.membership(n);
    for (VertexId v = 0; v < n; ++v)
      if (mem[v] == static_cast<std::size_t>(-1))
        throw Error("partitions do not cover the same vertex set ('" + g.label(v) + "' missing from " +
                    p.method + ")");
    std::size_t total = 0;
    for (const auto& c : p.classes) total += c.size();
    if (total != n) throw Error("partitions do not cover the same vertex set");
    memberships.push_back(std::move(mem));
  }
  std::map<std::vector<std::size_t>, VertexSet> meet;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<std::size_t> key;
    key.reserve(memberships.size());
    for (const auto& mem : memberships) key.push_back(mem[v]);
    meet[key].push_back(v);
  }
  std::vector<VertexSet> out;
  for (auto& [key, members] : meet)
    if (members.size() >= smin) out.push_back(std::move(members));
  order_groups(g, out);
  return out;
}

// ---------------------------------------------------------------------------
// Modular summary graphs

enum class GroupKind { kClub, kCommunity, kSingleton };

inline const char* to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::kClub: return "club";
    case GroupKind::kCommunity: return "community";
    case GroupKind::kSingleton: return "singleton";
  }
  return "?";
}

struct Group {
  std::string name;
  VertexSet members;
  GroupKind kind = GroupKind::kCommunity;
};

// Groups as nodes; links[i][j] counts edges with one end in each group.
struct SummaryGraph {
  std::vector<Group> groups;
  std::vector<std::vector<std::size_t>> links;
};

inline SummaryGraph summary_graph(const Graph& g, std::vector<Group> groups) {
  std::vector<std::size_t> owner(g.vertex_count(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (auto v : groups[i].members) {
      if (owner.at(v) != static_cast<std::size_t>(-1))
        throw Error("summary groups overlap at '" + g.label(v) + "'");
      owner[v] = i;
    }
  SummaryGraph out;
  out.links.assign(groups.size(), std::vector<std::size_t>(groups.size(), 0));
  for (const auto& e : g.edges()) {
    const auto a = owner[e.u];
    const auto b = owner[e.v];
    if (a == static_cast<std::size_t>(-1) || b == static_cast<std::size_t>(-1) || a == b) continue;
    ++out.links[a][b];
    ++out.links[b][a];
  }
  out.groups = std::move(groups);
  return out;
}

}  // namespace concentra
