#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "concentra/error.hpp"

namespace concentra {

using VertexId = std::uint32_t;
using VertexSet = std::vector<VertexId>;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph. Vertex ids are dense, 0..n-1, in the
// order fixed at construction; every label is unique.
class Graph {
 public:
  Graph() = default;

  // Throws Error on self-loops, parallel edges, duplicate labels or ids out of
  // range.
  static Graph from_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
    Graph g;
    const auto n = labels.size();
    g.labels_ = std::move(labels);
    g.adjacency_.assign(n, {});
    g.matrix_.assign(n * n, 0);
    for (VertexId v = 0; v < n; ++v) {
      if (g.labels_[v].empty()) throw Error("empty vertex label");
      if (!g.index_.emplace(g.labels_[v], v).second)
        throw Error("duplicate vertex label '" + g.labels_[v] + "'");
    }
    for (const auto& e : edges) {
      if (e.u >= n || e.v >= n) throw Error("edge endpoint out of range");
      if (e.u == e.v) throw Error("self-loop on '" + g.labels_[e.u] + "'");
      auto& cell = g.matrix_[std::size_t{e.u} * n + e.v];
      if (cell) {
        throw Error("parallel edge '" + g.labels_[e.u] + "' - '" + g.labels_[e.v] + "'");
      }
      cell = 1;
      g.matrix_[std::size_t{e.v} * n + e.u] = 1;
      g.adjacency_[e.u].push_back(e.v);
      g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
    g.edge_count_ = edges.size();

    std::vector<VertexId> by_label(n);
    std::iota(by_label.begin(), by_label.end(), VertexId{0});
    std::sort(by_label.begin(), by_label.end(),
              [&](VertexId a, VertexId b) { return g.labels_[a] < g.labels_[b]; });
    g.label_rank_.resize(n);
    for (VertexId r = 0; r < n; ++r) g.label_rank_[by_label[r]] = r;
    return g;
  }

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Position of the vertex in ascending label order; the universal tie-break.
  VertexId label_rank(VertexId v) const { return label_rank_.at(v); }

  std::optional<VertexId> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId id_of(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw UnknownVertex(std::string(label));
  }

  // Sorted ascending by id.
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  bool adjacent(VertexId u, VertexId v) const {
    return matrix_[std::size_t{u} * vertex_count() + v] != 0;
  }

  // Each edge once with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u)
      for (VertexId v : adjacency_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::uint8_t> matrix_;
  std::vector<VertexId> label_rank_;
  std::size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Edge-list files

struct Provenance {
  std::string source;
  std::size_t duplicate_pairs = 0;
  std::vector<std::string> warnings;
};

// Normalized edge list: no duplicate unordered pair, no self-loop.
struct EdgeList {
  std::vector<std::pair<std::string, std::string>> rows;
  Provenance provenance;
};

struct RegistryEntry {
  std::string label;
  std::string long_name;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    // UTF-8 byte order mark on the first line
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    fn(line_no, t);
  }
}

}  // namespace detail

// Separator is auto-detected from the first data line: tab if present,
// otherwise comma. `#` lines and blank lines are skipped.
inline EdgeList read_edge_list(std::string_view text, std::string source = {}) {
  EdgeList out;
  out.provenance.source = std::move(source);
  char sep = 0;
  std::unordered_map<std::string, std::size_t> seen;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (sep == 0) sep = line.find('\t') != std::string_view::npos ? '\t' : ',';
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto pos = line.find(sep, start);
      fields.push_back(detail::trim(line.substr(start, pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected two labels separated by '" +
                                    std::string(sep == '\t' ? "\\t" : ",") + "', got " +
                                    std::to_string(fields.size()) + " field(s)");
    }
    if (fields[0].empty() || fields[1].empty()) throw ParseError(line_no, "empty label");
    if (fields[0] == fields[1]) {
      throw ParseError(line_no, "self-loop on '" + std::string(fields[0]) + "'");
    }
    std::string a(fields[0]);
    std::string b(fields[1]);
    std::string key = a < b ? a + '\n' + b : b + '\n' + a;
    auto [it, inserted] = seen.emplace(std::move(key), line_no);
    if (!inserted) {
      ++out.provenance.duplicate_pairs;
      out.provenance.warnings.push_back("line " + std::to_string(line_no) + ": duplicate of line " +
                                        std::to_string(it->second) + " (" + a + ", " + b + ")");
      return;
    }
    out.rows.emplace_back(std::move(a), std::move(b));
  });
  return out;
}

// One label per line, optionally followed by a long name after the first
// comma, tab or space.
inline std::vector<RegistryEntry> read_registry(std::string_view text) {
  std::vector<RegistryEntry> out;
  detail::for_each_line(text, [&](std::size_t, std::string_view line) {
    auto cut = line.find_first_of(",\t");
    if (cut == std::string_view::npos) cut = line.find(' ');
    RegistryEntry e;
    e.label = std::string(detail::trim(line.substr(0, cut)));
    if (cut != std::string_view::npos) e.long_name = std::string(detail::trim(line.substr(cut + 1)));
    out.push_back(std::move(e));
  });
  return out;
}

// Ids are assigned by first appearance in the edge list, then registry order
// for labels that only appear in the registry (isolated vertices).
inline Graph to_graph(const EdgeList& list, std::span<const RegistryEntry> registry = {}) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(list.rows.size());
  for (const auto& [a, b] : list.rows) {
    const auto u = intern(a);
    const auto v = intern(b);
    edges.push_back({u, v});
  }
  for (const auto& entry : registry) intern(entry.label);
  return Graph::from_edges(std::move(labels), edges);
}

inline Graph parse_edge_list(std::string_view text, std::span<const RegistryEntry> registry = {}) {
  return to_graph(read_edge_list(text), registry);
}

// Canonical form: one `a,b` line per edge in id order.
inline std::string write_edge_list(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += g.label(e.u);
    out += ',';
    out += g.label(e.v);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Primitive queries

// Vertex order of the result follows the ids of `g`.
inline Graph induced_subgraph(const Graph& g, std::span<const VertexId> subset) {
  const auto n = g.vertex_count();
  std::vector<VertexId> local(n, static_cast<VertexId>(-1));
  std::vector<VertexId> kept(subset.begin(), subset.end());
  for (auto v : kept)
    if (v >= n) throw Error("vertex id out of range in induced subgraph");
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (VertexId i = 0; i < kept.size(); ++i) {
    local[kept[i]] = i;
    labels.push_back(g.label(kept[i]));
  }
  std::vector<Edge> edges;
  for (auto u : kept)
    for (auto w : g.neighbors(u))
      if (u < w && local[w] != static_cast<VertexId>(-1)) edges.push_back({local[u], local[w]});
  return Graph::from_edges(std::move(labels), edges);
}

inline Graph induced_subgraph(const Graph& g, std::span<const std::string> labels) {
  VertexSet ids;
  ids.reserve(labels.size());
  for (const auto& l : labels) ids.push_back(g.id_of(l));
  return induced_subgraph(g, ids);
}

inline VertexSet all_vertices(const Graph& g) {
  VertexSet out(g.vertex_count());
  std::iota(out.begin(), out.end(), VertexId{0});
  return out;
}

inline VertexSet complement(const Graph& g, std::span<const VertexId> excluded) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (auto v : excluded) drop.at(v) = 1;
  VertexSet out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!drop[v]) out.push_back(v);
  return out;
}

// Smallest label first.
inline void sort_by_label(const Graph& g, VertexSet& set) {
  std::sort(set.begin(), set.end(),
            [&](VertexId a, VertexId b) { return g.label_rank(a) < g.label_rank(b); });
}

inline VertexId smallest_label(const Graph& g, std::span<const VertexId> set) {
  return *std::min_element(set.begin(), set.end(), [&](VertexId a, VertexId b) {
    return g.label_rank(a) < g.label_rank(b);
  });
}

// Orders vertex sets by size (descending), then by their smallest label.
inline void order_groups(const Graph& g, std::vector<VertexSet>& groups) {
  std::sort(groups.begin(), groups.end(), [&](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return g.label_rank(smallest_label(g, a)) < g.label_rank(smallest_label(g, b));
  });
}

// Each component sorted by id; components ordered by size desc, then
// smallest label.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  order_groups(g, out);
  return out;
}

inline VertexSet largest_component(const Graph& g) {
  auto comps = connected_components(g);
  if (comps.empty()) return {};
  return std::move(comps.front());
}

inline std::vector<std::string> labels_of(const Graph& g, std::span<const VertexId> set) {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (auto v : set) out.push_back(g.label(v));
  return out;
}

}  // namespace concentra
