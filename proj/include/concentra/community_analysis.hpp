#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concentra/communities.hpp"
#include "concentra/fast_greedy.hpp"
#include "concentra/spectral.hpp"
#include "concentra/walktrap.hpp"

namespace concentra {

struct AlgorithmSet {
  bool fast_greedy = true;
  bool spectral = true;
  bool walktrap = true;

  std::size_t count() const noexcept {
    return std::size_t{fast_greedy} + std::size_t{spectral} + std::size_t{walktrap};
  }
};

struct CommunityOptions {
  AlgorithmSet algorithms;
  int walk_length = kDefaultWalkLength;
  SpectralOptions spectral;
  std::size_t smin = 3;
};

// Partitions of the graph left after removing `excluded` (typically the
// rich-club). Partition classes and stable communities refer to vertex ids of
// `remainder`; the summary graphs refer to ids of the original graph.
struct CommunityAnalysis {
  Graph remainder;
  VertexSet excluded;  // ids in the original graph
  std::vector<Partition> partitions;
  std::optional<Dendrogram> fast_greedy_dendrogram;
  std::optional<Dendrogram> walktrap_dendrogram;
  std::vector<VertexSet> stable;  // empty when fewer than two algorithms ran
  std::vector<std::pair<std::string, SummaryGraph>> summaries;  // per partition, then "stable"
};

namespace detail {

inline VertexSet lift(const Graph& g, const Graph& sub, const VertexSet& set) {
  VertexSet out;
  out.reserve(set.size());
  for (auto v : set) out.push_back(g.id_of(sub.label(v)));
  return out;
}

// Club first (if any), then one group per class: singletons as kSingleton.
inline SummaryGraph summarize(const Graph& g, const Graph& sub, const VertexSet& excluded,
                              const std::vector<VertexSet>& classes) {
  std::vector<Group> groups;
  if (!excluded.empty()) groups.push_back({"club", excluded, GroupKind::kClub});
  std::size_t community = 0;
  for (const auto& c : classes) {
    auto members = lift(g, sub, c);
    if (members.size() == 1) {
      groups.push_back({g.label(members.front()), std::move(members), GroupKind::kSingleton});
    } else {
      groups.push_back({"C" + std::to_string(++community), std::move(members), GroupKind::kCommunity});
    }
  }
  return summary_graph(g, std::move(groups));
}

}  // namespace detail

inline CommunityAnalysis remove_and_partition(const Graph& g, std::span<const VertexId> excluded,
                                              const CommunityOptions& opt = {}) {
  if (opt.algorithms.count() == 0) throw Error("no partitioning algorithm selected");
  CommunityAnalysis out;
  out.excluded.assign(excluded.begin(), excluded.end());
  std::sort(out.excluded.begin(), out.excluded.end());
  out.excluded.erase(std::unique(out.excluded.begin(), out.excluded.end()), out.excluded.end());
  const auto kept = complement(g, out.excluded);
  if (kept.empty()) throw Error("nothing left to partition after removing the excluded vertices");
  out.remainder = induced_subgraph(g, kept);
  const auto& sub = out.remainder;

  if (opt.algorithms.fast_greedy) {
    auto r = fast_greedy(sub);
    out.partitions.push_back(std::move(r.partition));
    out.fast_greedy_dendrogram = std::move(r.dendrogram);
  }
  if (opt.algorithms.spectral) out.partitions.push_back(spectral_partition(sub, opt.spectral));
  if (opt.algorithms.walktrap) {
    auto r = walktrap(sub, opt.walk_length);
    out.partitions.push_back(std::move(r.partition));
    out.walktrap_dendrogram = std::move(r.dendrogram);
  }
  if (out.partitions.size() >= 2) out.stable = stable_communities(sub, out.partitions, opt.smin);

  for (const auto& p : out.partitions)
    out.summaries.emplace_back(p.method, detail::summarize(g, sub, out.excluded, p.classes));
  if (out.partitions.size() >= 2)
    out.summaries.emplace_back("stable", detail::summarize(g, sub, out.excluded, out.stable));
  return out;
}

}  // namespace concentra
