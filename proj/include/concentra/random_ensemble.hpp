#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "concentra/graph.hpp"
#include "concentra/metrics.hpp"
#include "concentra/parallel.hpp"
#include "concentra/rng.hpp"

namespace concentra {

struct ErParams {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0, 1]");
    if (samples < 1) throw Error("ensemble needs at least one sample");
  }
};

// G(n, p) sample number `index`. Candidate pairs (u, v), u < v, are visited in
// lexicographic order and consume one uniform each from stream `index` of the
// master seed, so a sample depends on (seed, index) only.
inline Graph sample_er(const ErParams& params, std::uint64_t index) {
  params.validate();
  CounterRng rng(params.seed, index);
  std::vector<std::string> labels;
  labels.reserve(params.n);
  for (std::size_t v = 0; v < params.n; ++v) labels.push_back("v" + std::to_string(v));
  std::vector<Edge> edges;
  for (VertexId u = 0; u < params.n; ++u)
    for (VertexId v = u + 1; v < params.n; ++v)
      if (rng.uniform() < params.p) edges.push_back({u, v});
  return Graph::from_edges(std::move(labels), edges);
}

struct IndexStatistic {
  std::string name;
  double mean = 0.0;
  double sd = 0.0;         // sample standard deviation (0 for a single value)
  std::size_t count = 0;   // samples on which the index was defined
};

struct EnsembleOptions {
  unsigned threads = 1;
  // Average lbar, L, D and C_P over connected samples only instead of over
  // every sample's largest component.
  bool connected_only = false;
  PathLengthConvention path_convention = PathLengthConvention::kIncludeSelf;
  BetweennessScale betweenness_scale = BetweennessScale::kOrderedPairs;
};

struct EnsembleSummary {
  ErParams params;
  EnsembleOptions options;
  std::vector<IndexStatistic> indices;  // table order, see index_values()
  std::size_t disconnected_samples = 0;

  const IndexStatistic& at(std::string_view name) const {
    for (const auto& s : indices)
      if (s.name == name) return s;
    throw Error("no index named '" + std::string(name) + "'");
  }
};

namespace detail {

inline bool is_path_index(std::string_view name) {
  return name == "lbar" || name == "L" || name == "D" || name == "C_P";
}

}  // namespace detail

// Per-sample indices are stored by sample number and reduced in that order,
// so the result is bit-identical for any thread count.
inline EnsembleSummary ensemble_summary(const ErParams& params, const EnsembleOptions& opt = {}) {
  params.validate();
  std::vector<StructuralIndices> per_sample(params.samples);
  parallel_for(params.samples, opt.threads, [&](std::size_t i) {
    per_sample[i] = structural_summary(sample_er(params, i),
                                       {.path_convention = opt.path_convention,
                                        .betweenness_scale = opt.betweenness_scale,
                                        .threads = 1});
  });

  EnsembleSummary out;
  out.params = params;
  out.options = opt;
  for (const auto& s : per_sample)
    if (s.component_count > 1) ++out.disconnected_samples;

  for (std::size_t k = 0; k < kIndexCount; ++k) {
    IndexStatistic stat;
    stat.name = index_values(per_sample.front())[k].first;
    const bool restrict = opt.connected_only && detail::is_path_index(stat.name);
    std::vector<double> values;
    values.reserve(per_sample.size());
    for (const auto& s : per_sample) {
      if (restrict && s.component_count > 1) continue;
      if (auto v = index_values(s)[k].second) values.push_back(*v);
    }
    stat.count = values.size();
    if (!values.empty()) {
      CompensatedSum sum;
      for (double v : values) sum.add(v);
      stat.mean = sum.value() / static_cast<double>(values.size());
      if (values.size() > 1) {
        CompensatedSum sq;
        for (double v : values) sq.add((v - stat.mean) * (v - stat.mean));
        stat.sd = std::sqrt(sq.value() / static_cast<double>(values.size() - 1));
      }
    }
    out.indices.push_back(std::move(stat));
  }
  return out;
}

}  // namespace concentra
