#pragma once

// JSON, CSV, DOT and SVG emitters for every result object. Emitters only
// format values computed elsewhere.

#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "concentra/community_analysis.hpp"
#include "concentra/hemicycle.hpp"
#include "concentra/metrics.hpp"
#include "concentra/random_ensemble.hpp"
#include "concentra/rich_club.hpp"

namespace concentra {

using json = nlohmann::json;

namespace detail {

inline json optional_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

inline const char* to_string(PathLengthConvention c) {
  return c == PathLengthConvention::kIncludeSelf ? "include_self" : "exclude_self";
}

inline const char* to_string(BetweennessScale s) {
  return s == BetweennessScale::kOrderedPairs ? "ordered_pairs" : "unordered_pairs";
}

inline json label_list(const Graph& g, std::span<const VertexId> set) {
  VertexSet sorted(set.begin(), set.end());
  sort_by_label(g, sorted);
  return labels_of(g, sorted);
}

}  // namespace detail

inline json to_json(const StructuralIndices& s) {
  json out = json::object();
  for (const auto& [name, value] : index_values(s)) out[name] = detail::optional_number(value);
  out["n"] = s.n;
  out["m"] = s.m;
  out["component_policy"] = {
      {"description", kComponentPolicy},
      {"component_count", s.component_count},
      {"analyzed_component_size", s.analyzed_component_size},
      {"path_length_convention", detail::to_string(s.path_convention)},
      {"betweenness_scale", detail::to_string(s.betweenness_scale)},
  };
  return out;
}

// Aligned two-column text table in the row order of the published table.
inline std::string structural_table(const StructuralIndices& s, const std::string& heading) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "index" << heading << '\n';
  for (const auto& [name, value] : index_values(s)) {
    out << std::left << std::setw(6) << name;
    if (!value)
      out << "-";
    else if (std::string_view(name) == "n" || std::string_view(name) == "m")
      out << static_cast<long long>(*value);
    else
      out << std::fixed << std::setprecision(3) << *value;
    out << '\n';
  }
  return out.str();
}

inline json to_json(const EnsembleSummary& e) {
  json indices = json::object();
  for (const auto& s : e.indices) indices[s.name] = {{"mean", s.mean}, {"sd", s.sd}, {"count", s.count}};
  return {
      {"params",
       {{"n", e.params.n}, {"p", e.params.p}, {"samples", e.params.samples}, {"seed", e.params.seed}}},
      {"rng", "philox4x32-10"},
      {"connected_only", e.options.connected_only},
      {"path_length_convention", detail::to_string(e.options.path_convention)},
      {"betweenness_scale", detail::to_string(e.options.betweenness_scale)},
      {"disconnected_samples", e.disconnected_samples},
      {"indices", indices},
  };
}

// ---------------------------------------------------------------------------
// Rich-club

// Columns: r,label,degree,phi,diam,connected
inline std::string profile_csv(const Graph& g, const RichClubProfile& profile) {
  std::ostringstream out;
  out << "r,label,degree,phi,diam,connected\n";
  out << std::setprecision(17);
  for (const auto& rank : profile.ranks) {
    out << rank.r << ',' << g.label(rank.vertex) << ',' << rank.degree << ',' << rank.phi << ','
        << rank.diameter << ',' << (rank.connected ? "true" : "false") << '\n';
  }
  return out.str();
}

inline json to_json(const Graph& g, const RichClubProfile& profile) {
  json rows = json::array();
  for (const auto& rank : profile.ranks) {
    rows.push_back({{"r", rank.r},
                    {"label", g.label(rank.vertex)},
                    {"degree", rank.degree},
                    {"phi", rank.phi},
                    {"diam", rank.diameter},
                    {"connected", rank.connected}});
  }
  return rows;
}

inline json to_json(const Graph& g, const std::optional<RichClubResult>& club, double tau, std::size_t rmin) {
  if (!club) return {{"found", false}, {"tau", tau}, {"rmin", rmin}};
  json members = json::array();
  for (auto v : club->members) members.push_back(g.label(v));
  return {
      {"found", true},
      {"tau", club->tau},
      {"rmin", club->rmin},
      {"size", club->size},
      {"members", members},  // degree order
      {"density", club->density},
      {"missing_edges", club->missing_edges},
      {"diameter", club->diameter},
      {"next_phi", detail::optional_number(club->next_phi)},
      {"next_diameter", club->next_diameter ? json(*club->next_diameter) : json(nullptr)},
  };
}

inline std::string centrality_csv(const Graph& g, std::span<const CentralityByDegreeRow> rows) {
  std::ostringstream out;
  out << "rank,label,degree,betweenness,closeness\n" << std::setprecision(17);
  for (const auto& row : rows)
    out << row.rank << ',' << g.label(row.vertex) << ',' << row.degree << ',' << row.betweenness << ','
        << row.closeness << '\n';
  return out.str();
}

inline json to_json(const Graph& g, std::span<const CentralityByDegreeRow> rows) {
  json out = json::array();
  for (const auto& row : rows)
    out.push_back({{"rank", row.rank},
                   {"label", g.label(row.vertex)},
                   {"degree", row.degree},
                   {"betweenness", row.betweenness},
                   {"closeness", row.closeness}});
  return out;
}

// ---------------------------------------------------------------------------
// Communities

inline json to_json(const Graph& g, const Partition& p) {
  json classes = json::array();
  for (const auto& c : p.classes) classes.push_back(detail::label_list(g, c));
  return {{"method", p.method}, {"modularity", p.modularity}, {"class_count", p.class_count()},
          {"classes", classes}};
}

inline json to_json(const Dendrogram& d) {
  json merges = json::array();
  for (const auto& mg : d.merges) merges.push_back({mg.a, mg.b, mg.score});
  return {{"leaves", d.leaves}, {"merges", merges}, {"level_modularity", d.level_modularity},
          {"best_level", d.best_level()}};
}

inline json to_json(const Graph& g, const SummaryGraph& s) {
  json groups = json::array();
  for (const auto& grp : s.groups)
    groups.push_back({{"name", grp.name}, {"kind", to_string(grp.kind)},
                      {"members", detail::label_list(g, grp.members)}});
  json links = json::array();
  for (std::size_t i = 0; i < s.groups.size(); ++i)
    for (std::size_t j = i + 1; j < s.groups.size(); ++j)
      if (s.links[i][j] > 0) links.push_back({{"a", s.groups[i].name}, {"b", s.groups[j].name}, {"edges", s.links[i][j]}});
  return {{"groups", groups}, {"links", links}};
}

inline json to_json(const Graph& g, const CommunityAnalysis& a) {
  const auto& sub = a.remainder;
  json partitions = json::object();
  for (const auto& p : a.partitions) partitions[p.method] = to_json(sub, p);
  json stable = json::array();
  for (const auto& s : a.stable) stable.push_back(detail::label_list(sub, s));
  json summaries = json::object();
  for (const auto& [name, s] : a.summaries) summaries[name] = to_json(g, s);
  json out = {
      {"excluded", detail::label_list(g, a.excluded)},
      {"analyzed_vertices", sub.vertex_count()},
      {"analyzed_edges", sub.edge_count()},
      {"partitions", partitions},
      {"stable_communities", stable},
      {"summaries", summaries},
  };
  if (a.fast_greedy_dendrogram) out["dendrograms"]["fast_greedy"] = to_json(*a.fast_greedy_dendrogram);
  if (a.walktrap_dendrogram) out["dendrograms"]["walktrap"] = to_json(*a.walktrap_dendrogram);
  return out;
}

namespace detail {

inline std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

// One node per group (box for the club, diamond for communities, circle for
// singletons); edges labelled with the number of links between groups.
inline std::string export_dot(const SummaryGraph& s, std::string_view name = "summary") {
  std::ostringstream out;
  out << "graph \"" << detail::dot_escape(name) << "\" {\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < s.groups.size(); ++i) {
    const auto& grp = s.groups[i];
    const char* shape = grp.kind == GroupKind::kClub        ? "box"
                        : grp.kind == GroupKind::kCommunity ? "diamond"
                                                            : "circle";
    out << "  g" << i << " [label=\"" << detail::dot_escape(grp.name);
    if (grp.kind != GroupKind::kSingleton) out << "\\n(" << grp.members.size() << ")";
    out << "\", shape=" << shape << "];\n";
  }
  for (std::size_t i = 0; i < s.groups.size(); ++i)
    for (std::size_t j = i + 1; j < s.groups.size(); ++j)
      if (s.links[i][j] > 0)
        out << "  g" << i << " -- g" << j << " [label=\"" << s.links[i][j] << "\"];\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Hemicycle

inline json to_json(const Graph& g, const HemicycleLayout& layout) {
  json rows = json::array();
  for (const auto& p : layout.points)
    rows.push_back({{"label", g.label(p.vertex)}, {"dbar", p.dbar}, {"r", p.r}, {"theta", p.theta}});
  return {
      {"club", detail::label_list(g, layout.club)},
      {"points", rows},
      {"first_component_correlation", layout.first_component_correlation},
      {"dimensions", layout.dimensions},
      {"warnings", layout.warnings},
  };
}

// Unit half-disk, club glyph at the origin, vertex j at (r cos θ, r sin θ).
inline std::string hemicycle_svg(const Graph& g, const HemicycleLayout& layout) {
  constexpr double R = 400.0;
  constexpr double cx = 460.0;
  constexpr double cy = 440.0;
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"920\" height=\"480\" viewBox=\"0 0 920 480\">\n";
  out << "  <path class=\"hemicycle\" d=\"M " << cx - R << ' ' << cy << " A " << R << ' ' << R << " 0 0 1 "
      << cx + R << ' ' << cy << " Z\" fill=\"#f4f4f4\" stroke=\"#888\"/>\n";
  for (double rr : {0.2, 0.6})
    out << "  <path d=\"M " << cx - R * rr << ' ' << cy << " A " << R * rr << ' ' << R * rr << " 0 0 1 "
        << cx + R * rr << ' ' << cy << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
  out << "  <g class=\"club\">\n";
  out << "    <rect x=\"" << cx - 30 << "\" y=\"" << cy - 24 << "\" width=\"60\" height=\"24\" fill=\"#c33\"/>\n";
  out << "    <text x=\"" << cx << "\" y=\"" << cy - 8
      << "\" text-anchor=\"middle\" font-size=\"11\" fill=\"#fff\">club (" << layout.club.size()
      << ")</text>\n";
  out << "  </g>\n";
  for (const auto& p : layout.points) {
    const double x = cx + R * p.r * std::cos(p.theta);
    const double y = cy - R * p.r * std::sin(p.theta);
    const auto label = detail::xml_escape(g.label(p.vertex));
    out << "  <g class=\"vertex\">\n";
    out << "    <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"#246\"/>\n";
    out << "    <text x=\"" << x + 6 << "\" y=\"" << y - 4 << "\" font-size=\"11\">" << label << "</text>\n";
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace concentra
