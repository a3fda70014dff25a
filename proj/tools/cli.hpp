#pragma once

// Command-line front end. run_cli() is the whole program minus process
// plumbing so tests can drive it in-process.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "concentra/concentra.hpp"

namespace concentra::cli {

enum ExitCode : int { kOk = 0, kAnalysisError = 1, kUsageError = 2 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  std::ostringstream out;
  for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return out.str();
}

struct LoadedGraph {
  Graph graph;
  json input;  // path, sha256, duplicate pairs, warnings
};

inline LoadedGraph load_graph(const std::string& path, const std::string& registry_path) {
  const auto text = read_file(path);
  auto list = read_edge_list(text, path);
  std::vector<RegistryEntry> registry;
  std::string registry_digest;
  if (!registry_path.empty()) {
    const auto reg_text = read_file(registry_path);
    registry = read_registry(reg_text);
    registry_digest = sha256_hex(reg_text);
  }
  LoadedGraph out{to_graph(list, registry), json::object()};
  out.input = {{"path", path},
               {"sha256", sha256_hex(text)},
               {"duplicate_pairs", list.provenance.duplicate_pairs},
               {"warnings", list.provenance.warnings}};
  if (!registry_path.empty()) out.input["registry"] = {{"path", registry_path}, {"sha256", registry_digest}};
  return out;
}

inline VertexSet club_from_labels(const Graph& g, const std::string& csv) {
  VertexSet out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto label = std::string(detail::trim(item));
    if (!label.empty()) out.push_back(g.id_of(label));
  }
  if (out.empty()) throw Error("--club lists no labels");
  return out;
}

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string json_path;
  bool quiet = false;
};

struct GraphInput {
  std::string edgelist;
  std::string registry;
};

struct StatsArgs {
  GraphInput input;
  bool table = false;
  std::string path_convention = "include_self";
  std::string betweenness_scale = "ordered_pairs";
};

struct BaselineArgs {
  std::size_t n = 0;
  double p = -1.0;
  GraphInput match;
  std::size_t samples = 10000;
  bool connected_only = false;
};

struct RichClubArgs {
  GraphInput input;
  double tau = kDefaultTau;
  std::size_t rmin = kDefaultRmin;
  std::string csv;
  std::string centrality_csv;
};

struct CommunityArgs {
  GraphInput input;
  bool exclude_richclub = false;
  double tau = kDefaultTau;
  std::size_t rmin = kDefaultRmin;
  std::string algorithms = "fg,spectral,walktrap";
  int t = kDefaultWalkLength;
  std::size_t kmax = 0;
  std::size_t restarts = 16;
  std::size_t smin = 3;
  std::string dot;
};

struct HemicycleArgs {
  GraphInput input;
  std::string club = "auto";
  double tau = kDefaultTau;
  std::size_t rmin = kDefaultRmin;
  bool closed = false;
  std::string svg;
};

struct ReportArgs {
  GraphInput input;
  std::size_t samples = 10000;
  double tau = kDefaultTau;
  std::size_t rmin = kDefaultRmin;
  int t = kDefaultWalkLength;
  std::size_t kmax = 0;
  std::size_t restarts = 16;
  std::size_t smin = 3;
  std::string dot;
  std::string svg;
};

inline PathLengthConvention parse_convention(const std::string& s) {
  return s == "exclude_self" ? PathLengthConvention::kExcludeSelf : PathLengthConvention::kIncludeSelf;
}

inline BetweennessScale parse_scale(const std::string& s) {
  return s == "unordered_pairs" ? BetweennessScale::kUnorderedPairs : BetweennessScale::kOrderedPairs;
}

inline AlgorithmSet parse_algorithms(const std::string& csv) {
  AlgorithmSet set{false, false, false};
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto name = std::string(detail::trim(item));
    if (name == "fg" || name == "fast_greedy")
      set.fast_greedy = true;
    else if (name == "spectral")
      set.spectral = true;
    else if (name == "walktrap")
      set.walktrap = true;
    else if (!name.empty())
      throw CLI::ValidationError("--algorithms", "unknown algorithm '" + name + "'");
  }
  if (set.count() == 0) throw CLI::ValidationError("--algorithms", "no algorithm selected");
  return set;
}

inline json document(const std::string& command, json input, json parameters, json result) {
  return {{"tool", "concentra"},   {"version", kVersion},        {"command", command},
          {"input", std::move(input)}, {"parameters", std::move(parameters)}, {"result", std::move(result)}};
}

inline json community_parameters(const CommunityOptions& opt, std::uint64_t spectral_seed) {
  json algorithms = json::array();
  if (opt.algorithms.fast_greedy) algorithms.push_back("fast_greedy");
  if (opt.algorithms.spectral) algorithms.push_back("spectral");
  if (opt.algorithms.walktrap) algorithms.push_back("walktrap");
  return {{"algorithms", algorithms},
          {"walk_length", opt.walk_length},
          {"kmax", opt.spectral.kmax},
          {"restarts", opt.spectral.restarts},
          {"spectral_seed", spectral_seed},
          {"smin", opt.smin}};
}

// Subcommand implementations. Each returns the report document.

inline json run_stats(const Globals& gl, const StatsArgs& a, std::ostream& out) {
  const auto loaded = load_graph(a.input.edgelist, a.input.registry);
  SummaryOptions opt{.path_convention = parse_convention(a.path_convention),
                     .betweenness_scale = parse_scale(a.betweenness_scale),
                     .threads = gl.threads};
  const auto s = structural_summary(loaded.graph, opt);
  if (a.table && !gl.quiet) out << structural_table(s, a.input.edgelist);
  return document("stats", loaded.input,
                  {{"path_length_convention", a.path_convention}, {"betweenness_scale", a.betweenness_scale},
                   {"threads", gl.threads}},
                  {{"indices", to_json(s)}});
}

inline json run_baseline(const Globals& gl, const BaselineArgs& a) {
  ErParams params;
  params.samples = a.samples;
  params.seed = derive_seed(gl.seed, seed_purpose::kBaseline);
  json input = nullptr;
  json observed = nullptr;
  if (!a.match.edgelist.empty()) {
    const auto loaded = load_graph(a.match.edgelist, a.match.registry);
    const auto indices = structural_summary(loaded.graph, {.threads = gl.threads});
    params.n = loaded.graph.vertex_count();
    params.p = indices.d.value_or(0.0);
    input = loaded.input;
    observed = to_json(indices);
  } else {
    if (a.n == 0 || a.p < 0.0) throw CLI::ValidationError("baseline", "give --n and --p, or --match <edgelist>");
    params.n = a.n;
    params.p = a.p;
  }
  const auto summary =
      ensemble_summary(params, {.threads = gl.threads, .connected_only = a.connected_only});
  return document("baseline", input,
                  {{"n", params.n},
                   {"p", params.p},
                   {"samples", params.samples},
                   {"seed", gl.seed},
                   {"ensemble_seed", params.seed},
                   {"connected_only", a.connected_only},
                   {"threads", gl.threads}},
                  {{"observed", observed}, {"ensemble", to_json(summary)}});
}

inline json run_richclub(const Globals& gl, const RichClubArgs& a) {
  const auto loaded = load_graph(a.input.edgelist, a.input.registry);
  const auto& g = loaded.graph;
  const auto profile = rich_club_profile(g);
  const auto club = detect_rich_club(profile, a.tau, a.rmin);
  const auto report = centrality_by_degree_report(g, gl.threads);
  if (!a.csv.empty()) write_file(a.csv, profile_csv(g, profile));
  if (!a.centrality_csv.empty()) write_file(a.centrality_csv, centrality_csv(g, report));
  return document("richclub", loaded.input, {{"tau", a.tau}, {"rmin", a.rmin}, {"threads", gl.threads}},
                  {{"profile", to_json(g, profile)},
                   {"club", to_json(g, club, a.tau, a.rmin)},
                   {"centrality_by_degree", to_json(g, report)}});
}

inline json run_communities(const Globals& gl, const CommunityArgs& a) {
  const auto loaded = load_graph(a.input.edgelist, a.input.registry);
  const auto& g = loaded.graph;
  CommunityOptions opt;
  opt.algorithms = parse_algorithms(a.algorithms);
  opt.walk_length = a.t;
  opt.spectral.kmax = a.kmax;
  opt.spectral.restarts = a.restarts;
  opt.spectral.seed = derive_seed(gl.seed, seed_purpose::kSpectral);
  opt.smin = a.smin;

  VertexSet excluded;
  json club_json = nullptr;
  if (a.exclude_richclub) {
    const auto club = detect_rich_club(g, a.tau, a.rmin);
    club_json = to_json(g, club, a.tau, a.rmin);
    if (club) excluded = club->members;
  }
  const auto analysis = remove_and_partition(g, excluded, opt);
  if (!a.dot.empty() && !analysis.summaries.empty())
    write_file(a.dot, export_dot(analysis.summaries.back().second, analysis.summaries.back().first));

  auto params = community_parameters(opt, opt.spectral.seed);
  params["seed"] = gl.seed;
  params["exclude_richclub"] = a.exclude_richclub;
  params["tau"] = a.tau;
  params["rmin"] = a.rmin;
  return document("communities", loaded.input, params, {{"club", club_json}, {"analysis", to_json(g, analysis)}});
}

inline json run_hemicycle(const Globals&, const HemicycleArgs& a) {
  const auto loaded = load_graph(a.input.edgelist, a.input.registry);
  const auto& g = loaded.graph;
  VertexSet club;
  json club_json = nullptr;
  if (a.club == "auto") {
    const auto found = detect_rich_club(g, a.tau, a.rmin);
    club_json = to_json(g, found, a.tau, a.rmin);
    if (!found) throw Error("no rich-club found at tau = " + std::to_string(a.tau) + "; pass --club explicitly");
    club = found->members;
  } else {
    club = club_from_labels(g, a.club);
  }
  const auto layout = hemicycle_layout(g, club, {.closed_neighborhoods = a.closed});
  if (!a.svg.empty()) write_file(a.svg, hemicycle_svg(g, layout));
  return document("hemicycle", loaded.input,
                  {{"club", a.club}, {"tau", a.tau}, {"rmin", a.rmin}, {"closed_neighborhoods", a.closed}},
                  {{"club", club_json}, {"layout", to_json(g, layout)}});
}

inline json run_report(const Globals& gl, const ReportArgs& a) {
  const auto loaded = load_graph(a.input.edgelist, a.input.registry);
  const auto& g = loaded.graph;
  json result;

  const auto indices = structural_summary(g, {.threads = gl.threads});
  result["stats"] = to_json(indices);

  ErParams params{g.vertex_count(), indices.d.value_or(0.0), a.samples,
                  derive_seed(gl.seed, seed_purpose::kBaseline)};
  result["baseline"] = to_json(ensemble_summary(params, {.threads = gl.threads}));

  const auto profile = rich_club_profile(g);
  const auto club = detect_rich_club(profile, a.tau, a.rmin);
  result["richclub"] = {{"profile", to_json(g, profile)},
                        {"club", to_json(g, club, a.tau, a.rmin)},
                        {"centrality_by_degree", to_json(g, centrality_by_degree_report(g, gl.threads))}};

  CommunityOptions opt;
  opt.walk_length = a.t;
  opt.spectral.kmax = a.kmax;
  opt.spectral.restarts = a.restarts;
  opt.spectral.seed = derive_seed(gl.seed, seed_purpose::kSpectral);
  opt.smin = a.smin;
  const VertexSet excluded = club ? club->members : VertexSet{};
  const auto analysis = remove_and_partition(g, excluded, opt);
  result["communities"] = to_json(g, analysis);
  if (!a.dot.empty()) write_file(a.dot, export_dot(analysis.summaries.back().second, "stable"));

  if (club) {
    const auto layout = hemicycle_layout(g, club->members);
    result["hemicycle"] = to_json(g, layout);
    if (!a.svg.empty()) write_file(a.svg, hemicycle_svg(g, layout));
  } else {
    result["hemicycle"] = nullptr;
  }

  auto parameters = community_parameters(opt, opt.spectral.seed);
  parameters["seed"] = gl.seed;
  parameters["samples"] = a.samples;
  parameters["ensemble_seed"] = params.seed;
  parameters["tau"] = a.tau;
  parameters["rmin"] = a.rmin;
  parameters["threads"] = gl.threads;
  return document("report", loaded.input, parameters, result);
}

// argv excludes the program name. Exit status: 0 success, 1 analysis error,
// 2 usage error.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Structural analysis of small dense undirected graphs", "concentra"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  Globals gl;
  app.add_option("--seed", gl.seed, "Master seed for every random component")->capture_default_str();
  app.add_option("--threads", gl.threads, "Worker threads for per-sample / per-source work")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--json", gl.json_path, "Write the JSON report here instead of stdout");
  app.add_flag("--quiet", gl.quiet, "No output on stdout");

  auto add_input = [](CLI::App* sub, GraphInput& in) {
    sub->add_option("edgelist", in.edgelist, "Edge-list file (label,label per line)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--registry", in.registry, "Label registry (declares isolated vertices)")
        ->check(CLI::ExistingFile);
  };
  auto add_club = [](CLI::App* sub, double& tau, std::size_t& rmin) {
    sub->add_option("--tau", tau, "Rich-club density threshold")->check(CLI::Range(0.0, 1.0e9))->capture_default_str();
    sub->add_option("--rmin", rmin, "Smallest rich-club size considered")->check(CLI::Range(2, 1 << 30))->capture_default_str();
  };

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Structural indices of a graph");
  add_input(stats_cmd, stats.input);
  stats_cmd->add_flag("--table", stats.table, "Print an aligned text table");
  stats_cmd->add_option("--path-convention", stats.path_convention)
      ->check(CLI::IsMember({"include_self", "exclude_self"}))
      ->capture_default_str();
  stats_cmd->add_option("--betweenness-scale", stats.betweenness_scale)
      ->check(CLI::IsMember({"ordered_pairs", "unordered_pairs"}))
      ->capture_default_str();

  BaselineArgs baseline;
  auto* baseline_cmd = app.add_subcommand("baseline", "Erdos-Renyi ensemble means of the structural indices");
  baseline_cmd->add_option("--n", baseline.n, "Vertex count");
  baseline_cmd->add_option("--p", baseline.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  auto* match = baseline_cmd->add_option("--match", baseline.match.edgelist, "Take n and d from this edge list")
                    ->check(CLI::ExistingFile);
  baseline_cmd->add_option("--registry", baseline.match.registry)->check(CLI::ExistingFile)->needs(match);
  baseline_cmd->add_option("--samples", baseline.samples)->check(CLI::PositiveNumber)->capture_default_str();
  baseline_cmd->add_flag("--connected-only", baseline.connected_only,
                         "Average path metrics over connected samples only");

  RichClubArgs richclub;
  auto* richclub_cmd = app.add_subcommand("richclub", "Degree-ordered density profile and rich-club");
  add_input(richclub_cmd, richclub.input);
  add_club(richclub_cmd, richclub.tau, richclub.rmin);
  richclub_cmd->add_option("--csv", richclub.csv, "Profile CSV (r,label,degree,phi,diam,connected)");
  richclub_cmd->add_option("--centrality-csv", richclub.centrality_csv, "Betweenness/closeness in degree order");

  CommunityArgs communities;
  auto* communities_cmd = app.add_subcommand("communities", "Three partitions and their stable communities");
  add_input(communities_cmd, communities.input);
  add_club(communities_cmd, communities.tau, communities.rmin);
  communities_cmd->add_flag("--exclude-richclub", communities.exclude_richclub);
  communities_cmd->add_option("--algorithms", communities.algorithms)->capture_default_str();
  communities_cmd->add_option("--t", communities.t, "Walktrap walk length")->check(CLI::PositiveNumber)->capture_default_str();
  communities_cmd->add_option("--kmax", communities.kmax, "Largest spectral k (0: ceil(sqrt n) + 2)")->capture_default_str();
  communities_cmd->add_option("--restarts", communities.restarts)->check(CLI::PositiveNumber)->capture_default_str();
  communities_cmd->add_option("--smin", communities.smin)->check(CLI::PositiveNumber)->capture_default_str();
  communities_cmd->add_option("--dot", communities.dot, "Modular summary graph (DOT)");

  HemicycleArgs hemicycle;
  auto* hemicycle_cmd = app.add_subcommand("hemicycle", "Polar layout around the rich-club");
  add_input(hemicycle_cmd, hemicycle.input);
  add_club(hemicycle_cmd, hemicycle.tau, hemicycle.rmin);
  hemicycle_cmd->add_option("--club", hemicycle.club, "Comma-separated labels, or auto")->capture_default_str();
  hemicycle_cmd->add_flag("--closed-neighborhoods", hemicycle.closed);
  hemicycle_cmd->add_option("--svg", hemicycle.svg, "Write the layout as SVG");

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "stats, baseline, richclub, communities and hemicycle in one go");
  add_input(report_cmd, report.input);
  add_club(report_cmd, report.tau, report.rmin);
  report_cmd->add_option("--samples", report.samples)->check(CLI::PositiveNumber)->capture_default_str();
  report_cmd->add_option("--t", report.t)->check(CLI::PositiveNumber)->capture_default_str();
  report_cmd->add_option("--kmax", report.kmax)->capture_default_str();
  report_cmd->add_option("--restarts", report.restarts)->check(CLI::PositiveNumber)->capture_default_str();
  report_cmd->add_option("--smin", report.smin)->check(CLI::PositiveNumber)->capture_default_str();
  report_cmd->add_option("--dot", report.dot);
  report_cmd->add_option("--svg", report.svg);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    json doc;
    if (stats_cmd->parsed())
      doc = run_stats(gl, stats, out);
    else if (baseline_cmd->parsed())
      doc = run_baseline(gl, baseline);
    else if (richclub_cmd->parsed())
      doc = run_richclub(gl, richclub);
    else if (communities_cmd->parsed())
      doc = run_communities(gl, communities);
    else if (hemicycle_cmd->parsed())
      doc = run_hemicycle(gl, hemicycle);
    else
      doc = run_report(gl, report);

    const auto text = doc.dump(2) + "\n";
    if (!gl.json_path.empty())
      write_file(gl.json_path, text);
    else if (!gl.quiet && !(stats_cmd->parsed() && stats.table))
      out << text;
    return kOk;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kAnalysisError;
  }
}

}  // namespace concentra::cli
