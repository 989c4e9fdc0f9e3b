// pubgraph CLI: ingestion -> graphs -> metrics -> reports.
//
// Subcommands: stats, centrality, compare, export. Exit codes: 0 success,
// 2 usage, 3 parse, 4 I/O, 5 disconnected graph.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pubgraph/bipartite.hpp"
#include "pubgraph/centrality.hpp"
#include "pubgraph/compare.hpp"
#include "pubgraph/error.hpp"
#include "pubgraph/graph_io.hpp"
#include "pubgraph/record.hpp"
#include "pubgraph/venue_graph.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitIo = 4;
constexpr int kExitDisconnected = 5;

using namespace pubgraph;

struct Options {
  std::vector<std::string> records;
  std::string input_format = "canonical";
  std::vector<std::string> rosters;
  std::vector<std::string> labels;
  std::string alias_path;
  std::vector<std::string> windows;
  std::string output_format;
  std::string out_path;
  bool skip_component_filter = false;
  bool unweighted = false;
  std::string stage = "projection";
  std::string from_json;
};

std::string fixed3(double value) {
  if (std::isinf(value)) return "inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3f", value);
  return buffer;
}

std::string sig6(double value) {
  if (std::isinf(value)) return "inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

TimeWindow parse_window(const std::string& raw) {
  const auto fail = [&]() -> TimeWindow {
    throw UsageError("bad --window '" + raw + "': expected YEAR or START:END");
  };
  auto to_year = [&](const std::string& text) {
    if (text.empty() ||
        text.find_first_not_of("0123456789") != std::string::npos) {
      fail();
    }
    try {
      return std::stoi(text);
    } catch (const std::exception&) {
      fail();
    }
    return 0;
  };
  TimeWindow window;
  auto colon = raw.find(':');
  if (colon == std::string::npos) {
    window.start_year = window.end_year = to_year(raw);
  } else {
    window.start_year = to_year(raw.substr(0, colon));
    window.end_year = to_year(raw.substr(colon + 1));
  }
  if (window.start_year > window.end_year) {
    throw UsageError("bad --window '" + raw + "': start year after end year");
  }
  if (window.start_year <= 0) {
    throw UsageError("bad --window '" + raw + "': years must be positive");
  }
  return window;
}

std::string window_label(const TimeWindow& w) {
  if (w.start_year == w.end_year) return std::to_string(w.start_year);
  return std::to_string(w.start_year) + ":" + std::to_string(w.end_year);
}

RecordFormat input_format(const Options& o) {
  if (o.input_format == "canonical") return RecordFormat::canonical;
  if (o.input_format == "dblp_xml") return RecordFormat::dblp_xml;
  throw UsageError("unknown --input-format '" + o.input_format + "'");
}

std::vector<PublicationRecord> load_records(const Options& o) {
  if (o.records.empty()) throw UsageError("at least one --records file is required");
  RecordFormat format = input_format(o);
  std::vector<PublicationRecord> all;
  for (const auto& path : o.records) {
    ParseResult parsed = parse_records_file(path, format);
    for (const auto& warning : parsed.warnings) {
      std::cerr << "warning: " << path << ":" << warning.line << ": "
                << warning.message << "\n";
    }
    all.insert(all.end(), parsed.records.begin(), parsed.records.end());
  }
  if (!o.alias_path.empty()) {
    all = apply_aliases(std::move(all), load_alias_map(o.alias_path));
  }
  return all;
}

std::vector<Roster> load_rosters(const Options& o, std::size_t min_count,
                                 std::size_t max_count) {
  if (o.rosters.size() < min_count || o.rosters.size() > max_count) {
    if (min_count == max_count) {
      throw UsageError("exactly " + std::to_string(min_count) +
                       " --roster file(s) required");
    }
    throw UsageError("at least " + std::to_string(min_count) +
                     " --roster files required");
  }
  if (!o.labels.empty() && o.labels.size() != o.rosters.size()) {
    throw UsageError("--label count must match --roster count");
  }
  std::vector<Roster> rosters;
  std::vector<std::string> used;
  for (std::size_t i = 0; i < o.rosters.size(); ++i) {
    std::string label = i < o.labels.size()
                            ? o.labels[i]
                            : std::filesystem::path(o.rosters[i]).stem().string();
    if (std::find(used.begin(), used.end(), label) != used.end()) {
      throw UsageError("duplicate group label '" + label + "'");
    }
    used.push_back(label);
    rosters.push_back(load_roster(o.rosters[i], label));
  }
  return rosters;
}

std::vector<TimeWindow> load_windows(const Options& o) {
  if (o.windows.empty()) throw UsageError("at least one --window is required");
  std::vector<TimeWindow> windows;
  for (const auto& raw : o.windows) windows.push_back(parse_window(raw));
  return windows;
}

/// filter -> bipartite -> projection (largest component unless skipped).
struct GroupWindowGraphs {
  BipartiteGraph bipartite;
  VenueGraph projection;
};

GroupWindowGraphs build_graphs(const std::vector<PublicationRecord>& records,
                               const Roster& roster, const TimeWindow& window,
                               bool skip_component_filter) {
  GroupWindowGraphs out;
  auto kept = filter_records(records, roster, window);
  out.bipartite = build_bipartite(kept, roster);
  out.projection = project(out.bipartite);
  if (!skip_component_filter) {
    out.projection = largest_component(out.projection);
  }
  return out;
}

/// Writes to the --out file or stdout, and fails loudly on short writes.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) : path_(path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  void finish() {
    stream().flush();
    if (!stream()) throw IoError("failed writing output" +
                                 (path_.empty() ? "" : ": " + path_));
  }

 private:
  std::string path_;
  std::ofstream file_;
};

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  auto write_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) {
        out << std::string(widths[c] - row[c].size() + 2, ' ');
      }
    }
    out << "\n";
  };
  write_row(header);
  for (const auto& row : rows) write_row(row);
}

void write_tsv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t c = 0; c < header.size(); ++c) {
    out << header[c] << (c + 1 < header.size() ? '\t' : '\n');
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c] << (c + 1 < row.size() ? '\t' : '\n');
    }
  }
}

std::string display_name(const VenueGraph& g, const std::string& key) {
  auto kind = g.kind(key);
  if (kind && *kind == VenueKind::journal) return key + "(J)";
  return key;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += parts[i];
  }
  return out;
}

void check_output_format(const Options& o,
                         const std::vector<std::string>& allowed) {
  if (std::find(allowed.begin(), allowed.end(), o.output_format) ==
      allowed.end()) {
    std::string joined;
    for (const auto& f : allowed) joined += (joined.empty() ? "" : "|") + f;
    throw UsageError("--output-format must be one of " + joined);
  }
}

int run_stats(const Options& o) {
  auto records = load_records(o);
  auto rosters = load_rosters(o, 1, SIZE_MAX);
  auto windows = load_windows(o);
  check_output_format(o, {"tsv", "table"});

  const std::vector<std::string> header{"group",  "window",      "authors",
                                        "venues", "publications", "nodes",
                                        "edges",  "avg_distance", "diameter"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& roster : rosters) {
    for (const auto& window : windows) {
      auto graphs = build_graphs(records, roster, window,
                                 o.skip_component_filter);
      BipartiteStats bs = bipartite_stats(graphs.bipartite);
      if (bs.publication_count == 0) {
        std::cerr << "warning: group '" << roster.group_name << "' window "
                  << window_label(window) << ": no matching records\n";
      }
      GraphStats gs = graph_stats(graphs.projection);
      rows.push_back({roster.group_name, window_label(window),
                      std::to_string(bs.author_count),
                      std::to_string(bs.venue_count),
                      std::to_string(bs.publication_count),
                      std::to_string(gs.node_count),
                      std::to_string(gs.edge_count),
                      fixed3(gs.average_distance),
                      std::to_string(gs.diameter)});
    }
  }

  OutputTarget target(o.out_path);
  if (o.output_format == "tsv") {
    write_tsv(target.stream(), header, rows);
  } else {
    write_table(target.stream(), header, rows);
  }
  target.finish();
  return 0;
}

int run_centrality(const Options& o) {
  auto records = load_records(o);
  auto rosters = load_rosters(o, 1, 1);
  auto windows = load_windows(o);
  check_output_format(o, {"tsv", "table"});

  OutputTarget target(o.out_path);
  std::ostream& out = target.stream();
  for (std::size_t wi = 0; wi < windows.size(); ++wi) {
    const TimeWindow& window = windows[wi];
    auto graphs = build_graphs(records, rosters.front(), window,
                               o.skip_component_filter);
    const VenueGraph& g = graphs.projection;
    if (g.node_count() == 0) {
      std::cerr << "warning: group '" << rosters.front().group_name
                << "' window " << window_label(window)
                << ": empty graph, skipping\n";
      continue;
    }
    CentralityReport report = centrality_report(g, !o.unweighted);

    if (o.output_format == "tsv") {
      if (windows.size() > 1) {
        out << "# group=" << rosters.front().group_name
            << " window=" << window_label(window) << "\n";
      }
      write_centrality_tsv(out, report);
      continue;
    }

    if (wi > 0) out << "\n";
    out << "group " << rosters.front().group_name << ", window "
        << window_label(window) << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, node] : report.values) {
      rows.push_back({display_name(g, key), std::to_string(node.degree),
                      sig6(node.closeness), sig6(node.betweenness)});
    }
    write_table(out, {"venue", "degree", "closeness", "betweenness"}, rows);
    auto listing = [&](const std::set<std::string>& nodes) {
      if (nodes.empty()) return std::string("(none)");
      std::vector<std::string> shown;
      for (const auto& key : nodes) shown.push_back(display_name(g, key));
      return join(shown);
    };
    out << "degree-central: " << listing(report.degree_central) << "\n";
    out << "closeness-central: " << listing(report.closeness_central) << "\n";
    out << "betweenness-central: " << listing(report.betweenness_central)
        << "\n";
  }
  target.finish();
  return 0;
}

int run_compare(const Options& o) {
  auto records = load_records(o);
  auto rosters = load_rosters(o, 2, SIZE_MAX);
  auto windows = load_windows(o);
  check_output_format(o, {"tsv", "table", "json"});

  std::vector<std::string> labels;
  for (const auto& roster : rosters) labels.push_back(roster.group_name);

  const std::vector<std::string> header{"window",        "common_nodes",
                                        "r_node",        "r_interaction",
                                        "c_common",      "delta_diameter",
                                        "excluded_nodes"};
  std::vector<std::vector<std::string>> rows;
  nlohmann::json json_rows = nlohmann::json::array();

  for (const auto& window : windows) {
    std::vector<VenueGraph> graphs;
    for (const auto& roster : rosters) {
      graphs.push_back(
          build_graphs(records, roster, window, o.skip_component_filter)
              .projection);
    }
    ComparisonResult result = compare_all(graphs, labels);

    std::vector<std::string> common(result.common_nodes.begin(),
                                    result.common_nodes.end());
    rows.push_back({window_label(window), join(common), fixed3(result.r_node),
                    fixed3(result.r_interaction), fixed3(result.c_common),
                    fixed3(result.delta_diameter),
                    std::to_string(result.c_common_excluded)});

    nlohmann::json row;
    row["window"] = window_label(window);
    row["labels"] = result.labels;
    row["common_nodes"] = common;
    row["r_node"] = result.r_node;
    row["r_interaction"] = result.r_interaction;
    if (std::isinf(result.c_common)) {
      row["c_common"] = "inf";
    } else {
      row["c_common"] = result.c_common;
    }
    row["c_common_excluded_nodes"] = result.c_common_excluded;
    row["delta_diameter"] = result.delta_diameter;
    row["graph_diameters"] = result.graph_diameters;
    row["union_diameter"] = result.union_diameter;
    json_rows.push_back(std::move(row));
  }

  OutputTarget target(o.out_path);
  if (o.output_format == "tsv") {
    write_tsv(target.stream(), header, rows);
  } else if (o.output_format == "table") {
    write_table(target.stream(), header, rows);
  } else {
    target.stream() << json_rows.dump(2) << "\n";
  }
  target.finish();
  return 0;
}

int run_export(const Options& o) {
  check_output_format(o, {"dot", "json"});

  OutputTarget target(o.out_path);
  if (!o.from_json.empty()) {
    if (!o.records.empty() || !o.rosters.empty()) {
      throw UsageError("--from-json cannot be combined with --records/--roster");
    }
    std::ifstream in(o.from_json, std::ios::binary);
    if (!in) throw IoError("cannot open graph file: " + o.from_json);
    GraphDocument doc = read_graph_json(in);
    if (std::holds_alternative<VenueGraph>(doc)) {
      const auto& g = std::get<VenueGraph>(doc);
      if (o.output_format == "dot") {
        write_dot(target.stream(), g);
      } else {
        write_json(target.stream(), g);
      }
    } else {
      if (o.output_format == "dot") {
        throw UsageError("DOT export is defined for venue graphs only");
      }
      write_json(target.stream(), std::get<BipartiteGraph>(doc));
    }
    target.finish();
    return 0;
  }

  auto records = load_records(o);
  auto rosters = load_rosters(o, 1, 1);
  auto windows = load_windows(o);
  if (windows.size() != 1) {
    throw UsageError("export takes exactly one --window");
  }
  auto graphs = build_graphs(records, rosters.front(), windows.front(),
                             o.skip_component_filter);
  if (o.stage == "bipartite") {
    if (o.output_format == "dot") {
      throw UsageError("DOT export is defined for venue graphs only");
    }
    write_json(target.stream(), graphs.bipartite);
  } else if (o.stage == "projection") {
    if (o.output_format == "dot") {
      write_dot(target.stream(), graphs.projection);
    } else {
      write_json(target.stream(), graphs.projection);
    }
  } else {
    throw UsageError("--stage must be bipartite or projection");
  }
  target.finish();
  return 0;
}

void add_record_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--records", o.records,
                  "Publication record file(s), concatenated in order");
  cmd->add_option("--input-format", o.input_format,
                  "Record file format: canonical|dblp_xml (default canonical)");
  cmd->add_option("--roster", o.rosters, "Roster file (one name per line)");
  cmd->add_option("--label", o.labels,
                  "Group label per roster (default: roster file stem)");
  cmd->add_option("--alias", o.alias_path,
                  "Venue alias map (raw<TAB>canonical per line)");
  cmd->add_option("--window", o.windows,
                  "Time window YEAR or START:END; may repeat");
  cmd->add_flag("--skip-component-filter", o.skip_component_filter,
                "Keep the whole projection instead of its largest component");
  cmd->add_option("-o,--out", o.out_path, "Output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pubgraph: journal/proceeding graphs from publication records, "
      "centrality profiles, and group-to-group similarity/gap metrics"};
  app.require_subcommand(1);

  Options stats_opts, centrality_opts, compare_opts, export_opts;

  CLI::App* stats = app.add_subcommand(
      "stats", "Publication and projected-graph summaries per group/window");
  add_record_options(stats, stats_opts);
  stats_opts.output_format = "table";
  stats->add_option("--output-format", stats_opts.output_format,
                    "tsv|table (default table)");

  CLI::App* centrality = app.add_subcommand(
      "centrality", "Degree/closeness/betweenness and m-central venues");
  add_record_options(centrality, centrality_opts);
  centrality_opts.output_format = "table";
  centrality->add_option("--output-format", centrality_opts.output_format,
                         "tsv|table (default table)");
  centrality->add_flag("--unweighted", centrality_opts.unweighted,
                       "Use hop counts instead of edge weights as lengths");

  CLI::App* compare = app.add_subcommand(
      "compare", "Similarity/gap metrics between two or more groups");
  add_record_options(compare, compare_opts);
  compare_opts.output_format = "table";
  compare->add_option("--output-format", compare_opts.output_format,
                      "tsv|table|json (default table)");

  CLI::App* exporter =
      app.add_subcommand("export", "Write a graph as DOT or JSON");
  add_record_options(exporter, export_opts);
  export_opts.output_format = "json";
  exporter->add_option("--output-format", export_opts.output_format,
                       "dot|json (default json)");
  exporter->add_option("--stage", export_opts.stage,
                       "Graph to export: bipartite|projection");
  exporter->add_option("--from-json", export_opts.from_json,
                       "Re-export a previously exported JSON graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (stats->parsed()) return run_stats(stats_opts);
    if (centrality->parsed()) return run_centrality(centrality_opts);
    if (compare->parsed()) return run_compare(compare_opts);
    if (exporter->parsed()) return run_export(export_opts);
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DisconnectedGraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisconnected;
  }
}
