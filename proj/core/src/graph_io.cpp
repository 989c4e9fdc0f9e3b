// DOT and JSON serialization of graphs. Output is byte-stable: nodes and
// edges are emitted in sorted order, numbers through one formatter.

#include "pubgraph/graph_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "pubgraph/error.hpp"

namespace pubgraph {

using nlohmann::json;

namespace {

std::string dot_escape(const std::string& id) {
  std::string out;
  out.reserve(id.size() + 2);
  out += '"';
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string short_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

}  // namespace

void write_dot(std::ostream& out, const VenueGraph& g) {
  out << "graph venues {\n";
  for (const auto& key : g.nodes()) {
    out << "  " << dot_escape(key) << ";\n";
  }
  for (const auto& [u, neighbors] : g.adjacency()) {
    for (const auto& [v, count] : neighbors) {
      if (u < v) {
        out << "  " << dot_escape(u) << " -- " << dot_escape(v) << " [weight="
            << short_double(VenueGraph::weight_of(count)) << ", label=\""
            << count << "\"];\n";
      }
    }
  }
  out << "}\n";
}

void write_json(std::ostream& out, const VenueGraph& g) {
  json doc;
  doc["nodes"] = json::array();
  doc["edges"] = json::array();
  for (const auto& key : g.nodes()) {
    doc["nodes"].push_back({{"id", key}, {"kind", "venue"}});
  }
  for (const auto& [u, neighbors] : g.adjacency()) {
    for (const auto& [v, count] : neighbors) {
      if (u < v) {
        doc["edges"].push_back({{"source", u},
                                {"target", v},
                                {"weight", VenueGraph::weight_of(count)},
                                {"shared_authors", count}});
      }
    }
  }
  out << doc.dump(2) << '\n';
}

void write_json(std::ostream& out, const BipartiteGraph& g) {
  json doc;
  doc["nodes"] = json::array();
  doc["edges"] = json::array();
  for (const auto& author : g.authors) {
    doc["nodes"].push_back({{"id", author}, {"kind", "author"}});
  }
  for (const auto& [venue, kind] : g.venues) {
    doc["nodes"].push_back({{"id", venue}, {"kind", "venue"}});
  }
  for (const auto& [author, venue] : g.edges) {
    doc["edges"].push_back({{"source", author}, {"target", venue}});
  }
  out << doc.dump(2) << '\n';
}

namespace {

[[noreturn]] void bad_graph(const std::string& message) {
  throw ParseError("graph document: " + message);
}

GraphDocument graph_from_json(const json& doc) {
  if (!doc.is_object()) bad_graph("top level is not an object");
  auto nodes = doc.find("nodes");
  auto edges = doc.find("edges");
  if (nodes == doc.end() || !nodes->is_array()) bad_graph("missing 'nodes' array");
  if (edges == doc.end() || !edges->is_array()) bad_graph("missing 'edges' array");

  std::set<std::string> authors;
  std::set<std::string> venues;
  for (const auto& node : *nodes) {
    if (!node.is_object() || !node.contains("id") || !node["id"].is_string() ||
        !node.contains("kind") || !node["kind"].is_string()) {
      bad_graph("node entries need string 'id' and 'kind'");
    }
    std::string id = node["id"].get<std::string>();
    std::string kind = node["kind"].get<std::string>();
    if (kind == "author") {
      authors.insert(std::move(id));
    } else if (kind == "venue") {
      venues.insert(std::move(id));
    } else {
      bad_graph("unknown node kind '" + kind + "'");
    }
  }

  const auto edge_strings = [](const json& edge, const char* field) {
    if (!edge.contains(field) || !edge[field].is_string()) {
      bad_graph(std::string("edge entries need string '") + field + "'");
    }
    return edge[field].get<std::string>();
  };

  if (authors.empty()) {
    VenueGraph g;
    for (const auto& venue : venues) g.add_node(venue);
    for (const auto& edge : *edges) {
      std::string source = edge_strings(edge, "source");
      std::string target = edge_strings(edge, "target");
      if (!venues.contains(source) || !venues.contains(target)) {
        bad_graph("edge endpoint missing from 'nodes'");
      }
      if (source == target) bad_graph("self-loop on '" + source + "'");
      if (!edge.contains("shared_authors") ||
          !edge["shared_authors"].is_number_integer()) {
        bad_graph("venue edges need an integer 'shared_authors'");
      }
      int shared = edge["shared_authors"].get<int>();
      if (shared < 1) bad_graph("'shared_authors' must be >= 1");
      if (edge.contains("weight")) {
        if (!edge["weight"].is_number()) bad_graph("'weight' must be a number");
        double weight = edge["weight"].get<double>();
        if (std::abs(weight - VenueGraph::weight_of(shared)) > 1e-12) {
          bad_graph("edge weight does not equal 1/shared_authors");
        }
      }
      g.add_edge(source, target, shared);
    }
    return g;
  }

  BipartiteGraph g;
  g.authors = authors;
  for (const auto& venue : venues) {
    // Kind metadata is not part of the wire format.
    g.venues.emplace(venue, VenueKind::journal);
  }
  for (const auto& edge : *edges) {
    std::string source = edge_strings(edge, "source");
    std::string target = edge_strings(edge, "target");
    if (!authors.contains(source) || !venues.contains(target)) {
      bad_graph("bipartite edges run author -> venue");
    }
    g.edges.emplace(std::move(source), std::move(target));
  }
  return g;
}

}  // namespace

GraphDocument read_graph_json(std::istream& in) {
  json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ParseError("graph document: invalid JSON");
  return graph_from_json(doc);
}

}  // namespace pubgraph
