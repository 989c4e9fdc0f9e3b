#include "pubgraph/venue_graph.hpp"

#include <algorithm>

#include "hop_graph.hpp"
#include "pubgraph/error.hpp"

namespace pubgraph {

void VenueGraph::add_node(const std::string& key) { adjacency_[key]; }

void VenueGraph::add_node(const std::string& key, VenueKind kind) {
  adjacency_[key];
  kinds_.emplace(key, kind);
}

void VenueGraph::add_edge(const std::string& u, const std::string& v,
                          int shared_author_count) {
  if (u == v) throw UsageError("self-loop on venue '" + u + "'");
  if (shared_author_count < 1) {
    throw UsageError("shared_author_count must be >= 1");
  }
  adjacency_[u][v] = shared_author_count;
  adjacency_[v][u] = shared_author_count;
}

bool VenueGraph::has_node(const std::string& key) const {
  return adjacency_.contains(key);
}

bool VenueGraph::has_edge(const std::string& u, const std::string& v) const {
  auto it = adjacency_.find(u);
  return it != adjacency_.end() && it->second.contains(v);
}

int VenueGraph::shared_authors(const std::string& u,
                               const std::string& v) const {
  auto it = adjacency_.find(u);
  if (it == adjacency_.end()) return 0;
  auto edge = it->second.find(v);
  return edge == it->second.end() ? 0 : edge->second;
}

double VenueGraph::weight(const std::string& u, const std::string& v) const {
  int count = shared_authors(u, v);
  if (count == 0) throw UsageError("no edge between '" + u + "' and '" + v + "'");
  return weight_of(count);
}

std::size_t VenueGraph::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& [node, neighbors] : adjacency_) {
    degree_sum += neighbors.size();
  }
  return degree_sum / 2;
}

std::vector<std::string> VenueGraph::nodes() const {
  std::vector<std::string> keys;
  keys.reserve(adjacency_.size());
  for (const auto& [key, neighbors] : adjacency_) keys.push_back(key);
  return keys;
}

std::optional<VenueKind> VenueGraph::kind(const std::string& key) const {
  auto it = kinds_.find(key);
  if (it == kinds_.end()) return std::nullopt;
  return it->second;
}

void VenueGraph::set_kind(const std::string& key, VenueKind kind) {
  kinds_[key] = kind;
}

VenueGraph project(const BipartiteGraph& g) {
  VenueGraph projected;
  for (const auto& [venue, kind] : g.venues) projected.add_node(venue, kind);

  std::map<std::string, std::vector<std::string>> venues_of_author;
  for (const auto& [author, venue] : g.edges) {
    venues_of_author[author].push_back(venue);  // sorted: edges are a set
  }

  std::map<std::pair<std::string, std::string>, int> shared;
  for (const auto& [author, venues] : venues_of_author) {
    for (std::size_t i = 0; i < venues.size(); ++i) {
      for (std::size_t j = i + 1; j < venues.size(); ++j) {
        ++shared[{venues[i], venues[j]}];
      }
    }
  }
  for (const auto& [pair, count] : shared) {
    projected.add_edge(pair.first, pair.second, count);
  }
  return projected;
}

VenueGraph largest_component(const VenueGraph& g) {
  if (g.node_count() == 0) return g;
  detail::HopGraph hg = detail::HopGraph::from_venue(g);
  const std::vector<int> keep = hg.components().front();

  VenueGraph component;
  for (int index : keep) {
    const std::string& key = hg.labels[index];
    if (auto kind = g.kind(key)) {
      component.add_node(key, *kind);
    } else {
      component.add_node(key);
    }
  }
  for (int index : keep) {
    const std::string& u = hg.labels[index];
    for (const auto& [v, count] : g.adjacency().at(u)) {
      if (u < v && component.has_node(v)) component.add_edge(u, v, count);
    }
  }
  return component;
}

UnionGraph union_graph(const std::vector<VenueGraph>& graphs) {
  if (graphs.empty()) throw UsageError("union of zero graphs");
  UnionGraph result;
  for (const auto& g : graphs) {
    for (const auto& [u, neighbors] : g.adjacency()) {
      result.nodes.insert(u);
      for (const auto& [v, count] : neighbors) {
        if (u < v) result.edges.emplace(u, v);
      }
    }
  }
  for (const auto& key : graphs.front().nodes()) {
    bool in_all = true;
    for (std::size_t i = 1; i < graphs.size() && in_all; ++i) {
      in_all = graphs[i].has_node(key);
    }
    if (in_all) result.common_nodes.insert(key);
  }
  return result;
}

GraphStats graph_stats(const VenueGraph& g) {
  GraphStats stats;
  stats.node_count = g.node_count();
  stats.edge_count = g.edge_count();
  if (stats.node_count <= 1) return stats;

  detail::HopGraph hg = detail::HopGraph::from_venue(g);
  long long distance_sum = 0;
  std::size_t diameter = 0;
  for (int source = 0; source < static_cast<int>(hg.size()); ++source) {
    std::vector<int> dist = hg.distances(source);
    for (int d : dist) {
      if (d < 0) {
        throw DisconnectedGraphError(
            "distance statistics require a connected graph");
      }
      distance_sum += d;
      diameter = std::max(diameter, static_cast<std::size_t>(d));
    }
  }
  // Every unordered pair was counted once per direction.
  const double n = static_cast<double>(stats.node_count);
  stats.average_distance = static_cast<double>(distance_sum) / (n * (n - 1));
  stats.diameter = diameter;
  return stats;
}

}  // namespace pubgraph
