#ifndef PUBGRAPH_VENUE_GRAPH_HPP
#define PUBGRAPH_VENUE_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pubgraph/bipartite.hpp"
#include "pubgraph/record.hpp"

namespace pubgraph {

/// Weighted undirected graph over venue keys. The weight of an edge is
/// derived, never stored: weight = 1 / shared_author_count. No self-loops.
class VenueGraph {
 public:
  void add_node(const std::string& key);
  void add_node(const std::string& key, VenueKind kind);

  /// Adds an undirected edge; missing endpoints are created. Throws
  /// UsageError on self-loops or shared_author_count < 1.
  void add_edge(const std::string& u, const std::string& v,
                int shared_author_count);

  bool has_node(const std::string& key) const;
  bool has_edge(const std::string& u, const std::string& v) const;

  /// Number of shared authors behind an edge; 0 when the edge is absent.
  int shared_authors(const std::string& u, const std::string& v) const;

  static double weight_of(int shared_author_count) {
    return 1.0 / shared_author_count;
  }
  /// Edge weight, 1/shared_authors. Throws UsageError for absent edges.
  double weight(const std::string& u, const std::string& v) const;

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;

  /// Sorted node keys.
  std::vector<std::string> nodes() const;

  /// node -> (neighbor -> shared_author_count); every node has an entry.
  const std::map<std::string, std::map<std::string, int>>& adjacency() const {
    return adjacency_;
  }

  std::optional<VenueKind> kind(const std::string& key) const;
  void set_kind(const std::string& key, VenueKind kind);

  friend bool operator==(const VenueGraph&, const VenueGraph&) = default;

 private:
  std::map<std::string, std::map<std::string, int>> adjacency_;
  std::map<std::string, VenueKind> kinds_;  // display metadata, may be sparse
};

/// Union of several venue graphs: node and edge unions plus the set of
/// nodes common to every input. Edges are unweighted; only connectivity
/// and hop distances are ever read from a union graph.
struct UnionGraph {
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> edges;  // first < second
  std::set<std::string> common_nodes;

  friend bool operator==(const UnionGraph&, const UnionGraph&) = default;
};

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double average_distance = 0.0;  // mean hop count over unordered pairs
  std::size_t diameter = 0;       // max hop count

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// J-projection of a bipartite graph: one node per venue, an edge between
/// two venues iff they share at least one author, shared_author_count =
/// number of such authors. Venues connected to nothing stay as isolated
/// nodes.
VenueGraph project(const BipartiteGraph& g);

/// Induced subgraph on the largest connected node set. Size ties go to the
/// component containing the lexicographically smallest key.
VenueGraph largest_component(const VenueGraph& g);

/// Requires at least one input graph; throws UsageError otherwise.
UnionGraph union_graph(const std::vector<VenueGraph>& graphs);

/// Hop-count distance statistics of a connected graph. Throws
/// DisconnectedGraphError on disconnected input.
GraphStats graph_stats(const VenueGraph& g);

}  // namespace pubgraph

#endif  // PUBGRAPH_VENUE_GRAPH_HPP
