#ifndef PUBGRAPH_SRC_HOP_GRAPH_HPP
#define PUBGRAPH_SRC_HOP_GRAPH_HPP

// Internal indexed view of a graph for hop-count computations. Labels are
// kept sorted, so node indices and traversal results are deterministic.

#include <string>
#include <vector>

#include "pubgraph/venue_graph.hpp"

namespace pubgraph::detail {

struct HopGraph {
  std::vector<std::string> labels;         // sorted
  std::vector<std::vector<int>> adjacency; // neighbor indices, sorted

  static HopGraph from_venue(const VenueGraph& g);
  static HopGraph from_union(const UnionGraph& g);

  std::size_t size() const { return labels.size(); }

  /// Hop distances from one source; -1 for unreachable nodes.
  std::vector<int> distances(int source) const;

  /// Hop distances to the nearest of several sources.
  std::vector<int> distances(const std::vector<int>& sources) const;

  /// Connected components as sorted index lists. Components are ordered
  /// by size descending, ties by smallest label, so front() is the
  /// largest component under the documented tie-break.
  std::vector<std::vector<int>> components() const;
};

}  // namespace pubgraph::detail

#endif  // PUBGRAPH_SRC_HOP_GRAPH_HPP
