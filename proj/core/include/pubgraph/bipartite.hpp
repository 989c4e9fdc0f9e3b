#ifndef PUBGRAPH_BIPARTITE_HPP
#define PUBGRAPH_BIPARTITE_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pubgraph/record.hpp"

namespace pubgraph {

/// Author/venue bipartite graph. Edges are unweighted and deduplicated:
/// several papers by the same author in the same venue yield one edge.
/// Only roster authors become nodes, and every node has degree >= 1.
struct BipartiteGraph {
  std::set<std::string> authors;
  std::map<std::string, VenueKind> venues;  // venue key -> display kind
  std::set<std::pair<std::string, std::string>> edges;  // (author, venue)
  std::size_t publication_count = 0;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

struct BipartiteStats {
  std::size_t author_count = 0;
  std::size_t venue_count = 0;
  std::size_t publication_count = 0;

  friend bool operator==(const BipartiteStats&, const BipartiteStats&) = default;
};

/// Builds the bipartite graph from records already filtered to the time
/// window. publication_count is the number of input records.
BipartiteGraph build_bipartite(const std::vector<PublicationRecord>& records,
                               const Roster& roster);

BipartiteStats bipartite_stats(const BipartiteGraph& g);

}  // namespace pubgraph

#endif  // PUBGRAPH_BIPARTITE_HPP
