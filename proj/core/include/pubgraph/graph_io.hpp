#ifndef PUBGRAPH_GRAPH_IO_HPP
#define PUBGRAPH_GRAPH_IO_HPP

#include <iosfwd>
#include <variant>

#include "pubgraph/bipartite.hpp"
#include "pubgraph/venue_graph.hpp"

namespace pubgraph {

/// DOT export of a venue graph: undirected, node id = venue key, edge
/// attribute `weight`, edge label = shared author count. Output is
/// byte-stable: nodes and edges appear in sorted order.
void write_dot(std::ostream& out, const VenueGraph& g);

/// JSON export: {"edges": [...], "nodes": [{"id", "kind"}, ...]}. Venue
/// graph edges carry source/target/weight/shared_authors; bipartite edges
/// carry source (author) and target (venue) only. Byte-stable.
void write_json(std::ostream& out, const VenueGraph& g);
void write_json(std::ostream& out, const BipartiteGraph& g);

using GraphDocument = std::variant<VenueGraph, BipartiteGraph>;

/// Reads a graph JSON document back. A document whose nodes are all of
/// kind "venue" yields a VenueGraph; one with "author" nodes yields a
/// BipartiteGraph. Structural problems (unknown kinds, dangling edge
/// endpoints, self-loops, weight not matching 1/shared_authors within
/// 1e-12) throw ParseError.
GraphDocument read_graph_json(std::istream& in);

}  // namespace pubgraph

#endif  // PUBGRAPH_GRAPH_IO_HPP
