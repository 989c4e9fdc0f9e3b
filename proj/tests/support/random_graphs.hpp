#ifndef PUBGRAPH_TESTS_RANDOM_GRAPHS_HPP
#define PUBGRAPH_TESTS_RANDOM_GRAPHS_HPP

// Seeded generators for the property tests. Shared-author counts are
// drawn from {1, 2, 4}, giving edge weights {1, 0.5, 0.25}.

#include <random>
#include <vector>

#include "pubgraph/bipartite.hpp"
#include "pubgraph/venue_graph.hpp"

namespace pubgraph::testing {

/// Connected graph: random spanning tree plus extra edges.
VenueGraph random_connected_graph(std::mt19937& rng, int min_nodes,
                                  int max_nodes);

/// Connected graph whose node labels are a random subset of a fixed
/// universe, so that several draws overlap partially.
VenueGraph random_connected_graph_on_universe(std::mt19937& rng, int universe,
                                              int min_nodes, int max_nodes);

/// Possibly disconnected graph on a random subset of the universe; each
/// node pair becomes an edge with the given probability.
VenueGraph random_graph_on_universe(std::mt19937& rng, int universe,
                                    int min_nodes, int max_nodes,
                                    double edge_prob);

/// Random bipartite graph with the given maximum part sizes.
BipartiteGraph random_bipartite(std::mt19937& rng, int max_authors,
                                int max_venues);

}  // namespace pubgraph::testing

#endif  // PUBGRAPH_TESTS_RANDOM_GRAPHS_HPP
