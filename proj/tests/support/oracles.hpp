#ifndef PUBGRAPH_TESTS_ORACLES_HPP
#define PUBGRAPH_TESTS_ORACLES_HPP

// Independent reference implementations used to check the library. These
// deliberately share no shortest-path code with the core: distances come
// from iterative relaxation, betweenness from exhaustive enumeration of
// shortest paths, and the interaction ratio from plain set algebra.

#include <map>
#include <string>
#include <vector>

#include "pubgraph/venue_graph.hpp"

namespace pubgraph::testing {

/// All-pairs shortest-path lengths by Floyd-Warshall relaxation, indexed
/// by sorted node order; +infinity for unreachable pairs.
std::vector<std::vector<double>> all_pairs_by_relaxation(const VenueGraph& g,
                                                         bool weighted = true);

/// closeness(v) = 1 / sum of relaxation distances.
std::map<std::string, double> closeness_by_relaxation(const VenueGraph& g,
                                                      bool weighted = true);

/// Betweenness by enumerating every shortest path explicitly (DFS with a
/// length bound). Only feasible for small graphs.
std::map<std::string, double> betweenness_by_enumeration(const VenueGraph& g,
                                                         bool weighted = true);

/// Ratio of common interactions via edge-set intersection/union counts.
double interaction_ratio_by_set_algebra(const std::vector<VenueGraph>& graphs);

}  // namespace pubgraph::testing

#endif  // PUBGRAPH_TESTS_ORACLES_HPP
