#ifndef PUBGRAPH_COMPARE_HPP
#define PUBGRAPH_COMPARE_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "pubgraph/venue_graph.hpp"

namespace pubgraph {

/// Aggregated similarity/gap metrics for k compared venue graphs.
struct ComparisonResult {
  std::size_t k = 0;
  std::vector<std::string> labels;
  std::set<std::string> common_nodes;      // intersection of the node sets
  double r_node = 0.0;                     // |common| / |union|, in [0, 1]
  double r_interaction = 0.0;              // agreeing node pairs, in [0, 1]
  double c_common = 0.0;                   // +infinity when no common node
  std::size_t c_common_excluded = 0;       // union nodes outside the
                                           // evaluated largest component
  double delta_diameter = 0.0;
  std::vector<std::size_t> graph_diameters;
  std::size_t union_diameter = 0;
};

struct CommonCloseness {
  double value = 0.0;  // +infinity when no common node is reachable
  std::size_t excluded_nodes = 0;
};

/// |intersection of node sets| / |union of node sets|. Needs k >= 2
/// non-empty graphs; throws UsageError otherwise.
double ratio_common_nodes(const std::vector<VenueGraph>& graphs);

/// Fraction of unordered node pairs of the union node set that agree
/// across every graph: an edge in all of them, or an edge in none. A pair
/// with a missing endpoint counts as a non-edge in that graph. Needs
/// k >= 2 and a union of >= 2 nodes.
double ratio_common_interactions(const std::vector<VenueGraph>& graphs);

/// Mean, over nodes of the union graph's largest connected component, of
/// the hop distance to the nearest common node. +infinity when the graphs
/// share no node (or none inside the evaluated component); the number of
/// union nodes outside that component is reported alongside.
CommonCloseness closeness_common_nodes(const std::vector<VenueGraph>& graphs);

/// Mean growth of the hop diameter when the graphs are unioned:
/// (1/k) * sum_i (diameter(union) - diameter(g_i)). Each input must be
/// connected and non-empty; the union diameter is taken on the union
/// graph's largest connected component. May be negative.
double avg_increasing_diameter(const std::vector<VenueGraph>& graphs);

/// Runs all four metrics and collects one result row. Labels, when given,
/// must match the number of graphs.
ComparisonResult compare_all(const std::vector<VenueGraph>& graphs,
                             const std::vector<std::string>& labels = {});

namespace detail {
/// ratio_common_interactions without the k >= 2 guard (k = 1 is legal
/// here and always yields 1).
double interaction_ratio_unchecked(const std::vector<VenueGraph>& graphs);
}  // namespace detail

}  // namespace pubgraph

#endif  // PUBGRAPH_COMPARE_HPP
