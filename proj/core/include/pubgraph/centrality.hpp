#ifndef PUBGRAPH_CENTRALITY_HPP
#define PUBGRAPH_CENTRALITY_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>

#include "pubgraph/venue_graph.hpp"

namespace pubgraph {

enum class CentralityMetric { degree, closeness, betweenness };

struct NodeCentrality {
  int degree = 0;
  double closeness = 0.0;
  double betweenness = 0.0;

  friend bool operator==(const NodeCentrality&, const NodeCentrality&) = default;
};

/// Per-node centrality values together with graph means and the m-central
/// node sets (value strictly greater than the mean of its metric).
struct CentralityReport {
  std::map<std::string, NodeCentrality> values;
  double mean_degree = 0.0;
  double mean_closeness = 0.0;
  double mean_betweenness = 0.0;
  std::set<std::string> degree_central;
  std::set<std::string> closeness_central;
  std::set<std::string> betweenness_central;
};

/// Unweighted adjacency count per node.
std::map<std::string, int> degree(const VenueGraph& g);

/// closeness(v) = 1 / sum of shortest-path distances from v to every other
/// node. Edge weights serve as lengths when weighted is true, hop counts
/// otherwise. A single-node graph yields 0 by convention; disconnected
/// input throws DisconnectedGraphError.
std::map<std::string, double> closeness(const VenueGraph& g,
                                        bool weighted = true);

/// betweenness(v) = sum over ordered pairs (s, t), s != v != t, of the
/// fraction of shortest s-t paths passing through v. Both directions
/// count; nothing is halved. Same distance model switch as closeness.
std::map<std::string, double> betweenness(const VenueGraph& g,
                                          bool weighted = true);

CentralityReport centrality_report(const VenueGraph& g, bool weighted = true);

/// Nodes whose metric value strictly exceeds the graph mean.
std::set<std::string> m_central_nodes(const CentralityReport& report,
                                      CentralityMetric metric);

/// TSV rows: venue, degree, closeness, betweenness, and a 0/1 membership
/// flag per m-central set.
void write_centrality_tsv(std::ostream& out, const CentralityReport& report);

namespace detail {
/// Relative tolerance used when comparing weighted path lengths.
inline constexpr double kPathTolerance = 1e-9;
bool path_lengths_equal(double a, double b);
}  // namespace detail

}  // namespace pubgraph

#endif  // PUBGRAPH_CENTRALITY_HPP
