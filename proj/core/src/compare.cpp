// The four similarity/gap metrics over k projected venue graphs.

#include "pubgraph/compare.hpp"

#include <algorithm>
#include <limits>

#include "hop_graph.hpp"
#include "pubgraph/error.hpp"

namespace pubgraph {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

void require_at_least_two(const std::vector<VenueGraph>& graphs) {
  if (graphs.size() < 2) {
    throw UsageError("comparison needs at least two graphs");
  }
}

/// Hop diameter of a connected venue graph; empty input is a UsageError.
std::size_t hop_diameter(const VenueGraph& g, std::size_t graph_index) {
  if (g.node_count() == 0) {
    throw UsageError("graph " + std::to_string(graph_index + 1) + " is empty");
  }
  if (g.node_count() == 1) return 0;
  detail::HopGraph hg = detail::HopGraph::from_venue(g);
  std::size_t diameter = 0;
  for (int source = 0; source < static_cast<int>(hg.size()); ++source) {
    for (int d : hg.distances(source)) {
      if (d < 0) {
        throw DisconnectedGraphError(
            "graph " + std::to_string(graph_index + 1) +
            " is disconnected; apply largest_component first");
      }
      diameter = std::max(diameter, static_cast<std::size_t>(d));
    }
  }
  return diameter;
}

/// Diameter of the union graph's largest connected component.
std::size_t union_diameter(const UnionGraph& u) {
  detail::HopGraph hg = detail::HopGraph::from_union(u);
  if (hg.size() == 0) throw UsageError("union graph is empty");
  const std::vector<int> component = hg.components().front();
  std::size_t diameter = 0;
  for (int source : component) {
    std::vector<int> dist = hg.distances(source);
    for (int node : component) {
      diameter = std::max(diameter, static_cast<std::size_t>(dist[node]));
    }
  }
  return diameter;
}

struct DiameterSummary {
  std::vector<std::size_t> graph_diameters;
  std::size_t union_diameter = 0;
  double delta = 0.0;
};

DiameterSummary diameter_summary(const std::vector<VenueGraph>& graphs) {
  DiameterSummary summary;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    summary.graph_diameters.push_back(hop_diameter(graphs[i], i));
  }
  summary.union_diameter = union_diameter(union_graph(graphs));
  long long difference_sum = 0;
  for (std::size_t d : summary.graph_diameters) {
    difference_sum += static_cast<long long>(summary.union_diameter) -
                      static_cast<long long>(d);
  }
  summary.delta =
      static_cast<double>(difference_sum) / static_cast<double>(graphs.size());
  return summary;
}

}  // namespace

double ratio_common_nodes(const std::vector<VenueGraph>& graphs) {
  require_at_least_two(graphs);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].node_count() == 0) {
      throw UsageError("graph " + std::to_string(i + 1) + " is empty");
    }
  }
  UnionGraph u = union_graph(graphs);
  return static_cast<double>(u.common_nodes.size()) /
         static_cast<double>(u.nodes.size());
}

namespace detail {

double interaction_ratio_unchecked(const std::vector<VenueGraph>& graphs) {
  if (graphs.empty()) throw UsageError("comparison needs at least one graph");
  UnionGraph u = union_graph(graphs);
  const std::vector<std::string> nodes(u.nodes.begin(), u.nodes.end());
  const std::size_t n = nodes.size();
  if (n < 2) {
    throw UsageError("interaction ratio needs at least two union nodes");
  }

  // A pair agrees when it is an edge in every graph or an edge in none;
  // a missing endpoint means "no edge" in that graph.
  long long agreeing = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool in_all = true;
      bool in_none = true;
      for (const auto& g : graphs) {
        if (g.has_edge(nodes[i], nodes[j])) {
          in_none = false;
        } else {
          in_all = false;
        }
      }
      if (in_all || in_none) ++agreeing;
    }
  }
  const long long pair_count = static_cast<long long>(n) * (n - 1) / 2;
  return static_cast<double>(agreeing) / static_cast<double>(pair_count);
}

}  // namespace detail

double ratio_common_interactions(const std::vector<VenueGraph>& graphs) {
  require_at_least_two(graphs);
  return detail::interaction_ratio_unchecked(graphs);
}

CommonCloseness closeness_common_nodes(const std::vector<VenueGraph>& graphs) {
  require_at_least_two(graphs);
  UnionGraph u = union_graph(graphs);
  if (u.common_nodes.empty()) return {kInfinity, 0};

  detail::HopGraph hg = detail::HopGraph::from_union(u);
  const std::vector<int> component = hg.components().front();
  CommonCloseness result;
  result.excluded_nodes = hg.size() - component.size();

  std::vector<int> sources;
  for (int node : component) {
    if (u.common_nodes.contains(hg.labels[node])) sources.push_back(node);
  }
  if (sources.empty()) {
    // Common nodes exist but none lies in the evaluated component.
    result.value = kInfinity;
    return result;
  }

  std::vector<int> dist = hg.distances(sources);
  long long total = 0;
  for (int node : component) total += dist[node];
  result.value =
      static_cast<double>(total) / static_cast<double>(component.size());
  return result;
}

double avg_increasing_diameter(const std::vector<VenueGraph>& graphs) {
  require_at_least_two(graphs);
  return diameter_summary(graphs).delta;
}

ComparisonResult compare_all(const std::vector<VenueGraph>& graphs,
                             const std::vector<std::string>& labels) {
  require_at_least_two(graphs);
  if (!labels.empty() && labels.size() != graphs.size()) {
    throw UsageError("label count does not match graph count");
  }

  ComparisonResult result;
  result.k = graphs.size();
  result.labels = labels;
  result.r_node = ratio_common_nodes(graphs);
  result.r_interaction = detail::interaction_ratio_unchecked(graphs);
  CommonCloseness closeness = closeness_common_nodes(graphs);
  result.c_common = closeness.value;
  result.c_common_excluded = closeness.excluded_nodes;
  DiameterSummary diameters = diameter_summary(graphs);
  result.graph_diameters = diameters.graph_diameters;
  result.union_diameter = diameters.union_diameter;
  result.delta_diameter = diameters.delta;
  result.common_nodes = union_graph(graphs).common_nodes;
  return result;
}

}  // namespace pubgraph
