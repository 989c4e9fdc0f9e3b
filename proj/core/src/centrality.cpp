// Degree, closeness and betweenness over venue graphs. Closeness and
// betweenness use edge weights as path lengths (small weight = strong
// tie = short distance) unless the unweighted mode is requested.
// Betweenness follows the single-source dependency accumulation scheme
// and sums over ordered (s, t) pairs: both directions count, nothing is
// halved.

#include "pubgraph/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <queue>
#include <vector>

#include "pubgraph/error.hpp"

namespace pubgraph {

namespace detail {

bool path_lengths_equal(double a, double b) {
  return std::abs(a - b) <= kPathTolerance * std::max(a, b);
}

}  // namespace detail

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct IndexedWeighted {
  std::vector<std::string> labels;  // sorted
  std::vector<std::vector<std::pair<int, double>>> adjacency;

  static IndexedWeighted build(const VenueGraph& g, bool weighted) {
    IndexedWeighted iw;
    iw.labels = g.nodes();
    iw.adjacency.resize(iw.labels.size());
    int u = 0;
    for (const auto& [key, neighbors] : g.adjacency()) {
      for (const auto& [v_key, count] : neighbors) {
        auto it = std::lower_bound(iw.labels.begin(), iw.labels.end(), v_key);
        int v = static_cast<int>(it - iw.labels.begin());
        double length = weighted ? VenueGraph::weight_of(count) : 1.0;
        iw.adjacency[u].emplace_back(v, length);
      }
      ++u;
    }
    return iw;
  }
};

/// Single-source shortest paths with path counting. Fills distances,
/// path counts, predecessor lists, and the order in which nodes settled.
struct ShortestPathTree {
  std::vector<double> dist;
  std::vector<double> sigma;  // number of shortest paths from the source
  std::vector<std::vector<int>> predecessors;
  std::vector<int> settled_order;
};

ShortestPathTree single_source(const IndexedWeighted& g, int source) {
  const std::size_t n = g.labels.size();
  ShortestPathTree tree;
  tree.dist.assign(n, kInfinity);
  tree.sigma.assign(n, 0.0);
  tree.predecessors.assign(n, {});
  tree.settled_order.reserve(n);

  tree.dist[source] = 0.0;
  tree.sigma[source] = 1.0;

  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::vector<bool> settled(n, false);
  frontier.emplace(0.0, source);

  while (!frontier.empty()) {
    auto [d, u] = frontier.top();
    frontier.pop();
    if (settled[u]) continue;
    settled[u] = true;
    tree.settled_order.push_back(u);

    for (const auto& [v, length] : g.adjacency[u]) {
      if (settled[v]) continue;
      double candidate = tree.dist[u] + length;
      if (tree.dist[v] != kInfinity &&
          detail::path_lengths_equal(candidate, tree.dist[v])) {
        tree.sigma[v] += tree.sigma[u];
        tree.predecessors[v].push_back(u);
      } else if (candidate < tree.dist[v]) {
        tree.dist[v] = candidate;
        tree.sigma[v] = tree.sigma[u];
        tree.predecessors[v] = {u};
        frontier.emplace(candidate, v);
      }
    }
  }
  return tree;
}

void require_reached(const ShortestPathTree& tree, const char* op) {
  for (double d : tree.dist) {
    if (d == kInfinity) {
      throw DisconnectedGraphError(std::string(op) +
                                   " requires a connected graph");
    }
  }
}

}  // namespace

std::map<std::string, int> degree(const VenueGraph& g) {
  std::map<std::string, int> result;
  for (const auto& [key, neighbors] : g.adjacency()) {
    result[key] = static_cast<int>(neighbors.size());
  }
  return result;
}

std::map<std::string, double> closeness(const VenueGraph& g, bool weighted) {
  std::map<std::string, double> result;
  if (g.node_count() == 0) return result;
  if (g.node_count() == 1) {
    result[g.nodes().front()] = 0.0;  // convention for the trivial graph
    return result;
  }
  IndexedWeighted iw = IndexedWeighted::build(g, weighted);
  for (int source = 0; source < static_cast<int>(iw.labels.size()); ++source) {
    ShortestPathTree tree = single_source(iw, source);
    require_reached(tree, "closeness");
    double total = 0.0;
    for (double d : tree.dist) total += d;
    result[iw.labels[source]] = 1.0 / total;
  }
  return result;
}

std::map<std::string, double> betweenness(const VenueGraph& g, bool weighted) {
  std::map<std::string, double> result;
  const std::size_t n = g.node_count();
  if (n == 0) return result;

  IndexedWeighted iw = IndexedWeighted::build(g, weighted);
  std::vector<double> score(n, 0.0);
  for (int source = 0; source < static_cast<int>(n); ++source) {
    ShortestPathTree tree = single_source(iw, source);
    require_reached(tree, "betweenness");
    std::vector<double> dependency(n, 0.0);
    for (auto it = tree.settled_order.rbegin(); it != tree.settled_order.rend();
         ++it) {
      int w = *it;
      for (int v : tree.predecessors[w]) {
        dependency[v] +=
            tree.sigma[v] / tree.sigma[w] * (1.0 + dependency[w]);
      }
      if (w != source) score[w] += dependency[w];
    }
  }
  for (std::size_t i = 0; i < n; ++i) result[iw.labels[i]] = score[i];
  return result;
}

CentralityReport centrality_report(const VenueGraph& g, bool weighted) {
  CentralityReport report;
  auto degrees = degree(g);
  auto close = closeness(g, weighted);
  auto between = betweenness(g, weighted);
  for (const auto& [key, d] : degrees) {
    NodeCentrality& node = report.values[key];
    node.degree = d;
    node.closeness = close.at(key);
    node.betweenness = between.at(key);
  }
  if (report.values.empty()) return report;

  const double n = static_cast<double>(report.values.size());
  for (const auto& [key, node] : report.values) {
    report.mean_degree += node.degree;
    report.mean_closeness += node.closeness;
    report.mean_betweenness += node.betweenness;
  }
  report.mean_degree /= n;
  report.mean_closeness /= n;
  report.mean_betweenness /= n;

  report.degree_central = m_central_nodes(report, CentralityMetric::degree);
  report.closeness_central =
      m_central_nodes(report, CentralityMetric::closeness);
  report.betweenness_central =
      m_central_nodes(report, CentralityMetric::betweenness);
  return report;
}

std::set<std::string> m_central_nodes(const CentralityReport& report,
                                      CentralityMetric metric) {
  std::set<std::string> central;
  for (const auto& [key, node] : report.values) {
    double value = 0.0;
    double mean = 0.0;
    switch (metric) {
      case CentralityMetric::degree:
        value = node.degree;
        mean = report.mean_degree;
        break;
      case CentralityMetric::closeness:
        value = node.closeness;
        mean = report.mean_closeness;
        break;
      case CentralityMetric::betweenness:
        value = node.betweenness;
        mean = report.mean_betweenness;
        break;
    }
    if (value > mean) central.insert(key);
  }
  return central;
}

void write_centrality_tsv(std::ostream& out, const CentralityReport& report) {
  out << "venue\tdegree\tcloseness\tbetweenness\tdegree_central\t"
         "closeness_central\tbetweenness_central\n";
  char buffer[64];
  for (const auto& [key, node] : report.values) {
    out << key << '\t' << node.degree << '\t';
    std::snprintf(buffer, sizeof buffer, "%.6g", node.closeness);
    out << buffer << '\t';
    std::snprintf(buffer, sizeof buffer, "%.6g", node.betweenness);
    out << buffer << '\t' << report.degree_central.count(key) << '\t'
        << report.closeness_central.count(key) << '\t'
        << report.betweenness_central.count(key) << '\n';
  }
}

}  // namespace pubgraph
