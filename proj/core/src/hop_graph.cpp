#include "hop_graph.hpp"

#include <algorithm>
#include <queue>

namespace pubgraph::detail {

namespace {

int index_of(const std::vector<std::string>& labels, const std::string& key) {
  auto it = std::lower_bound(labels.begin(), labels.end(), key);
  return static_cast<int>(it - labels.begin());
}

}  // namespace

HopGraph HopGraph::from_venue(const VenueGraph& g) {
  HopGraph hg;
  hg.labels = g.nodes();
  hg.adjacency.resize(hg.labels.size());
  for (const auto& [u, neighbors] : g.adjacency()) {
    int ui = index_of(hg.labels, u);
    for (const auto& [v, count] : neighbors) {
      hg.adjacency[ui].push_back(index_of(hg.labels, v));
    }
  }
  return hg;
}

HopGraph HopGraph::from_union(const UnionGraph& g) {
  HopGraph hg;
  hg.labels.assign(g.nodes.begin(), g.nodes.end());
  hg.adjacency.resize(hg.labels.size());
  for (const auto& [u, v] : g.edges) {
    int ui = index_of(hg.labels, u);
    int vi = index_of(hg.labels, v);
    hg.adjacency[ui].push_back(vi);
    hg.adjacency[vi].push_back(ui);
  }
  for (auto& neighbors : hg.adjacency) {
    std::sort(neighbors.begin(), neighbors.end());
  }
  return hg;
}

std::vector<int> HopGraph::distances(int source) const {
  return distances(std::vector<int>{source});
}

std::vector<int> HopGraph::distances(const std::vector<int>& sources) const {
  std::vector<int> dist(size(), -1);
  std::queue<int> queue;
  for (int s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push(s);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int v : adjacency[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> HopGraph::components() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(size(), false);
  for (int start = 0; start < static_cast<int>(size()); ++start) {
    if (seen[start]) continue;
    std::vector<int> component;
    std::queue<int> queue;
    seen[start] = true;
    queue.push(start);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      component.push_back(u);
      for (int v : adjacency[u]) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push(v);
        }
      }
    }
    std::sort(component.begin(), component.end());
    result.push_back(std::move(component));
  }
  // Labels are sorted, so comparing front indices is the lexicographic
  // tie-break on the smallest contained key.
  std::stable_sort(result.begin(), result.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  return result;
}

}  // namespace pubgraph::detail
