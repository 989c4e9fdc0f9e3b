#include "random_graphs.hpp"

#include <algorithm>
#include <string>

namespace pubgraph::testing {

namespace {

std::string venue_label(int i) {
  std::string out = "v";
  if (i < 10) out += '0';
  return out + std::to_string(i);
}

int random_shared_count(std::mt19937& rng) {
  static const int choices[] = {1, 2, 4};  // weights 1, 0.5, 0.25
  std::uniform_int_distribution<int> pick(0, 2);
  return choices[pick(rng)];
}

std::vector<std::string> random_labels(std::mt19937& rng, int universe,
                                       int count) {
  std::vector<int> ids(universe);
  for (int i = 0; i < universe; ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(count);
  std::vector<std::string> labels;
  for (int id : ids) labels.push_back(venue_label(id));
  return labels;
}

VenueGraph connected_on_labels(std::mt19937& rng,
                               const std::vector<std::string>& labels) {
  VenueGraph g;
  for (const auto& label : labels) g.add_node(label);
  const int n = static_cast<int>(labels.size());
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    g.add_edge(labels[i], labels[parent(rng)], random_shared_count(rng));
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.has_edge(labels[i], labels[j]) && coin(rng) < 0.25) {
        g.add_edge(labels[i], labels[j], random_shared_count(rng));
      }
    }
  }
  return g;
}

}  // namespace

VenueGraph random_connected_graph(std::mt19937& rng, int min_nodes,
                                  int max_nodes) {
  std::uniform_int_distribution<int> size(min_nodes, max_nodes);
  const int n = size(rng);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(venue_label(i));
  return connected_on_labels(rng, labels);
}

VenueGraph random_connected_graph_on_universe(std::mt19937& rng, int universe,
                                              int min_nodes, int max_nodes) {
  std::uniform_int_distribution<int> size(min_nodes, max_nodes);
  return connected_on_labels(rng, random_labels(rng, universe, size(rng)));
}

VenueGraph random_graph_on_universe(std::mt19937& rng, int universe,
                                    int min_nodes, int max_nodes,
                                    double edge_prob) {
  std::uniform_int_distribution<int> size(min_nodes, max_nodes);
  auto labels = random_labels(rng, universe, size(rng));
  VenueGraph g;
  for (const auto& label : labels) g.add_node(label);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (coin(rng) < edge_prob) {
        g.add_edge(labels[i], labels[j], random_shared_count(rng));
      }
    }
  }
  return g;
}

BipartiteGraph random_bipartite(std::mt19937& rng, int max_authors,
                                int max_venues) {
  std::uniform_int_distribution<int> author_count(1, max_authors);
  std::uniform_int_distribution<int> venue_count(1, max_venues);
  const int authors = author_count(rng);
  const int venues = venue_count(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  BipartiteGraph g;
  for (int a = 0; a < authors; ++a) {
    std::string author = "a" + std::to_string(a);
    for (int v = 0; v < venues; ++v) {
      if (coin(rng) < 0.35) {
        std::string venue = venue_label(v);
        g.authors.insert(author);
        g.venues.emplace(venue, VenueKind::proceedings);
        g.edges.emplace(author, venue);
        ++g.publication_count;
      }
    }
  }
  return g;
}

}  // namespace pubgraph::testing
