#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "pubgraph/error.hpp"
#include "pubgraph/venue_graph.hpp"
#include "random_graphs.hpp"

using namespace pubgraph;
using pubgraph::testing::random_bipartite;
using pubgraph::testing::random_connected_graph_on_universe;
using pubgraph::testing::two_author_records;
using pubgraph::testing::two_author_roster;

namespace {

VenueGraph two_author_projection() {
  return project(build_bipartite(two_author_records(), two_author_roster()));
}

}  // namespace

TEST_SUITE("projection") {

TEST_CASE("two-author fixture projects to the expected weighted edges") {
  VenueGraph g = two_author_projection();
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 5);
  CHECK(g.weight("j1", "j2") == 1.0);
  CHECK(g.weight("j1", "j3") == 1.0);
  CHECK(g.weight("j2", "j3") == 0.5);
  CHECK(g.shared_authors("j2", "j3") == 2);
  CHECK(g.weight("j2", "j4") == 1.0);
  CHECK(g.weight("j3", "j4") == 1.0);
  CHECK(!g.has_edge("j1", "j4"));
}

TEST_CASE("single venue projects to one isolated node") {
  BipartiteGraph b;
  b.authors = {"a"};
  b.venues = {{"only", VenueKind::journal}};
  b.edges = {{"a", "only"}};
  b.publication_count = 1;
  VenueGraph g = project(b);
  CHECK(g.node_count() == 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("venues without a shared author stay isolated") {
  BipartiteGraph b;
  b.authors = {"a", "b"};
  b.venues = {{"x", VenueKind::journal}, {"y", VenueKind::journal}};
  b.edges = {{"a", "x"}, {"b", "y"}};
  b.publication_count = 2;
  VenueGraph g = project(b);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("projection equals brute-force neighborhood intersection") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    BipartiteGraph b = random_bipartite(rng, 10, 10);
    VenueGraph g = project(b);
    CHECK(g.node_count() == b.venues.size());

    for (const auto& [u, u_kind] : b.venues) {
      for (const auto& [v, v_kind] : b.venues) {
        if (u >= v) continue;
        int shared = 0;
        for (const auto& author : b.authors) {
          if (b.edges.contains({author, u}) && b.edges.contains({author, v})) {
            ++shared;
          }
        }
        CHECK(g.shared_authors(u, v) == shared);
        if (shared > 0) {
          double w = g.weight(u, v);
          CHECK(w > 0.0);
          CHECK(w <= 1.0);
          CHECK((w == 1.0) == (shared == 1));
        }
      }
    }
  }
}

TEST_CASE("largest_component keeps a connected graph unchanged") {
  VenueGraph g = two_author_projection();
  CHECK(largest_component(g) == g);
}

TEST_CASE("largest_component picks the bigger component") {
  VenueGraph g;
  g.add_edge("p", "q", 1);
  g.add_edge("q", "r", 1);
  g.add_edge("x", "y", 1);
  VenueGraph lcc = largest_component(g);
  CHECK(lcc.node_count() == 3);
  CHECK(lcc.has_node("p"));
  CHECK(!lcc.has_node("x"));
}

TEST_CASE("largest_component breaks size ties lexicographically") {
  VenueGraph g;
  g.add_edge("c", "d", 1);
  g.add_edge("a", "b", 1);
  VenueGraph lcc = largest_component(g);
  CHECK(lcc.node_count() == 2);
  CHECK(lcc.has_node("a"));
  CHECK(lcc.has_node("b"));
}

TEST_CASE("largest_component of an empty graph is empty") {
  CHECK(largest_component(VenueGraph{}).node_count() == 0);
}

TEST_CASE("largest_component output is connected and induced") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    // Two independent draws glued into one (often disconnected) graph.
    VenueGraph a = random_connected_graph_on_universe(rng, 6, 2, 5);
    VenueGraph b = random_connected_graph_on_universe(rng, 6, 2, 5);
    VenueGraph merged;
    for (const auto& key : a.nodes()) merged.add_node(key);
    for (const auto& key : b.nodes()) merged.add_node(key + "'");
    for (const auto& [u, neighbors] : a.adjacency()) {
      for (const auto& [v, shared] : neighbors) {
        if (u < v) merged.add_edge(u, v, shared);
      }
    }
    for (const auto& [u, neighbors] : b.adjacency()) {
      for (const auto& [v, shared] : neighbors) {
        if (u < v) merged.add_edge(u + "'", v + "'", shared);
      }
    }

    VenueGraph lcc = largest_component(merged);
    CHECK_NOTHROW(graph_stats(lcc));  // throws when disconnected
    for (const auto& u : lcc.nodes()) {
      // Induced: edge multiplicities match the parent graph.
      for (const auto& v : lcc.nodes()) {
        if (u < v) {
          CHECK(lcc.shared_authors(u, v) == merged.shared_authors(u, v));
        }
      }
    }
  }
}

TEST_CASE("union of one graph is that graph") {
  VenueGraph g = two_author_projection();
  UnionGraph u = union_graph({g});
  CHECK(u.nodes == std::set<std::string>{"j1", "j2", "j3", "j4"});
  CHECK(u.common_nodes == u.nodes);
  CHECK(u.edges.size() == 5);
}

TEST_CASE("union node arithmetic") {
  VenueGraph g1;
  g1.add_edge("a", "b", 1);
  g1.add_node("c");
  VenueGraph g2;
  g2.add_edge("b", "c", 1);
  g2.add_node("d");
  UnionGraph u = union_graph({g1, g2});
  CHECK(u.nodes == std::set<std::string>{"a", "b", "c", "d"});
  CHECK(u.common_nodes == std::set<std::string>{"b", "c"});
}

TEST_CASE("union of disjoint graphs has no common nodes") {
  VenueGraph g1;
  g1.add_edge("a", "b", 1);
  VenueGraph g2;
  g2.add_edge("c", "d", 1);
  CHECK(union_graph({g1, g2}).common_nodes.empty());
}

TEST_CASE("union of zero graphs is a usage error") {
  CHECK_THROWS_AS(union_graph({}), UsageError);
}

TEST_CASE("union is commutative and associative; self-union is identity") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    VenueGraph a = random_connected_graph_on_universe(rng, 8, 2, 6);
    VenueGraph b = random_connected_graph_on_universe(rng, 8, 2, 6);
    VenueGraph c = random_connected_graph_on_universe(rng, 8, 2, 6);
    CHECK(union_graph({a, b}) == union_graph({b, a}));
    CHECK(union_graph({a, b, c}) == union_graph({c, b, a}));

    UnionGraph self = union_graph({a, a});
    CHECK(self.common_nodes == self.nodes);
    UnionGraph single = union_graph({a});
    CHECK(self.edges == single.edges);
  }
}

TEST_CASE("graph_stats of the two-author projection") {
  GraphStats stats = graph_stats(two_author_projection());
  CHECK(stats.node_count == 4);
  CHECK(stats.edge_count == 5);
  CHECK(stats.diameter == 2);
  CHECK(stats.average_distance == doctest::Approx(7.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("graph_stats of a three-node path") {
  VenueGraph g;
  g.add_edge("a", "b", 2);
  g.add_edge("b", "c", 4);
  GraphStats stats = graph_stats(g);
  CHECK(stats.diameter == 2);  // hop counts ignore weights
  CHECK(stats.average_distance == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("graph_stats edge cases") {
  VenueGraph single;
  single.add_node("only");
  CHECK(graph_stats(single) == GraphStats{1, 0, 0.0, 0});

  CHECK(graph_stats(VenueGraph{}) == GraphStats{0, 0, 0.0, 0});

  VenueGraph split;
  split.add_edge("a", "b", 1);
  split.add_node("z");
  CHECK_THROWS_AS(graph_stats(split), DisconnectedGraphError);
}

TEST_CASE("venue graph rejects self-loops and bad counts") {
  VenueGraph g;
  CHECK_THROWS_AS(g.add_edge("a", "a", 1), UsageError);
  CHECK_THROWS_AS(g.add_edge("a", "b", 0), UsageError);
}

}  // TEST_SUITE
