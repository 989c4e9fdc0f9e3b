#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "pubgraph/bipartite.hpp"

using namespace pubgraph;
using pubgraph::testing::two_author_records;
using pubgraph::testing::two_author_roster;

TEST_SUITE("bipartite") {

TEST_CASE("two-author fixture builds the expected graph") {
  auto g = build_bipartite(two_author_records(), two_author_roster());
  CHECK(g.authors == std::set<std::string>{"a1", "a2"});
  REQUIRE(g.venues.size() == 4);
  CHECK(g.venues.contains("j1"));
  CHECK(g.venues.contains("j4"));
  CHECK(g.edges.size() == 6);
  CHECK(g.edges.contains({"a1", "j1"}));
  CHECK(g.edges.contains({"a2", "j4"}));
  CHECK(!g.edges.contains({"a2", "j1"}));
  CHECK(g.publication_count == 6);
}

TEST_CASE("no records yield an empty graph") {
  auto g = build_bipartite({}, two_author_roster());
  CHECK(g.authors.empty());
  CHECK(g.venues.empty());
  CHECK(g.edges.empty());
  CHECK(bipartite_stats(g) == BipartiteStats{0, 0, 0});
}

TEST_CASE("repeat publications collapse to one edge") {
  PublicationRecord r;
  r.title = "t";
  r.authors = {"a1"};
  r.venue = "j1";
  r.venue_kind = VenueKind::journal;
  r.year = 2008;
  auto g = build_bipartite({r, r}, two_author_roster());
  CHECK(g.edges.size() == 1);
  CHECK(g.publication_count == 2);
  CHECK(bipartite_stats(g) == BipartiteStats{1, 1, 2});
}

TEST_CASE("non-roster co-authors contribute no nodes") {
  PublicationRecord r;
  r.title = "t";
  r.authors = {"outsider", "a1"};
  r.venue = "j9";
  r.venue_kind = VenueKind::proceedings;
  r.year = 2008;
  auto g = build_bipartite({r}, two_author_roster());
  CHECK(g.authors == std::set<std::string>{"a1"});
  CHECK(g.edges.size() == 1);
}

TEST_CASE("stats of the two-author fixture") {
  auto stats = bipartite_stats(
      build_bipartite(two_author_records(), two_author_roster()));
  CHECK(stats == BipartiteStats{2, 4, 6});
}

TEST_CASE("construction is insensitive to record order") {
  auto records = two_author_records();
  auto expected = build_bipartite(records, two_author_roster());
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(records.begin(), records.end(), rng);
    CHECK(build_bipartite(records, two_author_roster()) == expected);
  }
}

TEST_CASE("edge count is bounded by |A| * |J|") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> venue_pick(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PublicationRecord> records;
    Roster roster{"g", {}};
    int n = 1 + trial % 12;
    for (int i = 0; i < n; ++i) {
      PublicationRecord r;
      r.title = "t";
      r.authors = {"a" + std::to_string(i % 4)};
      r.venue = "j" + std::to_string(venue_pick(rng));
      r.venue_kind = VenueKind::journal;
      r.year = 2008;
      roster.members.insert(r.authors.front());
      records.push_back(std::move(r));
    }
    auto g = build_bipartite(records, roster);
    CHECK(g.edges.size() <= g.authors.size() * g.venues.size());
    for (const auto& [author, venue] : g.edges) {
      CHECK(g.authors.contains(author));
      CHECK(g.venues.contains(venue));
    }
  }
}

TEST_CASE("conflicting venue kinds resolve to journal in any order") {
  PublicationRecord as_journal;
  as_journal.title = "t";
  as_journal.authors = {"a1"};
  as_journal.venue = "dual";
  as_journal.venue_kind = VenueKind::journal;
  as_journal.year = 2008;
  PublicationRecord as_proceedings = as_journal;
  as_proceedings.venue_kind = VenueKind::proceedings;

  auto g1 = build_bipartite({as_journal, as_proceedings}, two_author_roster());
  auto g2 = build_bipartite({as_proceedings, as_journal}, two_author_roster());
  CHECK(g1 == g2);
  CHECK(g1.venues.at("dual") == VenueKind::journal);
}

}  // TEST_SUITE
