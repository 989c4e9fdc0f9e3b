#ifndef PUBGRAPH_TESTS_FIXTURES_HPP
#define PUBGRAPH_TESTS_FIXTURES_HPP

// The two-author fixture: a1 publishes in j1, j2, j3 and a2 in j2, j3, j4.
// Its projection has edges j1j2, j1j3, j2j3, j2j4, j3j4 with two shared
// authors behind j2j3 and one behind every other edge.

#include <string>
#include <vector>

#include "pubgraph/record.hpp"

namespace pubgraph::testing {

inline std::vector<PublicationRecord> two_author_records() {
  std::vector<PublicationRecord> records;
  auto add = [&](const std::string& author, const std::string& venue) {
    PublicationRecord record;
    record.title = "paper by " + author + " in " + venue;
    record.authors = {author};
    record.venue = venue;
    record.venue_kind = VenueKind::proceedings;
    record.year = 2008;
    records.push_back(std::move(record));
  };
  add("a1", "j1");
  add("a1", "j2");
  add("a1", "j3");
  add("a2", "j2");
  add("a2", "j3");
  add("a2", "j4");
  return records;
}

inline Roster two_author_roster() {
  return Roster{"demo", {"a1", "a2"}};
}

}  // namespace pubgraph::testing

#endif  // PUBGRAPH_TESTS_FIXTURES_HPP
