#include "pubgraph/bipartite.hpp"

namespace pubgraph {

BipartiteGraph build_bipartite(const std::vector<PublicationRecord>& records,
                               const Roster& roster) {
  BipartiteGraph g;
  g.publication_count = records.size();
  for (const auto& record : records) {
    for (const auto& author : record.authors) {
      if (!roster.members.contains(author)) continue;
      g.authors.insert(author);
      auto [venue_it, inserted] =
          g.venues.emplace(record.venue, record.venue_kind);
      if (!inserted && record.venue_kind < venue_it->second) {
        // Same key seen with both kinds: journal wins, independent of
        // record order.
        venue_it->second = record.venue_kind;
      }
      g.edges.emplace(author, record.venue);
    }
  }
  return g;
}

BipartiteStats bipartite_stats(const BipartiteGraph& g) {
  return {g.authors.size(), g.venues.size(), g.publication_count};
}

}  // namespace pubgraph
