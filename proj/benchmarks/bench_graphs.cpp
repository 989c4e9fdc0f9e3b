// Micro-benchmarks for the hot paths: projection, centrality, comparison.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "pubgraph/bipartite.hpp"
#include "pubgraph/centrality.hpp"
#include "pubgraph/compare.hpp"
#include "pubgraph/record.hpp"
#include "pubgraph/venue_graph.hpp"

namespace {

using namespace pubgraph;

std::string venue_name(int i) { return "venue" + std::to_string(i); }
std::string author_name(int i) { return "author" + std::to_string(i); }

/// Synthetic corpus: each author publishes in a handful of random venues.
std::vector<PublicationRecord> synthetic_records(int authors, int venues,
                                                 int papers_per_author,
                                                 std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> venue_pick(0, venues - 1);
  std::vector<PublicationRecord> records;
  for (int a = 0; a < authors; ++a) {
    for (int p = 0; p < papers_per_author; ++p) {
      PublicationRecord record;
      record.title = "paper";
      record.authors = {author_name(a)};
      record.venue = venue_name(venue_pick(rng));
      record.venue_kind = VenueKind::journal;
      record.year = 2008;
      records.push_back(std::move(record));
    }
  }
  return records;
}

Roster full_roster(int authors) {
  Roster roster;
  roster.group_name = "bench";
  for (int a = 0; a < authors; ++a) roster.members.insert(author_name(a));
  return roster;
}

VenueGraph connected_graph(int n, double extra_edge_prob, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> parent_pick(0, n - 1);
  std::uniform_int_distribution<int> shared_pick(1, 4);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  VenueGraph g;
  for (int i = 1; i < n; ++i) {
    g.add_edge(venue_name(i), venue_name(parent_pick(rng) % i),
               shared_pick(rng));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng) < extra_edge_prob) {
        g.add_edge(venue_name(i), venue_name(j), shared_pick(rng));
      }
    }
  }
  return g;
}

void BM_Project(benchmark::State& state) {
  const int authors = static_cast<int>(state.range(0));
  auto records = synthetic_records(authors, authors * 2, 8, 42);
  auto roster = full_roster(authors);
  auto bipartite = build_bipartite(records, roster);
  for (auto _ : state) {
    VenueGraph g = project(bipartite);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_Project)->Arg(16)->Arg(64)->Arg(256);

void BM_Betweenness(benchmark::State& state) {
  VenueGraph g = connected_graph(static_cast<int>(state.range(0)), 0.05, 7);
  for (auto _ : state) {
    auto scores = betweenness(g);
    benchmark::DoNotOptimize(scores);
  }
}
BENCHMARK(BM_Betweenness)->Arg(32)->Arg(64)->Arg(128);

void BM_Closeness(benchmark::State& state) {
  VenueGraph g = connected_graph(static_cast<int>(state.range(0)), 0.05, 7);
  for (auto _ : state) {
    auto scores = closeness(g);
    benchmark::DoNotOptimize(scores);
  }
}
BENCHMARK(BM_Closeness)->Arg(32)->Arg(64)->Arg(128);

void BM_CompareAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<VenueGraph> graphs{connected_graph(n, 0.08, 11),
                                 connected_graph(n, 0.08, 13)};
  for (auto _ : state) {
    ComparisonResult result = compare_all(graphs);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_CompareAll)->Arg(16)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
