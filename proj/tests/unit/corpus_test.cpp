#include <gtest/gtest.h>

#include <sstream>

#include "chibound/corpus.hpp"
#include "chibound/graph6.hpp"
#include "chibound/patterns.hpp"

using namespace chibound;

TEST(SplitMix64, ReferenceSequence) {
  SplitMix64 rng(1);
  EXPECT_EQ(rng.next(), 0x910a2dec89025cc1ull);
  EXPECT_EQ(rng.next(), 0xbeeb8da1658eec67ull);
  EXPECT_EQ(rng.next(), 0xf893a2eefb32555eull);
}

TEST(SplitMix64, BoundedDraws) {
  SplitMix64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double d = rng.next_double();
    ASSERT_GE(d, 0.0);
    ASSERT_LT(d, 1.0);
    const int k = rng.uniform_int(8, 16);
    ASSERT_GE(k, 8);
    ASSERT_LE(k, 16);
  }
}

TEST(GraphFromCode, BitsFollowGraph6PairOrder) {
  // Bit 0 is pair (0,1), bit 1 is (0,2), bit 2 is (1,2).
  EXPECT_EQ(graph_from_code(3, 0b100).edges(), (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(graph_from_code(4, 0b111111).size(), 6u);
  EXPECT_EQ(graph6_encode(graph_from_code(5, 0b1001100101)), "Dhc");
  EXPECT_THROW(graph_from_code(12, 0), std::invalid_argument);
}

TEST(ScanExhaustive, MemberCountsAreKnown) {
  const std::vector<std::pair<int, std::uint64_t>> known = {{1, 1}, {2, 2}, {3, 8}, {4, 64}, {5, 979}, {6, 26183}};
  for (const auto& [n, members] : known) {
    const CorpusSummary s = scan_exhaustive(n, {});
    EXPECT_EQ(s.graphs_seen, 1ull << (n * (n - 1) / 2)) << n;
    EXPECT_EQ(s.members, members) << n;
    EXPECT_EQ(s.violations, 0u);
  }
  EXPECT_THROW(scan_exhaustive(kMaxExhaustiveOrder + 1, {}), std::invalid_argument);
}

TEST(ScanExhaustive, OracleRunHasNoGapAboveTwiceOmega) {
  CorpusOptions opts;
  opts.eval.oracle = true;
  opts.eval.assert_proofs = true;
  std::uint64_t branches_fired = 0;
  const CorpusSummary s = scan_exhaustive(5, opts, [&](const CorpusRecord& r) {
    EXPECT_TRUE(r.ok) << r.graph6 << " " << r.failure;
    EXPECT_LE(*r.chi, r.colors_used);
    ++branches_fired;
    return true;
  });
  EXPECT_EQ(branches_fired, s.members);
  EXPECT_EQ(s.assertion_failures, 0u);
  ASSERT_TRUE(s.max_gap);
  EXPECT_LT(*s.max_gap, 0);
}

TEST(ScanGraphs, WorkersPreserveInputOrder) {
  SampleConfig cfg;
  cfg.n_min = 8;
  cfg.n_max = 11;
  cfg.p = 0.8;
  cfg.count = 300;
  cfg.seed = 17;
  const std::vector<Graph> graphs = sample_class(cfg);
  std::vector<std::string> serial, parallel;
  CorpusOptions opts;
  scan_graphs(graphs, opts, [&](const CorpusRecord& r) { serial.push_back(r.graph6); return true; });
  opts.workers = 3;
  const CorpusSummary s =
      scan_graphs(graphs, opts, [&](const CorpusRecord& r) { parallel.push_back(r.graph6); return true; });
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(s.members, 300u);
  for (std::size_t i = 0; i < graphs.size(); ++i) EXPECT_EQ(serial[i], graph6_encode(graphs[i]));
}

TEST(ScanGraphs, NonMembersAreCountedButNotColoured) {
  const std::vector<Graph> graphs = {disjoint_union(graphs::cycle(5), graphs::complete(2)),
                                     graphs::complete(3)};
  int records = 0;
  const CorpusSummary s = scan_graphs(graphs, {}, [&](const CorpusRecord&) { return ++records, true; });
  EXPECT_EQ(s.graphs_seen, 2u);
  EXPECT_EQ(s.members, 1u);
  EXPECT_EQ(records, 1);
}

TEST(SampleClass, DeterministicAndInClass) {
  SampleConfig cfg;
  cfg.n_min = 9;
  cfg.n_max = 13;
  cfg.p = 0.2;
  cfg.count = 50;
  cfg.seed = 3;
  SampleStats stats;
  const auto a = sample_class(cfg, &stats);
  const auto b = sample_class(cfg);
  ASSERT_EQ(a.size(), 50u);
  EXPECT_EQ(stats.accepted, 50u);
  EXPECT_GE(stats.draws, stats.accepted);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(graph6_encode(a[i]), graph6_encode(b[i]));
    EXPECT_TRUE(is_class_member(a[i]));
    EXPECT_GE(a[i].order(), 9);
    EXPECT_LE(a[i].order(), 13);
  }
}

TEST(SampleClass, GivesUpWhenAcceptanceCollapses) {
  SampleConfig cfg;
  cfg.n_min = cfg.n_max = 30;
  cfg.p = 0.5;
  cfg.count = 1;
  cfg.window = 2000;
  cfg.min_acceptance = 0.01;
  try {
    sample_class(cfg);
    FAIL() << "expected SampleGaveUp";
  } catch (const SampleGaveUp& e) {
    EXPECT_EQ(e.stats().accepted, 0u);
    EXPECT_GE(e.stats().draws, cfg.window);
  }
  cfg.p = 1.5;
  EXPECT_THROW(sample_class(cfg), std::invalid_argument);
}

TEST(Emitters, CsvAndJsonCarryTheSameFields) {
  EvalOptions eval;
  eval.oracle = true;
  const CorpusRecord r = evaluate_member(graphs::cycle(5), eval);
  EXPECT_TRUE(r.ok);
  std::ostringstream csv;
  write_csv_header(csv);
  write_csv_record(csv, r);
  std::istringstream lines(csv.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "graph6,n,omega,chi,colors_used,branch,ok,millis");
  const auto j = record_to_json(r);
  std::ostringstream expect;
  expect << j["graph6"].get<std::string>() << ',' << j["n"] << ',' << j["omega"] << ',' << j["chi"]
         << ',' << j["colors_used"] << ',' << j["branch"].get<std::string>() << ','
         << (j["ok"].get<bool>() ? "true" : "false") << ',';
  EXPECT_EQ(row.substr(0, expect.str().size()), expect.str());
  EXPECT_EQ(j["chi"], 3);

  const CorpusRecord no_oracle = evaluate_member(graphs::cycle(5), {});
  std::ostringstream csv2;
  write_csv_record(csv2, no_oracle);
  EXPECT_NE(csv2.str().find(",5,2,,"), std::string::npos) << csv2.str();
  EXPECT_TRUE(record_to_json(no_oracle)["chi"].is_null());
}
