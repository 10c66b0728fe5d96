// One PASS/FAIL line per criterion. Usage: acceptance [all | 1..8]...
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chibound/colorer.hpp"
#include "chibound/corpus.hpp"
#include "chibound/graph6.hpp"
#include "chibound/oracles.hpp"
#include "chibound/patterns.hpp"
#include "chibound/witnesses.hpp"
#include "chibound_cli/cli.hpp"
#include "naive.hpp"

using namespace chibound;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Verdicts of the spot-checked claims, keyed by assertion ref.
struct ClaimTally {
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> seen;  // ref -> (held, failed)
  std::map<BranchId, std::uint64_t> firings;

  void add(BranchId branch, const std::vector<ProofAssertion>& assertions) {
    ++firings[branch];
    for (const auto& a : assertions) {
      auto& [held, failed] = seen[a.ref];
      (a.ok ? held : failed) += 1;
    }
  }
};

// ---------------------------------------------------------------------------

Outcome criterion_1() {
  const auto start = Clock::now();
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::cli_main({"witness", "groetzsch"}, in, out, err);
  const double secs = seconds_since(start);
  std::istringstream lines(out.str());
  std::string g6, report;
  std::getline(lines, g6);
  std::getline(lines, report);
  const auto j = nlohmann::json::parse(report, nullptr, false);
  Outcome o;
  o.pass = code == 0 && !j.is_discarded() && j["n"] == 11 && j["m"] == 20 &&
           j["class_member"] == true && j["omega"] == 2 && j["chi"] == 4 &&
           j["bound_tight"] == true && secs < 1.0;
  o.detail = (j.is_discarded() ? std::string("unparseable report") : j.dump()) + " in " +
             std::to_string(secs) + " s (limit 1 s)";
  return o;
}

Outcome criterion_2() {
  const auto start = Clock::now();
  const Graph g = schlafli_complement();
  const auto srg = strongly_regular_parameters(g);
  const bool regular = g.min_degree() == 10 && g.max_degree() == 10;
  const bool srg_ok = srg && srg->n == 27 && srg->k == 10 && srg->lambda == 1 && srg->mu == 5;
  const WitnessVerification v = verify_witness(g, *expected_witness("schlafli_complement"));
  const KColoringResult six = k_coloring(g, 6);
  const KColoringResult five = k_coloring(g, 5);
  const bool six_ok = six.verdict == Colorability::Colorable && six.coloring &&
                      validate_coloring(g, *six.coloring).proper && six.coloring->palette_size() <= 6;
  const bool five_refuted = five.verdict == Colorability::NotColorable;
  const double secs = seconds_since(start);
  Outcome o;
  o.pass = g.order() == 27 && g.size() == 135 && regular && srg_ok && v.ok() && six_ok && five_refuted &&
           secs < 600.0;
  std::ostringstream d;
  d << "n=" << g.order() << " m=" << g.size() << " 10-regular=" << regular << " srg(1,5)=" << srg_ok
    << " member=" << v.report.class_member << " omega=" << v.report.omega << " chi=" << v.report.chi
    << " tight=" << v.report.bound_tight << " 6-colouring=" << six_ok << " 5-infeasible=" << five_refuted
    << " in " << secs << " s (limit 600 s)";
  o.detail = d.str();
  return o;
}

Outcome criterion_3(ClaimTally* tally) {
  CorpusOptions opts;
  opts.eval.oracle = true;
  opts.eval.assert_proofs = true;
  opts.stop_on_failure = false;
  std::uint64_t over = 0, no_chi = 0, failures = 0;
  std::string first;
  const CorpusSummary s = scan_exhaustive(7, opts, [&](const CorpusRecord& r) {
    if (!r.ok) {
      ++failures;
      if (first.empty()) first = r.graph6 + ": " + r.failure;
    }
    if (!r.chi) {
      ++no_chi;
    } else if (*r.chi > 2 * r.omega) {
      ++over;
    }
    if (tally) tally->add(r.branch, r.assertions);
    return true;
  });
  Outcome o;
  o.pass = s.graphs_seen == 2'097'152 && over == 0 && failures == 0 && no_chi == 0 &&
           s.assertion_failures == 0;
  std::ostringstream d;
  d << s.graphs_seen << " graphs, " << s.members << " members, chi>2omega " << over
    << ", certificate failures " << failures << ", assertion failures " << s.assertion_failures
    << ", max chi-2omega " << (s.max_gap ? std::to_string(*s.max_gap) : "n/a") << ", " << s.seconds
    << " s (target 1800 s)";
  if (!first.empty()) d << "; first failure " << first;
  o.detail = d.str();
  return o;
}

struct SeedSuiteEntry {
  int n;
  double p;
  std::uint64_t seed;
  std::size_t count;
};

// One sparse and one dense density per order, 10,000 members in total.
std::vector<SeedSuiteEntry> seed_suite() {
  const std::vector<std::tuple<int, double, double>> densities = {
      {8, 0.30, 0.70},  {9, 0.25, 0.80},  {10, 0.20, 0.85}, {11, 0.15, 0.88}, {12, 0.12, 0.90},
      {13, 0.10, 0.92}, {14, 0.10, 0.93}, {15, 0.08, 0.94}, {16, 0.08, 0.95}};
  std::vector<SeedSuiteEntry> suite;
  for (const auto& [n, sparse, dense] : densities) {
    for (double p : {sparse, dense}) suite.push_back({n, p, 1000 + suite.size(), 0});
  }
  const std::size_t total = 10'000;
  for (std::size_t i = 0; i < suite.size(); ++i)
    suite[i].count = total / suite.size() + (i < total % suite.size() ? 1 : 0);
  return suite;
}

Outcome criterion_4(ClaimTally* tally) {
  const auto start = Clock::now();
  std::uint64_t members = 0, budget_violations = 0, improper = 0, failed = 0, draws = 0;
  std::map<BranchId, std::uint64_t> branches;
  std::string first;
  for (const auto& e : seed_suite()) {
    SampleConfig cfg;
    cfg.n_min = cfg.n_max = e.n;
    cfg.p = e.p;
    cfg.count = e.count;
    cfg.seed = e.seed;
    SampleStats stats;
    const std::vector<Graph> graphs = sample_class(cfg, &stats);
    draws += stats.draws;
    for (const Graph& g : graphs) {
      ++members;
      ColorOptions co;
      co.assert_proofs = true;
      try {
        const ColoringCertificate cert = color_bounded(g, co);
        if (!validate_coloring(g, cert.coloring).proper) ++improper;
        const CertificateCheck check = check_certificate(g, cert);
        if (!check.ok) {
          ++failed;
          if (first.empty()) first = graph6_encode(g) + " seed=" + std::to_string(e.seed) + ": " + check.failure;
        }
        ++branches[cert.trace.branch];
        if (tally) tally->add(cert.trace.branch, cert.trace.assertions);
      } catch (const ColoringError& err) {
        ++failed;
        if (err.kind() == ColoringError::Kind::BudgetViolation) ++budget_violations;
        if (first.empty()) first = graph6_encode(g) + " seed=" + std::to_string(e.seed) + ": " + err.what();
      }
    }
  }
  Outcome o;
  o.pass = members == 10'000 && budget_violations == 0 && improper == 0 && failed == 0;
  std::ostringstream d;
  d << members << " members from " << draws << " draws (n 8..16, seeds 1000..1017), BudgetViolation "
    << budget_violations << ", improper " << improper << ", check_certificate failures " << failed << ", "
    << seconds_since(start) << " s; branches";
  for (const auto& [b, count] : branches) d << " " << branch_name(b) << "=" << count;
  if (!first.empty()) d << "; first failure " << first;
  o.detail = d.str();
  return o;
}

Outcome criterion_5() {
  std::mt19937_64 rng(5);
  std::uint64_t comparisons = 0, disagreements = 0;
  std::string first;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + trial % 7;
    const double p = 0.1 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
    GraphBuilder b(n);
    std::bernoulli_distribution edge(p);
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i)
        if (edge(rng)) b.add_edge(i, j);
    const Graph g = std::move(b).build();
    for (const auto& pat : pattern_catalog()) {
      ++comparisons;
      const auto found = find_induced(g, pat);
      const std::vector<Vertex> least = naive::least_embedding(g, pat.graph);
      const bool agree = found ? found->map == least : least.empty();
      const bool count_agrees = count_induced(g, pat) == naive::count_induced(g, pat.graph);
      if (!agree || !count_agrees) {
        ++disagreements;
        if (first.empty()) first = graph6_encode(g) + " " + std::string(pat.name);
      }
    }
  }
  Outcome o;
  o.pass = disagreements == 0;
  o.detail = std::to_string(comparisons) + " graph-pattern pairs over 500 graphs (n <= 9), " +
             std::to_string(disagreements) + " disagreements on least embedding or subset count" +
             (first.empty() ? "" : "; first " + first);
  return o;
}

/// Pattern plus one vertex adjacent to `attach`.
Graph padded(PatternId id, std::initializer_list<Vertex> attach) {
  const Graph& p = pattern(id).graph;
  GraphBuilder b(p.order() + 1);
  for (const auto& [u, v] : p.edges()) b.add_edge(u, v);
  for (Vertex u : attach) b.add_edge(u, p.order());
  return std::move(b).build();
}

struct Host {
  std::string label;
  Graph graph;
  BranchId expected;
  std::optional<PatternId> contains;
};

std::vector<Host> branch_hosts() {
  const Graph& p2k3 = pattern(PatternId::P2UnionK3).graph;
  return {
      {"K5", graphs::complete(5), BranchId::G3, std::nullopt},
      {"K4+C5", join(graphs::complete(4), graphs::cycle(5)), BranchId::G1, PatternId::W5},
      {"K2uK5", disjoint_union(graphs::complete(2), graphs::complete(5)), BranchId::G2, PatternId::P2UnionK3},
      {"2K3 + apex on one triangle", padded(PatternId::TwoK3, {0, 1, 2}), BranchId::H1, PatternId::TwoK3},
      {"K2uK4", pattern(PatternId::P2UnionK4).graph, BranchId::H2, PatternId::P2UnionK4},
      {"P2uK3 + apex on the triangle", padded(PatternId::P2UnionK3, {0, 2, 3, 4}), BranchId::H3,
       PatternId::P2UnionK3},
      {"4-triangle + apex on the inner triangle", padded(PatternId::FourTriangle, {0, 1, 2}), BranchId::H4,
       PatternId::FourTriangle},
      {"K2+C5", join(graphs::complete(2), graphs::cycle(5)), BranchId::H5, PatternId::Gem},
      {"K4", graphs::complete(4), BranchId::H6, std::nullopt},
      {"P2uK3", p2k3, BranchId::J1, PatternId::P2UnionK3},
      {"F1", pattern(PatternId::F1).graph, BranchId::J2, PatternId::F1},
      {"F2", pattern(PatternId::F2).graph, BranchId::J3, PatternId::F2},
      {"F3", pattern(PatternId::F3).graph, BranchId::J4, PatternId::F3},
      {"F4", pattern(PatternId::F4).graph, BranchId::J5, PatternId::F4},
      {"hammer", pattern(PatternId::Hammer).graph, BranchId::J6, PatternId::Hammer},
      {"K1uK3", pattern(PatternId::K1UnionK3).graph, BranchId::J7, PatternId::K1UnionK3},
      {"K3", graphs::complete(3), BranchId::J8, std::nullopt},
      {"groetzsch", groetzsch(), BranchId::Omega2, std::nullopt},
      {"3K1", Graph(3), BranchId::B0, std::nullopt},
  };
}

Outcome criterion_6(ClaimTally* tally) {
  std::vector<bool> fired(kBranchCount, false);
  std::uint64_t assertion_failures = 0, assertions = 0;
  std::vector<std::string> problems;
  for (const Host& h : branch_hosts()) {
    if (!is_class_member(h.graph)) {
      problems.push_back(h.label + " not a class member");
      continue;
    }
    if (h.contains && !contains_induced(h.graph, *h.contains)) {
      problems.push_back(h.label + " lacks " + std::string(pattern_name(*h.contains)));
      continue;
    }
    try {
      const ColoringCertificate cert = color_bounded(h.graph, {true, true, std::nullopt});
      if (cert.trace.branch != h.expected) {
        problems.push_back(h.label + " fired " + std::string(branch_name(cert.trace.branch)));
      }
      fired[static_cast<std::size_t>(cert.trace.branch)] = true;
      for (const auto& a : cert.trace.assertions) {
        ++assertions;
        if (!a.ok) {
          ++assertion_failures;
          problems.push_back(h.label + " " + a.ref);
        }
      }
      if (!check_certificate(h.graph, cert).ok) problems.push_back(h.label + " certificate rejected");
      if (tally) tally->add(cert.trace.branch, cert.trace.assertions);
    } catch (const ColoringError& e) {
      problems.push_back(h.label + ": " + e.what());
    }
  }
  std::string missing;
  for (int b = 0; b < kBranchCount; ++b)
    if (!fired[static_cast<std::size_t>(b)]) missing += " " + std::string(branch_name(static_cast<BranchId>(b)));
  Outcome o;
  o.pass = problems.empty() && missing.empty() && assertion_failures == 0;
  std::ostringstream d;
  d << std::count(fired.begin(), fired.end(), true) << "/" << kBranchCount << " branches fired, " << assertions
    << " assertions, " << assertion_failures << " failed";
  if (!missing.empty()) d << "; never fired:" << missing;
  for (const auto& p : problems) d << "; " << p;
  o.detail = d.str();
  return o;
}

Outcome criterion_7() {
  ClaimTally tally;
  criterion_3(&tally);
  criterion_4(&tally);
  criterion_6(&tally);
  struct Spot {
    BranchId branch;
    std::vector<std::string> refs;
  };
  const std::vector<Spot> spots = {
      {BranchId::G2, {"g2.neighbour_deficit_at_most_one", "g2.clique_chain_bound"}},
      {BranchId::H2, {"h2.private_and_three_sided_independent"}},
      {BranchId::J3, {"j3.neighbourhood_v1_bipartite", "j3.neighbourhood_v2_bipartite",
                      "j3.triangle_in_non_neighbourhood_forces_bipartite"}},
  };
  Outcome o;
  std::ostringstream d;
  for (const auto& s : spots) {
    const std::uint64_t firings = tally.firings[s.branch];
    d << branch_name(s.branch) << " fired " << firings << ":";
    if (firings == 0) o.pass = false;
    for (const auto& ref : s.refs) {
      const auto [held, failed] = tally.seen[ref];
      d << " " << ref << " " << held << " held/" << failed << " failed";
      if (failed != 0 || held != firings) o.pass = false;
    }
    d << "; ";
  }
  o.detail = d.str() + "across criteria 3, 4 and 6";
  return o;
}

Outcome criterion_8() {
  const auto start = Clock::now();
  std::uint64_t graphs_checked = 0, disagreements = 0;
  std::string first;
  for (int n = 0; n <= 6; ++n) {
    const std::uint64_t total = 1ull << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
      const Graph g = graph_from_code(n, code);
      const ChromaticResult r = chromatic_number(g);
      ++graphs_checked;
      const bool ok = r.optimal() && r.value() == naive::chromatic_number(g) &&
                      validate_coloring(g, r.coloring).proper && r.coloring.palette_size() == r.value();
      if (!ok) {
        ++disagreements;
        if (first.empty()) first = graph6_encode(g);
      }
    }
  }
  const double secs = seconds_since(start);
  Outcome o;
  o.pass = disagreements == 0 && secs < 300.0;
  o.detail = std::to_string(graphs_checked) + " labelled graphs with n <= 6, " + std::to_string(disagreements) +
             " disagreements, " + std::to_string(secs) + " s (limit 300 s)" +
             (first.empty() ? "" : "; first " + first);
  return o;
}

const std::map<int, std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::map<int, std::pair<std::string, std::function<Outcome()>>> table = {
      {1, {"groetzsch witness", criterion_1}},
      {2, {"schlafli complement witness", criterion_2}},
      {3, {"exhaustive n=7 bound check", [] { return criterion_3(nullptr); }}},
      {4, {"randomized n=8..16 bound check", [] { return criterion_4(nullptr); }}},
      {5, {"pattern detector equivalence", criterion_5}},
      {6, {"branch coverage", [] { return criterion_6(nullptr); }}},
      {7, {"case claim spot checks", criterion_7}},
      {8, {"chromatic oracle self-consistency", criterion_8}},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "all") {
      for (const auto& [k, _] : criteria()) selected.push_back(k);
      continue;
    }
    int k = 0;
    try {
      k = std::stoi(arg);
    } catch (const std::exception&) {
    }
    if (!criteria().count(k)) {
      std::cerr << "usage: acceptance [all | 1..8]...\n";
      return 2;
    }
    selected.push_back(k);
  }
  if (selected.empty()) {
    for (const auto& [k, _] : criteria()) selected.push_back(k);
  }

  bool all_pass = true;
  for (int k : selected) {
    const auto& [label, run] = criteria().at(k);
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::cout << "criterion " << k << " (" << label << "): " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
  }
  return all_pass ? 0 : 1;
}
