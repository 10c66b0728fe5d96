#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chibound/colorer.hpp"
#include "chibound/graph.hpp"

namespace chibound {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
/// z = (z ^ z>>30) * 0xBF58476D1CE4E5B9, z = (z ^ z>>27) * 0x94D049BB133111EB,
/// z ^ z>>31. next_double() = (next() >> 11) * 2^-53.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double next_double();
  /// Uniform in [lo, hi] by next() % (hi - lo + 1).
  int uniform_int(int lo, int hi);
  /// Independent generator seeded from the next output.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

/// G(n, p): one draw per vertex pair in graph6 order (j = 1..n-1, i < j),
/// edge iff next_double() < p.
Graph random_graph(int n, double p, SplitMix64& rng);

/// Labelled graph on n <= 11 vertices whose bit b (graph6 pair order) is bit b of `code`.
Graph graph_from_code(int n, std::uint64_t code);

struct SampleConfig {
  int n_min = 8;
  int n_max = 8;
  double p = 0.5;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  /// Give up when fewer than window * min_acceptance draws are accepted in a window.
  std::uint64_t window = 10'000'000;
  double min_acceptance = 1e-6;
};

struct SampleStats {
  std::uint64_t draws = 0;
  std::uint64_t accepted = 0;
  double acceptance_rate() const {
    return draws == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(draws);
  }
};

class SampleGaveUp : public std::runtime_error {
 public:
  SampleGaveUp(const std::string& what, SampleStats stats)
      : std::runtime_error(what), stats_(stats) {}
  const SampleStats& stats() const { return stats_; }

 private:
  SampleStats stats_;
};

/// Rejection sampling of class members. n is drawn uniformly in
/// [n_min, n_max] per attempt, then the graph from G(n, p).
/// Deterministic in the config. Throws SampleGaveUp.
std::vector<Graph> sample_class(const SampleConfig& cfg, SampleStats* stats = nullptr);

struct CorpusRecord {
  std::string graph6;
  int n = 0;
  int omega = 0;
  std::optional<int> chi;
  int colors_used = 0;
  BranchId branch = BranchId::B0;
  /// Certificate check passed, colors_used <= 2 omega, and no proof assertion failed.
  bool ok = false;
  double millis = 0.0;
  std::string failure;
  std::vector<ProofAssertion> assertions;
};

struct EvalOptions {
  bool oracle = false;
  bool assert_proofs = false;
  std::optional<std::chrono::milliseconds> time_budget;
};

/// Colours a class member, checks the certificate and optionally computes chi.
CorpusRecord evaluate_member(const Graph& g, const EvalOptions& options);

struct CorpusSummary {
  std::uint64_t graphs_seen = 0;
  std::uint64_t members = 0;
  std::uint64_t violations = 0;
  std::uint64_t assertion_failures = 0;
  std::array<std::uint64_t, kBranchCount> branches{};
  /// Largest chi - 2 omega seen under the oracle; 0 without it.
  std::optional<int> max_gap;
  std::optional<CorpusRecord> first_failure;
  std::optional<SampleStats> sampling;
  double seconds = 0.0;
};

struct CorpusOptions {
  EvalOptions eval;
  /// Stop at the first record with ok == false.
  bool stop_on_failure = true;
  /// Worker threads; results are always delivered in input order.
  int workers = 1;
};

/// Receives member records in input order; returning false stops the run.
using RecordSink = std::function<bool(const CorpusRecord&)>;

inline constexpr int kMaxExhaustiveOrder = 7;

/// All 2^(n(n-1)/2) labelled graphs on n vertices in code order.
/// Throws std::invalid_argument above kMaxExhaustiveOrder.
CorpusSummary scan_exhaustive(int n, const CorpusOptions& options, const RecordSink& sink = {});
/// Graphs supplied by the caller, in order.
CorpusSummary scan_graphs(const std::vector<Graph>& graphs, const CorpusOptions& options,
                          const RecordSink& sink = {});

/// Worker count from CHIBOUND_WORKERS, default 1.
int workers_from_environment();

// Emitters. CSV columns: graph6,n,omega,chi,colors_used,branch,ok,millis.
void write_csv_header(std::ostream& out);
void write_csv_record(std::ostream& out, const CorpusRecord& r);
nlohmann::ordered_json record_to_json(const CorpusRecord& r);
nlohmann::ordered_json summary_to_json(const CorpusSummary& s);

}  // namespace chibound
