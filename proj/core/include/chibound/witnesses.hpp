#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/oracles.hpp"

namespace chibound {

/// Mycielskian of G: vertices v_0..v_{n-1}, shadows u_i = n + i, apex w = 2n.
/// u_i ~ N(v_i) and w ~ every u_i. |V| = 2n + 1, |E| = 3m + n.
Graph mycielskian(const Graph& g);

/// mycielskian(C5): cycle 0..4, shadows 5..9, apex 10.
Graph groetzsch();

/// 27-lines intersection graph: a_1..a_6, b_1..b_6, then c_ij (i < j) in
/// lexicographic order. a_i ~ b_j iff i != j; a_i, b_i ~ c_jk iff i in {j,k};
/// c_ij ~ c_kl iff the pairs are disjoint.
Graph schlafli_complement();

struct WitnessReport {
  std::string name;
  int n = 0;
  std::size_t m = 0;
  bool class_member = false;
  int omega = 0;
  int chi = 0;
  /// chi == 2 * omega.
  bool bound_tight = false;

  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

struct WitnessVerification {
  WitnessReport report;
  /// Fields that differ from the expectation, by name.
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Recomputes every report field with the oracles; throws std::runtime_error
/// if the chromatic number does not finish before the deadline.
WitnessReport measure_witness(const Graph& g, std::string name, Deadline deadline = std::nullopt);
WitnessVerification verify_witness(const Graph& g, const WitnessReport& expected,
                                   Deadline deadline = std::nullopt);

struct SrgParameters {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;
};

/// Parameters if G is strongly regular (regular, constant common-neighbour
/// counts on edges and on non-edges).
std::optional<SrgParameters> strongly_regular_parameters(const Graph& g);

/// Named witnesses: "groetzsch", "schlafli_complement" (alias "schlafli"), "c5".
std::optional<Graph> witness_by_name(std::string_view name);
/// Expected report for a named witness.
std::optional<WitnessReport> expected_witness(std::string_view name);

}  // namespace chibound
