#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <utility>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

/// Vertex colouring with colours 1..k. Colour 0 marks an uncoloured vertex.
struct Coloring {
  std::vector<int> colors;

  int palette_size() const;
  bool complete() const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct CliqueResult {
  int size = 0;
  std::vector<Vertex> clique;
};

/// Exact maximum clique by branch and bound with greedy-colouring bounds.
CliqueResult max_clique(const Graph& g);
/// Maximum clique inside G[s]; the witness uses host indices.
CliqueResult max_clique(const Graph& g, const VertexSet& s);
int clique_number(const Graph& g);

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

Deadline deadline_after(std::optional<std::chrono::milliseconds> budget);

struct ChromaticResult {
  enum class Status { Optimal, Timeout };
  Status status = Status::Optimal;
  /// Proven bounds; equal when `status == Optimal`.
  int lower = 0;
  int upper = 0;
  /// Best colouring found, using `upper` colours.
  Coloring coloring;
  std::uint64_t nodes = 0;

  bool optimal() const { return status == Status::Optimal; }
  int value() const { return upper; }
};

/// Exact chromatic number.
///
/// DSATUR branch and bound: a maximum clique is precoloured 1..ω as the lower
/// bound, a greedy DSATUR run gives the first upper bound, the branching
/// vertex is the uncoloured vertex of largest saturation (ties: larger degree,
/// then lower index), and a vertex may only open colour max_used + 1.
/// Exceeding the deadline yields Status::Timeout with the bounds so far.
ChromaticResult chromatic_number(const Graph& g, Deadline deadline = std::nullopt);

enum class Colorability { Colorable, NotColorable, Timeout };

struct KColoringResult {
  Colorability verdict = Colorability::NotColorable;
  std::optional<Coloring> coloring;
};

/// Decides whether G admits a proper colouring with at most k colours.
KColoringResult k_coloring(const Graph& g, int k, Deadline deadline = std::nullopt);

struct ColoringValidation {
  bool proper = true;
  std::optional<Edge> offending_edge;
};

/// Throws std::invalid_argument if `c` does not colour every vertex.
ColoringValidation validate_coloring(const Graph& g, const Coloring& c);

struct BipartiteCheck {
  bool bipartite = true;
  /// Sides 0/1 per vertex when bipartite.
  std::vector<int> side;
  /// An odd cycle in traversal order when not bipartite.
  std::vector<Vertex> odd_cycle;
};

struct CliqueUnionCheck {
  bool union_of_cliques = true;
  /// Components, each a clique, sorted; only filled when the check passes.
  std::vector<std::vector<Vertex>> cliques;
  /// Induced P3 a-b-c when the check fails.
  std::optional<std::array<Vertex, 3>> p3;
};

struct IndependenceCheck {
  bool independent = true;
  std::optional<Edge> edge;
};

struct StructureReport {
  BipartiteCheck bipartite;
  CliqueUnionCheck cliques;
  IndependenceCheck independence;
};

BipartiteCheck check_bipartite(const Graph& g);
CliqueUnionCheck check_union_of_cliques(const Graph& g);
IndependenceCheck check_independent(const Graph& g);
StructureReport structure_checks(const Graph& g);

/// Same checks on G[s], witnesses in host indices.
BipartiteCheck check_bipartite(const Graph& g, const VertexSet& s);
CliqueUnionCheck check_union_of_cliques(const Graph& g, const VertexSet& s);
IndependenceCheck check_independent(const Graph& g, const VertexSet& s);

struct PerfectionResult {
  bool perfect = true;
  /// Odd hole of G, or of its complement when `in_complement`.
  std::vector<Vertex> witness;
  bool in_complement = false;
};

inline constexpr int kPerfectionMaxOrder = 16;

/// Perfection by searching odd holes of length >= 5 in G and its complement.
/// Throws std::domain_error above kPerfectionMaxOrder vertices.
PerfectionResult is_perfect_bruteforce(const Graph& g);

}  // namespace chibound
