#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/oracles.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

/// Which case of the 2ω construction handled a graph.
///
///   B0      ω <= 1
///   OMEGA2  ω = 2
///   G1..G3  ω >= 5: W5 / P2∪K3 / edge split
///   H1..H6  ω = 4: 2K3 / P2∪K4 / P2∪K3 / 4-triangle / gem / rest
///   J1..J8  ω = 3: P2∪K3 / F1 / F2 / F3 / F4 / hammer / K1∪K3 / rest
enum class BranchId { B0, Omega2, G1, G2, G3, H1, H2, H3, H4, H5, H6, J1, J2, J3, J4, J5, J6, J7, J8 };

inline constexpr int kBranchCount = 19;

std::string_view branch_name(BranchId b);
std::optional<BranchId> parse_branch(std::string_view name);

/// Sum of the part budgets a branch is allowed, as a function of ω.
/// G2's sum is the bound (ω-1) + (ω+1); its actual sub-budgets are data
/// dependent and checked at runtime.
int branch_budget_bound(BranchId b, int omega);
/// Whether `omega` lies in the range that dispatches to `b`.
bool branch_accepts_omega(BranchId b, int omega);

enum class StrategyKind { Independent, Cliques, Bipartite, IndexedCover, ExactWithBudget };

std::string_view strategy_name(StrategyKind k);

struct PartStrategy {
  StrategyKind kind = StrategyKind::Independent;
  int budget = 1;
  /// Imported bound the exact colouring stands in for.
  std::string provenance;
  /// IndexedCover only: class 1..budget per part vertex, ascending order.
  std::vector<int> cover_class;

  static PartStrategy independent() { return {StrategyKind::Independent, 1, {}, {}}; }
  static PartStrategy cliques(int k) { return {StrategyKind::Cliques, k, {}, {}}; }
  static PartStrategy bipartite() { return {StrategyKind::Bipartite, 2, {}, {}}; }
  static PartStrategy indexed_cover(int classes, std::vector<int> cover) {
    return {StrategyKind::IndexedCover, classes, {}, std::move(cover)};
  }
  static PartStrategy exact(int budget, std::string provenance) {
    return {StrategyKind::ExactWithBudget, budget, std::move(provenance), {}};
  }
};

struct PartTrace {
  std::string name;
  VertexSet vertices;
  PartStrategy strategy;
  /// Width of the colour range the part occupied.
  int colors_used = 0;

  int budget() const { return strategy.budget; }
};

struct ProofAssertion {
  std::string ref;
  bool ok = true;
};

struct BranchTrace {
  BranchId branch = BranchId::B0;
  std::optional<PatternId> anchor_pattern;
  std::vector<Vertex> anchor;
  std::vector<PartTrace> parts;
  std::vector<ProofAssertion> assertions;

  int total_budget() const;
  bool assertions_hold() const;
  /// Verdict of the named assertion, if it was recorded.
  std::optional<bool> assertion(std::string_view ref) const;
};

struct ColoringCertificate {
  Coloring coloring;
  int omega = 0;
  /// 2ω, the bound the colouring must respect.
  int budget = 0;
  BranchTrace trace;
  bool class_checked = false;

  int colors_used() const { return coloring.palette_size(); }
};

struct BranchChoice {
  BranchId branch = BranchId::B0;
  int omega = 0;
  /// Least embedding of the trigger pattern (G3 anchors on an edge instead).
  std::optional<PatternEmbedding> anchor;
  std::vector<Vertex> anchor_vertices;
};

/// Deterministic dispatch; `omega` may be supplied when already known.
/// Assumes G is (P3∪P2, W4)-free.
BranchChoice find_branch(const Graph& g);
BranchChoice find_branch(const Graph& g, int omega);

struct ColorOptions {
  /// Verify class membership first and refuse non-members.
  bool strict = false;
  /// Check and record every structural claim the fired branch relies on.
  bool assert_proofs = false;
  /// Budget for all exact sub-colourings together.
  std::optional<std::chrono::milliseconds> time_budget;
};

class ColoringError : public std::runtime_error {
 public:
  enum class Kind { NotInClass, BudgetViolation, StrategyPreconditionFailed, Timeout };

  ColoringError(Kind kind, const std::string& what, std::optional<BranchTrace> trace = {},
                std::vector<PatternEmbedding> violations = {})
      : std::runtime_error(what),
        kind_(kind),
        trace_(std::move(trace)),
        violations_(std::move(violations)) {}

  Kind kind() const { return kind_; }
  const std::optional<BranchTrace>& trace() const { return trace_; }
  const std::vector<PatternEmbedding>& violations() const { return violations_; }

 private:
  Kind kind_;
  std::optional<BranchTrace> trace_;
  std::vector<PatternEmbedding> violations_;
};

std::string_view error_kind_name(ColoringError::Kind k);

struct PartColoring {
  /// Absolute colours for the part's vertices in ascending order.
  std::vector<int> colors;
  int colors_used = 0;
};

/// Colours G[part] with colours base_color .. base_color + budget - 1.
/// Throws ColoringError (StrategyPreconditionFailed, BudgetViolation, Timeout).
PartColoring execute_part(const Graph& g, const VertexSet& part, const PartStrategy& strategy,
                          int base_color, Deadline deadline = std::nullopt);

/// Proper colouring with at most 2ω(G) colours plus its decomposition trace.
ColoringCertificate color_bounded(const Graph& g, const ColorOptions& options = {});

struct CertificateCheck {
  bool ok = true;
  std::string failure;
};

/// Independent re-check of a certificate against its graph: properness,
/// partition, per-part budgets, and the 2ω bound with ω recomputed here.
CertificateCheck check_certificate(const Graph& g, const ColoringCertificate& cert);

}  // namespace chibound
