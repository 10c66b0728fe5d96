#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

enum class PatternId {
  P2,
  P3,
  P4,
  P5,
  C3,
  C4,
  C5,
  K4,
  K5,
  P3UnionP2,
  TwoK2,
  Diamond,
  House,
  HVN,
  W4,
  W5,
  Crown,
  Gem,
  Paraglider,
  P2UnionK3,
  TwoK3,
  P2UnionK4,
  K1UnionK3,
  FourTriangle,
  F1,
  F2,
  F3,
  F4,
  Hammer,
};

/// A named small graph from the fixed catalog.
///
/// Vertex labels are part of the contract; the colorer reads anchors by
/// position:
///   w4, w5          hub 0, rim 1..k in cycle order
///   gem             apex 0, path 1-2-3-4
///   hammer          triangle {0,1,2}, path 2-3-4 (3 = midpoint, 4 = end)
///   p2uk3/p2uk4     edge 0-1, clique on 2..
///   2k3             triangles {0,1,2} and {3,4,5}
///   k1uk3           isolated 0, triangle {1,2,3}
///   four_triangle   triangle v1,v2,v3 = 0,1,2; u1=3~{0,2}, u2=4~{0,1}, u3=5~{1,2}
///   f1              triangles {0,1,2}, {3,4,5}; cross edges 1-4, 2-5
///   f3, f4          f1 without 4-5, f1 with 4-2
///   f2              5-hole 0-1-4-2-3-0 plus 5 ~ {2,3,4}
struct Pattern {
  PatternId id;
  std::string_view name;
  Graph graph;
  /// Number of automorphisms; `count_induced` divides map counts by it.
  std::uint64_t automorphisms;

  int order() const { return graph.order(); }
};

std::span<const Pattern> pattern_catalog();
const Pattern& pattern(PatternId id);
/// Lookup by stable lowercase id ("p3up2", "w4", "hammer", ...). "k3" is an
/// alias of "c3".
const Pattern* find_pattern(std::string_view name);
std::string_view pattern_name(PatternId id);

struct PatternEmbedding {
  PatternId pattern;
  /// map[i] is the host vertex playing pattern vertex i.
  std::vector<Vertex> map;

  friend bool operator==(const PatternEmbedding&, const PatternEmbedding&) = default;
};

/// Visitor over induced embeddings of `pattern` into `host`, in lexicographic
/// order of the image tuple. Return false from the visitor to stop.
using EmbeddingVisitor = std::function<bool(std::span<const Vertex>)>;

/// Enumerates induced embeddings whose image lies in `allowed`.
void for_each_induced(const Graph& host, const Graph& pattern, const VertexSet& allowed,
                      const EmbeddingVisitor& visit);
void for_each_induced(const Graph& host, const Graph& pattern, const EmbeddingVisitor& visit);

std::optional<PatternEmbedding> find_induced(const Graph& host, const Pattern& p);
std::optional<PatternEmbedding> find_induced(const Graph& host, PatternId id);
/// Same search restricted to G[allowed]; the map still uses host indices.
std::optional<PatternEmbedding> find_induced(const Graph& host, PatternId id,
                                             const VertexSet& allowed);

/// Number of vertex subsets inducing a copy of `p`.
std::uint64_t count_induced(const Graph& host, const Pattern& p);
std::uint64_t count_induced(const Graph& host, PatternId id);

bool contains_induced(const Graph& host, PatternId id);
bool is_free(const Graph& host, std::span<const PatternId> forbidden);
bool is_free(const Graph& host, std::initializer_list<PatternId> forbidden);

/// Checks that `map` is an injective induced embedding of `pattern`.
bool is_induced_embedding(const Graph& host, const Graph& pattern, std::span<const Vertex> map);

/// Isomorphism test for pattern-scale graphs (order <= 8).
bool is_isomorphic(const Graph& a, const Graph& b);

struct ClassReport {
  bool member = true;
  std::vector<PatternEmbedding> violations;
};

/// Membership in the (P3 ∪ P2, W4)-free class. P3 ∪ P2 is searched first.
ClassReport class_membership(const Graph& g);
/// Early-exit variant of `class_membership`.
bool is_class_member(const Graph& g);

}  // namespace chibound
