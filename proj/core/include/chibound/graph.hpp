#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chibound/vertex_set.hpp"

namespace chibound {

using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

/// Immutable simple graph on vertices 0..n-1.
///
/// Adjacency is one VertexSet row per vertex, so N(v) & S is a word-wide AND.
/// Every construction in this header returns a fresh value.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n, std::string name = {});

  static Graph from_edges(int n, std::span<const Edge> edges, std::string name = {});
  static Graph from_edges(int n, std::initializer_list<Edge> edges, std::string name = {});

  int order() const { return static_cast<int>(rows_.size()); }
  std::size_t size() const { return edge_count_; }
  const std::string& name() const { return name_; }
  Graph renamed(std::string name) const;

  bool adjacent(Vertex u, Vertex v) const;
  /// N(v). Throws std::out_of_range for a vertex outside [0, n).
  const VertexSet& neighbors(Vertex v) const;
  int degree(Vertex v) const { return neighbors(v).count(); }
  int max_degree() const;
  int min_degree() const;

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet make_set(std::initializer_list<Vertex> members) const {
    return VertexSet(order(), members);
  }

  /// N(X): vertices outside X with a neighbour in X.
  VertexSet neighborhood(const VertexSet& x) const;
  /// M(X) = V \ (X ∪ N(X)); with `closed`, M[X] = M(X) ∪ X.
  VertexSet non_neighborhood(const VertexSet& x, bool closed = false) const;
  /// Shorthand for N[v] = N(v) ∪ {v}.
  VertexSet closed_neighbors(Vertex v) const;

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;

  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
  std::string name_;
};

/// Mutable staging area for a Graph; `build()` freezes it.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const;
  int order() const { return graph_.order(); }
  Graph build(std::string name = {}) &&;

 private:
  void check(Vertex u, Vertex v) const;
  Graph graph_;
};

/// Disjoint union; A's vertices first, then B's shifted by |A|.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Join A + B: disjoint union plus every edge between the two sides.
Graph join(const Graph& a, const Graph& b);
Graph complement(const Graph& g);
/// G[S], re-indexed 0..|S|-1 in ascending order of S.
Graph induced(const Graph& g, const VertexSet& s);

namespace graphs {

Graph empty(int n);
Graph complete(int n);
/// Path 0-1-...-(n-1).
Graph path(int n);
/// Cycle 0-1-...-(n-1)-0, n >= 3.
Graph cycle(int n);
/// Petersen graph: outer cycle 0..4, spokes i-(i+5), inner pentagram 5..9.
Graph petersen();

}  // namespace graphs

}  // namespace chibound
