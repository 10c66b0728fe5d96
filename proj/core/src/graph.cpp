#include "chibound/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace chibound {

Graph::Graph(int n, std::string name) : name_(std::move(name)) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::string name) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build(std::move(name));
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges, std::string name) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(name));
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

const VertexSet& Graph::neighbors(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                            std::to_string(order()));
  }
  return rows_[static_cast<std::size_t>(v)];
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& row : rows_) best = std::max(best, row.count());
  return best;
}

int Graph::min_degree() const {
  if (rows_.empty()) return 0;
  int best = order();
  for (const auto& row : rows_) best = std::min(best, row.count());
  return best;
}

VertexSet Graph::neighborhood(const VertexSet& x) const {
  VertexSet out(order());
  for (Vertex v : x) out |= neighbors(v);
  out -= x;
  return out;
}

VertexSet Graph::non_neighborhood(const VertexSet& x, bool closed) const {
  VertexSet out = ~(neighborhood(x) | x);
  if (closed) out |= x;
  return out;
}

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet out = neighbors(v);
  out.insert(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : rows_[static_cast<std::size_t>(u)])
      if (v > u) out.emplace_back(u, v);
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.edge_count_ == b.edge_count_ && a.rows_ == b.rows_;
}

GraphBuilder::GraphBuilder(int n) : graph_(n) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= graph_.order() || v >= graph_.order()) {
    throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") outside graph of order " + std::to_string(graph_.order()));
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  auto& rows = graph_.rows_;
  if (!rows[static_cast<std::size_t>(u)].contains(v)) {
    rows[static_cast<std::size_t>(u)].insert(v);
    rows[static_cast<std::size_t>(v)].insert(u);
    ++graph_.edge_count_;
  }
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  auto& rows = graph_.rows_;
  if (rows[static_cast<std::size_t>(u)].contains(v)) {
    rows[static_cast<std::size_t>(u)].erase(v);
    rows[static_cast<std::size_t>(v)].erase(u);
    --graph_.edge_count_;
  }
  return *this;
}

bool GraphBuilder::adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }

Graph GraphBuilder::build(std::string name) && {
  graph_.name_ = std::move(name);
  return std::move(graph_);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  GraphBuilder out(na + b.order());
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) out.add_edge(na + u, na + v);
  return std::move(out).build();
}

Graph join(const Graph& a, const Graph& b) {
  const int na = a.order();
  GraphBuilder out(na + b.order());
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) out.add_edge(na + u, na + v);
  for (Vertex u = 0; u < na; ++u)
    for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, na + v);
  return std::move(out).build();
}

Graph complement(const Graph& g) {
  GraphBuilder out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return std::move(out).build();
}

Graph induced(const Graph& g, const VertexSet& s) {
  const std::vector<Vertex> members = s.to_vector();
  GraphBuilder out(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j]))
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(out).build();
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build("K" + std::to_string(n));
}

Graph path(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build("P" + std::to_string(n));
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build("C" + std::to_string(n));
}

Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build("petersen");
}

}  // namespace graphs

}  // namespace chibound
