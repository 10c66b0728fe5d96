#include "chibound/patterns.hpp"

#include <array>
#include <stdexcept>

namespace chibound {

namespace {

constexpr int kMaxPatternOrder = 8;

Graph wheel(int rim) {
  GraphBuilder b(rim + 1);
  for (Vertex i = 1; i <= rim; ++i) {
    b.add_edge(0, i);
    b.add_edge(i, i % rim + 1);
  }
  return std::move(b).build();
}

struct Searcher {
  const Graph& host;
  const Graph& pattern;
  const VertexSet& allowed;
  int k;
  std::array<Vertex, kMaxPatternOrder> image{};
  // Degree-feasible host candidates per pattern vertex.
  std::array<VertexSet, kMaxPatternOrder> seed;

  Searcher(const Graph& h, const Graph& p, const VertexSet& a)
      : host(h), pattern(p), allowed(a), k(p.order()) {
    if (k > kMaxPatternOrder) throw std::invalid_argument("pattern order above 8");
    const int n = host.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = host.degree(v);
    for (int i = 0; i < k; ++i) {
      const int pd = pattern.degree(i);
      const int pnd = k - 1 - pd;
      VertexSet s(n);
      for (Vertex v : allowed) {
        const int d = deg[static_cast<std::size_t>(v)];
        if (d >= pd && n - 1 - d >= pnd) s.insert(v);
      }
      seed[static_cast<std::size_t>(i)] = std::move(s);
    }
  }

  template <class Visit>
  bool run(int depth, Visit& visit) {
    if (depth == k) return visit(std::span<const Vertex>(image.data(), static_cast<std::size_t>(k)));
    VertexSet cand = seed[static_cast<std::size_t>(depth)];
    for (int j = 0; j < depth && !cand.empty(); ++j) {
      const Vertex img = image[static_cast<std::size_t>(j)];
      if (pattern.adjacent(depth, j)) {
        cand &= host.neighbors(img);
      } else {
        cand -= host.neighbors(img);
        if (cand.contains(img)) cand.erase(img);
      }
    }
    for (Vertex v : cand) {
      image[static_cast<std::size_t>(depth)] = v;
      if (!run(depth + 1, visit)) return false;
    }
    return true;
  }
};

template <class Visit>
void search(const Graph& host, const Graph& pattern, const VertexSet& allowed, Visit visit) {
  if (pattern.order() > host.order()) return;
  if (pattern.order() == 0) {
    visit(std::span<const Vertex>{});
    return;
  }
  Searcher s(host, pattern, allowed);
  s.run(0, visit);
}

std::uint64_t count_maps(const Graph& host, const Graph& pattern) {
  std::uint64_t count = 0;
  search(host, pattern, host.vertices(), [&](std::span<const Vertex>) {
    ++count;
    return true;
  });
  return count;
}

struct Entry {
  PatternId id;
  std::string_view name;
  int order;
  std::vector<Edge> edges;
};

std::vector<Pattern> build_catalog() {
  const Graph p5 = graphs::path(5);
  const Graph house = complement(p5);
  std::vector<Entry> entries = {
      {PatternId::P2, "p2", 2, {{0, 1}}},
      {PatternId::P3, "p3", 3, {{0, 1}, {1, 2}}},
      {PatternId::P4, "p4", 4, {{0, 1}, {1, 2}, {2, 3}}},
      {PatternId::P5, "p5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
      {PatternId::C3, "c3", 3, {{0, 1}, {1, 2}, {0, 2}}},
      {PatternId::C4, "c4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
      {PatternId::C5, "c5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}},
      {PatternId::K4, "k4", 4, {}},
      {PatternId::K5, "k5", 5, {}},
      {PatternId::P3UnionP2, "p3up2", 5, {{0, 1}, {1, 2}, {3, 4}}},
      {PatternId::TwoK2, "2k2", 4, {{0, 1}, {2, 3}}},
      {PatternId::Diamond, "diamond", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}},
      {PatternId::House, "house", 5, house.edges()},
      {PatternId::HVN, "hvn", 5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}}},
      {PatternId::W4, "w4", 5, wheel(4).edges()},
      {PatternId::W5, "w5", 6, wheel(5).edges()},
      {PatternId::Crown, "crown", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}},
      {PatternId::Gem, "gem", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}},
      {PatternId::Paraglider,
       "paraglider",
       5,
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {4, 1}, {4, 3}}},
      {PatternId::P2UnionK3, "p2uk3", 5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}}},
      {PatternId::TwoK3, "2k3", 6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}},
      {PatternId::P2UnionK4,
       "p2uk4",
       6,
       {{0, 1}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}},
      {PatternId::K1UnionK3, "k1uk3", 4, {{1, 2}, {1, 3}, {2, 3}}},
      {PatternId::FourTriangle,
       "four_triangle",
       6,
       {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 2}, {4, 0}, {4, 1}, {5, 1}, {5, 2}}},
      {PatternId::F1,
       "f1",
       6,
       {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {1, 4}, {2, 5}}},
      {PatternId::F2,
       "f2",
       6,
       {{0, 1}, {1, 4}, {4, 2}, {2, 3}, {3, 0}, {5, 2}, {5, 3}, {5, 4}}},
      {PatternId::F3, "f3", 6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {1, 4}, {2, 5}}},
      {PatternId::F4,
       "f4",
       6,
       {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {1, 4}, {2, 5}, {4, 2}}},
      {PatternId::Hammer, "hammer", 5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}},
  };

  std::vector<Pattern> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    Graph g = (e.id == PatternId::K4 || e.id == PatternId::K5)
                  ? graphs::complete(e.order)
                  : Graph::from_edges(e.order, std::span<const Edge>(e.edges));
    g = g.renamed(std::string(e.name));
    const std::uint64_t aut = count_maps(g, g);
    out.push_back(Pattern{e.id, e.name, std::move(g), aut});
  }
  return out;
}

const std::vector<Pattern>& catalog_storage() {
  static const std::vector<Pattern> catalog = build_catalog();
  return catalog;
}

}  // namespace

std::span<const Pattern> pattern_catalog() { return catalog_storage(); }

const Pattern& pattern(PatternId id) {
  return catalog_storage()[static_cast<std::size_t>(id)];
}

const Pattern* find_pattern(std::string_view name) {
  if (name == "k3") name = "c3";
  for (const auto& p : catalog_storage())
    if (p.name == name) return &p;
  return nullptr;
}

std::string_view pattern_name(PatternId id) { return pattern(id).name; }

void for_each_induced(const Graph& host, const Graph& pattern, const VertexSet& allowed,
                      const EmbeddingVisitor& visit) {
  search(host, pattern, allowed, [&](std::span<const Vertex> m) { return visit(m); });
}

void for_each_induced(const Graph& host, const Graph& pattern, const EmbeddingVisitor& visit) {
  for_each_induced(host, pattern, host.vertices(), visit);
}

std::optional<PatternEmbedding> find_induced(const Graph& host, PatternId id,
                                             const VertexSet& allowed) {
  std::optional<PatternEmbedding> found;
  search(host, pattern(id).graph, allowed, [&](std::span<const Vertex> m) {
    found = PatternEmbedding{id, std::vector<Vertex>(m.begin(), m.end())};
    return false;
  });
  return found;
}

std::optional<PatternEmbedding> find_induced(const Graph& host, PatternId id) {
  return find_induced(host, id, host.vertices());
}

std::optional<PatternEmbedding> find_induced(const Graph& host, const Pattern& p) {
  return find_induced(host, p.id);
}

std::uint64_t count_induced(const Graph& host, const Pattern& p) {
  return count_maps(host, p.graph) / p.automorphisms;
}

std::uint64_t count_induced(const Graph& host, PatternId id) {
  return count_induced(host, pattern(id));
}

bool contains_induced(const Graph& host, PatternId id) {
  return find_induced(host, id).has_value();
}

bool is_free(const Graph& host, std::span<const PatternId> forbidden) {
  for (PatternId id : forbidden)
    if (contains_induced(host, id)) return false;
  return true;
}

bool is_free(const Graph& host, std::initializer_list<PatternId> forbidden) {
  return is_free(host, std::span<const PatternId>(forbidden.begin(), forbidden.size()));
}

bool is_induced_embedding(const Graph& host, const Graph& pattern, std::span<const Vertex> map) {
  const int k = pattern.order();
  if (static_cast<int>(map.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    if (map[static_cast<std::size_t>(i)] < 0 || map[static_cast<std::size_t>(i)] >= host.order())
      return false;
    for (int j = 0; j < i; ++j) {
      const Vertex a = map[static_cast<std::size_t>(i)];
      const Vertex b = map[static_cast<std::size_t>(j)];
      if (a == b) return false;
      if (host.adjacent(a, b) != pattern.adjacent(i, j)) return false;
    }
  }
  return true;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  bool found = false;
  search(b, a, b.vertices(), [&](std::span<const Vertex>) {
    found = true;
    return false;
  });
  return found;
}

ClassReport class_membership(const Graph& g) {
  ClassReport report;
  for (PatternId id : {PatternId::P3UnionP2, PatternId::W4}) {
    if (auto e = find_induced(g, id)) report.violations.push_back(std::move(*e));
  }
  report.member = report.violations.empty();
  return report;
}

bool is_class_member(const Graph& g) {
  return !contains_induced(g, PatternId::P3UnionP2) && !contains_induced(g, PatternId::W4);
}

}  // namespace chibound
