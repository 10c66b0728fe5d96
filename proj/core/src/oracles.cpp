#include "chibound/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>

namespace chibound {

int Coloring::palette_size() const {
  int k = 0;
  for (int c : colors) k = std::max(k, c);
  return k;
}

bool Coloring::complete() const {
  return std::all_of(colors.begin(), colors.end(), [](int c) { return c > 0; });
}

// ---------------------------------------------------------------------------
// Maximum clique

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  CliqueResult run(const VertexSet& s) {
    if (!s.empty()) expand(s);
    CliqueResult r;
    r.size = static_cast<int>(best_.size());
    r.clique = best_;
    std::sort(r.clique.begin(), r.clique.end());
    return r;
  }

 private:
  void expand(VertexSet p) {
    // Greedy colour classes over P give an upper bound per position.
    std::vector<Vertex> order;
    std::vector<int> bound;
    order.reserve(static_cast<std::size_t>(p.count()));
    VertexSet uncolored = p;
    int color = 0;
    while (!uncolored.empty()) {
      ++color;
      VertexSet q = uncolored;
      while (!q.empty()) {
        const Vertex v = q.first();
        q.erase(v);
        q -= g_.neighbors(v);
        uncolored.erase(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
      const Vertex v = order[i];
      current_.push_back(v);
      VertexSet next = p & g_.neighbors(v);
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      p.erase(v);
    }
  }

  const Graph& g_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

CliqueResult max_clique(const Graph& g) { return CliqueSearch(g).run(g.vertices()); }

CliqueResult max_clique(const Graph& g, const VertexSet& s) { return CliqueSearch(g).run(s); }

int clique_number(const Graph& g) { return max_clique(g).size; }

// ---------------------------------------------------------------------------
// Colouring search

Deadline deadline_after(std::optional<std::chrono::milliseconds> budget) {
  if (!budget) return std::nullopt;
  return std::chrono::steady_clock::now() + *budget;
}

namespace {

class Dsatur {
 public:
  Dsatur(const Graph& g, Deadline deadline)
      : g_(g),
        n_(g.order()),
        deadline_(deadline),
        color_(static_cast<std::size_t>(n_), 0),
        seen_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ + 2), 0),
        sat_(static_cast<std::size_t>(n_), 0),
        degree_(static_cast<std::size_t>(n_), 0) {
    for (Vertex v = 0; v < n_; ++v) degree_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  /// Plain DSATUR: smallest free colour at each step.
  Coloring greedy() {
    reset();
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      const Vertex v = select();
      int c = 1;
      while (seen(v, c) > 0) ++c;
      assign(v, c);
      used = std::max(used, c);
    }
    Coloring out{color_};
    reset();
    return out;
  }

  /// Searches for a colouring with at most `limit` colours, `clique` fixed to
  /// colours 1..|clique|.
  Colorability decide(int limit, const std::vector<Vertex>& clique, Coloring& found) {
    reset();
    timed_out_ = false;
    int used = 0;
    for (Vertex v : clique) assign(v, ++used);
    const bool ok = search(static_cast<int>(clique.size()), used, limit);
    if (timed_out_) return Colorability::Timeout;
    if (ok) {
      found.colors = color_;
      return Colorability::Colorable;
    }
    return Colorability::NotColorable;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  int& seen(Vertex v, int c) {
    return seen_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_ + 2) +
                 static_cast<std::size_t>(c)];
  }

  void reset() {
    std::fill(color_.begin(), color_.end(), 0);
    std::fill(seen_.begin(), seen_.end(), 0);
    std::fill(sat_.begin(), sat_.end(), 0);
  }

  void assign(Vertex v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    for (Vertex w : g_.neighbors(v)) {
      if (seen(w, c)++ == 0) ++sat_[static_cast<std::size_t>(w)];
    }
  }

  void unassign(Vertex v) {
    const int c = color_[static_cast<std::size_t>(v)];
    color_[static_cast<std::size_t>(v)] = 0;
    for (Vertex w : g_.neighbors(v)) {
      if (--seen(w, c) == 0) --sat_[static_cast<std::size_t>(w)];
    }
  }

  Vertex select() const {
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v) {
      const auto i = static_cast<std::size_t>(v);
      if (color_[i] != 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      const auto b = static_cast<std::size_t>(best);
      if (sat_[i] > sat_[b] || (sat_[i] == sat_[b] && degree_[i] > degree_[b])) best = v;
    }
    return best;
  }

  bool search(int colored, int used, int limit) {
    if (colored == n_) return true;
    if ((++nodes_ & 0xFFF) == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_) {
      timed_out_ = true;
    }
    if (timed_out_) return false;
    const Vertex v = select();
    if (sat_[static_cast<std::size_t>(v)] >= limit) return false;
    const int top = std::min(used + 1, limit);
    for (int c = 1; c <= top; ++c) {
      if (seen(v, c) > 0) continue;
      assign(v, c);
      if (search(colored + 1, std::max(used, c), limit)) return true;
      unassign(v);
      if (timed_out_) return false;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  Deadline deadline_;
  std::vector<int> color_;
  std::vector<int> seen_;
  std::vector<int> sat_;
  std::vector<int> degree_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g, Deadline deadline) {
  ChromaticResult r;
  const int n = g.order();
  if (n == 0) return r;
  const CliqueResult clique = max_clique(g);
  Dsatur engine(g, deadline);
  r.coloring = engine.greedy();
  r.upper = r.coloring.palette_size();
  r.lower = clique.size;
  while (r.upper > r.lower) {
    Coloring better;
    const Colorability v = engine.decide(r.upper - 1, clique.clique, better);
    if (v == Colorability::Timeout) {
      r.status = ChromaticResult::Status::Timeout;
      break;
    }
    if (v == Colorability::NotColorable) {
      r.lower = r.upper;
      break;
    }
    r.coloring = std::move(better);
    r.upper = r.coloring.palette_size();
  }
  r.nodes = engine.nodes();
  return r;
}

KColoringResult k_coloring(const Graph& g, int k, Deadline deadline) {
  KColoringResult r;
  if (g.order() == 0) {
    r.verdict = Colorability::Colorable;
    r.coloring = Coloring{};
    return r;
  }
  if (k <= 0) return r;
  const CliqueResult clique = max_clique(g);
  if (clique.size > k) return r;
  Dsatur engine(g, deadline);
  Coloring found;
  r.verdict = engine.decide(k, clique.clique, found);
  if (r.verdict == Colorability::Colorable) r.coloring = std::move(found);
  return r;
}

ColoringValidation validate_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) {
    throw std::invalid_argument("colouring covers " + std::to_string(c.colors.size()) +
                                " vertices, graph has " + std::to_string(g.order()));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c.colors[static_cast<std::size_t>(v)] <= 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " is uncoloured");
    }
  }
  ColoringValidation out;
  for (const auto& [u, v] : g.edges()) {
    if (c.colors[static_cast<std::size_t>(u)] == c.colors[static_cast<std::size_t>(v)]) {
      out.proper = false;
      out.offending_edge = Edge{u, v};
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure checks

BipartiteCheck check_bipartite(const Graph& g, const VertexSet& s) {
  BipartiteCheck out;
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (Vertex root : s) {
    if (side[static_cast<std::size_t>(root)] >= 0) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u) & s) {
        const auto wi = static_cast<std::size_t>(w);
        const auto ui = static_cast<std::size_t>(u);
        if (side[wi] < 0) {
          side[wi] = 1 - side[ui];
          parent[wi] = u;
          depth[wi] = depth[ui] + 1;
          queue.push_back(w);
        } else if (side[wi] == side[ui]) {
          // Walk both endpoints up to their common ancestor.
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          Vertex a = u;
          Vertex b = w;
          while (a != b) {
            if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
              a = parent[static_cast<std::size_t>(a)];
              left.push_back(a);
            } else {
              b = parent[static_cast<std::size_t>(b)];
              right.push_back(b);
            }
          }
          right.pop_back();
          out.bipartite = false;
          out.odd_cycle = left;
          out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
          return out;
        }
      }
    }
  }
  for (int& x : side)
    if (x < 0) x = 0;
  out.side = std::move(side);
  return out;
}

CliqueUnionCheck check_union_of_cliques(const Graph& g, const VertexSet& s) {
  CliqueUnionCheck out;
  VertexSet left = s;
  while (!left.empty()) {
    const Vertex root = left.first();
    VertexSet comp(g.order());
    comp.insert(root);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet grown = g.neighborhood(frontier) & s;
      grown -= comp;
      comp |= grown;
      frontier = std::move(grown);
    }
    for (Vertex b : comp) {
      const VertexSet nb = g.neighbors(b) & comp;
      for (Vertex a : nb) {
        VertexSet missing = nb - g.neighbors(a);
        missing.erase(a);
        if (!missing.empty()) {
          out.union_of_cliques = false;
          out.p3 = std::array<Vertex, 3>{a, b, missing.first()};
          out.cliques.clear();
          return out;
        }
      }
    }
    out.cliques.push_back(comp.to_vector());
    left -= comp;
  }
  return out;
}

IndependenceCheck check_independent(const Graph& g, const VertexSet& s) {
  IndependenceCheck out;
  for (Vertex u : s) {
    const VertexSet hit = g.neighbors(u) & s;
    const Vertex v = hit.next(u);
    if (v >= 0) {
      out.independent = false;
      out.edge = Edge{u, v};
      return out;
    }
  }
  return out;
}

BipartiteCheck check_bipartite(const Graph& g) { return check_bipartite(g, g.vertices()); }
CliqueUnionCheck check_union_of_cliques(const Graph& g) {
  return check_union_of_cliques(g, g.vertices());
}
IndependenceCheck check_independent(const Graph& g) { return check_independent(g, g.vertices()); }

StructureReport structure_checks(const Graph& g) {
  return StructureReport{check_bipartite(g), check_union_of_cliques(g), check_independent(g)};
}

// ---------------------------------------------------------------------------
// Perfection

namespace {

using Mask = std::uint32_t;

struct HoleSearch {
  std::vector<Mask> adj;
  int n;
  std::vector<Vertex> path;

  bool extend() {
    const Vertex start = path.front();
    const Vertex last = path.back();
    const int len = static_cast<int>(path.size());
    Mask onpath = 0;
    for (Vertex p : path) onpath |= Mask{1} << p;
    const Mask interior = onpath & ~(Mask{1} << last) & ~(Mask{1} << start);
    for (Vertex w = start + 1; w < n; ++w) {
      const Mask bit = Mask{1} << w;
      if (!(adj[static_cast<std::size_t>(last)] & bit) || (onpath & bit)) continue;
      if (adj[static_cast<std::size_t>(w)] & interior) continue;
      if (len >= 2 && (adj[static_cast<std::size_t>(start)] & bit)) {
        if (len + 1 >= 5 && (len + 1) % 2 == 1) {
          path.push_back(w);
          return true;
        }
        continue;
      }
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
    }
    return false;
  }
};

std::vector<Vertex> find_odd_hole(const Graph& g) {
  HoleSearch s;
  s.n = g.order();
  s.adj.assign(static_cast<std::size_t>(s.n), 0);
  for (const auto& [u, v] : g.edges()) {
    s.adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    s.adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  for (Vertex start = 0; start < s.n; ++start) {
    s.path.assign(1, start);
    if (s.extend()) return s.path;
  }
  return {};
}

}  // namespace

PerfectionResult is_perfect_bruteforce(const Graph& g) {
  if (g.order() > kPerfectionMaxOrder) {
    throw std::domain_error("perfection brute force refuses graphs above " +
                            std::to_string(kPerfectionMaxOrder) + " vertices");
  }
  PerfectionResult out;
  if (auto hole = find_odd_hole(g); !hole.empty()) {
    out.perfect = false;
    out.witness = std::move(hole);
    return out;
  }
  if (auto hole = find_odd_hole(complement(g)); !hole.empty()) {
    out.perfect = false;
    out.witness = std::move(hole);
    out.in_complement = true;
  }
  return out;
}

}  // namespace chibound
