#include "chibound/colorer.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace chibound {

namespace {

constexpr std::array<std::string_view, kBranchCount> kBranchNames = {
    "B0", "OMEGA2", "G1", "G2", "G3", "H1", "H2", "H3", "H4", "H5",
    "H6", "J1",     "J2", "J3", "J4", "J5", "J6", "J7", "J8"};

// Imported bounds that exact parts stand in for.
constexpr std::string_view kTriangleFree = "(P3uP2, C3)-free: chi <= 4";
constexpr std::string_view kC4Free = "(P3uP2, C4)-free: chi <= ceil(5 omega / 4)";
constexpr std::string_view kPerfect = "(P3uP2, C4, C5)-free neighbourhood is perfect: chi = omega";
constexpr std::string_view kGemFree = "(P3uP2, gem)-free: chi <= 2 omega";
constexpr std::string_view kK1K3Free = "(K1uK3)-free containing K3: chi <= 2 omega";
constexpr std::string_view kLocal = "local bound of this case";

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

std::string_view branch_name(BranchId b) { return kBranchNames[static_cast<std::size_t>(b)]; }

std::optional<BranchId> parse_branch(std::string_view name) {
  for (std::size_t i = 0; i < kBranchNames.size(); ++i)
    if (kBranchNames[i] == name) return static_cast<BranchId>(i);
  return std::nullopt;
}

int branch_budget_bound(BranchId b, int omega) {
  switch (b) {
    case BranchId::B0: return omega <= 0 ? 0 : 1;
    case BranchId::Omega2: return 4;
    case BranchId::G1: return ceil_div(5 * (omega - 1), 4) + 5;
    case BranchId::G2: return (omega - 1) + (omega + 1);
    case BranchId::G3: return 2 * (omega - 1) + 2;
    case BranchId::H1: return 4 + 3 + 1;
    case BranchId::H2: return 1 + 3 + 4;
    case BranchId::H3: return 4 + 3 + 1;
    case BranchId::H4: return 6 + 1 + 1;
    case BranchId::H5: return 4 + 2 + 2;
    case BranchId::H6: return 8;
    case BranchId::J1: return 1 + 1 + 1 + 3;
    case BranchId::J2:
    case BranchId::J4:
    case BranchId::J5: return 1 + 1 + 1 + 1 + 1;
    case BranchId::J3: return 2 + 2 + 2;
    case BranchId::J6: return 3 + 1 + 2;
    case BranchId::J7: return 1 + 3 + 2;
    case BranchId::J8: return 6;
  }
  return 0;
}

bool branch_accepts_omega(BranchId b, int omega) {
  switch (b) {
    case BranchId::B0: return omega <= 1;
    case BranchId::Omega2: return omega == 2;
    case BranchId::G1:
    case BranchId::G2:
    case BranchId::G3: return omega >= 5;
    case BranchId::H1:
    case BranchId::H2:
    case BranchId::H3:
    case BranchId::H4:
    case BranchId::H5:
    case BranchId::H6: return omega == 4;
    default: return omega == 3;
  }
}

std::string_view strategy_name(StrategyKind k) {
  switch (k) {
    case StrategyKind::Independent: return "independent";
    case StrategyKind::Cliques: return "cliques";
    case StrategyKind::Bipartite: return "bipartite";
    case StrategyKind::IndexedCover: return "indexed_cover";
    case StrategyKind::ExactWithBudget: return "exact_with_budget";
  }
  return "?";
}

std::string_view error_kind_name(ColoringError::Kind k) {
  switch (k) {
    case ColoringError::Kind::NotInClass: return "NotInClass";
    case ColoringError::Kind::BudgetViolation: return "BudgetViolation";
    case ColoringError::Kind::StrategyPreconditionFailed: return "StrategyPreconditionFailed";
    case ColoringError::Kind::Timeout: return "Timeout";
  }
  return "?";
}

int BranchTrace::total_budget() const {
  int total = 0;
  for (const auto& p : parts) total += p.budget();
  return total;
}

bool BranchTrace::assertions_hold() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const auto& a) { return a.ok; });
}

std::optional<bool> BranchTrace::assertion(std::string_view ref) const {
  for (const auto& a : assertions)
    if (a.ref == ref) return a.ok;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Dispatch

BranchChoice find_branch(const Graph& g) { return find_branch(g, clique_number(g)); }

BranchChoice find_branch(const Graph& g, int omega) {
  BranchChoice c;
  c.omega = omega;
  auto first_of = [&](std::initializer_list<std::pair<PatternId, BranchId>> table) {
    for (const auto& [pid, branch] : table) {
      if (auto e = find_induced(g, pid)) {
        c.branch = branch;
        c.anchor_vertices = e->map;
        c.anchor = std::move(e);
        return true;
      }
    }
    return false;
  };

  if (omega <= 1) {
    c.branch = BranchId::B0;
    return c;
  }
  if (omega == 2) {
    c.branch = BranchId::Omega2;
    return c;
  }
  if (omega >= 5) {
    if (first_of({{PatternId::W5, BranchId::G1}, {PatternId::P2UnionK3, BranchId::G2}})) return c;
    c.branch = BranchId::G3;
    const auto edges = g.edges();
    c.anchor_vertices = {edges.front().first, edges.front().second};
    return c;
  }
  if (omega == 4) {
    if (first_of({{PatternId::TwoK3, BranchId::H1},
                  {PatternId::P2UnionK4, BranchId::H2},
                  {PatternId::P2UnionK3, BranchId::H3},
                  {PatternId::FourTriangle, BranchId::H4},
                  {PatternId::Gem, BranchId::H5}}))
      return c;
    c.branch = BranchId::H6;
    return c;
  }
  if (first_of({{PatternId::P2UnionK3, BranchId::J1},
                {PatternId::F1, BranchId::J2},
                {PatternId::F2, BranchId::J3},
                {PatternId::F3, BranchId::J4},
                {PatternId::F4, BranchId::J5},
                {PatternId::Hammer, BranchId::J6}}))
    return c;

  // K1 ∪ K3: prefer the least embedding whose isolated vertex has a
  // neighbour in G; isolated vertices of G cannot seed the N(v') split.
  std::optional<PatternEmbedding> least;
  std::optional<PatternEmbedding> usable;
  for_each_induced(g, pattern(PatternId::K1UnionK3).graph, [&](std::span<const Vertex> m) {
    if (!least) least = PatternEmbedding{PatternId::K1UnionK3, {m.begin(), m.end()}};
    if (g.degree(m[0]) > 0) {
      usable = PatternEmbedding{PatternId::K1UnionK3, {m.begin(), m.end()}};
      return false;
    }
    return true;
  });
  if (least) {
    c.branch = BranchId::J7;
    c.anchor = usable ? std::move(usable) : std::move(least);
    c.anchor_vertices = c.anchor->map;
    return c;
  }
  c.branch = BranchId::J8;
  return c;
}

// ---------------------------------------------------------------------------
// Part execution

PartColoring execute_part(const Graph& g, const VertexSet& part, const PartStrategy& strategy,
                          int base_color, Deadline deadline) {
  using Kind = ColoringError::Kind;
  const std::vector<Vertex> members = part.to_vector();
  PartColoring out;
  out.colors.assign(members.size(), base_color);
  auto precondition = [](const std::string& what) {
    return ColoringError(Kind::StrategyPreconditionFailed, what);
  };
  auto index_of = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), v) -
                                    members.begin());
  };

  switch (strategy.kind) {
    case StrategyKind::Independent: {
      const auto check = check_independent(g, part);
      if (!check.independent) {
        throw precondition("not independent: edge " + std::to_string(check.edge->first) + "-" +
                           std::to_string(check.edge->second));
      }
      out.colors_used = members.empty() ? 0 : 1;
      break;
    }
    case StrategyKind::Cliques: {
      const auto check = check_union_of_cliques(g, part);
      if (!check.union_of_cliques) {
        const auto& p = *check.p3;
        throw precondition("not a union of cliques: induced P3 " + std::to_string(p[0]) + "-" +
                           std::to_string(p[1]) + "-" + std::to_string(p[2]));
      }
      for (const auto& clique : check.cliques) {
        for (std::size_t pos = 0; pos < clique.size(); ++pos)
          out.colors[index_of(clique[pos])] = base_color + static_cast<int>(pos);
        out.colors_used = std::max(out.colors_used, static_cast<int>(clique.size()));
      }
      break;
    }
    case StrategyKind::Bipartite: {
      const auto check = check_bipartite(g, part);
      if (!check.bipartite) {
        throw precondition("not bipartite: odd cycle of length " +
                           std::to_string(check.odd_cycle.size()));
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        const int side = check.side[static_cast<std::size_t>(members[i])];
        out.colors[i] = base_color + side;
        out.colors_used = std::max(out.colors_used, side + 1);
      }
      break;
    }
    case StrategyKind::IndexedCover: {
      if (strategy.cover_class.size() != members.size()) {
        throw precondition("indexed cover has " + std::to_string(strategy.cover_class.size()) +
                           " classes for " + std::to_string(members.size()) + " vertices");
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        const int cls = strategy.cover_class[i];
        if (cls < 1 || cls > strategy.budget) {
          throw precondition("vertex " + std::to_string(members[i]) + " has cover class " +
                             std::to_string(cls));
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (strategy.cover_class[j] == cls && g.adjacent(members[i], members[j])) {
            throw precondition("cover class " + std::to_string(cls) + " not independent: edge " +
                               std::to_string(members[j]) + "-" + std::to_string(members[i]));
          }
        }
        out.colors[i] = base_color + cls - 1;
        out.colors_used = std::max(out.colors_used, cls);
      }
      break;
    }
    case StrategyKind::ExactWithBudget: {
      const Graph sub = induced(g, part);
      const ChromaticResult r = chromatic_number(sub, deadline);
      if (!r.optimal()) {
        throw ColoringError(Kind::Timeout, "exact colouring timed out with bounds [" +
                                               std::to_string(r.lower) + "," +
                                               std::to_string(r.upper) + "]");
      }
      for (std::size_t i = 0; i < members.size(); ++i)
        out.colors[i] = base_color + r.coloring.colors[i] - 1;
      out.colors_used = r.value();
      break;
    }
  }
  if (out.colors_used > strategy.budget) {
    throw ColoringError(Kind::BudgetViolation, "used " + std::to_string(out.colors_used) +
                                                   " colours, budget " +
                                                   std::to_string(strategy.budget) + " (" +
                                                   strategy.provenance + ")");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Case plans

namespace {

class Claims {
 public:
  Claims(bool enabled, std::vector<ProofAssertion>& out) : enabled_(enabled), out_(out) {}

  template <class F>
  void check(std::string ref, F&& predicate) {
    if (enabled_) out_.push_back({std::move(ref), static_cast<bool>(predicate())});
  }
  bool enabled() const { return enabled_; }

 private:
  bool enabled_;
  std::vector<ProofAssertion>& out_;
};

bool independent(const Graph& g, const VertexSet& s) { return check_independent(g, s).independent; }
bool bipartite(const Graph& g, const VertexSet& s) { return check_bipartite(g, s).bipartite; }
bool cliques_union(const Graph& g, const VertexSet& s) {
  return check_union_of_cliques(g, s).union_of_cliques;
}
bool free_of(const Graph& g, const VertexSet& s, PatternId id) {
  return !find_induced(g, id, s).has_value();
}
int omega_in(const Graph& g, const VertexSet& s) { return max_clique(g, s).size; }

/// Perfection of G[s] by brute force when small enough; larger sets are not asserted.
void claim_perfect(Claims& claims, const std::string& ref, const Graph& g, const VertexSet& s) {
  if (!claims.enabled() || s.count() > kPerfectionMaxOrder) return;
  claims.check(ref, [&] { return is_perfect_bruteforce(induced(g, s)).perfect; });
}

/// Vertices of `among` with exactly `k` neighbours in `target`.
VertexSet with_hits(const Graph& g, const VertexSet& among, const VertexSet& target, int k) {
  VertexSet out(g.order());
  for (Vertex x : among)
    if ((g.neighbors(x) & target).count() == k) out.insert(x);
  return out;
}

VertexSet pair_set(const Graph& g, Vertex a, Vertex b) { return g.make_set({a, b}); }

class Planner {
 public:
  Planner(const Graph& g, const BranchChoice& choice, Claims& claims, BranchTrace& trace)
      : g_(g), c_(choice), claims_(claims), trace_(trace), omega_(choice.omega) {}

  void plan() {
    trace_.branch = c_.branch;
    trace_.anchor = c_.anchor_vertices;
    if (c_.anchor) trace_.anchor_pattern = c_.anchor->pattern;
    switch (c_.branch) {
      case BranchId::B0: add("V", g_.vertices(), PartStrategy::independent()); break;
      case BranchId::Omega2:
        add("V", g_.vertices(), PartStrategy::exact(4, std::string(kTriangleFree)));
        break;
      case BranchId::G1: plan_g1(); break;
      case BranchId::G2: plan_g2(); break;
      case BranchId::G3: plan_g3(); break;
      case BranchId::H1: plan_h1(); break;
      case BranchId::H2: plan_h2(); break;
      case BranchId::H3: plan_h3(); break;
      case BranchId::H4: plan_h4(); break;
      case BranchId::H5: plan_h5(); break;
      case BranchId::H6: add("V", g_.vertices(), PartStrategy::exact(8, std::string(kGemFree))); break;
      case BranchId::J1: plan_j1(); break;
      case BranchId::J2:
      case BranchId::J4:
      case BranchId::J5: plan_triangle_split(); break;
      case BranchId::J3: plan_j3(); break;
      case BranchId::J6: plan_j6(); break;
      case BranchId::J7: plan_j7(); break;
      case BranchId::J8: add("V", g_.vertices(), PartStrategy::exact(6, std::string(kK1K3Free))); break;
    }
  }

 private:
  Vertex at(std::size_t i) const { return c_.anchor_vertices[i]; }
  std::string tag(std::string_view claim) const {
    std::string s(branch_name(c_.branch));
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s + "." + std::string(claim);
  }
  void add(std::string name, VertexSet vs, PartStrategy s) {
    trace_.parts.push_back(PartTrace{std::move(name), std::move(vs), std::move(s), 0});
  }

  // ω >= 5, induced W5 with hub u and rim v1..v5.
  void plan_g1() {
    const Vertex u = at(0);
    std::array<Vertex, 5> rim{};
    for (std::size_t i = 0; i < 5; ++i) rim[i] = at(i + 1);
    const VertexSet nu = g_.neighbors(u);
    const VertexSet mu = g_.non_neighborhood(g_.make_set({u}));

    // M_i: vertices of M(u) anticomplete to {v_i, v_{i+2}}, indices mod 5.
    std::array<VertexSet, 5> classes;
    for (std::size_t i = 0; i < 5; ++i) {
      classes[i] = mu - g_.neighbors(rim[i]) - g_.neighbors(rim[(i + 2) % 5]);
    }
    VertexSet mu_closed = mu;
    mu_closed.insert(u);
    std::vector<int> cover;
    for (Vertex x : mu_closed) {
      int cls = 0;
      if (x == u) {
        cls = 1;
      } else {
        for (std::size_t i = 0; i < 5 && cls == 0; ++i)
          if (classes[i].contains(x)) cls = static_cast<int>(i) + 1;
      }
      cover.push_back(cls);
    }

    claims_.check(tag("neighbourhood_c4_free"), [&] { return free_of(g_, nu, PatternId::C4); });
    claims_.check(tag("m_classes_cover_non_neighbourhood"), [&] {
      VertexSet all(g_.order());
      for (const auto& cl : classes) all |= cl;
      return all == mu;
    });
    for (std::size_t i = 0; i < 5; ++i) {
      claims_.check(tag("m" + std::to_string(i + 1) + "_independent"),
                    [&] { return independent(g_, classes[i]); });
    }

    add("N(u)", nu, PartStrategy::exact(ceil_div(5 * (omega_ - 1), 4), std::string(kC4Free)));
    add("M[u]", mu_closed, PartStrategy::indexed_cover(5, std::move(cover)));
  }

  // ω >= 5, W5-free, induced P2 ∪ K3 with edge u1u2.
  void plan_g2() {
    const Vertex u1 = at(0);
    const Vertex u2 = at(1);
    const VertexSet x = pair_set(g_, u1, u2);
    const VertexSet n1 = g_.neighbors(u1) - x;
    const VertexSet n = g_.neighbors(u2) - g_.closed_neighbors(u1);
    const VertexSet m = g_.non_neighborhood(x);
    const CliqueResult c1 = max_clique(g_, n);
    const CliqueResult c2 = max_clique(g_, m);

    claims_.check(tag("neighbour_deficit_at_most_one"), [&] {
      const VertexSet c2set(g_.order(), c2.clique);
      for (Vertex v : c1.clique)
        if ((g_.neighbors(v) & c2set).count() < c2.size - 1) return false;
      return true;
    });
    claims_.check(tag("neighbourhoods_nested"), [&] {
      const VertexSet c2set(g_.order(), c2.clique);
      for (Vertex a : c1.clique)
        for (Vertex b : c1.clique) {
          const VertexSet na = g_.neighbors(a) & c2set;
          const VertexSet nb = g_.neighbors(b) & c2set;
          if (!na.is_subset_of(nb) && !nb.is_subset_of(na)) return false;
        }
      return true;
    });
    claims_.check(tag("clique_chain_bound"), [&] { return c1.size + c2.size <= omega_ + 1; });
    claims_.check(tag("m_p3_free"), [&] { return cliques_union(g_, m); });
    claim_perfect(claims_, tag("n_u1_perfect"), g_, g_.neighbors(u1));
    claim_perfect(claims_, tag("n_u2_perfect"), g_, g_.neighbors(u2));

    add("N(u1)", n1, PartStrategy::exact(omega_ - 1, std::string(kPerfect)));
    add("N(u2)\\N[u1]", n, PartStrategy::exact(c1.size, std::string(kPerfect)));
    add("M[{u1,u2}]", m | x, PartStrategy::cliques(c2.size));
  }

  // ω >= 5, (W5, P2 ∪ K3)-free: split on the least edge.
  void plan_g3() {
    const Vertex u1 = at(0);
    const Vertex u2 = at(1);
    const VertexSet x = pair_set(g_, u1, u2);
    const VertexSet m = g_.non_neighborhood(x);
    claims_.check(tag("m_p3_k3_free"),
                  [&] { return cliques_union(g_, m) && free_of(g_, m, PatternId::C3); });
    claim_perfect(claims_, tag("n_u1_perfect"), g_, g_.neighbors(u1));
    claim_perfect(claims_, tag("n_u2_perfect"), g_, g_.neighbors(u2));

    add("N(u1)", g_.neighbors(u1) - x, PartStrategy::exact(omega_ - 1, std::string(kPerfect)));
    add("N(u2)\\N[u1]", g_.neighbors(u2) - g_.closed_neighbors(u1),
        PartStrategy::exact(omega_ - 1, std::string(kPerfect)));
    add("M[{u1,u2}]", m | x, PartStrategy::cliques(2));
  }

  // ω = 4, induced 2K3: triangles S = {v1,v2,v3} and T = {u1,u2,u3} ⊆ M(S).
  void plan_h1() {
    const VertexSet s = g_.make_set({at(0), at(1), at(2)});
    const VertexSet t = g_.make_set({at(3), at(4), at(5)});
    const VertexSet ns = g_.neighborhood(s);
    const VertexSet common = g_.neighbors(at(0)) & g_.neighbors(at(1)) & g_.neighbors(at(2));
    const VertexSet partial = ns - common;
    const VertexSet n2 = with_hits(g_, partial, t, 3);
    const VertexSet n1 = partial - n2;
    const VertexSet ms = g_.non_neighborhood(s);

    claims_.check(tag("m_union_of_cliques"), [&] { return cliques_union(g_, ms); });
    claims_.check(tag("partial_neighbours_see_two_of_triangle"),
                  [&] { return with_hits(g_, partial, t, 2) == n1; });
    claims_.check(tag("n2_independent"), [&] { return independent(g_, n2); });
    claims_.check(tag("n1_k3_c4_free"), [&] {
      return free_of(g_, n1, PatternId::C3) && free_of(g_, n1, PatternId::C4);
    });
    claims_.check(tag("common_independent"), [&] { return independent(g_, common); });

    add("M[S]+N2", ms | s | n2, PartStrategy::exact(4, std::string(kLocal)));
    add("N1", n1, PartStrategy::exact(3, std::string(kC4Free)));
    add("common", common, PartStrategy::independent());
  }

  // ω = 4, 2K3-free, induced P2 ∪ K4 with edge v1v2 and clique K.
  void plan_h2() {
    const Vertex v1 = at(0);
    const Vertex v2 = at(1);
    const VertexSet x = pair_set(g_, v1, v2);
    const VertexSet k = g_.make_set({at(2), at(3), at(4), at(5)});
    const VertexSet n1 = g_.neighbors(v1) - g_.closed_neighbors(v2);
    const VertexSet n2 = g_.neighbors(v2) - g_.closed_neighbors(v1);
    const VertexSet n3 = g_.neighbors(v1) & g_.neighbors(v2);
    const VertexSet n4 = with_hits(g_, n3, k, 3);
    const VertexSet rest = n3 - n4;
    const VertexSet m = g_.non_neighborhood(x);
    const VertexSet joint = n1 | n2 | n4;

    claims_.check(tag("private_and_three_sided_independent"), [&] { return independent(g_, joint); });
    claims_.check(tag("common_rest_c4_free_omega_le_2"),
                  [&] { return free_of(g_, rest, PatternId::C4) && omega_in(g_, rest) <= 2; });
    claims_.check(tag("m_p3_free"), [&] { return cliques_union(g_, m); });

    add("N1+N2+N4", joint, PartStrategy::independent());
    add("N3\\N4", rest, PartStrategy::exact(3, std::string(kC4Free)));
    add("M[{v1,v2}]", m | x, PartStrategy::cliques(4));
  }

  // ω = 4, (2K3, P2 ∪ K4)-free, induced P2 ∪ K3 with edge v1v2, triangle T.
  void plan_h3() {
    const Vertex v1 = at(0);
    const Vertex v2 = at(1);
    const VertexSet x = pair_set(g_, v1, v2);
    const VertexSet t = g_.make_set({at(2), at(3), at(4)});
    const VertexSet nx = g_.neighborhood(x);
    const VertexSet n0 = with_hits(g_, nx, t, 0);
    const VertexSet n1 = with_hits(g_, nx, t, 1);
    const VertexSet n2 = with_hits(g_, nx, t, 2);
    const VertexSet n3 = with_hits(g_, nx, t, 3);
    const VertexSet m = g_.non_neighborhood(x);

    claims_.check(tag("every_neighbour_sees_triangle"), [&] { return n0.empty(); });
    claims_.check(tag("n1_common_neighbours"),
                  [&] { return n1.is_subset_of(g_.neighbors(v1) & g_.neighbors(v2)); });
    claims_.check(tag("n2_k3_c4_free"), [&] {
      return free_of(g_, n2, PatternId::C3) && free_of(g_, n2, PatternId::C4);
    });
    claims_.check(tag("n3_independent"), [&] { return independent(g_, n3); });

    add("N1+M[{v1,v2}]", n0 | n1 | m | x, PartStrategy::exact(4, std::string(kLocal)));
    add("N2", n2, PartStrategy::exact(3, std::string(kC4Free)));
    add("N3", n3, PartStrategy::independent());
  }

  // ω = 4, P2 ∪ K3-free, induced 4-triangle with central triangle S.
  void plan_h4() {
    const VertexSet s = g_.make_set({at(0), at(1), at(2)});
    const VertexSet outside = ~s;
    const VertexSet n0 = with_hits(g_, outside, s, 0);
    const VertexSet n1 = with_hits(g_, outside, s, 1);
    const VertexSet n2 = with_hits(g_, outside, s, 2);
    const VertexSet n3 = with_hits(g_, outside, s, 3);

    claims_.check(tag("a_i_components_at_most_edges"), [&] {
      for (std::size_t i = 0; i < 3; ++i) {
        VertexSet a = n0 | n1;
        for (std::size_t j = 0; j < 3; ++j)
          if (j != i) a -= g_.neighbors(at(j));
        if (!cliques_union(g_, a) || !free_of(g_, a, PatternId::C3)) return false;
      }
      return true;
    });
    claims_.check(tag("n2_independent"), [&] { return independent(g_, n2); });
    claims_.check(tag("n3_independent"), [&] { return independent(g_, n3); });

    add("N0+N1+S", n0 | n1 | s, PartStrategy::exact(6, std::string(kLocal)));
    add("N2", n2, PartStrategy::independent());
    add("N3", n3, PartStrategy::independent());
  }

  // ω = 4, P2 ∪ K3- and 4-triangle-free, induced gem with apex v and path u1..u4.
  void plan_h5() {
    const Vertex v = at(0);
    const Vertex u2 = at(2);
    const Vertex u3 = at(3);
    const VertexSet nv = g_.neighbors(v);
    const VertexSet mv = g_.non_neighborhood(g_.make_set({v}));
    VertexSet miss_u2 = mv - g_.neighbors(u2);
    const VertexSet sees_u2 = mv & g_.neighbors(u2);

    claims_.check(tag("non_neighbour_misses_u2_or_u3"),
                  [&] { return !sees_u2.intersects(g_.neighbors(u3)); });
    claims_.check(tag("neighbourhood_c4_k4_free"),
                  [&] { return free_of(g_, nv, PatternId::C4) && omega_in(g_, nv) <= 3; });
    claims_.check(tag("m_bipartite"), [&] { return bipartite(g_, miss_u2); });
    claims_.check(tag("m_prime_bipartite"), [&] { return bipartite(g_, sees_u2); });

    miss_u2.insert(v);
    add("N(v)", nv, PartStrategy::exact(4, std::string(kC4Free)));
    add("M", miss_u2, PartStrategy::bipartite());
    add("M'", sees_u2, PartStrategy::bipartite());
  }

  // ω = 3, induced P2 ∪ K3 with edge v1v2.
  void plan_j1() {
    const Vertex v1 = at(0);
    const Vertex v2 = at(1);
    const VertexSet x = pair_set(g_, v1, v2);
    const VertexSet t = g_.make_set({at(2), at(3), at(4)});
    const VertexSet n1 = g_.neighbors(v1) - g_.closed_neighbors(v2);
    const VertexSet n2 = g_.neighbors(v2) - g_.closed_neighbors(v1);
    const VertexSet n3 = g_.neighbors(v1) & g_.neighbors(v2);
    const VertexSet m = g_.non_neighborhood(x);

    claims_.check(tag("no_neighbour_complete_to_triangle"),
                  [&] { return with_hits(g_, n1 | n2 | n3, t, 3).empty(); });
    claims_.check(tag("n1_independent"), [&] { return independent(g_, n1); });
    claims_.check(tag("n2_independent"), [&] { return independent(g_, n2); });
    claims_.check(tag("n3_independent"), [&] { return independent(g_, n3); });

    add("N1", n1, PartStrategy::independent());
    add("N2", n2, PartStrategy::independent());
    add("N3", n3, PartStrategy::independent());
    add("M[{v1,v2}]", m | x, PartStrategy::cliques(3));
  }

  // ω = 3, P2 ∪ K3-free, induced F1 / F3 / F4 with triangle S = {v1,v2,v3}.
  void plan_triangle_split() {
    const std::array<Vertex, 3> sv{at(0), at(1), at(2)};
    const VertexSet s = g_.make_set({sv[0], sv[1], sv[2]});
    const VertexSet outside = ~s;
    const VertexSet n0 = with_hits(g_, outside, s, 0);
    const VertexSet n1 = with_hits(g_, outside, s, 1);
    const VertexSet n2 = with_hits(g_, outside, s, 2);
    const VertexSet n3 = with_hits(g_, outside, s, 3);

    std::array<VertexSet, 3> a;
    for (std::size_t i = 0; i < 3; ++i) a[i] = n1 & g_.neighbors(sv[i]);

    claims_.check(tag("no_vertex_complete_to_triangle"), [&] { return n3.empty(); });
    for (std::size_t i = 0; i < 3; ++i) {
      claims_.check(tag("a" + std::to_string(i + 1) + "_independent"),
                    [&] { return independent(g_, a[i]); });
    }
    claims_.check(tag("n2_independent"), [&] { return independent(g_, n2); });
    claims_.check(tag("n0_independent"), [&] { return independent(g_, n0); });

    // A_i sees only v_i in S, so the next triangle vertex can share its colour.
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t next = (i + 1) % 3;
      VertexSet part = a[i];
      part.insert(sv[next]);
      add("A" + std::to_string(i + 1) + "+v" + std::to_string(next + 1), std::move(part),
          PartStrategy::independent());
    }
    add("N2", n2 | n3, PartStrategy::independent());
    add("N0", n0, PartStrategy::independent());
  }

  // ω = 3, (P2 ∪ K3, F1)-free, induced F2 with hole edge v1v2.
  void plan_j3() {
    const Vertex v1 = at(0);
    const Vertex v2 = at(1);
    const VertexSet x = pair_set(g_, v1, v2);
    const VertexSet m = g_.non_neighborhood(x);

    claims_.check(tag("neighbourhood_v1_bipartite"),
                  [&] { return bipartite(g_, g_.neighbors(v1)); });
    claims_.check(tag("neighbourhood_v2_bipartite"),
                  [&] { return bipartite(g_, g_.neighbors(v2)); });
    claims_.check(tag("triangle_in_non_neighbourhood_forces_bipartite"), [&] {
      for (Vertex v = 0; v < g_.order(); ++v) {
        const VertexSet mv = g_.non_neighborhood(g_.make_set({v}));
        if (free_of(g_, mv, PatternId::C3)) continue;
        if (!bipartite(g_, g_.neighbors(v))) return false;
      }
      return true;
    });
    claims_.check(tag("m_bipartite"), [&] { return bipartite(g_, m); });

    add("N(v1)", g_.neighbors(v1) - x, PartStrategy::bipartite());
    add("N(v2)\\N[v1]", g_.neighbors(v2) - g_.closed_neighbors(v1), PartStrategy::bipartite());
    add("M[{v1,v2}]", m | x, PartStrategy::cliques(2));
  }

  // ω = 3, (P2 ∪ K3, F1..F4)-free, induced hammer; v2 is the path vertex next
  // to the triangle, v1 the far end.
  void plan_j6() {
    const Vertex v1 = at(4);
    const Vertex v2 = at(3);
    const VertexSet x = pair_set(g_, v1, v2);
    const VertexSet nv2 = g_.neighbors(v2) - x;
    const VertexSet n1 = g_.neighborhood(x) - g_.neighbors(v2);
    const VertexSet m = g_.non_neighborhood(x);

    claims_.check(tag("n_v2_c4_free_omega_le_2"), [&] {
      const VertexSet full = g_.neighbors(v2);
      return free_of(g_, full, PatternId::C4) && omega_in(g_, full) <= 2;
    });
    claims_.check(tag("n1_independent"), [&] { return independent(g_, n1); });
    claims_.check(tag("m_p3_k3_free"),
                  [&] { return cliques_union(g_, m) && free_of(g_, m, PatternId::C3); });

    add("N(v2)", nv2, PartStrategy::exact(3, std::string(kC4Free)));
    add("N1", n1, PartStrategy::independent());
    add("M[{v1,v2}]", m | x, PartStrategy::cliques(2));
  }

  // ω = 3, (P2 ∪ K3, F1..F4, hammer)-free, induced K1 ∪ K3 with isolated vertex v.
  void plan_j7() {
    const Vertex v = at(0);
    if (g_.degree(v) == 0) {
      // Every K1 ∪ K3 uses an isolated vertex: G minus its isolated vertices
      // is K1 ∪ K3-free and still has a triangle.
      add("V", g_.vertices(), PartStrategy::exact(6, std::string(kK1K3Free)));
      return;
    }
    const Vertex w = g_.neighbors(v).first();
    const VertexSet x = pair_set(g_, v, w);
    const VertexSet m = g_.non_neighborhood(x);

    claims_.check(tag("n_v_independent"), [&] { return independent(g_, g_.neighbors(v)); });
    claims_.check(tag("n_w_c4_free_omega_le_2"), [&] {
      const VertexSet full = g_.neighbors(w);
      return free_of(g_, full, PatternId::C4) && omega_in(g_, full) <= 2;
    });
    claims_.check(tag("m_p3_k3_free"),
                  [&] { return cliques_union(g_, m) && free_of(g_, m, PatternId::C3); });

    trace_.anchor.push_back(w);
    add("N(v)", g_.neighbors(v) - x, PartStrategy::independent());
    add("N(v')\\N[v]", g_.neighbors(w) - g_.closed_neighbors(v),
        PartStrategy::exact(3, std::string(kC4Free)));
    add("M[{v,v'}]", m | x, PartStrategy::cliques(2));
  }

  const Graph& g_;
  const BranchChoice& c_;
  Claims& claims_;
  BranchTrace& trace_;
  int omega_;
};

}  // namespace

ColoringCertificate color_bounded(const Graph& g, const ColorOptions& options) {
  using Kind = ColoringError::Kind;
  ColoringCertificate cert;
  cert.class_checked = options.strict;
  if (options.strict) {
    ClassReport report = class_membership(g);
    if (!report.member) {
      throw ColoringError(Kind::NotInClass, "graph is not (P3uP2, W4)-free", std::nullopt,
                          std::move(report.violations));
    }
  }
  const int n = g.order();
  cert.coloring.colors.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    cert.trace.branch = BranchId::B0;
    return cert;
  }

  const BranchChoice choice = find_branch(g);
  cert.omega = choice.omega;
  cert.budget = 2 * choice.omega;

  Claims claims(options.assert_proofs, cert.trace.assertions);
  Planner(g, choice, claims, cert.trace).plan();
  BranchTrace& trace = cert.trace;

  VertexSet covered(n);
  for (const auto& part : trace.parts) {
    if (part.vertices.intersects(covered)) {
      throw ColoringError(Kind::StrategyPreconditionFailed,
                          "part " + part.name + " overlaps an earlier part", trace);
    }
    covered |= part.vertices;
  }
  if (covered.count() != n) {
    throw ColoringError(Kind::StrategyPreconditionFailed, "parts do not cover V(G)", trace);
  }
  if (trace.total_budget() > cert.budget) {
    throw ColoringError(Kind::BudgetViolation,
                        "part budgets sum to " + std::to_string(trace.total_budget()) +
                            " > 2 omega = " + std::to_string(cert.budget),
                        trace);
  }

  const Deadline deadline = deadline_after(options.time_budget);
  int base = 1;
  for (auto& part : trace.parts) {
    PartColoring pc;
    try {
      pc = execute_part(g, part.vertices, part.strategy, base, deadline);
    } catch (const ColoringError& e) {
      throw ColoringError(e.kind(), std::string(branch_name(trace.branch)) + " part " + part.name +
                                        ": " + e.what(),
                          trace);
    }
    std::size_t i = 0;
    for (Vertex v : part.vertices) cert.coloring.colors[static_cast<std::size_t>(v)] = pc.colors[i++];
    part.colors_used = pc.colors_used;
    base += pc.colors_used;
  }
  return cert;
}

}  // namespace chibound
