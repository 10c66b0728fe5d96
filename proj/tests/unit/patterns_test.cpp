#include <gtest/gtest.h>

#include <random>
#include <set>

#include "chibound/graph6.hpp"
#include "chibound/patterns.hpp"
#include "chibound/witnesses.hpp"
#include "hosts.hpp"
#include "naive.hpp"

using namespace chibound;

TEST(Catalog, ContainsExactlyTheNamedPatterns) {
  const std::set<std::string> expected = {
      "p2", "p3", "p4", "p5", "c3", "c4", "c5", "k4", "k5", "p3up2", "2k2", "diamond", "house",
      "hvn", "w4", "w5", "crown", "gem", "paraglider", "p2uk3", "2k3", "p2uk4", "k1uk3",
      "four_triangle", "f1", "f2", "f3", "f4", "hammer"};
  std::set<std::string> names;
  for (const auto& p : pattern_catalog()) {
    names.insert(std::string(p.name));
    EXPECT_EQ(&pattern(p.id), &p);
    EXPECT_EQ(p.graph.order(), p.order());
    EXPECT_LE(p.order(), 6);
  }
  EXPECT_EQ(names, expected);
  ASSERT_NE(find_pattern("k3"), nullptr);
  EXPECT_EQ(find_pattern("k3")->id, PatternId::C3);
  EXPECT_EQ(find_pattern("w6"), nullptr);
}

TEST(Catalog, EveryPatternCountsItselfOnce) {
  for (const auto& p : pattern_catalog()) {
    EXPECT_EQ(count_induced(p.graph, p), 1u) << p.name;
    EXPECT_EQ(naive::count_induced(p.graph, p.graph), 1u) << p.name;
  }
}

TEST(Catalog, DefinitionsByConstruction) {
  EXPECT_TRUE(is_isomorphic(pattern(PatternId::W4).graph, join(Graph(1), graphs::cycle(4))));
  EXPECT_TRUE(is_isomorphic(pattern(PatternId::W5).graph, join(Graph(1), graphs::cycle(5))));
  EXPECT_TRUE(is_isomorphic(pattern(PatternId::Diamond).graph, join(Graph(1), graphs::path(3))));
  EXPECT_TRUE(is_isomorphic(pattern(PatternId::Gem).graph, join(Graph(1), graphs::path(4))));
  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_TRUE(is_isomorphic(pattern(PatternId::Crown).graph, join(Graph(1), star)));
  EXPECT_TRUE(is_isomorphic(pattern(PatternId::House).graph, complement(graphs::path(5))));
  EXPECT_TRUE(is_isomorphic(pattern(PatternId::P2UnionK3).graph,
                            disjoint_union(graphs::complete(2), graphs::complete(3))));
  EXPECT_TRUE(is_isomorphic(pattern(PatternId::TwoK3).graph,
                            disjoint_union(graphs::complete(3), graphs::complete(3))));
  EXPECT_TRUE(is_isomorphic(pattern(PatternId::K1UnionK3).graph,
                            disjoint_union(Graph(1), graphs::complete(3))));

  // HVN: K4 plus a vertex with exactly two neighbours in it.
  GraphBuilder hvn(5);
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = i + 1; j < 4; ++j) hvn.add_edge(i, j);
  hvn.add_edge(4, 2).add_edge(4, 3);
  EXPECT_TRUE(is_isomorphic(pattern(PatternId::HVN).graph, std::move(hvn).build()));

  // Paraglider: diamond plus a vertex on its two degree-2 vertices.
  const Graph para = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 3}});
  EXPECT_TRUE(is_isomorphic(pattern(PatternId::Paraglider).graph, para));

  // Hammer: K3 with one vertex identified with an end of a P3.
  const Graph hammer = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}});
  EXPECT_TRUE(is_isomorphic(pattern(PatternId::Hammer).graph, hammer));
}

// Configurations assembled from the case analysis, edge by edge.
TEST(Catalog, ConfigurationsFromTheCaseAnalysis) {
  // Triangle {v, x, x'} with x-t1, x'-t2 into triangle {t1, t2, t3}.
  enum { v, x, xp, t1, t2, t3 };
  const Graph a = Graph::from_edges(6, {{v, x}, {v, xp}, {x, xp}, {t1, t2}, {t1, t3}, {t2, t3},
                                        {x, t1}, {xp, t2}});
  EXPECT_TRUE(is_isomorphic(a, pattern(PatternId::F1).graph));

  // Triangle {v1, v2, v3}, path u2-u1-u3, cross edges v2u2 and v3u3.
  enum { v1, v2, v3, u1, u2, u3 };
  const Graph b = Graph::from_edges(6, {{v1, v2}, {v2, v3}, {v1, v3}, {u2, u1}, {u1, u3},
                                        {v2, u2}, {v3, u3}});
  EXPECT_TRUE(is_isomorphic(b, pattern(PatternId::F3).graph));

  // 6-hole u1 v1 u2 v2 u3 v3 with the v's joined into a triangle.
  const Graph c = Graph::from_edges(6, {{u1, v1}, {v1, u2}, {u2, v2}, {v2, u3}, {u3, v3}, {v3, u1},
                                        {v1, v2}, {v2, v3}, {v3, v1}});
  EXPECT_TRUE(is_isomorphic(c, pattern(PatternId::FourTriangle).graph));

  // 5-hole v1 v2 u3 u1 u2 plus a vertex complete to {u1, u2, u3}.
  const Graph f2 = Graph::from_edges(6, {{v1, v2}, {v2, u3}, {u3, u1}, {u1, u2}, {u2, v1},
                                         {v3, u1}, {v3, u2}, {v3, u3}});
  EXPECT_TRUE(is_isomorphic(f2, pattern(PatternId::F2).graph));

  // F4 = F1 plus one chord, F3 = F1 minus the u2u3 edge.
  EXPECT_EQ(pattern(PatternId::F4).graph.size(), pattern(PatternId::F1).graph.size() + 1);
  EXPECT_EQ(pattern(PatternId::F3).graph.size() + 1, pattern(PatternId::F1).graph.size());
}

TEST(FindInduced, Examples) {
  const Graph w4 = pattern(PatternId::W4).graph;
  const auto rim = find_induced(w4, PatternId::C4);
  ASSERT_TRUE(rim);
  EXPECT_EQ(rim->map, (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_TRUE(is_induced_embedding(w4, pattern(PatternId::C4).graph, rim->map));

  EXPECT_FALSE(find_induced(graphs::cycle(5), PatternId::P3UnionP2));

  const auto c5 = find_induced(graphs::petersen(), PatternId::C5);
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->map, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(c5->map, naive::least_embedding(graphs::petersen(), pattern(PatternId::C5).graph));
}

TEST(CountInduced, Examples) {
  EXPECT_EQ(count_induced(graphs::complete(4), PatternId::C3), 4u);
  EXPECT_EQ(count_induced(graphs::cycle(5), PatternId::P3), 5u);
  const Graph petersen = graphs::petersen();
  const auto expected = naive::count_induced(petersen, graphs::cycle(5));
  EXPECT_EQ(expected, 12u);
  EXPECT_EQ(count_induced(petersen, PatternId::C5), expected);
}

TEST(FindInduced, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const Graph g = testing_hosts::random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
    for (const auto& p : pattern_catalog()) {
      const auto found = find_induced(g, p.id);
      ASSERT_EQ(found.has_value(), naive::contains_induced(g, p.graph))
          << p.name << " in " << graph6_encode(g);
      if (found) {
        EXPECT_TRUE(is_induced_embedding(g, p.graph, found->map));
        EXPECT_EQ(found->map, naive::least_embedding(g, p.graph)) << p.name;
      }
    }
  }
}

TEST(FindInduced, RestrictedToAllowedSet) {
  // K2 ∪ K5: inside the K5 there is no induced 2K2.
  const Graph g = disjoint_union(graphs::complete(2), graphs::complete(5));
  VertexSet right = g.make_set({2, 3, 4, 5, 6});
  EXPECT_TRUE(find_induced(g, PatternId::C3, right));
  EXPECT_FALSE(find_induced(g, PatternId::TwoK2, right));
  EXPECT_TRUE(find_induced(g, PatternId::TwoK2));
  EXPECT_FALSE(find_induced(g, PatternId::C3, g.make_set({0, 1, 2})));
}

TEST(FindInduced, MonotoneUnderInducedSubgraphs) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing_hosts::random_graph(10, 0.5, rng);
    VertexSet s(10);
    for (Vertex v = 0; v < 10; ++v)
      if (rng() % 2) s.insert(v);
    const Graph h = induced(g, s);
    for (const auto& p : pattern_catalog()) {
      if (contains_induced(h, p.id)) {
        EXPECT_TRUE(contains_induced(g, p.id)) << p.name;
      }
    }
  }
}

TEST(FindInduced, RejectsOversizedPatterns) {
  EXPECT_THROW(for_each_induced(graphs::complete(10), graphs::cycle(9), [](auto) { return true; }),
               std::invalid_argument);
}

TEST(ClassMembership, Examples) {
  EXPECT_TRUE(class_membership(groetzsch()).member);
  EXPECT_TRUE(class_membership(schlafli_complement()).member);

  const ClassReport r = class_membership(disjoint_union(graphs::cycle(5), graphs::complete(2)));
  EXPECT_FALSE(r.member);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].pattern, PatternId::P3UnionP2);
  EXPECT_EQ(r.violations[0].map, (std::vector<Vertex>{0, 1, 2, 5, 6}));

  const ClassReport w = class_membership(pattern(PatternId::W4).graph);
  ASSERT_EQ(w.violations.size(), 1u);
  EXPECT_EQ(w.violations[0].pattern, PatternId::W4);
  EXPECT_EQ(is_class_member(pattern(PatternId::W4).graph), w.member);
}

// A later dispatch case's "-free" preconditions follow from earlier cases not firing.
TEST(DispatchChain, TriggersContainEarlierTriggers) {
  const auto contains = [](PatternId host, PatternId sub) {
    return contains_induced(pattern(host).graph, sub);
  };
  EXPECT_TRUE(contains(PatternId::TwoK3, PatternId::P2UnionK3));
  EXPECT_TRUE(contains(PatternId::P2UnionK4, PatternId::P2UnionK3));
  EXPECT_TRUE(contains(PatternId::W5, PatternId::C5));
  for (PatternId f : {PatternId::F1, PatternId::F2, PatternId::F3, PatternId::F4, PatternId::Hammer}) {
    EXPECT_TRUE(contains(f, PatternId::K1UnionK3)) << pattern_name(f);
    EXPECT_FALSE(contains(f, PatternId::P2UnionK3)) << pattern_name(f);
  }
  EXPECT_FALSE(contains(PatternId::FourTriangle, PatternId::P2UnionK3));
}
