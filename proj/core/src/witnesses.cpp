#include "chibound/witnesses.hpp"

#include <stdexcept>

#include "chibound/patterns.hpp"

namespace chibound {

Graph mycielskian(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(2 * n + 1);
  for (const auto& [u, v] : g.edges()) {
    b.add_edge(u, v);
    b.add_edge(n + u, v);
    b.add_edge(n + v, u);
  }
  for (Vertex i = 0; i < n; ++i) b.add_edge(n + i, 2 * n);
  return std::move(b).build(g.name().empty() ? std::string() : "mycielskian(" + g.name() + ")");
}

Graph groetzsch() { return mycielskian(graphs::cycle(5)).renamed("groetzsch"); }

Graph schlafli_complement() {
  // a_i = i, b_i = 6 + i, pairs from 12 on.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) pairs.emplace_back(i, j);
  GraphBuilder b(27);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j && !b.adjacent(i, 6 + j)) b.add_edge(i, 6 + j);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const Vertex c = 12 + static_cast<Vertex>(p);
    const auto [j, k] = pairs[p];
    for (int i : {j, k}) {
      b.add_edge(i, c);
      b.add_edge(6 + i, c);
    }
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      const auto [s, t] = pairs[q];
      if (s != j && s != k && t != j && t != k) b.add_edge(c, 12 + static_cast<Vertex>(q));
    }
  }
  return std::move(b).build("schlafli_complement");
}

WitnessReport measure_witness(const Graph& g, std::string name, Deadline deadline) {
  WitnessReport r;
  r.name = std::move(name);
  r.n = g.order();
  r.m = g.size();
  r.class_member = is_class_member(g);
  r.omega = clique_number(g);
  const ChromaticResult chi = chromatic_number(g, deadline);
  if (!chi.optimal()) {
    throw std::runtime_error("chromatic number of " + r.name + " timed out in [" +
                             std::to_string(chi.lower) + "," + std::to_string(chi.upper) + "]");
  }
  r.chi = chi.value();
  r.bound_tight = r.chi == 2 * r.omega;
  return r;
}

WitnessVerification verify_witness(const Graph& g, const WitnessReport& expected, Deadline deadline) {
  WitnessVerification v;
  v.report = measure_witness(g, expected.name, deadline);
  const auto& r = v.report;
  auto flag = [&](bool same, const char* field) {
    if (!same) v.mismatches.emplace_back(field);
  };
  flag(r.n == expected.n, "n");
  flag(r.m == expected.m, "m");
  flag(r.class_member == expected.class_member, "class_member");
  flag(r.omega == expected.omega, "omega");
  flag(r.chi == expected.chi, "chi");
  flag(r.bound_tight == expected.bound_tight, "bound_tight");
  return v;
}

std::optional<SrgParameters> strongly_regular_parameters(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  SrgParameters p{n, g.degree(0), -1, -1};
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != p.k) return std::nullopt;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int common = (g.neighbors(u) & g.neighbors(v)).count();
      int& slot = g.adjacent(u, v) ? p.lambda : p.mu;
      if (slot < 0) slot = common;
      if (slot != common) return std::nullopt;
    }
  }
  if (p.lambda < 0) p.lambda = 0;
  if (p.mu < 0) p.mu = 0;
  return p;
}

std::optional<Graph> witness_by_name(std::string_view name) {
  if (name == "groetzsch") return groetzsch();
  if (name == "schlafli_complement" || name == "schlafli") return schlafli_complement();
  if (name == "c5") return graphs::cycle(5).renamed("c5");
  return std::nullopt;
}

std::optional<WitnessReport> expected_witness(std::string_view name) {
  if (name == "groetzsch") return WitnessReport{"groetzsch", 11, 20, true, 2, 4, true};
  if (name == "schlafli_complement" || name == "schlafli")
    return WitnessReport{"schlafli_complement", 27, 135, true, 3, 6, true};
  if (name == "c5") return WitnessReport{"c5", 5, 5, true, 2, 3, false};
  return std::nullopt;
}

}  // namespace chibound
