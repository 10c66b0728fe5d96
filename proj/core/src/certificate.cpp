#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "chibound/certificate_json.hpp"
#include "chibound/colorer.hpp"

namespace chibound {

namespace {

// Plain Bron–Kerbosch with pivoting; kept apart from the oracle clique solver.
void bron_kerbosch(const Graph& g, int size, VertexSet p, VertexSet x, int& best) {
  if (p.empty()) {
    best = std::max(best, size);
    return;
  }
  if (size + p.count() <= best) return;
  const Vertex pivot = (p | x).first();
  const VertexSet branch = p - g.neighbors(pivot);
  for (Vertex v : branch) {
    bron_kerbosch(g, size + 1, p & g.neighbors(v), x & g.neighbors(v), best);
    p.erase(v);
    x.insert(v);
  }
}

int recomputed_omega(const Graph& g) {
  int best = 0;
  bron_kerbosch(g, 0, g.vertices(), g.empty_set(), best);
  return best;
}

CertificateCheck fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

CertificateCheck check_certificate(const Graph& g, const ColoringCertificate& cert) {
  const int n = g.order();
  const auto& colors = cert.coloring.colors;
  if (static_cast<int>(colors.size()) != n) {
    return fail("colouring has " + std::to_string(colors.size()) + " entries for " +
                std::to_string(n) + " vertices");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (colors[static_cast<std::size_t>(v)] < 1)
      return fail("vertex " + std::to_string(v) + " is uncoloured");
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) && colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)])
        return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic");
    }
  }

  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<std::set<int>> palettes;
  int budget_sum = 0;
  for (std::size_t i = 0; i < cert.trace.parts.size(); ++i) {
    const auto& part = cert.trace.parts[i];
    if (part.vertices.universe() != n) return fail("part " + part.name + " has the wrong universe");
    std::set<int> palette;
    for (Vertex v : part.vertices) {
      auto& o = owner[static_cast<std::size_t>(v)];
      if (o >= 0) return fail("vertex " + std::to_string(v) + " lies in two parts");
      o = static_cast<int>(i);
      palette.insert(colors[static_cast<std::size_t>(v)]);
    }
    if (static_cast<int>(palette.size()) > part.budget()) {
      return fail("part " + part.name + " uses " + std::to_string(palette.size()) +
                  " colours, budget " + std::to_string(part.budget()));
    }
    for (std::size_t j = 0; j < palettes.size(); ++j) {
      for (int c : palette) {
        if (palettes[j].count(c))
          return fail("parts " + cert.trace.parts[j].name + " and " + part.name +
                      " share colour " + std::to_string(c));
      }
    }
    palettes.push_back(std::move(palette));
    budget_sum += part.budget();
  }
  for (Vertex v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] < 0)
      return fail("vertex " + std::to_string(v) + " lies in no part");
  }

  const int omega = recomputed_omega(g);
  if (cert.omega != omega) {
    return fail("certificate claims omega " + std::to_string(cert.omega) + ", recomputed " +
                std::to_string(omega));
  }
  if (cert.budget > 2 * omega) return fail("budget " + std::to_string(cert.budget) + " exceeds 2 omega");
  if (budget_sum > cert.budget) {
    return fail("part budgets sum to " + std::to_string(budget_sum) + " > budget " +
                std::to_string(cert.budget));
  }
  int palette = 0;
  for (int c : colors) palette = std::max(palette, c);
  if (palette > cert.budget) {
    return fail("palette " + std::to_string(palette) + " exceeds budget " + std::to_string(cert.budget));
  }
  for (const auto& a : cert.trace.assertions) {
    if (!a.ok) return fail("assertion " + a.ref + " failed");
  }
  return {};
}

nlohmann::ordered_json certificate_to_json(const ColoringCertificate& cert) {
  nlohmann::ordered_json j;
  j["omega"] = cert.omega;
  j["budget"] = cert.budget;
  j["colors"] = cert.coloring.colors;
  j["branch"] = std::string(branch_name(cert.trace.branch));
  j["anchor"] = cert.trace.anchor;
  auto parts = nlohmann::ordered_json::array();
  for (const auto& p : cert.trace.parts) {
    nlohmann::ordered_json jp;
    jp["name"] = p.name;
    jp["vertices"] = p.vertices.to_vector();
    jp["strategy"] = std::string(strategy_name(p.strategy.kind));
    jp["budget"] = p.budget();
    jp["colors_used"] = p.colors_used;
    parts.push_back(std::move(jp));
  }
  j["parts"] = std::move(parts);
  auto assertions = nlohmann::ordered_json::array();
  for (const auto& a : cert.trace.assertions) {
    assertions.push_back(nlohmann::ordered_json{{"ref", a.ref}, {"ok", a.ok}});
  }
  j["assertions"] = std::move(assertions);
  j["colors_used"] = cert.colors_used();
  j["class_checked"] = cert.class_checked;
  return j;
}

ColoringCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    ColoringCertificate cert;
    cert.omega = j.at("omega").get<int>();
    cert.budget = j.at("budget").get<int>();
    cert.coloring.colors = j.at("colors").get<std::vector<int>>();
    const int n = static_cast<int>(cert.coloring.colors.size());
    const auto branch = parse_branch(j.at("branch").get<std::string>());
    if (!branch) throw std::invalid_argument("unknown branch " + j.at("branch").dump());
    cert.trace.branch = *branch;
    cert.trace.anchor = j.at("anchor").get<std::vector<Vertex>>();
    for (const auto& jp : j.at("parts")) {
      PartTrace p;
      p.name = jp.at("name").get<std::string>();
      const auto members = jp.at("vertices").get<std::vector<Vertex>>();
      p.vertices = VertexSet(n, std::span<const Vertex>(members));
      const auto strategy = jp.at("strategy").get<std::string>();
      bool known = false;
      for (auto kind : {StrategyKind::Independent, StrategyKind::Cliques, StrategyKind::Bipartite,
                        StrategyKind::IndexedCover, StrategyKind::ExactWithBudget}) {
        if (strategy_name(kind) == strategy) {
          p.strategy.kind = kind;
          known = true;
        }
      }
      if (!known) throw std::invalid_argument("unknown strategy " + strategy);
      p.strategy.budget = jp.at("budget").get<int>();
      p.colors_used = jp.at("colors_used").get<int>();
      cert.trace.parts.push_back(std::move(p));
    }
    for (const auto& ja : j.at("assertions")) {
      cert.trace.assertions.push_back({ja.at("ref").get<std::string>(), ja.at("ok").get<bool>()});
    }
    cert.class_checked = j.value("class_checked", false);
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace chibound
