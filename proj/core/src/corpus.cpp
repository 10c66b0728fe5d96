#include "chibound/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "chibound/graph6.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

int SplitMix64::uniform_int(int lo, int hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % range);
}

Graph random_graph(int n, double p, SplitMix64& rng) {
  GraphBuilder b(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (rng.next_double() < p) b.add_edge(i, j);
  return std::move(b).build();
}

Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 0 || n > 11) throw std::invalid_argument("graph_from_code supports n <= 11");
  GraphBuilder b(n);
  int bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if ((code >> bit) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

std::vector<Graph> sample_class(const SampleConfig& cfg, SampleStats* stats) {
  if (!(cfg.p > 0.0 && cfg.p < 1.0)) throw std::invalid_argument("edge probability must lie in (0, 1)");
  if (cfg.n_min < 0 || cfg.n_max < cfg.n_min) throw std::invalid_argument("empty order range");
  SplitMix64 rng(cfg.seed);
  SampleStats local;
  std::vector<Graph> out;
  out.reserve(cfg.count);
  std::uint64_t window_draws = 0;
  std::uint64_t window_accepted = 0;
  const auto window_floor = static_cast<double>(cfg.window) * cfg.min_acceptance;
  while (out.size() < cfg.count) {
    const int n = rng.uniform_int(cfg.n_min, cfg.n_max);
    Graph g = random_graph(n, cfg.p, rng);
    ++local.draws;
    ++window_draws;
    if (is_class_member(g)) {
      ++local.accepted;
      ++window_accepted;
      out.push_back(std::move(g));
    }
    if (window_draws == cfg.window) {
      if (static_cast<double>(window_accepted) < window_floor) {
        if (stats) *stats = local;
        std::ostringstream msg;
        msg << "acceptance " << window_accepted << "/" << window_draws << " below "
            << cfg.min_acceptance << " for n in [" << cfg.n_min << "," << cfg.n_max
            << "], p = " << cfg.p << ", seed = " << cfg.seed;
        throw SampleGaveUp(msg.str(), local);
      }
      window_draws = 0;
      window_accepted = 0;
    }
  }
  if (stats) *stats = local;
  return out;
}

CorpusRecord evaluate_member(const Graph& g, const EvalOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CorpusRecord rec;
  rec.graph6 = graph6_encode(g);
  rec.n = g.order();
  try {
    ColorOptions co;
    co.assert_proofs = options.assert_proofs;
    co.time_budget = options.time_budget;
    const ColoringCertificate cert = color_bounded(g, co);
    rec.omega = cert.omega;
    rec.branch = cert.trace.branch;
    rec.colors_used = cert.colors_used();
    rec.assertions = cert.trace.assertions;
    const CertificateCheck check = check_certificate(g, cert);
    rec.ok = check.ok && rec.colors_used <= 2 * rec.omega;
    if (!check.ok) rec.failure = check.failure;
  } catch (const ColoringError& e) {
    rec.ok = false;
    rec.omega = clique_number(g);
    if (e.trace()) rec.branch = e.trace()->branch;
    rec.failure = std::string(error_kind_name(e.kind())) + ": " + e.what();
  }
  if (options.oracle) {
    const ChromaticResult chi = chromatic_number(g, deadline_after(options.time_budget));
    if (chi.optimal()) rec.chi = chi.value();
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

namespace {

constexpr std::uint64_t kBatch = 4096;

template <class GraphAt>
CorpusSummary run_corpus(std::uint64_t total, GraphAt graph_at, const CorpusOptions& options,
                         const RecordSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  CorpusSummary summary;
  const int workers = std::max(1, options.workers);
  const std::uint64_t batch = kBatch * static_cast<std::uint64_t>(workers);
  std::vector<std::optional<CorpusRecord>> slots;

  auto work = [&](std::uint64_t base, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Graph g = graph_at(i);
      if (is_class_member(g)) slots[i - base] = evaluate_member(g, options.eval);
    }
  };

  bool stopped = false;
  for (std::uint64_t lo = 0; lo < total && !stopped; lo += batch) {
    const std::uint64_t hi = std::min(total, lo + batch);
    slots.assign(hi - lo, std::nullopt);
    if (workers == 1) {
      work(lo, lo, hi);
    } else {
      std::vector<std::thread> pool;
      const std::uint64_t step = (hi - lo + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        const std::uint64_t a = lo + step * static_cast<std::uint64_t>(w);
        const std::uint64_t b = std::min(hi, a + step);
        if (a < b) pool.emplace_back(work, lo, a, b);
      }
      for (auto& t : pool) t.join();
    }
    for (std::uint64_t i = lo; i < hi; ++i) {
      ++summary.graphs_seen;
      auto& slot = slots[i - lo];
      if (!slot) continue;
      const CorpusRecord& rec = *slot;
      ++summary.members;
      ++summary.branches[static_cast<std::size_t>(rec.branch)];
      if (std::any_of(rec.assertions.begin(), rec.assertions.end(), [](const auto& a) { return !a.ok; }))
        ++summary.assertion_failures;
      if (rec.chi) {
        const int gap = *rec.chi - 2 * rec.omega;
        summary.max_gap = summary.max_gap ? std::max(*summary.max_gap, gap) : gap;
      }
      if (!rec.ok) {
        ++summary.violations;
        if (!summary.first_failure) summary.first_failure = rec;
      }
      if (sink && !sink(rec)) stopped = true;
      if (!rec.ok && options.stop_on_failure) stopped = true;
      if (stopped) break;
    }
  }
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace

CorpusSummary scan_exhaustive(int n, const CorpusOptions& options, const RecordSink& sink) {
  if (n < 0 || n > kMaxExhaustiveOrder) {
    throw std::invalid_argument("exhaustive generation supports n <= " +
                                std::to_string(kMaxExhaustiveOrder) + "; supply larger graphs as input");
  }
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  return run_corpus(total, [n](std::uint64_t code) { return graph_from_code(n, code); }, options, sink);
}

CorpusSummary scan_graphs(const std::vector<Graph>& graphs, const CorpusOptions& options,
                          const RecordSink& sink) {
  return run_corpus(graphs.size(), [&](std::uint64_t i) { return graphs[i]; }, options, sink);
}

int workers_from_environment() {
  const char* raw = std::getenv("CHIBOUND_WORKERS");
  if (!raw || !*raw) return 1;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1) return 1;
  return static_cast<int>(std::min<long>(v, 256));
}

void write_csv_header(std::ostream& out) {
  out << "graph6,n,omega,chi,colors_used,branch,ok,millis\n";
}

void write_csv_record(std::ostream& out, const CorpusRecord& r) {
  out << r.graph6 << ',' << r.n << ',' << r.omega << ',';
  if (r.chi) out << *r.chi;
  out << ',' << r.colors_used << ',' << branch_name(r.branch) << ',' << (r.ok ? "true" : "false")
      << ',' << std::fixed << std::setprecision(3) << r.millis << std::defaultfloat << '\n';
}

nlohmann::ordered_json record_to_json(const CorpusRecord& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["omega"] = r.omega;
  j["chi"] = r.chi ? nlohmann::ordered_json(*r.chi) : nlohmann::ordered_json(nullptr);
  j["colors_used"] = r.colors_used;
  j["branch"] = std::string(branch_name(r.branch));
  j["ok"] = r.ok;
  j["millis"] = std::round(r.millis * 1000.0) / 1000.0;
  return j;
}

nlohmann::ordered_json summary_to_json(const CorpusSummary& s) {
  nlohmann::ordered_json j;
  j["graphs_seen"] = s.graphs_seen;
  j["members"] = s.members;
  j["violations"] = s.violations;
  j["assertion_failures"] = s.assertion_failures;
  j["max_gap"] = s.max_gap ? nlohmann::ordered_json(*s.max_gap) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (int b = 0; b < kBranchCount; ++b) {
    const auto count = s.branches[static_cast<std::size_t>(b)];
    if (count > 0) hist[std::string(branch_name(static_cast<BranchId>(b)))] = count;
  }
  j["branches"] = std::move(hist);
  if (s.sampling) {
    j["sampling"] = {{"draws", s.sampling->draws},
                     {"accepted", s.sampling->accepted},
                     {"acceptance_rate", s.sampling->acceptance_rate()}};
  }
  if (s.first_failure) {
    j["first_failure"] = record_to_json(*s.first_failure);
    j["first_failure"]["failure"] = s.first_failure->failure;
  }
  j["seconds"] = std::round(s.seconds * 1000.0) / 1000.0;
  return j;
}

}  // namespace chibound
