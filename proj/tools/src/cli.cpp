#include "chibound_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "chibound/certificate_json.hpp"
#include "chibound/colorer.hpp"
#include "chibound/corpus.hpp"
#include "chibound/graph6.hpp"
#include "chibound/oracles.hpp"
#include "chibound/patterns.hpp"
#include "chibound/witnesses.hpp"

namespace chibound::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv };

struct Settings {
  std::string input = "-";
  std::string witness;
  std::string format = "json";
  int n = -1;
  int n_min = -1;
  int n_max = -1;
  double p = 0.5;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  bool strict = false;
  bool assert_proofs = false;
  bool oracle = false;
  bool records = false;
  bool graphs_only = false;
  std::optional<long> time_budget_ms;
};

std::vector<Graph> load_graphs(const std::string& path, std::istream& in) {
  if (path == "-") return read_graph6_stream(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open " + path);
  return read_graph6_stream(file);
}

std::optional<std::chrono::milliseconds> time_budget(const Settings& s) {
  if (!s.time_budget_ms) return std::nullopt;
  return std::chrono::milliseconds(*s.time_budget_ms);
}

ordered_json embedding_json(const PatternEmbedding& e) {
  return {{"pattern", std::string(pattern_name(e.pattern))}, {"map", e.map}};
}

int run_check(const Settings& s, std::istream& in, std::ostream& out) {
  bool all_members = true;
  for (const Graph& g : load_graphs(s.input, in)) {
    const ClassReport report = class_membership(g);
    ordered_json j;
    j["graph6"] = graph6_encode(g);
    j["member"] = report.member;
    auto violations = ordered_json::array();
    for (const auto& e : report.violations) violations.push_back(embedding_json(e));
    j["violations"] = std::move(violations);
    out << j.dump() << '\n';
    all_members = all_members && report.member;
  }
  return all_members ? kOk : kViolation;
}

int run_color(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  ColorOptions options;
  options.strict = s.strict;
  options.assert_proofs = s.assert_proofs;
  options.time_budget = time_budget(s);
  int status = kOk;
  for (const Graph& g : load_graphs(s.input, in)) {
    const std::string g6 = graph6_encode(g);
    try {
      const ColoringCertificate cert = color_bounded(g, options);
      out << certificate_to_json(cert).dump() << '\n';
      const CertificateCheck check = check_certificate(g, cert);
      if (!check.ok) {
        err << "certificate check failed for " << g6 << ": " << check.failure << '\n';
        status = kViolation;
      }
    } catch (const ColoringError& e) {
      err << error_kind_name(e.kind()) << " on " << g6 << ": " << e.what() << '\n';
      for (const auto& v : e.violations()) err << "  induced " << embedding_json(v).dump() << '\n';
      status = kViolation;
    }
  }
  return status;
}

int run_oracle(const Settings& s, std::istream& in, std::ostream& out) {
  const Deadline deadline = deadline_after(time_budget(s));
  for (const Graph& g : load_graphs(s.input, in)) {
    const CliqueResult clique = max_clique(g);
    const ChromaticResult chi = chromatic_number(g, deadline);
    ordered_json j;
    j["graph6"] = graph6_encode(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["omega"] = clique.size;
    j["clique"] = clique.clique;
    j["status"] = chi.optimal() ? "optimal" : "timeout";
    j["chi"] = chi.optimal() ? ordered_json(chi.value()) : ordered_json(nullptr);
    j["chi_lower"] = chi.lower;
    j["chi_upper"] = chi.upper;
    j["coloring"] = chi.coloring.colors;
    out << j.dump() << '\n';
  }
  return kOk;
}

int run_witness(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto graph = witness_by_name(s.witness);
  const auto expected = expected_witness(s.witness);
  if (!graph || !expected) throw UsageError("unknown witness '" + s.witness + "'");
  const WitnessVerification v = verify_witness(*graph, *expected, deadline_after(time_budget(s)));
  const WitnessReport& r = v.report;
  out << graph6_encode(*graph) << '\n';
  ordered_json j{{"name", r.name},   {"n", r.n},     {"m", r.m},
                 {"class_member", r.class_member}, {"omega", r.omega},
                 {"chi", r.chi},     {"bound_tight", r.bound_tight}};
  out << j.dump() << '\n';
  for (const auto& field : v.mismatches) err << "mismatch in " << field << '\n';
  return v.ok() ? kOk : kViolation;
}

Format parse_format(const std::string& f) { return f == "csv" ? Format::Csv : Format::Json; }

/// Emits records and the summary; returns the exit code.
class Reporter {
 public:
  Reporter(Format format, bool keep_records, std::ostream& out, std::ostream& err)
      : format_(format), keep_(keep_records), out_(out), err_(err) {
    if (format_ == Format::Csv) write_csv_header(out_);
  }

  RecordSink sink() {
    return [this](const CorpusRecord& r) {
      if (!r.ok) {
        err_ << "violation: " << r.graph6 << " (" << branch_name(r.branch) << "): " << r.failure
             << '\n';
      }
      if (!keep_) return true;
      if (format_ == Format::Csv) {
        write_csv_record(out_, r);
      } else {
        records_.push_back(record_to_json(r));
      }
      return true;
    };
  }

  int finish(const CorpusSummary& summary, std::optional<std::uint64_t> seed) {
    ordered_json js = summary_to_json(summary);
    if (format_ == Format::Json) {
      ordered_json doc;
      doc["summary"] = js;
      if (keep_) doc["records"] = std::move(records_);
      out_ << doc.dump() << '\n';
    } else {
      err_ << js.dump() << '\n';
    }
    if (summary.first_failure) {
      err_ << "reproducer: " << summary.first_failure->graph6;
      if (seed) err_ << " seed=" << *seed;
      err_ << '\n';
    }
    return summary.violations == 0 ? kOk : kViolation;
  }

 private:
  Format format_;
  bool keep_;
  std::ostream& out_;
  std::ostream& err_;
  ordered_json records_ = ordered_json::array();
};

CorpusOptions corpus_options(const Settings& s) {
  CorpusOptions o;
  o.eval.oracle = s.oracle;
  o.eval.assert_proofs = s.assert_proofs;
  o.eval.time_budget = time_budget(s);
  o.workers = workers_from_environment();
  return o;
}

int run_scan(const Settings& s, const std::string& input, std::istream& in, std::ostream& out,
             std::ostream& err) {
  const CorpusOptions options = corpus_options(s);
  const Format format = parse_format(s.format);
  if (input.empty()) {
    if (s.n < 0) throw UsageError("scan needs --n or --input");
    if (s.n > kMaxExhaustiveOrder) {
      throw UsageError("scan generates graphs only for n <= " + std::to_string(kMaxExhaustiveOrder) +
                       "; pass --input with a graph6 stream for larger n");
    }
    Reporter reporter(format, s.records || format == Format::Csv, out, err);
    return reporter.finish(scan_exhaustive(s.n, options, reporter.sink()), std::nullopt);
  }
  std::vector<Graph> graphs = load_graphs(input, in);
  if (s.n >= 0) {
    std::erase_if(graphs, [&](const Graph& g) { return g.order() != s.n; });
  }
  Reporter reporter(format, s.records || format == Format::Csv, out, err);
  return reporter.finish(scan_graphs(graphs, options, reporter.sink()), std::nullopt);
}

int run_sample(const Settings& s, std::ostream& out, std::ostream& err) {
  SampleConfig cfg;
  if (s.n >= 0) {
    cfg.n_min = cfg.n_max = s.n;
  } else if (s.n_min >= 0 && s.n_max >= 0) {
    cfg.n_min = s.n_min;
    cfg.n_max = s.n_max;
  } else {
    throw UsageError("sample needs --n or both --n-min and --n-max");
  }
  if (cfg.n_max < cfg.n_min) throw UsageError("--n-max is below --n-min");
  if (!(s.p > 0.0 && s.p < 1.0)) throw UsageError("--p must lie strictly between 0 and 1");
  cfg.p = s.p;
  cfg.count = s.count;
  cfg.seed = s.seed;

  SampleStats stats;
  std::vector<Graph> graphs;
  try {
    graphs = sample_class(cfg, &stats);
  } catch (const SampleGaveUp& e) {
    err << "sample gave up: " << e.what() << '\n';
    return kViolation;
  }
  if (s.graphs_only) {
    for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
    err << "accepted " << stats.accepted << " of " << stats.draws << " draws\n";
    return kOk;
  }
  Reporter reporter(parse_format(s.format), true, out, err);
  CorpusSummary summary = scan_graphs(graphs, corpus_options(s), reporter.sink());
  summary.sampling = stats;
  return reporter.finish(summary, cfg.seed);
}

void add_input(CLI::App* cmd, Settings& s) {
  cmd->add_option("input", s.input, "graph6 file, or - for standard input")->capture_default_str();
}

void add_budget(CLI::App* cmd, Settings& s) {
  cmd->add_option("--time-budget", s.time_budget_ms, "milliseconds for exact sub-colourings")
      ->check(CLI::PositiveNumber);
}

void add_format(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "record format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  Settings s;
  std::string scan_input;

  CLI::App app{"Certificate-producing 2-omega colouring for (P3uP2, W4)-free graphs", "chibound"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "class membership report per graph");
  add_input(check, s);

  auto* color = app.add_subcommand("color", "colour with at most 2 omega colours and print the certificate");
  add_input(color, s);
  color->add_flag("--strict", s.strict, "refuse graphs outside the class");
  color->add_flag("--assert-proofs", s.assert_proofs, "check and record every structural claim used");
  add_budget(color, s);

  auto* oracle = app.add_subcommand("oracle", "exact clique and chromatic numbers");
  add_input(oracle, s);
  add_budget(oracle, s);

  auto* witness = app.add_subcommand("witness", "print a tightness witness and its verified report");
  witness->add_option("name", s.witness, "groetzsch | schlafli_complement | c5")->required();
  add_budget(witness, s);

  auto* scan = app.add_subcommand("scan", "colour and verify every class member of a corpus");
  scan->add_option("--n", s.n, "vertex count")->check(CLI::NonNegativeNumber);
  scan->add_option("--input", scan_input, "graph6 stream instead of exhaustive generation");
  scan->add_flag("--oracle", s.oracle, "also compute chi exactly");
  scan->add_flag("--records", s.records, "emit one record per member");
  scan->add_flag("--assert-proofs", s.assert_proofs, "check every structural claim used");
  add_format(scan, s);
  add_budget(scan, s);

  auto* sample = app.add_subcommand("sample", "rejection-sample class members from G(n, p)");
  sample->add_option("--n", s.n, "vertex count")->check(CLI::NonNegativeNumber);
  sample->add_option("--n-min", s.n_min, "smallest vertex count")->check(CLI::NonNegativeNumber);
  sample->add_option("--n-max", s.n_max, "largest vertex count")->check(CLI::NonNegativeNumber);
  sample->add_option("--p", s.p, "edge probability")->capture_default_str();
  sample->add_option("--count", s.count, "members to draw")->capture_default_str();
  sample->add_option("--seed", s.seed, "64-bit seed")->capture_default_str();
  sample->add_flag("--oracle", s.oracle, "also compute chi exactly");
  sample->add_flag("--assert-proofs", s.assert_proofs, "check every structural claim used");
  sample->add_flag("--graphs-only", s.graphs_only, "print graph6 lines only");
  add_format(sample, s);
  add_budget(sample, s);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return run_check(s, in, out);
    if (*color) return run_color(s, in, out, err);
    if (*oracle) return run_oracle(s, in, out);
    if (*witness) return run_witness(s, out, err);
    if (*scan) return run_scan(s, scan_input, in, out, err);
    if (*sample) return run_sample(s, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Graph6Error& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace chibound::cli
