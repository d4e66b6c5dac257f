#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "hyperpath/constructions.hpp"
#include "hyperpath/error.hpp"
#include "hyperpath/finder.hpp"
#include "hyperpath/harness.hpp"
#include "hyperpath/linear_path.hpp"
#include "hyperpath/oracle.hpp"
#include "hyperpath/text_format.hpp"

namespace hyperpath::cli {

namespace {

constexpr int kOk = 0;
constexpr int kAbsent = 1;
constexpr int kUsage = 2;

// Oracle cross-checks in `find` are automatic up to this order.
constexpr int kCrossCheckMaxOrder = 12;

struct GenArgs {
  std::string kind;
  int r = 3;
  int n = 0;
  int k = -1;
  int s = -1;
  std::size_t delta = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct OracleArgs {
  std::string input;
  std::size_t path = 0;
  std::size_t cycle = 0;
  std::size_t cycle_plus = 0;
  bool longest = false;
  std::uint64_t budget = 0;
};

struct FindArgs {
  std::string input;
  std::size_t length = 0;
  std::string mode = "finder";
  std::uint64_t budget = 0;
  bool trace = false;
};

struct VerifyArgs {
  std::string construction;
  bool exhaustive = false;
  int n = 0;
  int k = 0;
  int r = 3;
  std::size_t delta = 0;
  std::size_t length = 0;
};

struct ExperimentArgs {
  ExperimentConfig config;
  std::string generator = "conditioned-random";
};

Hypergraph load(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse(text);
  }
  return read_hypergraph_file(path);
}

SearchLimits limits_for(const Hypergraph& h, std::uint64_t budget) {
  if (budget != 0) return SearchLimits{budget};
  return SearchLimits{h.order() <= 30 ? 0 : kLargeOrderNodeBudget};
}

std::string path_line(std::span<const Vertex> vertices) { return "path: " + format_vertices(vertices); }

int run_gen(const GenArgs& a, std::ostream& out) {
  Hypergraph h = [&] {
    if (a.kind == "random") {
      if (a.r != 3) throw Error(ErrorCode::InvalidParameter, "random generation needs r = 3");
      return random_min_degree_graph(a.n, a.delta, a.seed);
    }
    const auto kind = parse_construction_kind(a.kind);
    if (!kind) throw CLI::ValidationError("--kind", "unknown construction '" + a.kind + "'");
    int parameter = 0;
    if (*kind == ConstructionKind::Core) {
      if (a.s < 0) throw CLI::RequiredError("--s");
      parameter = a.s;
    } else if (*kind != ConstructionKind::Complete) {
      if (a.k < 0) throw CLI::RequiredError("--k");
      parameter = a.k;
    }
    return generate(ConstructionSpec{*kind, a.r, a.n, parameter});
  }();
  if (a.out.empty() || a.out == "-") {
    out << serialize(h);
  } else {
    write_hypergraph_file(a.out, h);
  }
  return kOk;
}

int run_oracle(const OracleArgs& a, std::istream& in, std::ostream& out) {
  const int selectors = (a.path != 0) + (a.cycle != 0) + (a.cycle_plus != 0) + (a.longest ? 1 : 0);
  if (selectors != 1) {
    throw CLI::ValidationError("oracle", "exactly one of --path, --cycle, --cycleplus, --longest is required");
  }
  const Hypergraph h = load(a.input, in);
  const SearchLimits limits = limits_for(h, a.budget);
  if (a.path != 0) {
    const auto p = find_path(h, a.path, limits);
    if (!p) {
      out << "absent\n";
      return kAbsent;
    }
    out << path_line(p->vertices()) << "\n";
    return kOk;
  }
  if (a.cycle != 0) {
    const auto c = find_cycle(h, a.cycle, limits);
    if (!c) {
      out << "absent\n";
      return kAbsent;
    }
    out << "cycle: " << format_vertices(c->vertices) << "\n";
    return kOk;
  }
  if (a.cycle_plus != 0) {
    const auto w = find_cycle_plus(h, a.cycle_plus, limits);
    if (!w) {
      out << "absent\n";
      return kAbsent;
    }
    out << "cycle: " << format_vertices(w->cycle_vertices()) << "\n";
    out << path_line(w->path.vertices()) << "\n";
    out << "closing: " << (w->closing + 1) << "\n";
    out << "parallel: " << (w->parallel + 1) << "\n";
    return kOk;
  }
  const LongestPath best = longest_path(h, h.order(), limits);
  out << "length: " << best.length << "\n";
  if (!best.witness) {
    out << "absent\n";
    return kAbsent;
  }
  out << path_line(best.witness->vertices()) << "\n";
  return kOk;
}

int run_find(const FindArgs& a, std::istream& in, std::ostream& out) {
  if (a.length < 1) throw CLI::ValidationError("--length", "must be at least 1");
  const Hypergraph h = load(a.input, in);

  if (a.mode == "oracle") {
    const auto p = find_path(h, a.length, limits_for(h, a.budget));
    if (!p) {
      out << "result: absent\n";
      return kAbsent;
    }
    out << "result: found\n" << path_line(p->vertices()) << "\n";
    return kOk;
  }

  const FinderOutcome outcome = find_guaranteed(h, a.length, FinderOptions{a.budget});
  if (a.trace) {
    for (const MoveRecord& m : outcome.trace) {
      out << "move " << to_string(m.kind) << " length=" << m.length << " m=" << m.m_size << "\n";
    }
  }
  bool ok = false;
  if (const LinearPath* p = outcome.path()) {
    ok = is_valid_path(h, *p);
    out << "result: " << (ok ? "found" : "invalid_path") << "\n" << path_line(p->vertices()) << "\n";
  } else {
    const ViolationReport& v = *outcome.violation();
    out << "result: " << to_string(v.reason) << "\n";
    if (!v.detail.empty()) out << "detail: " << v.detail << "\n";
    if (v.path) out << "stuck " << path_line(v.path->vertices()) << "\n";
  }
  out << "moves: " << outcome.moves << "\n";

  if (h.order() <= kCrossCheckMaxOrder) {
    const bool exists = find_path(h, a.length).has_value();
    const bool agrees = exists == outcome.found();
    out << "oracle: " << (exists ? "present" : "absent") << " " << (agrees ? "agrees" : "disagrees") << "\n";
    ok = ok && agrees;
  }
  return ok ? kOk : kAbsent;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  VerificationReport report;
  if (a.exhaustive) {
    if (!a.construction.empty()) throw CLI::ValidationError("verify", "--exhaustive excludes --construction");
    if (a.length < 1) throw CLI::RequiredError("--length");
    report = exhaustive_check(a.n, a.delta, a.length).report;
  } else {
    if (a.construction.empty()) throw CLI::RequiredError("--construction or --exhaustive");
    const auto kind = parse_construction_kind(a.construction);
    if (!kind) throw CLI::ValidationError("--construction", "unknown construction '" + a.construction + "'");
    report = verify_construction(*kind, a.r, a.n, a.k);
  }
  out << report.to_text();
  return report.passed() ? kOk : kAbsent;
}

int run_experiment(ExperimentArgs& a, std::ostream& out) {
  const auto generator = parse_generator_kind(a.generator);
  if (!generator) throw CLI::ValidationError("--generator", "unknown generator '" + a.generator + "'");
  a.config.generator = *generator;
  const TrialsResult result = run_trials(a.config);
  if (a.config.output_path.empty()) {
    out << format_csv(result, a.config);
  } else {
    const TrialsSummary& s = result.summary;
    char rate[32];
    std::snprintf(rate, sizeof rate, "%.6f", s.success_rate());
    out << "trials: " << s.trials << "\n"
        << "found: " << s.found << "\n"
        << "failures: " << s.failures << "\n"
        << "success_rate: " << rate << "\n"
        << "oracle_agreed: " << s.oracle_agreed << "/" << s.oracle_checked << "\n"
        << "min_delta1: " << s.min_observed_degree << "\n"
        << "total_moves: " << s.total_moves << "\n"
        << "csv: " << a.config.output_path << "\n";
    for (const TrialRow& row : result.rows) {
      if (row.counterexample_file) out << "counterexample: " << *row.counterexample_file << "\n";
    }
  }
  return result.summary.failures == 0 ? kOk : kAbsent;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"3-uniform hypergraph linear path lab", "hyperpath"};
  app.require_subcommand(1, 1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a construction or a random instance in the text format");
  gen_cmd->add_option("--kind", gen.kind, "star | core | star_plus | complete | random")->required();
  gen_cmd->add_option("--r", gen.r, "Uniformity")->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Number of vertices")->required();
  gen_cmd->add_option("--k", gen.k, "Size of A (star, star_plus)");
  gen_cmd->add_option("--s", gen.s, "Core size (core)");
  gen_cmd->add_option("--delta", gen.delta, "Minimum degree (random)");
  gen_cmd->add_option("--seed", gen.seed, "Seed (random)");
  gen_cmd->add_option("--out", gen.out, "Output file; stdout when omitted");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact search for linear paths and cycles");
  oracle_cmd->add_option("-i,--input", oracle.input, "Hypergraph file, - for stdin")->required();
  oracle_cmd->add_option("--path,--length", oracle.path, "Find a linear path of this length");
  oracle_cmd->add_option("--cycle", oracle.cycle, "Find a linear cycle of this length");
  oracle_cmd->add_option("--cycleplus", oracle.cycle_plus, "Find a linear cycle of this length with a parallel edge");
  oracle_cmd->add_flag("--longest", oracle.longest, "Report a longest linear path");
  oracle_cmd->add_option("--budget", oracle.budget, "Search node budget; 0 selects the default");

  FindArgs find;
  auto* find_cmd = app.add_subcommand("find", "Constructive path finder");
  find_cmd->add_option("-i,--input", find.input, "Hypergraph file, - for stdin")->required();
  find_cmd->add_option("--length", find.length, "Target path length")->required();
  find_cmd->add_option("--mode", find.mode, "finder | oracle")
      ->check(CLI::IsMember({"finder", "oracle"}))
      ->capture_default_str();
  find_cmd->add_option("--budget", find.budget, "Move budget (finder) or node budget (oracle); 0 = default");
  find_cmd->add_flag("--trace", find.trace, "Print each accepted move");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Certify a construction or run an exhaustive check");
  verify_cmd->add_option("--construction", verify.construction, "star | star_plus");
  verify_cmd->add_flag("--exhaustive", verify.exhaustive, "Check every labeled 3-graph on n <= 6 vertices");
  verify_cmd->add_option("--n", verify.n, "Number of vertices")->required();
  verify_cmd->add_option("--k", verify.k, "Construction parameter");
  verify_cmd->add_option("--r", verify.r, "Uniformity")->capture_default_str();
  verify_cmd->add_option("--delta", verify.delta, "Minimum degree filter (exhaustive)");
  verify_cmd->add_option("--length", verify.length, "Target path length (exhaustive)");

  ExperimentArgs experiment;
  auto& cfg = experiment.config;
  auto* experiment_cmd = app.add_subcommand("experiment", "Seeded finder trials written as CSV");
  experiment_cmd->add_option("--n", cfg.n, "Number of vertices")->required();
  experiment_cmd->add_option("--delta", cfg.min_degree, "Minimum degree");
  experiment_cmd->add_option("--length", cfg.t, "Target path length")->required();
  experiment_cmd->add_option("--trials", cfg.trials, "Trial count")->capture_default_str();
  experiment_cmd->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  experiment_cmd->add_option("--out", cfg.output_path, "CSV path; CSV goes to stdout when omitted");
  experiment_cmd->add_option("--generator", experiment.generator, "conditioned-random | construction | exhaustive")
      ->capture_default_str();
  experiment_cmd->add_option("--threads", cfg.threads, "Worker threads; 0 = hardware concurrency");
  experiment_cmd->add_option("--oracle-checks", cfg.oracle_checks, "Cross-check the first N trials");
  experiment_cmd->add_option("--budget", cfg.finder_budget, "Finder move budget; 0 = 16 n^2");
  experiment_cmd->add_flag("--timing", cfg.record_timing, "Record wall time (breaks byte-identical CSV)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, out);
    if (*oracle_cmd) return run_oracle(oracle, in, out);
    if (*find_cmd) return run_find(find, in, out);
    if (*verify_cmd) return run_verify(verify, out);
    if (*experiment_cmd) return run_experiment(experiment, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::OracleBudget) {
      out << "exhausted\n";
      err << "error: " << e.what() << "\n";
      return kAbsent;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hyperpath::cli
