#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpath/constructions.hpp"
#include "hyperpath/hypergraph.hpp"
#include "hyperpath/oracle.hpp"
#include "hyperpath/report.hpp"

namespace hyperpath {

// Certifies an extremal construction with the exact oracle:
//   star:      no P_{2k+1}, a P_{2k} when n >= 4k+1, δ_1 = kn - k^2/2 - 3k/2
//   star_plus: no P_{2k+2}, a P_{2k+1} when n >= 4k+3, δ_1 one larger
// plus the edge-count identity. Only r = 3 is supported. The overload taking
// `instance` checks a caller-supplied graph against the same expectations.
VerificationReport verify_construction(ConstructionKind kind, int r, int n, int k,
                                       SearchLimits limits = {});
VerificationReport verify_construction(ConstructionKind kind, int r, int n, int k,
                                       const Hypergraph& instance, SearchLimits limits = {});

struct ExhaustiveResult {
  VerificationReport report;
  std::uint64_t total = 0;   // graphs with δ_1 >= the bound
  std::uint64_t passed = 0;  // of those, graphs containing P_t
  std::vector<Hypergraph> counterexamples;  // first kMaxStoredCounterexamples
};

inline constexpr std::size_t kMaxStoredCounterexamples = 1000;

// All labeled 3-graphs on n <= 6 vertices with δ_1 >= min_degree, each
// checked for a linear t-path with the exact oracle.
ExhaustiveResult exhaustive_check(int n, std::size_t min_degree, std::size_t t);

// Simple 3-graph with δ_1 >= min_degree, deterministic per seed. Each triple
// is drawn independently with p = (δ + 3 sqrt δ) / C(n-1, 2) (capped at 1);
// then, vertex by vertex, uniformly random missing triples through a
// deficient vertex are added until its degree reaches δ.
// Throws Error{InfeasibleDegree} when δ > C(n-1, 2).
Hypergraph random_min_degree_graph(int n, std::size_t min_degree, std::uint64_t seed);

enum class GeneratorKind { ConditionedRandom, Construction, Exhaustive };
std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

struct ExperimentConfig {
  int n = 0;
  std::size_t t = 0;
  std::size_t min_degree = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  GeneratorKind generator = GeneratorKind::ConditionedRandom;
  // CSV destination; counterexample files go next to it. Empty = no files.
  std::string output_path;
  // The first `oracle_checks` trials are also run through the exact oracle.
  std::size_t oracle_checks = 0;
  std::uint64_t finder_budget = 0;
  // 0 = hardware concurrency. Row order never depends on it.
  unsigned threads = 0;
  // Wall time is the only nondeterministic column; it is written as "-"
  // unless explicitly requested.
  bool record_timing = false;
};

struct TrialRow {
  std::size_t trial_id = 0;
  std::uint64_t seed = 0;
  int n = 0;
  std::size_t min_degree = 0;  // observed δ_1 of the instance
  std::size_t t = 0;
  std::string finder_result;   // found | HypothesisUnmet | LemmaStepFailed | BudgetExhausted | error:<code>
  std::size_t moves = 0;
  std::string oracle_agrees;   // yes | no | - | budget
  double wall_ms = 0.0;
  bool hypotheses_met = false;
  // Hypotheses met but no path, a lemma step failed, or an invalid witness.
  bool failure = false;
  std::optional<std::string> counterexample_file;
};

struct TrialsSummary {
  std::size_t trials = 0;
  std::size_t found = 0;
  std::size_t failures = 0;
  std::size_t oracle_checked = 0;
  std::size_t oracle_agreed = 0;
  std::size_t min_observed_degree = 0;
  std::size_t total_moves = 0;
  double success_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(found) / static_cast<double>(trials);
  }
};

struct TrialsResult {
  std::vector<TrialRow> rows;  // ordered by trial id
  TrialsSummary summary;
  // Failing instances, parallel to the failing rows.
  std::vector<std::pair<std::size_t, Hypergraph>> counterexamples;
};

// Throws Error{InvalidParameter} / Error{OrderTooLarge} for an invalid config;
// per-trial errors are recorded in their row.
TrialsResult run_trials(const ExperimentConfig& config);

// CSV columns: trial_id,seed,n,delta1,t,finder_result,moves_used,oracle_agrees,wall_time
// followed by one summary row.
std::string format_csv(const TrialsResult& result, const ExperimentConfig& config);

using InstanceSampler = std::function<Hypergraph(int n, std::uint64_t seed)>;

struct LemmaSweepConfig {
  int n_min = 0;
  int n_max = 0;
  std::size_t t = 2;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  InstanceSampler sampler;
  // Cap on enumerated t-paths per instance (0 = all).
  std::size_t path_limit = 20000;
  SearchLimits limits;
};

struct LemmaSweepResult {
  VerificationReport report;
  std::size_t instances = 0;
  std::size_t hypothesis_instances = 0;  // P_{t+1}-free with δ_1 >= g(n,t), n >= 2t+17
  std::size_t paths_checked = 0;
  std::size_t bound_violations = 0;      // paths with at least one violated bound
  std::size_t contrapositive_fired = 0;  // violations that demanded a move or a C^+
  std::size_t contrapositive_failures = 0;
};

// For each sampled H: under the hypotheses, no C_{t+1}^+ and every enumerated
// t-path satisfies all bounds; in every case each violated (ii)/(iv) bound must
// yield a (t+1)-path through improve_via_codegree, and each violated (i)/(iii)
// bound must yield an oracle-confirmed C_{t+1}^+.
LemmaSweepResult lemma_sweep(const LemmaSweepConfig& config);

}  // namespace hyperpath
