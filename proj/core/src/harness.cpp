#include "hyperpath/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "hyperpath/combinatorics.hpp"
#include "hyperpath/error.hpp"
#include "hyperpath/finder.hpp"
#include "hyperpath/linear_path.hpp"
#include "hyperpath/random.hpp"
#include "hyperpath/text_format.hpp"

namespace hyperpath {

namespace {

std::string presence(bool present) { return present ? "present" : "absent"; }

std::string one_line(const Hypergraph& h) {
  std::string out = "n=" + std::to_string(h.order()) + " edges:";
  for (std::size_t i = 0; i < h.size(); ++i) out += " {" + format_vertices(h.edge(i)) + "}";
  return out;
}

}  // namespace

VerificationReport verify_construction(ConstructionKind kind, int r, int n, int k,
                                       SearchLimits limits) {
  if (kind != ConstructionKind::Star && kind != ConstructionKind::StarPlus) {
    throw Error(ErrorCode::InvalidParameter, "only star and star_plus constructions are certified");
  }
  if (r != 3) throw Error(ErrorCode::InvalidParameter, "path certification needs r = 3");
  const Hypergraph h = generate(ConstructionSpec{kind, r, n, k});
  return verify_construction(kind, r, n, k, h, limits);
}

VerificationReport verify_construction(ConstructionKind kind, int r, int n, int k,
                                       const Hypergraph& instance, SearchLimits limits) {
  if (kind != ConstructionKind::Star && kind != ConstructionKind::StarPlus) {
    throw Error(ErrorCode::InvalidParameter, "only star and star_plus constructions are certified");
  }
  if (r != 3) throw Error(ErrorCode::InvalidParameter, "path certification needs r = 3");

  const bool plus = kind == ConstructionKind::StarPlus;
  const auto uk = static_cast<std::size_t>(k);
  const std::size_t free_length = plus ? 2 * uk + 2 : 2 * uk + 1;
  const std::size_t witness_length = free_length - 1;
  const std::int64_t expected_degree = plus ? star_plus_min_degree(n, k) : star_min_degree(n, k);
  std::int64_t expected_edges = binomial(n, 3) - binomial(n - k, 3);
  if (plus) expected_edges += binomial(n - k - 2, 1);

  VerificationReport report;
  report.subject = std::string(to_string(kind)) + " r=3 n=" + std::to_string(n) +
                   " k=" + std::to_string(k);
  report.replay = "gen --kind " + std::string(to_string(kind)) + " --r 3 --n " +
                  std::to_string(n) + " --k " + std::to_string(k);

  report.add("edges", std::to_string(expected_edges), std::to_string(instance.size()),
             static_cast<std::int64_t>(instance.size()) == expected_edges);
  const auto degree = static_cast<std::int64_t>(instance.min_degree());
  report.add("min_degree", std::to_string(expected_degree), std::to_string(degree),
             degree == expected_degree);

  const auto longer = find_path(instance, free_length, limits);
  report.add("P_" + std::to_string(free_length) + "-free", presence(false), presence(longer.has_value()),
             !longer);
  if (longer) report.witnesses.push_back("path: " + format_vertices(longer->vertices()));

  if (static_cast<std::size_t>(n) >= 2 * witness_length + 1) {
    const auto shorter = find_path(instance, witness_length, limits);
    report.add("has P_" + std::to_string(witness_length), presence(true),
               presence(shorter.has_value()), shorter.has_value());
    if (shorter) report.witnesses.push_back("path: " + format_vertices(shorter->vertices()));
  }
  return report;
}

ExhaustiveResult exhaustive_check(int n, std::size_t min_degree, std::size_t t) {
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "exhaustive checks are limited to n <= " + std::to_string(kMaxEnumerationOrder));
  }
  ExhaustiveResult result;
  enumerate_hypergraphs(
      n, [&](const Hypergraph& h) { return h.min_degree() >= min_degree; },
      [&](const Hypergraph& h) {
        ++result.total;
        if (find_path(h, t)) {
          ++result.passed;
        } else if (result.counterexamples.size() < kMaxStoredCounterexamples) {
          result.counterexamples.push_back(h);
        }
      });

  auto& report = result.report;
  report.subject = "all labeled 3-graphs on " + std::to_string(n) + " vertices with min degree >= " +
                   std::to_string(min_degree) + ", target P_" + std::to_string(t);
  report.replay = "verify --exhaustive --n " + std::to_string(n) + " --delta " +
                  std::to_string(min_degree) + " --length " + std::to_string(t);
  report.add("contains P_" + std::to_string(t), std::to_string(result.total),
             std::to_string(result.passed), result.passed == result.total);
  for (const auto& h : result.counterexamples) report.witnesses.push_back("counterexample " + one_line(h));
  return result;
}

Hypergraph random_min_degree_graph(int n, std::size_t min_degree, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "3-graphs need at least 3 vertices");
  const std::int64_t cap = binomial(n - 1, 2);
  if (static_cast<std::int64_t>(min_degree) > cap) {
    throw Error(ErrorCode::InfeasibleDegree, "min degree " + std::to_string(min_degree) +
                                                 " exceeds C(n-1,2) = " + std::to_string(cap));
  }
  const auto un = static_cast<std::size_t>(n);
  auto slot = [un](Vertex a, Vertex b, Vertex c) {
    Vertex s[3] = {a, b, c};
    std::sort(s, s + 3);
    return (s[0] * un + s[1]) * un + s[2];
  };

  Rng rng(seed);
  const double target = static_cast<double>(min_degree) + 3.0 * std::sqrt(static_cast<double>(min_degree));
  const double p = std::min(1.0, target / static_cast<double>(cap));

  std::vector<char> present(un * un * un, 0);
  std::vector<std::size_t> degree(un, 0);
  std::vector<Edge> edges;
  auto add = [&](Vertex a, Vertex b, Vertex c) {
    present[slot(a, b, c)] = 1;
    ++degree[a];
    ++degree[b];
    ++degree[c];
    Edge e{a, b, c};
    std::sort(e.begin(), e.end());
    edges.push_back(std::move(e));
  };

  for (Vertex a = 0; a < un; ++a) {
    for (Vertex b = a + 1; b < un; ++b) {
      for (Vertex c = b + 1; c < un; ++c) {
        if (rng.bernoulli(p)) add(a, b, c);
      }
    }
  }

  for (Vertex v = 0; v < un; ++v) {
    if (degree[v] >= min_degree) continue;
    std::vector<std::pair<Vertex, Vertex>> missing;
    for (Vertex a = 0; a < un; ++a) {
      for (Vertex b = a + 1; b < un; ++b) {
        if (a != v && b != v && !present[slot(v, a, b)]) missing.emplace_back(a, b);
      }
    }
    while (degree[v] < min_degree) {
      const auto pick = static_cast<std::size_t>(rng.below(missing.size()));
      const auto [a, b] = missing[pick];
      missing[pick] = missing.back();
      missing.pop_back();
      add(v, a, b);
    }
  }
  return Hypergraph::build(3, n, edges);
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::ConditionedRandom: return "conditioned-random";
    case GeneratorKind::Construction: return "construction";
    case GeneratorKind::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  if (name == "conditioned-random" || name == "random") return GeneratorKind::ConditionedRandom;
  if (name == "construction") return GeneratorKind::Construction;
  if (name == "exhaustive") return GeneratorKind::Exhaustive;
  return std::nullopt;
}

namespace {

void validate(const ExperimentConfig& config) {
  if (config.trials < 1) throw Error(ErrorCode::InvalidParameter, "trial count must be at least 1");
  if (config.t < 1) throw Error(ErrorCode::InvalidParameter, "path length must be at least 1");
  if (config.n < 3) throw Error(ErrorCode::InvalidParameter, "order must be at least 3");
  if (config.generator == GeneratorKind::Exhaustive && config.n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::OrderTooLarge, "exhaustive generator needs n <= 6");
  }
  if (config.generator == GeneratorKind::Construction && config.t < 3) {
    throw Error(ErrorCode::InvalidParameter, "construction generator needs t >= 3");
  }
}

// S_3(n,k) for t = 2k+1 and S_3^+(n,k) for t = 2k+2: the P_t-free extremal candidates.
Hypergraph extremal_instance(int n, std::size_t t) {
  const int k = static_cast<int>(t % 2 == 1 ? (t - 1) / 2 : (t - 2) / 2);
  return t % 2 == 1 ? gen_star(3, n, k) : gen_star_plus(3, n, k);
}

std::string counterexample_path(const std::string& csv, std::uint64_t seed, std::size_t trial) {
  std::filesystem::path base(csv);
  const std::string stem = base.stem().string();
  const std::string name = stem + ".seed" + std::to_string(seed) + ".trial" + std::to_string(trial) + ".h3";
  return (base.parent_path() / name).string();
}

TrialRow run_one(const ExperimentConfig& config, std::size_t id, std::uint64_t seed,
                 const Hypergraph& h) {
  TrialRow row;
  row.trial_id = id;
  row.seed = seed;
  row.n = h.order();
  row.t = config.t;
  row.min_degree = h.min_degree();
  row.hypotheses_met = degree_hypotheses_hold(h, config.t);

  const auto start = std::chrono::steady_clock::now();
  bool found = false;
  try {
    const FinderOutcome outcome = find_guaranteed(h, config.t, FinderOptions{config.finder_budget});
    row.moves = outcome.moves;
    if (const LinearPath* p = outcome.path()) {
      found = is_valid_path(h, *p) && p->length() == config.t;
      row.finder_result = found ? "found" : "invalid_path";
      row.failure = !found;
    } else {
      const ViolationReport& v = *outcome.violation();
      row.finder_result = std::string(to_string(v.reason));
      row.failure = v.reason == ViolationReason::LemmaStepFailed || row.hypotheses_met;
    }
  } catch (const Error& e) {
    row.finder_result = "error:" + std::string(to_string(e.code()));
    row.failure = true;
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (id < config.oracle_checks) {
    try {
      const bool exists = find_path(h, config.t).has_value();
      row.oracle_agrees = exists == found ? "yes" : "no";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OracleBudget) throw;
      row.oracle_agrees = "budget";
    }
  } else {
    row.oracle_agrees = "-";
  }
  return row;
}

}  // namespace

TrialsResult run_trials(const ExperimentConfig& config) {
  validate(config);

  // Instances are generated inside the workers except for the exhaustive
  // generator, whose enumeration order is inherently sequential.
  std::vector<Hypergraph> enumerated;
  if (config.generator == GeneratorKind::Exhaustive) {
    std::size_t seen = 0;
    enumerate_hypergraphs(
        config.n,
        [&](const Hypergraph& h) { return seen < config.trials && h.min_degree() >= config.min_degree; },
        [&](const Hypergraph& h) {
          ++seen;
          enumerated.push_back(h);
        });
  }
  const std::size_t count =
      config.generator == GeneratorKind::Exhaustive ? enumerated.size() : config.trials;

  TrialsResult result;
  result.rows.resize(count);
  std::vector<std::optional<Hypergraph>> failing(count);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t id = next++; id < count; id = next++) {
      std::uint64_t seed = derive_seed(config.seed, id);
      std::optional<Hypergraph> h;
      try {
        switch (config.generator) {
          case GeneratorKind::ConditionedRandom:
            h = random_min_degree_graph(config.n, config.min_degree, seed);
            break;
          case GeneratorKind::Construction:
            h = extremal_instance(config.n, config.t);
            break;
          case GeneratorKind::Exhaustive:
            seed = id;
            h = enumerated[id];
            break;
        }
      } catch (const Error& e) {
        TrialRow row;
        row.trial_id = id;
        row.seed = seed;
        row.n = config.n;
        row.t = config.t;
        row.finder_result = "error:" + std::string(to_string(e.code()));
        row.oracle_agrees = "-";
        row.failure = true;
        result.rows[id] = std::move(row);
        continue;
      }
      result.rows[id] = run_one(config, id, seed, *h);
      if (result.rows[id].failure) failing[id] = std::move(h);
    }
  };

  unsigned threads = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  auto& s = result.summary;
  s.trials = count;
  s.min_observed_degree = count == 0 ? 0 : result.rows.front().min_degree;
  for (std::size_t id = 0; id < count; ++id) {
    TrialRow& row = result.rows[id];
    if (row.finder_result == "found") ++s.found;
    if (row.failure) ++s.failures;
    if (row.oracle_agrees == "yes" || row.oracle_agrees == "no") ++s.oracle_checked;
    if (row.oracle_agrees == "yes") ++s.oracle_agreed;
    s.min_observed_degree = std::min(s.min_observed_degree, row.min_degree);
    s.total_moves += row.moves;
    if (failing[id]) {
      if (!config.output_path.empty()) {
        row.counterexample_file = counterexample_path(config.output_path, row.seed, id);
        write_hypergraph_file(*row.counterexample_file, *failing[id]);
      }
      result.counterexamples.emplace_back(id, std::move(*failing[id]));
    }
  }

  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + config.output_path);
    out << format_csv(result, config);
  }
  return result;
}

std::string format_csv(const TrialsResult& result, const ExperimentConfig& config) {
  auto wall = [&](double ms) {
    if (!config.record_timing) return std::string("-");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return std::string(buf);
  };
  std::string out = "trial_id,seed,n,delta1,t,finder_result,moves_used,oracle_agrees,wall_time\n";
  double total_ms = 0.0;
  for (const auto& row : result.rows) {
    total_ms += row.wall_ms;
    out += std::to_string(row.trial_id) + "," + std::to_string(row.seed) + "," +
           std::to_string(row.n) + "," + std::to_string(row.min_degree) + "," +
           std::to_string(row.t) + "," + row.finder_result + "," + std::to_string(row.moves) + "," +
           row.oracle_agrees + "," + wall(row.wall_ms) + "\n";
  }
  const auto& s = result.summary;
  char rate[64];
  std::snprintf(rate, sizeof rate, "success_rate=%.6f", s.success_rate());
  out += "summary," + std::to_string(config.seed) + "," + std::to_string(config.n) + "," +
         std::to_string(s.min_observed_degree) + "," + std::to_string(config.t) + "," + rate + "," +
         std::to_string(s.total_moves) + "," + std::to_string(s.oracle_agreed) + "/" +
         std::to_string(s.oracle_checked) + "," + wall(total_ms) + "\n";
  return out;
}

LemmaSweepResult lemma_sweep(const LemmaSweepConfig& config) {
  if (!config.sampler) throw Error(ErrorCode::InvalidParameter, "lemma sweep needs a sampler");
  if (config.t < 1 || config.samples < 1 || config.n_min > config.n_max) {
    throw Error(ErrorCode::InvalidParameter, "bad lemma sweep range");
  }
  LemmaSweepResult result;
  auto& report = result.report;
  report.subject = "lemma sweep t=" + std::to_string(config.t) + " n in [" +
                   std::to_string(config.n_min) + "," + std::to_string(config.n_max) + "]";
  report.replay = "seed=" + std::to_string(config.seed) + " samples=" + std::to_string(config.samples);

  const std::size_t t = config.t;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    for (std::size_t i = 0; i < config.samples; ++i) {
      const std::uint64_t seed =
          derive_seed(config.seed, static_cast<std::uint64_t>(n) * config.samples + i);
      const Hypergraph h = config.sampler(n, seed);
      ++result.instances;
      const std::string tag = "n=" + std::to_string(n) + " sample=" + std::to_string(i);

      const bool free = !find_path(h, t + 1, config.limits);
      const bool meets = free && t >= 3 &&
                         static_cast<std::int64_t>(n) >= 2 * static_cast<std::int64_t>(t) + 17 &&
                         static_cast<std::int64_t>(h.min_degree()) >=
                             g_bound(n, static_cast<std::int64_t>(t));
      if (meets) {
        ++result.hypothesis_instances;
        const bool plus = find_cycle_plus(h, t + 1, config.limits).has_value();
        report.add(tag + " no C_{t+1}^+", "absent", plus ? "present" : "absent", !plus);
      }

      std::size_t failures = 0;
      std::size_t bound_failures = 0;
      std::optional<bool> cycle_plus_exists;
      for (const LinearPath& p : enumerate_paths(h, t, config.path_limit, config.limits)) {
        ++result.paths_checked;
        const PathContext ctx = make_context(h, p);
        const VerificationReport bounds = check_lemma_bounds(h, ctx, meets);
        if (bounds.passed()) continue;
        ++result.bound_violations;
        if (meets) ++bound_failures;

        if (bounds.any_failed("(ii)") || bounds.any_failed("(iv)")) {
          ++result.contrapositive_fired;
          const auto longer = improve_via_codegree(h, ctx);
          if (!longer || longer->length() != t + 1 || !is_valid_path(h, *longer)) {
            ++failures;
            report.witnesses.push_back(tag + " codegree bound violated without a splice on (" +
                                       format_vertices(p.vertices(), false) + ")");
          }
        }
        if (t >= 2 && (bounds.any_failed("(i)") || bounds.any_failed("(iii)"))) {
          ++result.contrapositive_fired;
          const auto configs = closing_configurations(h, ctx);
          const bool built = std::any_of(configs.begin(), configs.end(), [&](const CyclePlusWitness& w) {
            return is_valid_cycle_plus(h, w);
          });
          if (!cycle_plus_exists) cycle_plus_exists = find_cycle_plus(h, t + 1, config.limits).has_value();
          if (!built || !*cycle_plus_exists) {
            ++failures;
            report.witnesses.push_back(tag + " closing bound violated without a C^+ on (" +
                                       format_vertices(p.vertices(), false) + ")");
          }
        }
      }
      result.contrapositive_failures += failures;
      report.add(tag + " contrapositive", "0 failures", std::to_string(failures), failures == 0);
      if (meets) {
        report.add(tag + " bounds under hypotheses", "0 violating paths",
                   std::to_string(bound_failures), bound_failures == 0);
      }
    }
  }
  return result;
}

}  // namespace hyperpath
