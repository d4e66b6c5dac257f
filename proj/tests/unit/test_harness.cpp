#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "brute.hpp"
#include "hyperpath/combinatorics.hpp"
#include "hyperpath/constructions.hpp"
#include "hyperpath/error.hpp"
#include "hyperpath/harness.hpp"
#include "hyperpath/random.hpp"
#include "hyperpath/text_format.hpp"
#include "planted.hpp"

using namespace hyperpath;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hyperpath_harness_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(VerifyConstruction, Star) {
  const VerificationReport r = verify_construction(ConstructionKind::Star, 3, 12, 1);
  EXPECT_TRUE(r.passed()) << r.to_text();
  ASSERT_NE(r.find("min_degree"), nullptr);
  EXPECT_EQ(r.find("min_degree")->expected, "10");
  ASSERT_NE(r.find("P_3-free"), nullptr);
  ASSERT_NE(r.find("has P_2"), nullptr);
  EXPECT_EQ(r.replay, "gen --kind star --r 3 --n 12 --k 1");
}

TEST(VerifyConstruction, StarPlus) {
  const VerificationReport r = verify_construction(ConstructionKind::StarPlus, 3, 10, 1);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.find("min_degree")->observed, "9");
  EXPECT_NE(r.find("P_4-free"), nullptr);
  EXPECT_NE(r.find("has P_3"), nullptr);
}

TEST(VerifyConstruction, CorruptedInstanceFails) {
  std::vector<Edge> edges = gen_star(3, 8, 1).edges();
  edges.erase(edges.begin());
  const Hypergraph broken = Hypergraph::build(3, 8, edges);
  const VerificationReport r = verify_construction(ConstructionKind::Star, 3, 8, 1, broken);
  EXPECT_FALSE(r.passed());
  const Check* c = r.find("min_degree");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->pass);
  EXPECT_EQ(c->expected, "6");
  EXPECT_EQ(c->observed, "5");
  EXPECT_NE(r.to_text().find("FAIL min_degree expected=6 observed=5"), std::string::npos);
}

TEST(VerifyConstruction, RejectsUncertifiedKinds) {
  EXPECT_EQ(code_of([] { verify_construction(ConstructionKind::Complete, 3, 6, 1); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of([] { verify_construction(ConstructionKind::Star, 4, 8, 1); }), ErrorCode::InvalidParameter);
}

TEST(Exhaustive, FrozenFixtures) {
  // Counts computed independently by a standalone enumeration.
  const ExhaustiveResult five = exhaustive_check(5, 4, 2);
  EXPECT_EQ(five.total, 86u);
  EXPECT_EQ(five.passed, 86u);
  EXPECT_TRUE(five.counterexamples.empty());
  EXPECT_TRUE(five.report.passed());

  const ExhaustiveResult four = exhaustive_check(4, 3, 2);
  EXPECT_EQ(four.total, 1u);
  EXPECT_EQ(four.passed, 0u);
  ASSERT_EQ(four.counterexamples.size(), 1u);
  EXPECT_EQ(four.counterexamples.front(), gen_complete(3, 4));
  EXPECT_FALSE(four.report.passed());
}

TEST(Exhaustive, SingleEdgeBase) {
  const ExhaustiveResult r = exhaustive_check(3, 1, 1);
  EXPECT_EQ(r.total, 1u);
  EXPECT_EQ(r.passed, r.total);
  EXPECT_EQ(exhaustive_check(6, 9, 2).total, 31u);
  EXPECT_EQ(code_of([] { exhaustive_check(7, 1, 1); }), ErrorCode::OrderTooLarge);
}

TEST(RandomGraph, DeterministicAndMeetsDegree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Hypergraph a = random_min_degree_graph(15, 20, seed);
    EXPECT_EQ(serialize(a), serialize(random_min_degree_graph(15, 20, seed)));
    EXPECT_GE(a.min_degree(), 20u);
    EXPECT_GE(brute::from(a).min_degree(), 20);
  }
  EXPECT_NE(random_min_degree_graph(15, 20, 1), random_min_degree_graph(15, 20, 2));
}

TEST(RandomGraph, Limits) {
  EXPECT_EQ(code_of([] { random_min_degree_graph(5, 11, 0); }), ErrorCode::InfeasibleDegree);
  EXPECT_EQ(code_of([] { random_min_degree_graph(2, 0, 0); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(random_min_degree_graph(6, 10, 3), Hypergraph::build(3, 6, gen_complete(3, 6).edges()));
}

TEST(Rng, StreamsAreStable) {
  Rng a(derive_seed(42, 7));
  Rng b(derive_seed(42, 7));
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(derive_seed(42, 7), derive_seed(42, 8));
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(c.below(7), 7u);
    const double u = c.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RunTrials, CsvIsDeterministicAcrossThreadCounts) {
  ExperimentConfig config;
  config.n = 23;
  config.t = 3;
  config.min_degree = 29;
  config.trials = 12;
  config.seed = 5;
  config.oracle_checks = 3;
  config.threads = 1;
  const std::string one = format_csv(run_trials(config), config);
  config.threads = 4;
  const std::string four = format_csv(run_trials(config), config);
  EXPECT_EQ(one, four);
  EXPECT_EQ(one.substr(0, one.find('\n')),
            "trial_id,seed,n,delta1,t,finder_result,moves_used,oracle_agrees,wall_time");
  EXPECT_NE(one.find("\nsummary,5,23,"), std::string::npos);
  EXPECT_NE(one.find("success_rate=1.000000"), std::string::npos);
  EXPECT_NE(one.find(",3/3,-\n"), std::string::npos);
}

TEST(RunTrials, RowsCarryPerTrialSeeds) {
  ExperimentConfig config;
  config.n = 23;
  config.t = 3;
  config.min_degree = 29;
  config.trials = 4;
  config.seed = 9;
  config.threads = 2;
  const TrialsResult r = run_trials(config);
  ASSERT_EQ(r.rows.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(r.rows[i].trial_id, i);
    EXPECT_EQ(r.rows[i].seed, derive_seed(9, i));
    EXPECT_EQ(r.rows[i].finder_result, "found");
    EXPECT_EQ(r.rows[i].oracle_agrees, "-");
  }
  EXPECT_EQ(r.summary.success_rate(), 1.0);
}

TEST(RunTrials, ConstructionGeneratorBelowThreshold) {
  ExperimentConfig config;
  config.n = 23;
  config.t = 3;
  config.trials = 2;
  config.generator = GeneratorKind::Construction;
  config.oracle_checks = 1;
  const TrialsResult r = run_trials(config);
  EXPECT_EQ(r.summary.failures, 0u);
  EXPECT_EQ(r.rows[0].finder_result, "HypothesisUnmet");
  EXPECT_EQ(r.rows[0].oracle_agrees, "yes");
  EXPECT_EQ(r.rows[0].min_degree, 21u);
}

TEST(RunTrials, ExhaustiveGenerator) {
  ExperimentConfig config;
  config.n = 5;
  config.t = 2;
  config.min_degree = 4;
  config.trials = 1000;
  config.generator = GeneratorKind::Exhaustive;
  const TrialsResult r = run_trials(config);
  EXPECT_EQ(r.summary.trials, 86u);
  EXPECT_EQ(r.summary.found, 86u);
  config.trials = 10;
  EXPECT_EQ(run_trials(config).summary.trials, 10u);
}

TEST(RunTrials, FailuresArePersisted) {
  const fs::path dir = scratch("persist");
  ExperimentConfig config;
  config.n = 23;
  config.t = 3;
  config.min_degree = 29;
  config.trials = 2;
  config.seed = 3;
  config.finder_budget = 1;
  config.output_path = (dir / "run.csv").string();
  const TrialsResult r = run_trials(config);
  EXPECT_EQ(r.summary.failures, 2u);
  ASSERT_EQ(r.counterexamples.size(), 2u);
  for (const TrialRow& row : r.rows) {
    EXPECT_EQ(row.finder_result, "BudgetExhausted");
    ASSERT_TRUE(row.counterexample_file.has_value());
    const fs::path expected = dir / ("run.seed" + std::to_string(row.seed) + ".trial" + std::to_string(row.trial_id) + ".h3");
    EXPECT_EQ(fs::path(*row.counterexample_file), expected);
    const Hypergraph h = read_hypergraph_file(*row.counterexample_file);
    EXPECT_EQ(h, random_min_degree_graph(23, 29, row.seed));
  }
  EXPECT_EQ(slurp(dir / "run.csv"), format_csv(r, config));
}

TEST(RunTrials, InvalidConfigs) {
  ExperimentConfig config;
  config.n = 7;
  config.t = 2;
  config.generator = GeneratorKind::Exhaustive;
  EXPECT_EQ(code_of([&] { run_trials(config); }), ErrorCode::OrderTooLarge);
  config.generator = GeneratorKind::Construction;
  EXPECT_EQ(code_of([&] { run_trials(config); }), ErrorCode::InvalidParameter);
  config.generator = GeneratorKind::ConditionedRandom;
  config.trials = 0;
  EXPECT_EQ(code_of([&] { run_trials(config); }), ErrorCode::InvalidParameter);
}

TEST(RunTrials, InfeasibleDegreeIsRecordedPerRow) {
  ExperimentConfig config;
  config.n = 6;
  config.t = 2;
  config.min_degree = 11;
  config.trials = 2;
  const TrialsResult r = run_trials(config);
  EXPECT_EQ(r.rows[0].finder_result, "error:InfeasibleDegree");
  EXPECT_EQ(r.summary.failures, 2u);
}

TEST(RunTrials, TimingColumnIsOptIn) {
  ExperimentConfig config;
  config.n = 23;
  config.t = 3;
  config.min_degree = 29;
  config.trials = 2;
  config.record_timing = true;
  const std::string csv = format_csv(run_trials(config), config);
  EXPECT_EQ(csv.find(",-\n"), std::string::npos);
}

TEST(GeneratorNames, RoundTrip) {
  for (auto kind : {GeneratorKind::ConditionedRandom, GeneratorKind::Construction, GeneratorKind::Exhaustive}) {
    EXPECT_EQ(parse_generator_kind(to_string(kind)), kind);
  }
  EXPECT_FALSE(parse_generator_kind("nope").has_value());
}

TEST(LemmaSweep, StarFamilySatisfiesEveryBound) {
  LemmaSweepConfig config;
  config.n_min = 9;
  config.n_max = 14;
  config.t = 2;
  config.sampler = [](int n, std::uint64_t) { return gen_star(3, n, 1); };
  const LemmaSweepResult r = lemma_sweep(config);
  EXPECT_EQ(r.instances, 6u);
  EXPECT_GT(r.paths_checked, 0u);
  EXPECT_EQ(r.bound_violations, 0u);
  EXPECT_EQ(r.hypothesis_instances, 0u);
  EXPECT_TRUE(r.report.passed());
}

TEST(LemmaSweep, BarePathIsVacuous) {
  LemmaSweepConfig config;
  config.n_min = 7;
  config.n_max = 7;
  config.t = 3;
  config.sampler = [](int n, std::uint64_t) { return Hypergraph::build(3, n, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}); };
  const LemmaSweepResult r = lemma_sweep(config);
  // Reversal and the swaps of x_0, x_1 and of x_5, x_6.
  EXPECT_EQ(r.paths_checked, 8u);
  EXPECT_EQ(r.bound_violations, 0u);
  EXPECT_TRUE(r.report.passed());
}

TEST(LemmaSweep, PlantedViolationsFireTheContrapositive) {
  LemmaSweepConfig config;
  config.n_min = 10;
  config.n_max = 11;
  config.t = 3;
  config.samples = 6;
  config.seed = 4;
  config.path_limit = 400;
  config.sampler = [](int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto inst = planted::bound_ii(3, n - 7, 0.02, rng);
    return brute::to_hypergraph(inst.graph);
  };
  const LemmaSweepResult r = lemma_sweep(config);
  EXPECT_GT(r.contrapositive_fired, 0u);
  EXPECT_EQ(r.contrapositive_failures, 0u);
  EXPECT_TRUE(r.report.passed()) << r.report.to_text();
}
