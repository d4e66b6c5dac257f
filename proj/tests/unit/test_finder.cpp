#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "brute.hpp"
#include "hyperpath/combinatorics.hpp"
#include "hyperpath/constructions.hpp"
#include "hyperpath/error.hpp"
#include "hyperpath/finder.hpp"
#include "hyperpath/harness.hpp"
#include "hyperpath/oracle.hpp"
#include "planted.hpp"

using namespace hyperpath;

namespace {

std::vector<int> ints(const LinearPath& p) { return brute::to_ints(p.vertices()); }

LinearPath to_path(const std::vector<int>& seq) { return LinearPath(std::vector<Vertex>(seq.begin(), seq.end())); }

Hypergraph build(int n, std::vector<Edge> edges) { return Hypergraph::build(3, n, edges); }

// The spec's 9-vertex rotation instance: M = {0}, T = {1}, dp(0,4) = 3.
Hypergraph rotation_example() {
  return build(9, {{0, 1, 2}, {2, 3, 4}, {0, 2, 5}, {0, 2, 6}, {0, 2, 7}, {0, 4, 5}, {0, 4, 6}, {0, 4, 7}});
}

}  // namespace

TEST(MakeContext, BarePathHasEmptyTables) {
  const Hypergraph h = build(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  const PathContext ctx = make_context(h, LinearPath({0, 1, 2, 3, 4, 5, 6}));
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b)
      if (a != b) {
        EXPECT_EQ(ctx.dp(a, b), 0u);
      }
  EXPECT_TRUE(ctx.m_set().empty());
  EXPECT_EQ(ctx.t_set(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(ctx.n_left().empty());
  EXPECT_TRUE(ctx.n_right().empty());
}

TEST(MakeContext, StarExample) {
  const Hypergraph h = gen_star(3, 20, 1);
  const PathContext ctx = make_context(h, LinearPath({1, 2, 0, 3, 4}));
  EXPECT_EQ(ctx.dp(0, 2), 15u);
  EXPECT_EQ(ctx.dp(2, 4), 15u);
  EXPECT_EQ(ctx.dp(0, 4), 0u);
  EXPECT_EQ(ctx.m_set(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(ctx.t_set().empty());
  EXPECT_EQ(ctx.n_left(), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(ctx.in_m(1));
}

TEST(MakeContext, RejectsInvalidPath) {
  try {
    make_context(gen_star(3, 8, 1), LinearPath({1, 2, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidPath);
  }
}

TEST(MakeContext, TablesAgreeWithBruteForce) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = planted::rotation(3 + trial % 3, 5, 0.15, rng);
    const Hypergraph h = brute::to_hypergraph(inst.graph);
    const PathContext ctx = make_context(h, to_path(inst.path));
    const std::size_t s = inst.path.size() / 2;
    for (std::size_t a = 0; a <= 2 * s; ++a)
      for (std::size_t b = 0; b <= 2 * s; ++b)
        if (a != b) {
          ASSERT_EQ(ctx.dp(a, b), brute::dp(inst.graph, inst.path, a, b));
        }
    EXPECT_EQ(ctx.m_set(), brute::m_set(inst.graph, inst.path));
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t i = 0; i < s; ++i) {
      const bool m = brute::dp(inst.graph, inst.path, 2 * i, 2 * i + 2) >= 2;
      if (m ? brute::dp(inst.graph, inst.path, 0, 2 * i + 2) >= 3 : brute::dp(inst.graph, inst.path, 0, 2 * i + 1) >= 2)
        left.push_back(i);
      if (m ? brute::dp(inst.graph, inst.path, 2 * s, 2 * i) >= 3
            : brute::dp(inst.graph, inst.path, 2 * s, 2 * i + 1) >= 2)
        right.push_back(i);
    }
    EXPECT_EQ(ctx.n_left(), left);
    EXPECT_EQ(ctx.n_right(), right);
  }
}

TEST(Extend, CompleteGraph) {
  const Hypergraph h = gen_complete(3, 7);
  const auto p = extend(h, LinearPath({0, 1, 2}));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->length(), 2u);
  EXPECT_TRUE(brute::is_linear_path(brute::from(h), ints(*p)));
  EXPECT_EQ(ints(p->prefix(1)), (std::vector<int>{0, 1, 2}));
}

TEST(Extend, AbsentCases) {
  EXPECT_FALSE(extend(gen_star(3, 8, 1), LinearPath({1, 3, 0, 4, 5})).has_value());
  EXPECT_FALSE(extend(build(5, {{0, 1, 2}}), LinearPath({0, 1, 2})).has_value());
}

TEST(Extend, AtLeftEnd) {
  const Hypergraph h = build(7, {{0, 1, 2}, {2, 3, 4}, {0, 5, 6}});
  const auto p = extend(h, LinearPath({0, 1, 2, 3, 4}));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->length(), 3u);
  EXPECT_TRUE(brute::is_linear_path(brute::from(h), ints(*p)));
}

TEST(Extend, ThroughSecondVertex) {
  // Only x_1 = 1 carries an edge with two fresh vertices.
  const Hypergraph h = build(7, {{0, 1, 2}, {2, 3, 4}, {1, 5, 6}});
  const auto p = extend(h, LinearPath({0, 1, 2, 3, 4}));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->length(), 3u);
  EXPECT_TRUE(brute::is_linear_path(brute::from(h), ints(*p)));
}

TEST(Rotate, GateUnmetWithoutHeavyPairs) {
  const Hypergraph h = build(9, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {0, 4, 6}});
  const PathContext ctx = make_context(h, LinearPath({0, 1, 2, 3, 4}));
  EXPECT_TRUE(ctx.m_set().empty());
  EXPECT_FALSE(rotate(h, ctx, PathEnd::Left).has_value());
  EXPECT_FALSE(rotate(h, ctx, PathEnd::Right).has_value());
}

TEST(Rotate, NoPivotWhenTIsEmpty) {
  const Hypergraph h = gen_star(3, 20, 1);
  const PathContext ctx = make_context(h, LinearPath({1, 2, 0, 3, 4}));
  EXPECT_FALSE(rotate(h, ctx, PathEnd::Left).has_value());
  EXPECT_FALSE(rotate(h, ctx, PathEnd::Right).has_value());
}

TEST(Rotate, NineVertexExample) {
  const Hypergraph h = rotation_example();
  const LinearPath p({0, 1, 2, 3, 4});
  const PathContext ctx = make_context(h, p);
  EXPECT_EQ(ctx.m_set(), (std::vector<std::size_t>{0}));
  EXPECT_EQ(ctx.t_set(), (std::vector<std::size_t>{1}));
  const auto r = rotate(h, ctx, PathEnd::Left);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->pivot, 1u);
  EXPECT_EQ(r->removed, 3u);
  EXPECT_EQ(r->inserted, 5u);
  EXPECT_EQ(ints(r->path), (std::vector<int>{2, 1, 0, 5, 4}));
  const brute::Graph g = brute::from(h);
  EXPECT_TRUE(brute::is_linear_path(g, ints(r->path)));
  EXPECT_GE(brute::m_set(g, ints(r->path)).size(), 2u);
}

TEST(Rotate, InvariantsOnPlantedInstances) {
  std::mt19937_64 rng(29);
  std::size_t fired = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t t = 3 + trial % 3;
    const auto inst = planted::rotation(t, 4 + trial % 6, 0.03 + 0.01 * (trial % 5), rng);
    const Hypergraph h = brute::to_hypergraph(inst.graph);
    for (const LinearPath& p : {to_path(inst.path), to_path(inst.path).reversed()}) {
      const PathContext ctx = make_context(h, p);
      for (PathEnd end : {PathEnd::Left, PathEnd::Right}) {
        const auto r = rotate(h, ctx, end);
        if (!r) continue;
        ++fired;
        const std::vector<int> before = end == PathEnd::Left ? ints(p) : ints(p.reversed());
        const std::vector<int> after = ints(r->path);
        ASSERT_TRUE(brute::is_linear_path(inst.graph, after));
        EXPECT_EQ(r->path.length(), t);
        EXPECT_EQ(int(r->removed), before[2 * r->pivot + 1]);
        std::set<int> expected(before.begin(), before.end());
        expected.erase(int(r->removed));
        expected.insert(int(r->inserted));
        EXPECT_EQ(std::set<int>(after.begin(), after.end()), expected);
        EXPECT_GE(brute::m_set(inst.graph, after).size(), brute::m_set(inst.graph, before).size() + 1);
      }
    }
  }
  EXPECT_GT(fired, 100u);
}

TEST(Improve, BarePathHasNoSplice) {
  const Hypergraph h = build(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  EXPECT_FALSE(improve_via_codegree(h, make_context(h, LinearPath({0, 1, 2, 3, 4, 5, 6}))).has_value());
}

TEST(Improve, QuotedSplice) {
  const Hypergraph h = build(7, {{0, 1, 2}, {2, 3, 4}, {0, 1, 5}, {1, 4, 6}});
  const PathContext ctx = make_context(h, LinearPath({0, 1, 2, 3, 4}));
  const auto p = improve_via_codegree(h, ctx);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(ints(*p), (std::vector<int>{2, 3, 4, 6, 1, 5, 0}));
  EXPECT_TRUE(brute::is_linear_path(brute::from(h), ints(*p)));
  // dp(0,1) + dp(4,1) = 2 sits exactly on the bound.
  EXPECT_TRUE(check_lemma_bounds(h, ctx, false).passed());
}

TEST(Improve, ViolatedBoundPairsWithSplice) {
  const Hypergraph h = build(7, {{0, 1, 2}, {2, 3, 4}, {0, 1, 5}, {0, 1, 6}, {1, 4, 6}});
  const PathContext ctx = make_context(h, LinearPath({0, 1, 2, 3, 4}));
  const VerificationReport bounds = check_lemma_bounds(h, ctx, false);
  EXPECT_TRUE(bounds.any_failed("(ii)"));
  const Check* c = bounds.find("(ii) k=0");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->observed, "2+1");
  const auto p = improve_via_codegree(h, ctx);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(ints(*p), (std::vector<int>{2, 3, 4, 6, 1, 5, 0}));
}

TEST(Improve, SharedNeighbourIsNotEnough) {
  const Hypergraph h = build(7, {{0, 1, 2}, {2, 3, 4}, {0, 1, 5}, {1, 4, 5}});
  EXPECT_FALSE(improve_via_codegree(h, make_context(h, LinearPath({0, 1, 2, 3, 4}))).has_value());
}

TEST(Improve, PlantedViolationsAlwaysSplice) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t t = 2 + trial % 4;
    const bool ii = trial % 2 == 0;
    const auto inst = ii ? planted::bound_ii(t, 3 + trial % 5, 0.02, rng) : planted::bound_iv(t, 3 + trial % 5, 0.02, rng);
    const Hypergraph h = brute::to_hypergraph(inst.graph);
    const PathContext ctx = make_context(h, to_path(inst.path));
    EXPECT_TRUE(check_lemma_bounds(h, ctx, false).any_failed(ii ? "(ii)" : "(iv)"));
    const auto p = improve_via_codegree(h, ctx);
    ASSERT_TRUE(p.has_value()) << trial;
    EXPECT_EQ(p->length(), t + 1);
    EXPECT_TRUE(brute::is_linear_path(inst.graph, ints(*p)));
  }
}

TEST(Closing, DirectClosure) {
  // dp(0, 4) = 2 on P = (0,1,2,3,4).
  const Hypergraph h = build(7, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {0, 4, 6}});
  const auto ws = closing_configurations(h, make_context(h, LinearPath({0, 1, 2, 3, 4})));
  ASSERT_FALSE(ws.empty());
  for (const auto& w : ws) {
    EXPECT_TRUE(brute::is_cycle_plus(brute::from(h), ints(w.path), int(w.closing), int(w.parallel)));
  }
}

TEST(Closing, ShortPathHasNone) {
  const Hypergraph h = gen_complete(3, 6);
  EXPECT_TRUE(closing_configurations(h, make_context(h, LinearPath({0, 1, 2}))).empty());
}

TEST(Closing, WitnessesAreSoundOnRandomGraphs) {
  std::mt19937_64 rng(37);
  std::size_t seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const brute::Graph g = brute::random_graph(9 + trial % 3, 0.12 + 0.002 * trial, rng);
    const Hypergraph h = brute::to_hypergraph(g);
    for (const LinearPath& p : enumerate_paths(h, 3, 40)) {
      const PathContext ctx = make_context(h, p);
      const auto ws = closing_configurations(h, ctx);
      const VerificationReport bounds = check_lemma_bounds(h, ctx, false);
      if (bounds.any_failed("(i)") || bounds.any_failed("(iii)")) {
        EXPECT_FALSE(ws.empty());
      }
      for (const auto& w : ws) {
        ++seen;
        ASSERT_TRUE(brute::is_cycle_plus(g, ints(w.path), int(w.closing), int(w.parallel)));
        EXPECT_EQ(w.cycle_length(), 4u);
      }
    }
  }
  EXPECT_GT(seen, 0u);
}

TEST(Unfold, CompleteGraphAlwaysUnfolds) {
  const Hypergraph h = gen_complete(3, 9);
  const CyclePlusWitness w{LinearPath({0, 1, 2, 3, 4}), 5, 6};
  const auto p = unfold_cycle_plus(h, w);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->length(), 3u);
  EXPECT_TRUE(brute::is_linear_path(brute::from(h), ints(*p)));
}

TEST(Unfold, BareCyclePlusIsStuck) {
  for (std::size_t t = 2; t <= 4; ++t) {
    std::vector<Vertex> seq;
    for (Vertex v = 0; v <= 2 * t; ++v) seq.push_back(v);
    const Vertex closing = Vertex(2 * t + 1);
    const Vertex parallel = Vertex(2 * t + 2);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < t; ++i) edges.push_back({seq[2 * i], seq[2 * i + 1], seq[2 * i + 2]});
    edges.push_back({seq[2 * t], closing, 0});
    edges.push_back({seq[2 * t], parallel, 0});
    const Hypergraph h = build(int(2 * t + 5), edges);
    EXPECT_FALSE(unfold_cycle_plus(h, CyclePlusWitness{LinearPath(seq), closing, parallel}).has_value());
  }
}

TEST(Unfold, EverySingleHitPosition) {
  // K_{2t+4} leaves one vertex outside X u {v}, so every unfolding edge at v
  // meets the cycle exactly once.
  for (std::size_t t = 2; t <= 3; ++t) {
    const int n = int(2 * t + 4);
    for (Vertex hit = 0; hit < 2 * t + 2; ++hit) {
      std::vector<Vertex> seq;
      for (Vertex v = 0; v <= 2 * t; ++v) seq.push_back(v);
      const Vertex closing = Vertex(2 * t + 1);
      const Vertex parallel = Vertex(2 * t + 2);
      const Vertex spare = Vertex(2 * t + 3);
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < t; ++i) edges.push_back({seq[2 * i], seq[2 * i + 1], seq[2 * i + 2]});
      edges.push_back({seq[2 * t], closing, 0});
      edges.push_back({seq[2 * t], parallel, 0});
      edges.push_back({parallel, spare, hit});
      const Hypergraph h = build(n, edges);
      const auto p = unfold_cycle_plus(h, CyclePlusWitness{LinearPath(seq), closing, parallel});
      ASSERT_TRUE(p.has_value()) << "t=" << t << " hit=" << hit;
      EXPECT_EQ(p->length(), t + 1);
      EXPECT_TRUE(brute::is_linear_path(brute::from(h), ints(*p)));
    }
  }
}

TEST(Unfold, AbsentOnlyWithSmallDegree) {
  std::mt19937_64 rng(41);
  std::size_t absent = 0;
  std::size_t present = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const brute::Graph g = brute::random_graph(10, 0.1 + 0.001 * trial, rng);
    const Hypergraph h = brute::to_hypergraph(g);
    const auto w = find_cycle_plus(h, 3);
    if (!w) continue;
    const auto p = unfold_cycle_plus(h, *w);
    if (p) {
      ++present;
      EXPECT_EQ(p->length(), 3u);
      EXPECT_TRUE(brute::is_linear_path(g, ints(*p)));
    } else {
      ++absent;
      EXPECT_LE(static_cast<std::int64_t>(h.degree(w->parallel)), binomial(6, 2));
    }
  }
  EXPECT_GT(present, 0u);
}

TEST(FindGuaranteed, StarBelowThreshold) {
  const Hypergraph h = gen_star(3, 23, 1);
  const FinderOutcome out = find_guaranteed(h, 3);
  ASSERT_FALSE(out.found());
  EXPECT_EQ(out.violation()->reason, ViolationReason::HypothesisUnmet);
  EXPECT_FALSE(degree_hypotheses_hold(h, 3));
  EXPECT_FALSE(find_path(h, 3).has_value());
}

TEST(FindGuaranteed, AnyEdgeIsP1) {
  const Hypergraph h = build(6, {{1, 3, 5}});
  const FinderOutcome out = find_guaranteed(h, 1);
  ASSERT_TRUE(out.found());
  EXPECT_EQ(ints(*out.path()), (std::vector<int>{1, 3, 5}));
}

TEST(FindGuaranteed, EdgelessGraph) {
  const FinderOutcome out = find_guaranteed(build(25, {}), 3);
  ASSERT_FALSE(out.found());
  EXPECT_EQ(out.violation()->reason, ViolationReason::HypothesisUnmet);
}

TEST(FindGuaranteed, RandomGraphsAtThreshold) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Hypergraph h = random_min_degree_graph(23, 29, seed);
    ASSERT_TRUE(degree_hypotheses_hold(h, 3));
    const FinderOutcome out = find_guaranteed(h, 3);
    ASSERT_TRUE(out.found()) << seed;
    EXPECT_EQ(out.path()->length(), 3u);
    EXPECT_TRUE(brute::is_linear_path(brute::from(h), ints(*out.path())));
  }
}

TEST(FindGuaranteed, TraceIsLexicographicallyIncreasing) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const brute::Graph g = brute::random_graph(14, 0.02 + 0.002 * trial, rng);
    const Hypergraph h = brute::to_hypergraph(g);
    const FinderOutcome out = find_guaranteed(h, 5);
    ASSERT_FALSE(out.trace.empty());
    EXPECT_EQ(out.trace.front().kind, MoveKind::Start);
    for (std::size_t i = 1; i < out.trace.size(); ++i) {
      const auto& a = out.trace[i - 1];
      const auto& b = out.trace[i];
      EXPECT_TRUE(b.length > a.length || (b.length == a.length && b.m_size > a.m_size));
    }
    if (out.found()) {
      EXPECT_TRUE(brute::is_linear_path(g, ints(*out.path())));
    } else {
      EXPECT_NE(out.violation()->reason, ViolationReason::LemmaStepFailed);
    }
  }
}

TEST(FindGuaranteed, SparseGraphsExerciseEveryMove) {
  std::mt19937_64 rng(1);
  std::set<MoveKind> seen;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 10 + trial % 8;
    const std::size_t t = 3 + static_cast<std::size_t>(trial % 4);
    const brute::Graph g = brute::random_graph(n, 0.01 + 0.003 * (trial % 30), rng);
    const FinderOutcome out = find_guaranteed(brute::to_hypergraph(g), t);
    for (const auto& m : out.trace) seen.insert(m.kind);
    if (out.found()) {
      ASSERT_TRUE(brute::is_linear_path(g, ints(*out.path()))) << trial;
      EXPECT_EQ(out.path()->length(), t);
    } else {
      EXPECT_NE(out.violation()->reason, ViolationReason::LemmaStepFailed) << trial;
    }
  }
  for (MoveKind k : {MoveKind::Extend, MoveKind::Codegree, MoveKind::Rotate, MoveKind::Unfold}) {
    EXPECT_TRUE(seen.count(k)) << to_string(k);
  }
}

TEST(FindGuaranteed, BudgetExhaustion) {
  const Hypergraph h = gen_complete(3, 12);
  const FinderOutcome out = find_guaranteed(h, 5, FinderOptions{1});
  ASSERT_FALSE(out.found());
  EXPECT_EQ(out.violation()->reason, ViolationReason::BudgetExhausted);
}

TEST(FindGuaranteed, DelegatesShortTargetsToOracle) {
  const FinderOutcome k4 = find_guaranteed(gen_complete(3, 4), 2);
  EXPECT_FALSE(k4.found());
  const FinderOutcome k5 = find_guaranteed(gen_complete(3, 5), 2);
  ASSERT_TRUE(k5.found());
  EXPECT_EQ(k5.trace.back().kind, MoveKind::Oracle);
}

TEST(LemmaBounds, BarePathSatisfiesAll) {
  const Hypergraph h = build(9, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  const VerificationReport r = check_lemma_bounds(h, make_context(h, LinearPath({0, 1, 2, 3, 4, 5, 6})), true);
  EXPECT_TRUE(r.passed());
  EXPECT_NE(r.find("(i)"), nullptr);
  EXPECT_NE(r.find("(iv) k=0 l=t"), nullptr);
}

TEST(LemmaBounds, StarPathsSatisfyAll) {
  const Hypergraph h = gen_star(3, 20, 1);
  ASSERT_FALSE(find_path(h, 3).has_value());
  for (const LinearPath& p : enumerate_paths(h, 2, 3000)) {
    EXPECT_TRUE(check_lemma_bounds(h, make_context(h, p), false).passed());
  }
}

TEST(Names, EnumsRender) {
  EXPECT_EQ(to_string(MoveKind::Rotate), "rotate");
  EXPECT_EQ(to_string(ViolationReason::LemmaStepFailed), "LemmaStepFailed");
}
