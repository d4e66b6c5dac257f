#include "hyperpath/finder.hpp"

#include <algorithm>
#include <utility>

#include "hyperpath/constructions.hpp"
#include "hyperpath/error.hpp"
#include "hyperpath/oracle.hpp"

namespace hyperpath {

namespace {

std::string describe(const LinearPath& p) { return "(" + format_vertices(p.vertices(), false) + ")"; }

VertexSet vertex_set_of(const Hypergraph& h, std::span<const Vertex> vertices) {
  return VertexSet::from_range(static_cast<std::size_t>(h.order()), vertices);
}

// Smallest pair (y, z), y from ys and z from zs, with y != z.
std::optional<std::pair<Vertex, Vertex>> distinct_pair(const std::vector<Vertex>& ys,
                                                       const std::vector<Vertex>& zs) {
  for (Vertex y : ys) {
    for (Vertex z : zs) {
      if (z != y) return std::make_pair(y, z);
    }
  }
  return std::nullopt;
}

std::vector<Vertex> outside(const Hypergraph& h, const PathContext& ctx, std::size_t a,
                            std::size_t b) {
  const auto& p = ctx.path();
  return h.pair_neighborhood(p[a], p[b]).difference(ctx.path_vertices()).to_vector();
}

// x_i, ..., x_j inclusive, stepping up or down.
void append_run(std::vector<Vertex>& out, const LinearPath& p, std::size_t from, std::size_t to) {
  if (from <= to) {
    for (std::size_t i = from; i <= to; ++i) out.push_back(p[i]);
  } else {
    for (std::size_t i = from + 1; i-- > to;) out.push_back(p[i]);
  }
}

std::optional<LinearPath> extend_at_back(const Hypergraph& h, const std::vector<Vertex>& seq) {
  const VertexSet used = vertex_set_of(h, seq);
  for (const auto& [a, b] : h.link(seq.back())) {
    if (used.contains(a) || used.contains(b)) continue;
    std::vector<Vertex> next = seq;
    next.push_back(a);
    next.push_back(b);
    return LinearPath(std::move(next));
  }
  return std::nullopt;
}

LinearPath checked_splice(const Hypergraph& h, std::vector<Vertex> seq, std::size_t want,
                          ErrorCode failure, std::string_view what) {
  if (seq.size() == 2 * want + 1) {
    LinearPath out(std::move(seq));
    if (is_valid_path(h, out)) return out;
    throw Error(failure, std::string(what) + " produced invalid path " + describe(out));
  }
  throw Error(failure, std::string(what) + " produced a sequence of the wrong size");
}

std::optional<Rotation> rotate_front(const Hypergraph& h, const PathContext& ctx, PathEnd end) {
  const LinearPath& p = ctx.path();
  const std::size_t m = ctx.m_set().size();
  const std::size_t threshold = std::max<std::size_t>(2 * m + 1, 3);

  for (std::size_t pivot : ctx.t_set()) {
    if (ctx.dp(0, 2 * pivot + 2) < threshold) continue;

    VertexSet forbidden(static_cast<std::size_t>(h.order()));
    for (std::size_t k : ctx.m_set()) {
      if (ctx.dp(2 * k, 2 * k + 2) != 2) continue;
      h.pair_neighborhood(p[2 * k], p[2 * k + 2]).for_each_outside(ctx.path_vertices(), [&](Vertex w) {
        forbidden.insert(w);
        return false;
      });
    }
    std::optional<Vertex> chosen;
    h.pair_neighborhood(p[0], p[2 * pivot + 2])
        .difference(ctx.path_vertices())
        .for_each_outside(forbidden, [&](Vertex w) {
          chosen = w;
          return true;
        });
    if (!chosen) {
      throw Error(ErrorCode::RotationPostconditionFailed,
                  "no admissible rotation vertex at pivot " + std::to_string(pivot) + " of " +
                      describe(p));
    }

    std::vector<Vertex> seq;
    append_run(seq, p, 2 * pivot, 0);
    seq.push_back(*chosen);
    append_run(seq, p, 2 * pivot + 2, 2 * p.length());
    Rotation r{LinearPath(std::move(seq)), end, pivot, p[2 * pivot + 1], *chosen};

    if (!is_valid_path(h, r.path) || r.path.length() != p.length()) {
      throw Error(ErrorCode::RotationPostconditionFailed, "rotation of " + describe(p) +
                                                              " produced " + describe(r.path));
    }
    VertexSet expected = ctx.path_vertices();
    expected.erase(r.removed);
    expected.insert(r.inserted);
    if (!(vertex_set_of(h, r.path.vertices()) == expected)) {
      throw Error(ErrorCode::RotationPostconditionFailed,
                  "rotation changed more than one vertex of " + describe(p));
    }
    const std::size_t new_m = make_context(h, r.path).m_set().size();
    if (new_m < m + 1) {
      throw Error(ErrorCode::RotationPostconditionFailed,
                  "rotation of " + describe(p) + " kept |M| at " + std::to_string(new_m));
    }
    return r;
  }
  return std::nullopt;
}

std::vector<CyclePlusWitness> closings_at_front(const Hypergraph& h, const PathContext& ctx) {
  std::vector<CyclePlusWitness> out;
  const LinearPath& p = ctx.path();
  const std::size_t s = p.length();
  for (std::size_t k = 0; k < s; ++k) {
    const std::size_t i = ctx.dp(0, 2 * k + 2);
    const std::size_t j = ctx.dp(2 * s, 2 * k);
    if (j < 1 || i < j || i + j < 5) continue;
    const auto zs = outside(h, ctx, 2 * s, 2 * k);
    const Vertex z = zs.front();
    std::vector<Vertex> ys;
    for (Vertex y : outside(h, ctx, 0, 2 * k + 2)) {
      if (y != z) ys.push_back(y);
    }
    std::vector<Vertex> seq;
    append_run(seq, p, 0, 2 * k);
    seq.push_back(z);
    append_run(seq, p, 2 * s, 2 * k + 2);
    CyclePlusWitness w{LinearPath(std::move(seq)), ys[0], ys[1]};
    if (!is_valid_cycle_plus(h, w)) {
      throw Error(ErrorCode::UnfoldPostconditionFailed,
                  "codegree configuration on " + describe(p) + " did not close a cycle");
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

bool PathContext::in_m(std::size_t i) const {
  return std::binary_search(m_.begin(), m_.end(), i);
}

bool PathContext::endpoint_sets_disjoint() const {
  for (std::size_t i : n_left_) {
    if (std::binary_search(n_right_.begin(), n_right_.end(), i)) return false;
  }
  return true;
}

PathContext make_context(const Hypergraph& h, const LinearPath& p) {
  require_valid_path(h, p);
  PathContext ctx(p);
  const std::size_t s = p.length();
  ctx.on_path_ = vertex_set_of(h, p.vertices());
  ctx.width_ = 2 * s + 1;
  ctx.dp_.assign(ctx.width_ * ctx.width_, 0);
  for (std::size_t a = 0; a < ctx.width_; ++a) {
    for (std::size_t b = a + 1; b < ctx.width_; ++b) {
      const std::size_t value = h.pair_neighborhood(p[a], p[b]).difference_size(ctx.on_path_);
      ctx.dp_[a * ctx.width_ + b] = value;
      ctx.dp_[b * ctx.width_ + a] = value;
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (ctx.dp(2 * i, 2 * i + 2) >= 2) {
      ctx.m_.push_back(i);
      if (ctx.dp(0, 2 * i + 2) >= 3) ctx.n_left_.push_back(i);
      if (ctx.dp(2 * s, 2 * i) >= 3) ctx.n_right_.push_back(i);
    } else {
      ctx.t_.push_back(i);
      if (ctx.dp(0, 2 * i + 1) >= 2) ctx.n_left_.push_back(i);
      if (ctx.dp(2 * s, 2 * i + 1) >= 2) ctx.n_right_.push_back(i);
    }
  }
  return ctx;
}

std::optional<LinearPath> extend(const Hypergraph& h, const LinearPath& p) {
  require_valid_path(h, p);
  const auto v = p.vertices();
  const std::size_t last = v.size() - 1;

  std::vector<Vertex> forward(v.begin(), v.end());
  if (auto out = extend_at_back(h, forward)) return out;
  std::vector<Vertex> backward(v.rbegin(), v.rend());
  if (auto out = extend_at_back(h, backward)) return out;

  std::swap(forward[last], forward[last - 1]);
  if (auto out = extend_at_back(h, forward)) return out;
  std::swap(backward[last], backward[last - 1]);
  if (auto out = extend_at_back(h, backward)) return out;
  return std::nullopt;
}

std::optional<Rotation> rotate(const Hypergraph& h, const PathContext& ctx, PathEnd end) {
  if (end == PathEnd::Left) return rotate_front(h, ctx, end);
  return rotate_front(h, make_context(h, ctx.path().reversed()), end);
}

std::optional<LinearPath> improve_via_codegree(const Hypergraph& h, const PathContext& ctx) {
  const LinearPath& p = ctx.path();
  const std::size_t s = p.length();
  const std::size_t last = 2 * s;

  // (ii)
  for (std::size_t k = 0; k < s; ++k) {
    if (ctx.dp(0, 2 * k + 1) == 0 || ctx.dp(last, 2 * k + 1) == 0) continue;
    auto pick = distinct_pair(outside(h, ctx, 0, 2 * k + 1), outside(h, ctx, last, 2 * k + 1));
    if (!pick) continue;
    const auto [y, z] = *pick;
    std::vector<Vertex> seq;
    append_run(seq, p, 2 * k + 2, last);
    seq.insert(seq.end(), {z, p[2 * k + 1], y});
    append_run(seq, p, 0, 2 * k);
    return checked_splice(h, std::move(seq), s + 1, ErrorCode::SplicePostconditionFailed,
                          "codegree splice (ii)");
  }

  // (iv), with the end vertex x_0 and then x_{2s}
  for (std::size_t side = 0; side < 2; ++side) {
    const std::size_t end = side == 0 ? 0 : last;
    for (std::size_t k = 0; k < s; ++k) {
      if (ctx.dp(2 * k, 2 * k + 2) == 0 || ctx.dp(end, 2 * k + 1) == 0) continue;
      auto pick = distinct_pair(outside(h, ctx, 2 * k, 2 * k + 2), outside(h, ctx, end, 2 * k + 1));
      if (!pick) continue;
      const auto [y, z] = *pick;
      std::vector<Vertex> seq{p[2 * k + 1], z};
      if (side == 0) {
        append_run(seq, p, 0, 2 * k);
        seq.push_back(y);
        append_run(seq, p, 2 * k + 2, last);
      } else {
        append_run(seq, p, last, 2 * k + 2);
        seq.push_back(y);
        append_run(seq, p, 2 * k, 0);
      }
      return checked_splice(h, std::move(seq), s + 1, ErrorCode::SplicePostconditionFailed,
                            "codegree splice (iv)");
    }
  }
  return std::nullopt;
}

std::vector<CyclePlusWitness> closing_configurations(const Hypergraph& h, const PathContext& ctx) {
  std::vector<CyclePlusWitness> out;
  const LinearPath& p = ctx.path();
  const std::size_t s = p.length();
  if (s < 2) return out;

  if (ctx.dp(0, 2 * s) >= 2) {
    const auto ws = outside(h, ctx, 0, 2 * s);
    out.push_back(CyclePlusWitness{p, ws[0], ws[1]});
  }
  auto front = closings_at_front(h, ctx);
  out.insert(out.end(), front.begin(), front.end());
  auto back = closings_at_front(h, make_context(h, p.reversed()));
  out.insert(out.end(), back.begin(), back.end());
  return out;
}

std::optional<LinearPath> unfold_cycle_plus(const Hypergraph& h, const CyclePlusWitness& w) {
  if (!is_valid_cycle_plus(h, w)) {
    throw Error(ErrorCode::InvalidPath, "not a C^+ witness of the host hypergraph");
  }
  const std::size_t t = w.path.length();
  const std::vector<Vertex> cycle = w.cycle_vertices();  // c_0 .. c_{2t+1}
  const std::size_t period = cycle.size();
  const Vertex v = w.parallel;

  std::vector<std::ptrdiff_t> index_of(static_cast<std::size_t>(h.order()), -1);
  for (std::size_t i = 0; i < period; ++i) index_of[cycle[i]] = static_cast<std::ptrdiff_t>(i);
  auto at = [&](std::size_t i) { return cycle[i % period]; };

  for (const auto& [a, b] : h.link(v)) {
    const std::ptrdiff_t ia = index_of[a];
    const std::ptrdiff_t ib = index_of[b];
    if (ia >= 0 && ib >= 0) continue;

    std::vector<Vertex> seq;
    if (ia < 0 && ib < 0) {
      // (v_2, v_1, v, x_{2t}, x_0, x_1, ..., x_{2t-2})
      seq = {b, a, v, cycle[2 * t]};
      for (std::size_t i = 0; i <= 2 * t - 2; ++i) seq.push_back(cycle[i]);
    } else {
      const std::size_t i = static_cast<std::size_t>(ia >= 0 ? ia : ib);
      const Vertex fresh = ia >= 0 ? b : a;
      seq = {v, fresh, cycle[i]};
      if (i % 2 == 0) {
        // (v, v', x_i, x_{i+1}, ..., x_{i-2}) around the cycle
        for (std::size_t step = 1; step <= 2 * t; ++step) seq.push_back(at(i + step));
      } else {
        // (v, v', x_i, x_{i-1}, x_{i+1}, x_{i+2}, ..., x_{i-3}) around the cycle
        seq.push_back(at(i + period - 1));
        for (std::size_t step = 1; step <= 2 * t - 1; ++step) seq.push_back(at(i + step));
      }
    }
    return checked_splice(h, std::move(seq), t + 1, ErrorCode::UnfoldPostconditionFailed,
                          "cycle unfold");
  }
  return std::nullopt;
}

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Start: return "start";
    case MoveKind::Extend: return "extend";
    case MoveKind::Codegree: return "codegree";
    case MoveKind::Rotate: return "rotate";
    case MoveKind::Unfold: return "unfold";
    case MoveKind::Oracle: return "oracle";
  }
  return "unknown";
}

std::string_view to_string(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::HypothesisUnmet: return "HypothesisUnmet";
    case ViolationReason::LemmaStepFailed: return "LemmaStepFailed";
    case ViolationReason::BudgetExhausted: return "BudgetExhausted";
  }
  return "unknown";
}

bool degree_hypotheses_hold(const Hypergraph& h, std::size_t t) {
  const auto n = static_cast<std::int64_t>(h.order());
  const auto delta = static_cast<std::int64_t>(h.min_degree());
  if (t == 1) return n >= 3 && delta >= 1;
  if (t == 2) return n >= 5 && delta >= 4;
  const Threshold th = theorem_threshold(n, static_cast<std::int64_t>(t));
  return n >= th.min_order && delta >= th.min_degree;
}

FinderOutcome find_guaranteed(const Hypergraph& h, std::size_t t, FinderOptions options) {
  if (h.uniformity() != 3) throw Error(ErrorCode::NotPairUniform, "the finder needs a 3-graph");
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "path length must be at least 1");

  FinderOutcome out{ViolationReport{ViolationReason::HypothesisUnmet, "", std::nullopt, {}}, {}, 0, 0};
  auto stuck = [&](std::string detail, const PathContext* ctx) {
    const bool promised = degree_hypotheses_hold(h, t);
    ViolationReport report{promised ? ViolationReason::LemmaStepFailed
                                    : ViolationReason::HypothesisUnmet,
                           std::move(detail), std::nullopt, {}};
    if (ctx != nullptr) {
      report.path = ctx->path();
      report.m_set = ctx->m_set();
    }
    out.result = std::move(report);
    return out;
  };

  if (h.size() == 0) return stuck("hypergraph has no edges", nullptr);

  if (t <= 2) {
    if (auto p = find_path(h, t)) {
      out.trace.push_back({MoveKind::Oracle, t, make_context(h, *p).m_set().size()});
      out.moves = 1;
      out.result = std::move(*p);
      return out;
    }
    return stuck("exact search found no path of length " + std::to_string(t), nullptr);
  }

  const std::uint64_t budget =
      options.budget != 0 ? options.budget
                          : 16 * static_cast<std::uint64_t>(h.order()) * static_cast<std::uint64_t>(h.order());
  const auto first = h.edge(0);
  LinearPath current(std::vector<Vertex>(first.begin(), first.end()));
  MoveKind pending = MoveKind::Start;
  std::pair<std::size_t, std::size_t> previous{0, 0};

  while (true) {
    const PathContext ctx = make_context(h, current);
    const std::pair<std::size_t, std::size_t> progress{ctx.length(), ctx.m_set().size()};
    out.trace.push_back({pending, progress.first, progress.second});
    if (pending != MoveKind::Start && !(progress > previous)) {
      out.result = ViolationReport{ViolationReason::LemmaStepFailed,
                                   std::string(to_string(pending)) +
                                       " move did not increase (length, |M|)",
                                   ctx.path(), ctx.m_set()};
      return out;
    }
    previous = progress;

    if (ctx.length() >= t) {
      out.result = current.prefix(t);
      return out;
    }
    if (out.moves >= budget) {
      out.result = ViolationReport{ViolationReason::BudgetExhausted,
                                   "move budget of " + std::to_string(budget) + " exhausted",
                                   ctx.path(), ctx.m_set()};
      return out;
    }

    try {
      std::optional<LinearPath> next;
      if ((next = extend(h, current))) {
        pending = MoveKind::Extend;
      } else if ((next = improve_via_codegree(h, ctx))) {
        pending = MoveKind::Codegree;
      } else {
        const bool right_first = ctx.n_right().size() < ctx.n_left().size();
        for (PathEnd end : right_first ? std::array{PathEnd::Right, PathEnd::Left}
                                       : std::array{PathEnd::Left, PathEnd::Right}) {
          if (auto r = rotate(h, ctx, end)) {
            if (make_context(h, r->path).m_set().size() > ctx.m_set().size() + 1) {
              ++out.rotation_surplus_events;
            }
            next = std::move(r->path);
            pending = MoveKind::Rotate;
            break;
          }
        }
      }
      if (!next) {
        for (const CyclePlusWitness& w : closing_configurations(h, ctx)) {
          if ((next = unfold_cycle_plus(h, w))) break;
          if ((next = unfold_cycle_plus(h, CyclePlusWitness{w.path, w.parallel, w.closing}))) break;
        }
        if (next) pending = MoveKind::Unfold;
      }
      if (!next) {
        return stuck("no move applies to a path of length " + std::to_string(ctx.length()), &ctx);
      }
      current = std::move(*next);
      ++out.moves;
    } catch (const Error& e) {
      if (!is_lemma_step_failure(e.code())) throw;
      out.result = ViolationReport{ViolationReason::LemmaStepFailed, e.what(), ctx.path(), ctx.m_set()};
      return out;
    }
  }
}

VerificationReport check_lemma_bounds(const Hypergraph& h, const PathContext& ctx,
                                      bool hypotheses_hold) {
  const std::size_t t = ctx.length();
  const std::size_t last = 2 * t;
  const auto n = static_cast<std::int64_t>(h.order());
  const std::int64_t room = n - 2 * static_cast<std::int64_t>(t) - 1;

  VerificationReport report;
  report.subject = "path " + describe(ctx.path());
  report.replay = hypotheses_hold ? "hypotheses: P_{t+1}-free and degree bound asserted"
                                  : "hypotheses: not asserted";
  auto sum = [](std::size_t a, std::size_t b) { return std::to_string(a) + "+" + std::to_string(b); };
  auto when_both = [](std::size_t a, std::size_t b, std::size_t cap) {
    return a == 0 || b == 0 || a + b <= cap;
  };

  report.add("(i)", "<=1", std::to_string(ctx.dp(0, last)), ctx.dp(0, last) <= 1);
  for (std::size_t k = 0; k < t; ++k) {
    const std::string at = " k=" + std::to_string(k);
    const std::size_t l_odd = ctx.dp(0, 2 * k + 1);
    const std::size_t r_odd = ctx.dp(last, 2 * k + 1);
    const std::size_t l_even = ctx.dp(0, 2 * k + 2);
    const std::size_t r_even = ctx.dp(last, 2 * k);
    const std::size_t consecutive = ctx.dp(2 * k, 2 * k + 2);

    report.add("(ii)" + at, "<=2 when both >0", sum(l_odd, r_odd), when_both(l_odd, r_odd, 2));
    report.add("(iii)" + at, "<=4 when both >0", sum(l_even, r_even), when_both(l_even, r_even, 4));
    report.add("(iv)" + at + " l=0", "<=2 when both >0", sum(consecutive, l_odd),
               when_both(consecutive, l_odd, 2));
    report.add("(iv)" + at + " l=t", "<=2 when both >0", sum(consecutive, r_odd),
               when_both(consecutive, r_odd, 2));
    report.add("(a)" + at, "<=" + std::to_string(room), sum(l_odd, r_odd),
               static_cast<std::int64_t>(l_odd + r_odd) <= room);
    report.add("(b)" + at, "<=" + std::to_string(room), sum(l_even, r_even),
               static_cast<std::int64_t>(l_even + r_even) <= room);
  }
  if (hypotheses_hold && !report.passed()) {
    report.witnesses.push_back("LemmaStepFailed: bound violated under asserted hypotheses on " +
                               describe(ctx.path()));
  }
  return report;
}

}  // namespace hyperpath
