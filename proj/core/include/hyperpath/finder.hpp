#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperpath/hypergraph.hpp"
#include "hyperpath/linear_path.hpp"
#include "hyperpath/report.hpp"

namespace hyperpath {

// Rotation state of a linear path P = (x_0, ..., x_{2s}) in a 3-graph.
//
//   dp(a, b)  = |N_H({x_a, x_b}) \ V(P)|
//   M         = { i in [0, s-1] : dp(2i, 2i+2) >= 2 }
//   T         = [0, s-1] \ M
//   N_left    = { i in M : dp(0, 2i+2) >= 3 }  u { i in T : dp(0, 2i+1) >= 2 }
//   N_right   = { i in M : dp(2s, 2i) >= 3 }   u { i in T : dp(2s, 2i+1) >= 2 }
//
// Everything is recomputed from scratch by make_context(); contexts are never
// patched after a move.
class PathContext {
 public:
  const LinearPath& path() const noexcept { return path_; }
  std::size_t length() const noexcept { return path_.length(); }
  const VertexSet& path_vertices() const noexcept { return on_path_; }

  std::size_t dp(std::size_t a, std::size_t b) const { return dp_[a * width_ + b]; }

  const std::vector<std::size_t>& m_set() const noexcept { return m_; }
  const std::vector<std::size_t>& t_set() const noexcept { return t_; }
  bool in_m(std::size_t i) const;

  const std::vector<std::size_t>& n_left() const noexcept { return n_left_; }
  const std::vector<std::size_t>& n_right() const noexcept { return n_right_; }
  // Disjointness of N_left and N_right is only derived under the degree
  // hypotheses, so it is reported, never assumed.
  bool endpoint_sets_disjoint() const;

 private:
  friend PathContext make_context(const Hypergraph& h, const LinearPath& p);
  explicit PathContext(LinearPath p) : path_(std::move(p)) {}

  LinearPath path_;
  VertexSet on_path_;
  std::size_t width_ = 0;
  std::vector<std::size_t> dp_;
  std::vector<std::size_t> m_;
  std::vector<std::size_t> t_;
  std::vector<std::size_t> n_left_;
  std::vector<std::size_t> n_right_;
};

// Throws Error{InvalidPath} when p is not a linear path of h.
PathContext make_context(const Hypergraph& h, const LinearPath& p);

// Appends an edge with two fresh vertices at an end of the path. The end
// connectors x_{2s}, x_0 are tried first, then x_{2s-1}, x_1 (an edge at x_1
// with two fresh vertices extends (x_1, x_0, x_2, ...)). Lexicographically
// least fresh pair at the first end that has one.
std::optional<LinearPath> extend(const Hypergraph& h, const LinearPath& p);

enum class PathEnd { Left, Right };

struct Rotation {
  LinearPath path;
  PathEnd end;
  // Pivot k' in T, indexed along the path oriented so the rotating end is x_0.
  std::size_t pivot;
  Vertex removed;   // x_{2k'+1}
  Vertex inserted;  // v
};

// Rotation at the given end. With x_0 the rotating end: the first k' in T with
// dp(0, 2k'+2) >= max(2|M|+1, 3), v the smallest vertex of
// N({x_0, x_{2k'+2}}) \ V(P) outside every N({x_{2k}, x_{2k+2}}) \ V(P) with
// k in M and dp(2k, 2k+2) = 2, and the result
//   (x_{2k'}, x_{2k'-1}, ..., x_0, v, x_{2k'+2}, ..., x_{2s}).
// Same length, |M'| >= |M| + 1. Throws Error{RotationPostconditionFailed} if
// the result breaks that contract.
std::optional<Rotation> rotate(const Hypergraph& h, const PathContext& ctx, PathEnd end);

// Length s+1 splices from two distinct outside codegree neighbours:
//   (ii) y in N(x_0, x_{2k+1}), z in N(x_{2s}, x_{2k+1}):
//        (x_{2k+2}, ..., x_{2s}, z, x_{2k+1}, y, x_0, ..., x_{2k})
//   (iv) y in N(x_{2k}, x_{2k+2}), z in N(x_0, x_{2k+1}):
//        (x_{2k+1}, z, x_0, ..., x_{2k}, y, x_{2k+2}, ..., x_{2s})
//        and the mirror image with x_{2s} in place of x_0.
// Throws Error{SplicePostconditionFailed} on an invalid splice.
std::optional<LinearPath> improve_via_codegree(const Hypergraph& h, const PathContext& ctx);

// C_{s+1}^+ configurations visible from the current path:
//   dp(0, 2s) >= 2 closes the path directly;
//   for some k, |N(x_0, x_{2k+2}) \ V(P)| = i, |N(x_{2s}, x_{2k}) \ V(P)| = j
//   with i >= j >= 1, i + j >= 5 (or the mirror image) gives
//   (x_0, ..., x_{2k}, z, x_{2s}, x_{2s-1}, ..., x_{2k+2}) plus y_1, y_2.
std::vector<CyclePlusWitness> closing_configurations(const Hypergraph& h, const PathContext& ctx);

// Opens a C_{t+1}^+ into a linear (t+1)-path through an edge {v} u T with
// |T n X| <= 1, X the cycle's vertex set. Absent iff every such T meets X
// twice, which forces d_H(v) <= C(2t+2, 2).
// Throws Error{UnfoldPostconditionFailed} on an invalid result.
std::optional<LinearPath> unfold_cycle_plus(const Hypergraph& h, const CyclePlusWitness& w);

enum class MoveKind { Start, Extend, Codegree, Rotate, Unfold, Oracle };
std::string_view to_string(MoveKind kind);

struct MoveRecord {
  MoveKind kind;
  std::size_t length;  // after the move
  std::size_t m_size;  // |M_P| after the move
};

enum class ViolationReason { HypothesisUnmet, LemmaStepFailed, BudgetExhausted };
std::string_view to_string(ViolationReason reason);

struct ViolationReport {
  ViolationReason reason;
  std::string detail;
  // Snapshot of the path the driver was stuck on (absent for edgeless input).
  std::optional<LinearPath> path;
  std::vector<std::size_t> m_set;
};

struct FinderOptions {
  // Maximum accepted moves; 0 selects 16 n^2.
  std::uint64_t budget = 0;
};

struct FinderOutcome {
  std::variant<LinearPath, ViolationReport> result;
  std::vector<MoveRecord> trace;
  std::size_t moves = 0;
  // Rotations where |M| grew by more than one.
  std::size_t rotation_surplus_events = 0;

  bool found() const { return std::holds_alternative<LinearPath>(result); }
  const LinearPath* path() const { return std::get_if<LinearPath>(&result); }
  const ViolationReport* violation() const { return std::get_if<ViolationReport>(&result); }
};

// Whether (n, δ_1(H)) meet the stated sufficient condition for P_t:
// t = 1: n >= 3, δ_1 >= 1; t = 2: n >= 5, δ_1 >= 4; t >= 3: theorem_threshold.
bool degree_hypotheses_hold(const Hypergraph& h, std::size_t t);

// Rotation-extension driver. t <= 2 goes to the exact oracle. For t >= 3 it
// starts from the first edge and repeatedly tries extend, improve_via_codegree,
// rotate (endpoint with the smaller N-set first) and unfold_cycle_plus on the
// closing configurations. Returns a P_t, or a ViolationReport: LemmaStepFailed
// when stuck although degree_hypotheses_hold() (or a move broke its contract),
// HypothesisUnmet when stuck otherwise, BudgetExhausted past the move budget.
FinderOutcome find_guaranteed(const Hypergraph& h, std::size_t t, FinderOptions options = {});

// Evaluates the codegree bounds on a path P of length t:
//   (i)   dp(0, 2t) <= 1
//   (ii)  dp(0, 2k+1) + dp(2t, 2k+1) <= 2            when both terms > 0
//   (iii) dp(0, 2k+2) + dp(2t, 2k) <= 4              when both terms > 0
//   (iv)  dp(2k, 2k+2) + dp(2l, 2k+1) <= 2, l in {0,t}, when both terms > 0
//   (a)   dp(0, 2k+1) + dp(2t, 2k+1) <= n - 2t - 1
//   (b)   dp(0, 2k+2) + dp(2t, 2k) <= n - 2t - 1
// `hypotheses_hold` is the caller's claim that H is P_{t+1}-free with
// δ_1 >= g(n,t); under it every violation is recorded as a lemma failure.
VerificationReport check_lemma_bounds(const Hypergraph& h, const PathContext& ctx,
                                      bool hypotheses_hold);

}  // namespace hyperpath
