#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "plancut/geom.hpp"
#include "plancut/instance.hpp"

namespace plancut {

// All input points plus every proper crossing of two segments joining input
// points, deduplicated and canonically sorted. from[i] records a crossing's
// defining segment pair as four indices into P ({a,b} x {c,d}); original
// points carry their own index four times.
struct GuardCandidates {
  std::vector<Point> Q;
  std::vector<std::array<int, 4>> from;
};
GuardCandidates candidate_points(const std::vector<Point>& P);

// Vertical-trapezoid DAG over one x-distinct point set: nodes are the
// trapezoids with a pair segment as floor and another as ceiling, clipped to
// their shared slab; edges link wall-sharing trapezoids whose chains
// continue convexly (exactly one of floor/ceiling switches at a shared
// segment endpoint). Maximal start-to-final paths correspond to the convex
// hulls of subsets of the points: summing node weights (points in the slab,
// right wall excluded) and adding one for the rightmost vertex counts the
// points in the closed hull. With chained edges, per switch vertex the
// successors are reached through slope-sorted relay vertices, keeping the
// edge count near the node count; the direct per-pair edges remain
// available for cross-validation.
struct TrapDag {
  struct Seg {
    int p = 0, q = 0;  // indices into pts, pts[p].x < pts[q].x
  };
  struct Node {
    int floor_seg = 0, ceil_seg = 0;
    Rat xl, xr;        // slab walls
    long weight = 0;   // points with xl <= x < xr between the segments
    bool start = false;   // floor and ceiling share their left endpoint
    bool final_ = false;  // ... their right endpoint
  };

  std::vector<Point> pts;
  std::vector<Seg> segs;
  std::vector<Node> nodes;
  // adjacency over nodes.size() trapezoids followed by relay vertices;
  // topo_order lists every vertex in a DP-ready order
  std::vector<std::vector<int>> adj;
  std::vector<int> topo_order;
  long relay_count = 0;

  static TrapDag build(const std::vector<Point>& P, bool chained_edges = true);
};

struct BadPolygon {
  Polygon poly;
  long count = 0;  // points of P in the closed polygon
};

// The convex hull of a subset of P whose closed hull avoids every point of
// W, maximizing |P ∩ hull|; returned iff that maximum reaches threshold.
// Requires pairwise distinct x within P and threshold >= 1.
std::optional<BadPolygon> find_bad_polygon(const std::vector<Point>& P, long threshold,
                                           const std::vector<Point>& W,
                                           bool chained_edges = true);

// Guard budget per rounding attempt: ceil(c * t^2 * (1 + log2(m + 1))).
long guard_budget(long t, long m, long c = 8);

// A closed canonical polygon holding at least threshold points of one set
// while the guard candidates inside it carry fractional mass below 1/2.
struct GuardConstraint {
  Polygon region;
  std::vector<size_t> q_hits;  // indices into Q of candidates in the region
  size_t witness_set_index = 0;
  long witness_count = 0;
  long threshold = 0;
  Rat fractional_value = Rat(0);
};

struct GuardStats {
  long t_used = 0;
  long t_lower = 0;  // ceil of the final LP minimum over emitted constraints
  long lp_solves = 0;
  long lp_iterations = 0;
  long dp_calls = 0;
  long rounding_attempts = 0;
  long candidate_count = 0;
  // the greedy rounding replaces a heavyweight net construction; guard-set
  // sizes carry no worst-case bound, only verified validity
  bool size_bound_guaranteed = false;
  // set when rounding still failed at the budget cap and the full point set
  // was returned instead (always valid)
  bool fallback_all_points = false;
};

struct GuardSet {
  std::vector<Point> guards;
  GuardStats stats;
  std::vector<GuardConstraint> constraints;  // every constraint emitted
};

struct GuardConfig {
  std::uint64_t seed = 0;
  long budget_c = 8;  // constant in guard_budget
};

// Round-and-cut over guard candidates: for budgets t = 1, 2, 4, ... solve
// the LP over the emitted constraints, then greedily stab bad polygons with
// the heaviest candidate inside; a polygon carrying fractional mass below
// 1/2 becomes a new constraint instead. Guards are verified and mapped back
// through the shared shear.
GuardSet solve_guarding(const Instance& inst, const GuardConfig& config = {});

struct GuardingReport {
  bool valid = true;
  size_t set_index = 0;  // fields below describe the first violation
  long count = 0;
  long threshold = 0;
  Polygon witness;
};

// For each set, searches for a convex region holding ceil(fraction_i * m_i)
// of its points while avoiding every guard; valid iff none exists. Shears
// internally to meet the x-distinctness requirement.
GuardingReport verify_guarding(const Instance& inst, const std::vector<Point>& W);

}  // namespace plancut
