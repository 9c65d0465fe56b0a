#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plancut/cutting.hpp"
#include "plancut/instance.hpp"

namespace plancut {

// Fractional weights over an explicit candidate line set; lines and x are
// aligned. value is the sum of x, which never exceeds the budget t the
// system was solved under.
struct FractionalSolution {
  std::vector<Line> lines;
  std::vector<Rat> x;
  Rat t = Rat(0);
  Rat value = Rat(0);
};

// A region holding more than fraction_i * m_i points of set i while the
// current fractional weights crossing it sum to less than 1/2. The region is
// an open 2-face of the arrangement of region_cut, pinned down by its sign
// vector and an interior point, so the row stays recomputable later.
struct ViolatedConstraint {
  std::vector<Line> region_cut;
  std::string region_sig;
  Point rep{Rat(0), Rat(0)};
  std::vector<Line> lines_crossing;  // candidates crossing the open region
  size_t witness_set_index = 0;
  long witness_count = 0;
  Rat allowed = Rat(0);           // fraction_i * m_i of the witness set
  Rat fractional_value = Rat(0);  // sum of x over lines_crossing at creation
};

struct ReductionStats {
  long t_used = 0;
  // ceil of the LP minimum over the final constraint system: the smallest
  // integer budget at which that system is feasible, hence a certified lower
  // bound for any line subset of the candidates satisfying the constraints.
  long t_lower = 0;
  long lp_solves = 0;
  long lp_iterations = 0;
  long rounding_attempts = 0;
  long candidate_count = 0;
  long resamples = 0;
  std::vector<long> cutting_sizes;  // lines produced by each rounding attempt
};

struct Solution {
  std::vector<Line> lines;
  ReductionStats stats;
  std::vector<ViolatedConstraint> constraints;  // every constraint emitted
};

struct HalvingReport {
  bool valid = true;
  size_t set_index = 0;       // fields below describe the worst violation
  long count = 0;
  Rat allowed = Rat(0);
  Point witness{Rat(0), Rat(0)};
};

struct ReductionConfig {
  std::uint64_t seed = 0;
  long net_c = kNetC;       // sample-size multiplier for candidate nets
  long t_cap_c = 8;         // budgets searched up to ceil(t_cap_c * k / fr)
  long iter_cap_mult = 50;  // per-budget round cap: iter_cap_mult * |candidates|
  long resample_rounds = 5;
};

// Outcome of one LP solve over the accumulated constraints: an optimal
// feasible weighting at budget t, or an exact infeasibility certificate.
struct LpOutcome {
  std::optional<FractionalSolution> solution;
  bool uncoverable = false;  // some constraint is crossed by no candidate
  Rat lp_min = Rat(0);       // exact minimum of sum x (when coverable)
  long iterations = 0;
};

// Outcome of one rounding attempt: a halving line set, or a new violated
// constraint to feed back into the LP.
struct RoundOutcome {
  std::optional<std::vector<Line>> lines;
  std::optional<ViolatedConstraint> violated;
  long cutting_size = 0;
  long eps_halvings = 0;  // extra refinement rounds forced by a weight tie
};

// Per-set seeded point nets (drawn without replacement, so small sets are
// taken whole), then every distinct line through two net points.
std::vector<Line> candidate_lines(const Instance& inst, std::uint64_t seed,
                                  long net_c = kNetC);

// Exact feasibility of { 0 <= x <= 1, sum x <= t, sum over each constraint's
// crossing lines >= 1 } over the candidate columns. Returns the minimum-mass
// feasible point when one exists.
LpOutcome lp_feasible(const std::vector<Line>& candidates,
                      const std::vector<ViolatedConstraint>& constraints, const Rat& t);

// One rounding attempt on a feasible weighting: build a weak cutting of the
// support lines at eps = 1/(2*max(value,1)), split overfull cells of
// dimension below two with verticals through their points, then either
// return the cutting lines (no cell overfull: they halve the instance) or
// the first overfull 2-face as a constraint whose crossing mass is below
// 1/2. Requires pairwise distinct x-coordinates across the instance (shear
// first) and fraction_i * m_i >= 1 for every set. Only seed and max_retries
// of params are used; resolution parameters are derived from the value.
RoundOutcome round_fractional(const Instance& inst, const FractionalSolution& fs,
                              const CuttingParams& params);

// Full pipeline: shear, candidate generation, then for budgets t = 1, 2, 4,
// ... the round-and-cut loop (LP solve, rounding, constraint accumulation)
// until a rounding attempt yields lines that pass verify_halving; the lines
// are mapped back through the shear and re-verified on the input.
Solution solve_reduction(const Instance& inst, const ReductionConfig& config = {});

// Exhaustive check that every cell of every dimension of the arrangement of
// the lines holds at most fraction_i * m_i points of each set.
HalvingReport verify_halving(const Instance& inst, const std::vector<Line>& lines);

// Arrangement-free equivalent grouping points by their sign vectors over the
// lines; cross-checks the arrangement path in tests.
HalvingReport verify_halving_signs(const Instance& inst, const std::vector<Line>& lines);

}  // namespace plancut
