#pragma once

#include <cstdint>

#include "plancut/arrangement.hpp"

namespace plancut {

// Sample-size constants for the net-style draws (see sample_net).
inline constexpr long kNetC = 4;
inline constexpr long kNetD = 8;

// Parameters of the two-stage cutting construction. r is the resolution
// target, alpha the per-face refinement stride, c the sample multiplier;
// the sample size is nu = c * alpha * r * max(1, ceil(log2 r)).
struct CuttingParams {
  Rat eps;
  long r = 0;
  long alpha = 1;
  long c = 2;
  std::uint64_t seed = 0;
  long max_retries = 20;

  static CuttingParams defaults(const Rat& eps, std::uint64_t seed);
  long log2r() const;  // max(1, ceil(log2 r))
  long nu() const;     // c * alpha * r * log2r
};

// A set of lines such that every open face of their arrangement meets input
// lines of bounded total weight. Each line is tagged with how it arose.
struct Cutting {
  enum class Origin { Sampled, VerticalRefinement };
  std::vector<Line> lines;
  std::vector<Origin> origin;  // parallel to lines
  struct Stats {
    long sample_size = 0;         // sampled lines after dedup
    long faces_refined = 0;       // faces that received vertical walls
    long refinement_lines = 0;    // vertical lines added
    long refined_complexity = 0;  // summed complexity of the refined faces
    long attempts = 1;            // sampling rounds used
  } stats;

  std::vector<Line> sampled() const;
  std::vector<Line> refinement() const;
};

struct CutCheck {
  bool valid = false;
  Rat worst_weight = Rat(0);
  Point witness{Rat(0), Rat(0)};  // interior point of a heaviest face
};

// Number of draws used by sample_net for the given parameters:
// ceil(kNetC * (1/delta) * (log2(1/phi) + kNetD * log2(1/delta))), >= 1.
long net_sample_count(const Rat& delta, const Rat& phi);

// That many independent draws from L with probability proportional to
// weight, deduplicated (first-draw order kept). Deterministic per seed.
std::vector<Line> sample_net(const WeightedLineSet& L, const Rat& delta, const Rat& phi,
                             std::uint64_t seed);

// Largest open-interior crossing weight over all trapezoids of the vertical
// decompositions of all faces of the arrangement of S.
Rat max_trapezoid_weight(const WeightedLineSet& L, const std::vector<Line>& S);

// Quadratic-size construction: a sampled line set S whose trapezoid
// decomposition is verified fine enough, plus vertical walls through every
// vertex of the sample's arrangement. Retries with doubled samples.
Cutting simple_weak_cutting(const WeightedLineSet& L, const Rat& eps, std::uint64_t seed,
                            long max_retries = 20);

// Two-stage construction: a weighted sample R1, then vertical refinement
// lines through every alpha-th vertex (in x-order) of each face of the
// sample's arrangement whose complexity exceeds alpha. The result is
// verified before returning; on failure the sample is redrawn with a doubled
// multiplier, up to params.max_retries times.
Cutting weak_cutting(const WeightedLineSet& L, const Rat& eps, const CuttingParams& params);
Cutting weak_cutting(const WeightedLineSet& L, const Rat& eps, std::uint64_t seed);

// Checks that every open 2-face of the arrangement of R meets lines of L of
// total weight at most eps * L.total. The arrangement is never materialized:
// every line of L is walked across R and face weights are accumulated under
// a wide hash of the face's sign vector, so a hash collision can only merge
// faces and overestimate the maximum (the valid verdict is never inflated).
CutCheck verify_cutting(const WeightedLineSet& L, const std::vector<Line>& R, const Rat& eps);
CutCheck verify_cutting(const WeightedLineSet& L, const Cutting& R, const Rat& eps);

}  // namespace plancut
