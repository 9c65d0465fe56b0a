#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plancut/geom.hpp"
#include "plancut/instance.hpp"

namespace plancut {

enum class GenKind { Grid, ConvexPosition, Parabola, UniformRandom };

struct GeneratorSpec {
  GenKind kind = GenKind::Grid;
  long n = 1;
  std::uint64_t seed = 0;  // uniform_random only
  long box = 1000;         // uniform_random coordinate range [0, box]
};

// Deterministic point families. grid: the first n cells of the
// ceil(sqrt(n))-wide integer grid in row-major order. parabola: (i, i*i) for
// i in 1..n. convex_position: n rational points on the unit circle with
// pairwise distinct x. uniform_random: n distinct seeded integer points in
// [0, box]^2.
std::vector<Point> gen_instance(const GeneratorSpec& spec);

// Smallest halving line set by exhaustive search over the canonical pool:
// every line through two distinct instance points plus eight perturbed
// variants per pair (parallel offsets, rotations about either point, and
// pair-splitting rotations), each shrunk until no off-line point changes
// side. The pool realizes every combinatorially distinct single-line cut,
// so the result is optimal over arbitrary line sets; pool counts one
// representative per cut class. Subsets are enumerated by size then
// lexicographically; the first passing set is returned and rechecked with
// verify_halving. Intended for instances of at most ~12 points and max_size
// up to ~3.
struct BruteHalving {
  bool found = false;
  long size = 0;
  std::vector<Line> lines;
  long pool = 0;     // canonical pool size
  long checked = 0;  // subsets examined
};
BruteHalving brute_optimal_halving(const Instance& inst, long max_size);

// Maximum |P ∩ CH(S)| over subsets S of P whose closed convex hull avoids
// every point of W, by subset enumeration. Requires |P| <= 12.
struct BruteConvex {
  long count = 0;
  Polygon poly;
};
BruteConvex brute_max_empty_convex(const std::vector<Point>& P, const std::vector<Point>& W);

// Empirical constants for the soft acceptance bounds, fitted over seeded
// random trials. to_text() is byte-stable for fixed (trials, seed).
struct Calibration {
  long trials = 0;
  std::uint64_t seed = 0;
  // 1.25 * the largest observed c_i / (nu^{2/3}/i^{1/3} + nu/i + 1) over
  // random 64-line arrangements, c_i the i-th largest 2-face complexity.
  double complexity_const = 0.0;
  // 1.25 * the largest observed |R| * eps^2 over weak cuttings of random
  // 60-line sets at eps in {1/5, 1/10, 1/20}.
  double cutting_const = 0.0;
  std::string to_text() const;
};
Calibration calibrate_constants(long trials, std::uint64_t seed);

}  // namespace plancut
