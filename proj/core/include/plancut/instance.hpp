#pragma once

#include <cstdint>
#include <vector>

#include "plancut/geom.hpp"

namespace plancut {

struct PointSet {
  std::vector<Point> points;  // deduplicated, canonically sorted
  Rat fraction;               // in (0, 1]
};

// A family of planar point sets, each with its own fraction. Sets may share
// points; shared points count once per set they belong to.
struct Instance {
  std::vector<PointSet> sets;

  // Validates fractions, sorts and deduplicates each set.
  static Instance of(std::vector<PointSet> raw);

  size_t k() const { return sets.size(); }
  size_t total_points() const;
  Rat min_fraction() const;
  std::vector<Point> all_points() const;  // union, deduplicated
  std::vector<std::vector<Point>> point_lists() const;
};

Instance shear_instance(const Instance& inst, const Rat& q);

// First q in a deterministic seeded sequence of small rationals that makes
// the x-coordinates of the union pairwise distinct after the shear
// x' = x + q*y.
Rat choose_shear(const Instance& inst, uint64_t seed);

}  // namespace plancut
