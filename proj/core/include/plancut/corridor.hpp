#pragma once

#include <vector>

#include "plancut/geom.hpp"

namespace plancut {

// The family of lines spanned by a set of non-vertical generator lines: a
// line g belongs to the corridor iff its dual point lies in the convex hull
// of the generators' dual points. Pointwise, the corridor covers the region
// between the generators' lower and upper envelopes.
struct Corridor {
  std::vector<Line> generators;  // deduplicated, canonical order
  std::vector<Point> dual_pts;   // dual points, aligned with generators
  Polygon dual_hull;
  std::vector<int> hull_gen;  // generator index of each hull vertex

  static Corridor of(std::vector<Line> gens);
};

// Line whose dual point is the convex combination of the generators' dual
// points with the given coefficients (nonnegative, summing to one).
Line combine(const std::vector<Line>& gens, const std::vector<Rat>& coeffs);

// p lies between the envelopes <=> the dual line of p meets the dual hull.
bool corridor_contains_point(const Corridor& C, const Point& p);
bool corridor_contains_line(const Corridor& C, const Line& g);

// Envelope values at abscissa x.
Rat corridor_upper_at(const Corridor& C, const Rat& x);
Rat corridor_lower_at(const Corridor& C, const Rat& x);

// For a line of the corridor: at most three generators whose own corridor
// already contains it (a dual Caratheodory witness). Prefers one generator
// (dual vertex hit), then two (dual edge hit), then three.
std::vector<Line> caratheodory_triple(const Corridor& C, const Line& g);

}  // namespace plancut
