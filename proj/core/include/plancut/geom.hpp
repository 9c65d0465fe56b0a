#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "plancut/rational.hpp"

namespace plancut {

struct Point {
  Rat x, y;
  Point() : x(0), y(0) {}
  Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

// Total order (lexicographic by x, then y) used for canonical sorting/dedup.
int point_cmp(const Point& p, const Point& q);
struct PointLess {
  bool operator()(const Point& p, const Point& q) const { return point_cmp(p, q) < 0; }
};

std::string point_str(const Point& p);

// Line a*x + b*y = c in canonical form: (a, b, c) are coprime integers and the
// first nonzero of (a, b) is positive, so equal lines compare equal.
struct Line {
  Int a, b, c;

  Line() : a(0), b(1), c(0) {}
  Line(const Rat& ra, const Rat& rb, const Rat& rc);

  static Line through(const Point& p, const Point& q);
  static Line slope_intercept(const Rat& slope, const Rat& intercept);
  static Line vertical(const Rat& x);

  bool is_vertical() const { return b == 0; }
  Rat slope() const;      // requires !is_vertical()
  Rat intercept() const;  // requires !is_vertical()
  Rat y_at(const Rat& x) const;  // requires !is_vertical()
  Rat x_at(const Rat& y) const;  // requires a != 0

  // Signed side: a*p.x + b*p.y - c. Zero iff p lies on the line.
  Rat eval(const Point& p) const;
  int side(const Point& p) const;

  bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const Line& o) const { return !(*this == o); }
};

int line_cmp(const Line& g, const Line& h);
struct LineLess {
  bool operator()(const Line& g, const Line& h) const { return line_cmp(g, h) < 0; }
};

std::string line_str(const Line& l);

struct Segment {
  Point p, q;
  bool contains(const Point& r) const;  // closed segment membership
};

// Convex polygon, vertices in counterclockwise order, strictly convex (no
// three collinear). Degenerate hulls may carry 1 vertex (a point) or 2
// vertices (a segment).
struct Polygon {
  std::vector<Point> vs;
  bool is_valid() const;
  bool contains(const Point& p) const;  // closed containment
};

Rat polygon_area2(const Polygon& poly);  // twice the signed area

// Orientation of r relative to the directed line p->q: +1 left, -1 right, 0 on.
int orient(const Point& p, const Point& q, const Point& r);

// Point-line duality. dual_point(p) is the line y = p.x * x - p.y;
// dual_line of a non-vertical y = m*x + k is the point (m, -k).
Line dual_point(const Point& p);
Point dual_line(const Line& l);

enum class LineRelation { Proper, Parallel, Coincident };
struct LineIntersection {
  LineRelation kind;
  Point p;  // meaningful only when kind == Proper
};
LineIntersection line_intersection(const Line& g, const Line& h);

// Convex hull (counterclockwise). Collinear inputs yield the extreme pair; a
// single distinct input point yields a one-vertex polygon.
Polygon convex_hull(std::vector<Point> pts);

// The two common internal tangents of two strictly separated convex hulls;
// each returned line has A entirely in one closed halfplane and B in the
// other. Degenerate hulls collapse the pair (the same line is returned twice).
std::pair<Line, Line> cross_tangents(const Polygon& A, const Polygon& B);

// Shared shear x' = x + q*y (y unchanged) used to put instances in general
// position in x; inverse maps restore original coordinates on output.
Point shear_point(const Point& p, const Rat& q);
Point unshear_point(const Point& p, const Rat& q);
Line shear_line(const Line& l, const Rat& q);
Line unshear_line(const Line& l, const Rat& q);

}  // namespace plancut
