#include "plancut/geom.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace plancut {

int point_cmp(const Point& p, const Point& q) {
  int cx = cmp(p.x, q.x);
  if (cx != 0) return cx;
  return cmp(p.y, q.y);
}

std::string point_str(const Point& p) {
  return "(" + rat_str(p.x) + ", " + rat_str(p.y) + ")";
}

Line::Line(const Rat& ra, const Rat& rb, const Rat& rc) {
  if (ra == 0 && rb == 0) throw std::invalid_argument("Line: a and b both zero");
  Int l = lcm(lcm(ra.get_den(), rb.get_den()), rc.get_den());
  a = ra.get_num() * (l / ra.get_den());
  b = rb.get_num() * (l / rb.get_den());
  c = rc.get_num() * (l / rc.get_den());
  Int g = gcd(gcd(a, b), c);
  if (g != 0) {
    a /= g;
    b /= g;
    c /= g;
  }
  int lead = sgn(a) != 0 ? sgn(a) : sgn(b);
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
}

Line Line::through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("Line::through: identical points");
  Rat a = p.y - q.y;
  Rat b = q.x - p.x;
  Rat c = a * p.x + b * p.y;
  return Line(a, b, c);
}

Line Line::slope_intercept(const Rat& slope, const Rat& intercept) {
  return Line(-slope, Rat(1), intercept);
}

Line Line::vertical(const Rat& x) { return Line(Rat(1), Rat(0), x); }

Rat Line::slope() const {
  if (b == 0) throw std::logic_error("Line::slope on vertical line");
  return rat(-a, b);
}

Rat Line::intercept() const {
  if (b == 0) throw std::logic_error("Line::intercept on vertical line");
  return rat(c, b);
}

Rat Line::y_at(const Rat& x) const {
  if (b == 0) throw std::logic_error("Line::y_at on vertical line");
  return Rat(c - a * x) / Rat(b);
}

Rat Line::x_at(const Rat& y) const {
  if (a == 0) throw std::logic_error("Line::x_at on horizontal line");
  return Rat(c - b * y) / Rat(a);
}

Rat Line::eval(const Point& p) const { return a * p.x + b * p.y - c; }

int Line::side(const Point& p) const { return sgn(eval(p)); }

int line_cmp(const Line& g, const Line& h) {
  int r = cmp(g.a, h.a);
  if (r != 0) return r;
  r = cmp(g.b, h.b);
  if (r != 0) return r;
  return cmp(g.c, h.c);
}

std::string line_str(const Line& l) {
  return l.a.get_str() + "*x + " + l.b.get_str() + "*y = " + l.c.get_str();
}

bool Segment::contains(const Point& r) const {
  if (orient(p, q, r) != 0) return false;
  const Rat& lox = p.x <= q.x ? p.x : q.x;
  const Rat& hix = p.x <= q.x ? q.x : p.x;
  const Rat& loy = p.y <= q.y ? p.y : q.y;
  const Rat& hiy = p.y <= q.y ? q.y : p.y;
  return lox <= r.x && r.x <= hix && loy <= r.y && r.y <= hiy;
}

int orient(const Point& p, const Point& q, const Point& r) {
  Rat cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(cross);
}

bool Polygon::is_valid() const {
  if (vs.empty()) return false;
  Polygon hull = convex_hull(vs);
  if (hull.vs.size() != vs.size()) return false;
  size_t start = 0;
  for (size_t i = 1; i < vs.size(); ++i)
    if (point_cmp(vs[i], vs[start]) < 0) start = i;
  for (size_t i = 0; i < vs.size(); ++i)
    if (vs[(start + i) % vs.size()] != hull.vs[i]) return false;
  return true;
}

bool Polygon::contains(const Point& p) const {
  if (vs.empty()) return false;
  if (vs.size() == 1) return vs[0] == p;
  if (vs.size() == 2) return Segment{vs[0], vs[1]}.contains(p);
  for (size_t i = 0; i < vs.size(); ++i)
    if (orient(vs[i], vs[(i + 1) % vs.size()], p) < 0) return false;
  return true;
}

Rat polygon_area2(const Polygon& poly) {
  Rat s(0);
  size_t n = poly.vs.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& u = poly.vs[i];
    const Point& v = poly.vs[(i + 1) % n];
    s += u.x * v.y - v.x * u.y;
  }
  return s;
}

Line dual_point(const Point& p) { return Line::slope_intercept(p.x, -p.y); }

Point dual_line(const Line& l) {
  if (l.is_vertical()) throw std::invalid_argument("dual_line: vertical line has no dual point");
  return Point(l.slope(), -l.intercept());
}

LineIntersection line_intersection(const Line& g, const Line& h) {
  Int det = g.a * h.b - h.a * g.b;
  if (det == 0) {
    if (g == h) return {LineRelation::Coincident, Point()};
    return {LineRelation::Parallel, Point()};
  }
  Rat x = rat(Int(g.c * h.b - h.c * g.b), det);
  Rat y = rat(Int(g.a * h.c - h.a * g.c), det);
  return {LineRelation::Proper, Point(x, y)};
}

Polygon convex_hull(std::vector<Point> pts) {
  if (pts.empty()) throw std::invalid_argument("convex_hull: empty input");
  std::sort(pts.begin(), pts.end(), PointLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return Polygon{{pts[0]}};
  std::vector<Point> h;
  auto build = [&](auto begin, auto end) {
    size_t base = h.size();
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= base + 2 && orient(h[h.size() - 2], h[h.size() - 1], *it) <= 0)
        h.pop_back();
      h.push_back(*it);
    }
  };
  build(pts.begin(), pts.end());
  h.pop_back();
  build(pts.rbegin(), pts.rend());
  h.pop_back();
  // Collinear inputs collapse to the two extremes automatically.
  return Polygon{std::move(h)};
}

std::pair<Line, Line> cross_tangents(const Polygon& A, const Polygon& B) {
  if (A.vs.empty() || B.vs.empty()) throw std::invalid_argument("cross_tangents: empty hull");
  auto classify = [](const Polygon& poly, const Line& g) {
    bool nonneg = true, nonpos = true;
    for (const Point& v : poly.vs) {
      int s = g.side(v);
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    return std::pair<bool, bool>(nonneg, nonpos);
  };
  std::set<Line, LineLess> found;
  for (const Point& va : A.vs) {
    for (const Point& vb : B.vs) {
      if (va == vb) continue;
      Line g = Line::through(va, vb);
      auto [an, ap] = classify(A, g);
      auto [bn, bp] = classify(B, g);
      if ((an && bp) || (ap && bn)) found.insert(g);
    }
  }
  if (found.size() == 1) return {*found.begin(), *found.begin()};
  if (found.size() == 2) return {*found.begin(), *std::next(found.begin())};
  throw std::invalid_argument("cross_tangents: hulls are not strictly separated");
}

Point shear_point(const Point& p, const Rat& q) { return Point(p.x + q * p.y, p.y); }

Point unshear_point(const Point& p, const Rat& q) { return Point(p.x - q * p.y, p.y); }

Line shear_line(const Line& l, const Rat& q) {
  return Line(Rat(l.a), Rat(l.b) - Rat(l.a) * q, Rat(l.c));
}

Line unshear_line(const Line& l, const Rat& q) {
  return Line(Rat(l.a), Rat(l.a) * q + Rat(l.b), Rat(l.c));
}

}  // namespace plancut
