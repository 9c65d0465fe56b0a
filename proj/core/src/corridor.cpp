#include "plancut/corridor.hpp"

#include <map>
#include <stdexcept>

namespace plancut {

Corridor Corridor::of(std::vector<Line> gens) {
  if (gens.empty()) throw std::invalid_argument("Corridor: no generators");
  std::map<Line, int, LineLess> uniq;
  for (const Line& g : gens) {
    if (g.is_vertical()) throw std::invalid_argument("Corridor: vertical generator");
    uniq.emplace(g, 0);
  }
  Corridor C;
  for (auto& [g, idx] : uniq) {
    idx = (int)C.generators.size();
    C.generators.push_back(g);
    C.dual_pts.push_back(dual_line(g));
  }
  C.dual_hull = convex_hull(C.dual_pts);
  std::map<Point, int, PointLess> back;
  for (size_t i = 0; i < C.dual_pts.size(); ++i) back.emplace(C.dual_pts[i], (int)i);
  for (const Point& v : C.dual_hull.vs) C.hull_gen.push_back(back.at(v));
  return C;
}

Line combine(const std::vector<Line>& gens, const std::vector<Rat>& coeffs) {
  if (gens.empty() || gens.size() != coeffs.size())
    throw std::invalid_argument("combine: generators/coefficients mismatch");
  Rat sum(0), X(0), Y(0);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (coeffs[i] < 0) throw std::invalid_argument("combine: negative coefficient");
    Point d = dual_line(gens[i]);
    X += coeffs[i] * d.x;
    Y += coeffs[i] * d.y;
    sum += coeffs[i];
  }
  if (sum != 1) throw std::invalid_argument("combine: coefficients must sum to one");
  return dual_point(Point(X, Y));
}

bool corridor_contains_point(const Corridor& C, const Point& p) {
  Line d = dual_point(p);
  bool pos = false, neg = false;
  for (const Point& v : C.dual_hull.vs) {
    int s = d.side(v);
    if (s == 0) return true;
    (s > 0 ? pos : neg) = true;
    if (pos && neg) return true;
  }
  return false;
}

bool corridor_contains_line(const Corridor& C, const Line& g) {
  if (g.is_vertical()) throw std::invalid_argument("corridor_contains_line: vertical line");
  return C.dual_hull.contains(dual_line(g));
}

Rat corridor_upper_at(const Corridor& C, const Rat& x) {
  Rat best = C.generators[0].y_at(x);
  for (size_t i = 1; i < C.generators.size(); ++i) {
    Rat y = C.generators[i].y_at(x);
    if (y > best) best = y;
  }
  return best;
}

Rat corridor_lower_at(const Corridor& C, const Rat& x) {
  Rat best = C.generators[0].y_at(x);
  for (size_t i = 1; i < C.generators.size(); ++i) {
    Rat y = C.generators[i].y_at(x);
    if (y < best) best = y;
  }
  return best;
}

std::vector<Line> caratheodory_triple(const Corridor& C, const Line& g) {
  if (!corridor_contains_line(C, g))
    throw std::invalid_argument("caratheodory_triple: line outside corridor");
  Point q = dual_line(g);
  for (const Line& gen : C.generators)
    if (gen == g) return {g};
  const auto& hv = C.dual_hull.vs;
  for (size_t i = 0; i < hv.size(); ++i)
    if (hv[i] == q) return {C.generators[C.hull_gen[i]]};
  if (hv.size() == 2)
    return {C.generators[C.hull_gen[0]], C.generators[C.hull_gen[1]]};
  for (size_t i = 0; i < hv.size(); ++i) {
    size_t j = (i + 1) % hv.size();
    if (Segment{hv[i], hv[j]}.contains(q))
      return {C.generators[C.hull_gen[i]], C.generators[C.hull_gen[j]]};
  }
  for (size_t i = 1; i + 1 < hv.size(); ++i) {
    Polygon tri{{hv[0], hv[i], hv[i + 1]}};
    if (tri.contains(q))
      return {C.generators[C.hull_gen[0]], C.generators[C.hull_gen[i]],
              C.generators[C.hull_gen[i + 1]]};
  }
  throw std::logic_error("caratheodory_triple: fan search failed");
}

}  // namespace plancut
