#include "plancut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "plancut/arrangement.hpp"
#include "plancut/cutting.hpp"
#include "plancut/reduction.hpp"

namespace plancut {

std::vector<Point> gen_instance(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("gen_instance: n must be at least 1");
  std::vector<Point> pts;
  pts.reserve((size_t)spec.n);
  switch (spec.kind) {
    case GenKind::Grid: {
      long side = (long)std::ceil(std::sqrt((double)spec.n));
      while (side * side < spec.n) ++side;
      for (long t = 0; t < spec.n; ++t) pts.emplace_back(Rat(t % side), Rat(t / side));
      break;
    }
    case GenKind::Parabola: {
      for (long i = 1; i <= spec.n; ++i) pts.emplace_back(Rat(i), Rat(i) * Rat(i));
      break;
    }
    case GenKind::ConvexPosition: {
      // rational points on the unit circle; x = (1-t^2)/(1+t^2) is strictly
      // decreasing for t >= 1, so x-coordinates are pairwise distinct
      for (long t = 1; t <= spec.n; ++t) {
        Int tt = Int(t) * Int(t);
        pts.emplace_back(rat(Int(1) - tt, Int(1) + tt), rat(Int(2 * t), Int(1) + tt));
      }
      break;
    }
    case GenKind::UniformRandom: {
      if (spec.box < 0 || (spec.box + 1) * (spec.box + 1) < spec.n)
        throw std::invalid_argument("gen_instance: box too small for n distinct points");
      std::mt19937_64 rng(spec.seed);
      std::set<Point, PointLess> seen;
      while ((long)seen.size() < spec.n) {
        long x = (long)(rng() % (std::uint64_t)(spec.box + 1));
        long y = (long)(rng() % (std::uint64_t)(spec.box + 1));
        Point p{Rat(x), Rat(y)};
        if (seen.insert(p).second) pts.push_back(p);
      }
      break;
    }
  }
  return pts;
}

namespace {

// Canonical pool: every pair line plus eight perturbed variants per pair --
// parallel offsets, rotations about either defining point, and
// opposite-sense rotations that split the pair. Each variant is shrunk until
// no point strictly off the base line changes side (up to one global
// orientation flip from canonicalization), so the variants realize exactly
// the cut classes adjacent to the pair line. Together these cover every
// combinatorially distinct single-line cut of the point set.
std::vector<Line> canonical_pool(const std::vector<Point>& pts) {
  std::set<Line, LineLess> pool;
  auto add_shrunk = [&](const Line& base, const std::function<Line(const Rat&)>& make) {
    for (Rat t(1);; t /= 2) {
      Line var = make(t);
      int flip = 0;
      bool ok = true;
      for (const Point& p : pts) {
        int sb = base.side(p);
        if (sb == 0) continue;
        int sv = var.side(p);
        int rel = sb == sv ? 1 : -1;
        if (sv == 0 || (flip != 0 && rel != flip)) {
          ok = false;
          break;
        }
        flip = rel;
      }
      if (ok) {
        pool.insert(var);
        return;
      }
    }
  };
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b) {
      Line l = Line::through(pts[a], pts[b]);
      pool.insert(l);
      const Point &p = pts[a], &q = pts[b];
      Rat na(l.a), nb(l.b), rc(l.c);  // (na, nb) is normal to l
      for (long s : {1L, -1L}) {
        Rat sr(s);
        add_shrunk(l, [&](const Rat& t) { return Line(na, nb, rc + sr * t); });
        add_shrunk(l, [&](const Rat& t) {
          return Line::through(p, Point{q.x + sr * t * na, q.y + sr * t * nb});
        });
        add_shrunk(l, [&](const Rat& t) {
          return Line::through(q, Point{p.x + sr * t * na, p.y + sr * t * nb});
        });
        add_shrunk(l, [&](const Rat& t) {
          return Line::through(Point{p.x + sr * t * na, p.y + sr * t * nb},
                               Point{q.x - sr * t * na, q.y - sr * t * nb});
        });
      }
    }
  return std::vector<Line>(pool.begin(), pool.end());
}

}  // namespace

BruteHalving brute_optimal_halving(const Instance& inst, long max_size) {
  if (max_size < 0) throw std::invalid_argument("brute_optimal_halving: negative max_size");
  std::vector<Point> pts = inst.all_points();
  size_t np = pts.size();

  // Deduplicate the raw pool by cut class: the side vector over all points
  // (normalized up to a global flip) determines how a line contributes to
  // any cell grouping, so one representative per class suffices. Constant
  // vectors split nothing and are dropped.
  std::vector<Line> pool;
  std::vector<std::vector<signed char>> side;
  {
    std::set<std::vector<signed char>> classes;
    for (const Line& l : canonical_pool(pts)) {
      std::vector<signed char> v(np);
      for (size_t p = 0; p < np; ++p) v[p] = (signed char)l.side(pts[p]);
      bool constant = true;
      signed char lead = 0;
      for (signed char s : v) {
        if (s != v[0]) constant = false;
        if (lead == 0) lead = s;
      }
      if (constant) continue;
      if (lead < 0)
        for (signed char& s : v) s = (signed char)-s;
      if (classes.insert(v).second) {
        pool.push_back(l);
        side.push_back(std::move(v));
      }
    }
  }
  BruteHalving out;
  out.pool = (long)pool.size();

  {
    std::map<Point, size_t, PointLess> pid;
    for (size_t p = 0; p < np; ++p) pid.emplace(pts[p], p);
    std::vector<long> allowed_floor;  // count > fraction*m  <=>  count > floor
    std::vector<std::vector<size_t>> members(inst.sets.size());
    for (size_t i = 0; i < inst.sets.size(); ++i) {
      allowed_floor.push_back(
          floor_long(inst.sets[i].fraction * Rat((long)inst.sets[i].points.size())));
      for (const Point& p : inst.sets[i].points) members[i].push_back(pid.at(p));
    }

    long key_span = 1;
    for (long s = 0; s < max_size; ++s) key_span *= 3;
    std::vector<long> tally((size_t)key_span);
    std::vector<size_t> chosen;
    std::vector<size_t> keys(np);

    auto subset_halves = [&]() {
      ++out.checked;
      for (size_t p = 0; p < np; ++p) {
        size_t key = 0;
        for (size_t c : chosen) key = key * 3 + (size_t)(side[c][p] + 1);
        keys[p] = key;
      }
      for (size_t i = 0; i < inst.sets.size(); ++i) {
        for (size_t p : members[i]) ++tally[keys[p]];
        bool over = false;
        for (size_t p : members[i])
          if (tally[keys[p]] > allowed_floor[i]) over = true;
        for (size_t p : members[i]) tally[keys[p]] = 0;
        if (over) return false;
      }
      return true;
    };

    // subsets by size, lexicographic over the pool order
    std::function<bool(size_t, long)> rec = [&](size_t start, long left) -> bool {
      if (left == 0) return subset_halves();
      for (size_t c = start; c + (size_t)left <= pool.size(); ++c) {
        chosen.push_back(c);
        if (rec(c + 1, left - 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    for (long s = 0; s <= max_size; ++s) {
      if (rec(0, s)) {
        out.found = true;
        out.size = s;
        for (size_t c : chosen) out.lines.push_back(pool[c]);
        break;
      }
    }
  }
  if (out.found && !verify_halving(inst, out.lines).valid)
    throw std::logic_error("brute_optimal_halving: sign table disagrees with verify_halving");
  return out;
}

BruteConvex brute_max_empty_convex(const std::vector<Point>& P, const std::vector<Point>& W) {
  if (P.size() > 12) throw std::invalid_argument("brute_max_empty_convex: more than 12 points");
  BruteConvex best;
  for (std::uint32_t mask = 1; mask < (1u << P.size()); ++mask) {
    std::vector<Point> sub;
    for (size_t j = 0; j < P.size(); ++j)
      if (mask >> j & 1) sub.push_back(P[j]);
    Polygon hull = convex_hull(sub);
    bool blocked = false;
    for (const Point& w : W)
      if (hull.contains(w)) {
        blocked = true;
        break;
      }
    if (blocked) continue;
    long count = 0;
    for (const Point& p : P)
      if (hull.contains(p)) ++count;
    if (count > best.count) {
      best.count = count;
      best.poly = hull;
    }
  }
  return best;
}

Calibration calibrate_constants(long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("calibrate_constants: trials must be positive");
  Calibration cal;
  cal.trials = trials;
  cal.seed = seed;

  const long nu = 64;
  double worst_complexity = 0.0;
  for (long trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t)(trial + 1)));
    std::set<Line, LineLess> ls;
    while ((long)ls.size() < nu) {
      long a = (long)(rng() % 201) - 100;
      long b = (long)(rng() % 201) - 100;
      long c = (long)(rng() % 401) - 200;
      if (a == 0 && b == 0) continue;
      ls.insert(Line(Rat(a), Rat(b), Rat(c)));
    }
    Arrangement arr = build_arrangement(std::vector<Line>(ls.begin(), ls.end()));
    FaceComplexityProfile prof = complexity_profile(arr);
    for (size_t i = 0; i < prof.c.size(); ++i) {
      double rank = (double)(i + 1);
      double bound = std::pow((double)nu, 2.0 / 3.0) / std::cbrt(rank) + (double)nu / rank + 1.0;
      worst_complexity = std::max(worst_complexity, (double)prof.c[i] / bound);
    }
  }
  cal.complexity_const = 1.25 * worst_complexity;

  const long cut_n = 60;
  long cut_trials = std::max<long>(1, trials / 10);
  double worst_cut = 0.0;
  for (long trial = 0; trial < cut_trials; ++trial) {
    std::mt19937_64 rng(seed ^ (0x2545F4914F6CDD1DULL * (std::uint64_t)(trial + 1)));
    std::set<Line, LineLess> ls;
    while ((long)ls.size() < cut_n) {
      long a = (long)(rng() % 201) - 100;
      long b = (long)(rng() % 201) - 100;
      long c = (long)(rng() % 401) - 200;
      if (a == 0 && b == 0) continue;
      ls.insert(Line(Rat(a), Rat(b), Rat(c)));
    }
    WeightedLineSet L = WeightedLineSet::uniform(std::vector<Line>(ls.begin(), ls.end()));
    for (long den : {5L, 10L, 20L}) {
      Rat eps = rat(1, den);
      Cutting cut = weak_cutting(L, eps, seed + (std::uint64_t)(trial * 100 + den));
      double ratio = (double)cut.lines.size() * eps.get_d() * eps.get_d();
      worst_cut = std::max(worst_cut, ratio);
    }
  }
  cal.cutting_const = 1.25 * worst_cut;
  return cal;
}

std::string Calibration::to_text() const {
  std::ostringstream os;
  os << "plancut calibration v1\n";
  os << "trials " << trials << "\n";
  os << "seed " << seed << "\n";
  os << std::fixed << std::setprecision(12);
  os << "complexity_const " << complexity_const << "\n";
  os << "cutting_const " << cutting_const << "\n";
  return os.str();
}

}  // namespace plancut
