#include <doctest.h>

#include <set>

#include "plancut/oracle.hpp"
#include "plancut/reduction.hpp"

using namespace plancut;

namespace {
Point pt(long x, long y) { return Point{Rat(x), Rat(y)}; }

Instance one_set(std::vector<Point> pts, const Rat& fr) {
  return Instance::of({{std::move(pts), fr}});
}
}  // namespace

TEST_CASE("gen_instance: grid") {
  auto g9 = gen_instance({GenKind::Grid, 9, 0, 0});
  std::vector<Point> want = {pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1), pt(1, 1),
                             pt(2, 1), pt(0, 2), pt(1, 2), pt(2, 2)};
  CHECK(g9 == want);

  auto g5 = gen_instance({GenKind::Grid, 5, 0, 0});
  std::vector<Point> want5 = {pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1), pt(1, 1)};
  CHECK(g5 == want5);

  CHECK(gen_instance({GenKind::Grid, 1, 0, 0}) == std::vector<Point>{pt(0, 0)});
  CHECK_THROWS_AS(gen_instance({GenKind::Grid, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("gen_instance: parabola") {
  auto p4 = gen_instance({GenKind::Parabola, 4, 0, 0});
  std::vector<Point> want = {pt(1, 1), pt(2, 4), pt(3, 9), pt(4, 16)};
  CHECK(p4 == want);
}

TEST_CASE("gen_instance: convex position") {
  auto c6 = gen_instance({GenKind::ConvexPosition, 6, 0, 0});
  REQUIRE(c6.size() == 6);
  std::set<Rat> xs;
  for (const Point& p : c6) {
    CHECK(p.x * p.x + p.y * p.y == 1);  // on the unit circle
    xs.insert(p.x);
  }
  CHECK(xs.size() == 6);  // pairwise distinct x
  CHECK(convex_hull(c6).vs.size() == 6);
}

TEST_CASE("gen_instance: uniform random") {
  GeneratorSpec spec{GenKind::UniformRandom, 10, 7, 50};
  auto a = gen_instance(spec);
  auto b = gen_instance(spec);
  CHECK(a == b);  // seed-deterministic
  REQUIRE(a.size() == 10);
  std::set<Point, PointLess> dedup(a.begin(), a.end());
  CHECK(dedup.size() == 10);
  for (const Point& p : a) {
    CHECK(p.x >= 0);
    CHECK(p.x <= 50);
    CHECK(p.y >= 0);
    CHECK(p.y <= 50);
  }
  auto c = gen_instance({GenKind::UniformRandom, 10, 8, 50});
  CHECK(a != c);
  CHECK_THROWS_AS(gen_instance({GenKind::UniformRandom, 5, 0, 1}), std::invalid_argument);
}

TEST_CASE("brute_optimal_halving: trivial and tiny optima") {
  // fraction 1: the empty set already works
  BruteHalving all = brute_optimal_halving(one_set(gen_instance({GenKind::Grid, 6, 0, 0}), Rat(1)), 2);
  CHECK(all.found);
  CHECK(all.size == 0);

  // two points need a pair-splitting rotation of their own pair line
  BruteHalving two = brute_optimal_halving(one_set({pt(0, 0), pt(3, 1)}, rat(1, 2)), 2);
  CHECK(two.found);
  CHECK(two.size == 1);
  CHECK(two.pool == 3);  // pair line, one-on-a-side class, pair-splitting class
  CHECK(verify_halving(one_set({pt(0, 0), pt(3, 1)}, rat(1, 2)), two.lines).valid);

  // four collinear points: one cut between the two middle points
  std::vector<Point> col;
  for (long i = 0; i < 4; ++i) col.push_back(pt(i, 2 * i));
  BruteHalving c = brute_optimal_halving(one_set(col, rat(1, 2)), 2);
  CHECK(c.found);
  CHECK(c.size == 1);

  // a single point can never be split below one
  BruteHalving lone = brute_optimal_halving(one_set({pt(5, 5)}, rat(1, 2)), 2);
  CHECK(!lone.found);
}

TEST_CASE("brute_optimal_halving: 4x4 grid at one half") {
  Instance inst = one_set(gen_instance({GenKind::Grid, 16, 0, 0}), rat(1, 2));
  BruteHalving bh = brute_optimal_halving(inst, 2);
  CHECK(bh.found);
  CHECK(bh.size == 1);
  CHECK(verify_halving(inst, bh.lines).valid);
}

TEST_CASE("brute_optimal_halving: six convex points at one third") {
  Instance inst = one_set(gen_instance({GenKind::ConvexPosition, 6, 0, 0}), rat(1, 3));
  BruteHalving bh = brute_optimal_halving(inst, 3);
  CHECK(bh.found);
  CHECK(bh.size == 1);  // a long chord leaves 2 on it and 2 per side
  BruteHalving capped = brute_optimal_halving(inst, 0);
  CHECK(!capped.found);
}

TEST_CASE("brute_max_empty_convex: pinned values") {
  std::vector<Point> P = gen_instance({GenKind::ConvexPosition, 5, 0, 0});

  // no guards: the full hull counts every point
  CHECK(brute_max_empty_convex(P, {}).count == 5);

  // pentagon with its centroid guarded
  Rat cx(0), cy(0);
  for (const Point& p : P) {
    cx += p.x;
    cy += p.y;
  }
  BruteConvex bc = brute_max_empty_convex(P, {Point{cx / 5, cy / 5}});
  CHECK(bc.count == 4);
  CHECK(bc.poly.is_valid());
  for (const Point& p : P)  // reported polygon really avoids the guard
    if (bc.poly.contains(p)) CHECK(!bc.poly.contains(Point{cx / 5, cy / 5}));

  std::vector<Point> big(13, pt(0, 0));
  CHECK_THROWS_AS(brute_max_empty_convex(big, {}), std::invalid_argument);
}

TEST_CASE("brute_max_empty_convex: guard on every point blocks singletons") {
  std::vector<Point> P = {pt(0, 0), pt(4, 0), pt(0, 4)};
  // guarding one vertex still lets the opposite edge pair count
  BruteConvex bc = brute_max_empty_convex(P, {pt(0, 0)});
  CHECK(bc.count == 2);
}

TEST_CASE("calibrate_constants: deterministic and positive") {
  Calibration a = calibrate_constants(3, 42);
  Calibration b = calibrate_constants(3, 42);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.complexity_const > 0);
  CHECK(a.cutting_const > 0);
  CHECK(a.trials == 3);
  CHECK(a.seed == 42);
  CHECK(a.to_text().substr(0, 22) == "plancut calibration v1");
  CHECK_THROWS_AS(calibrate_constants(0, 1), std::invalid_argument);
}
