// Acceptance gate: one PASS/FAIL line per criterion, exit code = number of
// failures. Each criterion pins its own scales, seeds, and tolerances.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "plancut/arrangement.hpp"
#include "plancut/corridor.hpp"
#include "plancut/cutting.hpp"
#include "plancut/geom.hpp"
#include "plancut/guarding.hpp"
#include "plancut/instance.hpp"
#include "plancut/io.hpp"
#include "plancut/oracle.hpp"
#include "plancut/reduction.hpp"

using namespace plancut;

namespace {

struct Gate {
  int failures = 0;

  void report(int num, const char* name, bool ok, double secs, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("[%2d] %s  %-28s (%s; %.1fs)\n", num, ok ? "PASS" : "FAIL", name,
                detail.c_str(), secs);
    std::fflush(stdout);
  }
};

double secs_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
             .count() /
         1000.0;
}

Point pt(long x, long y) { return Point{Rat(x), Rat(y)}; }

Rat rand_rat(std::mt19937_64& rng, long span, long max_den) {
  long num = (long)(rng() % (2 * (unsigned long)span + 1)) - span;
  long den = 1 + (long)(rng() % (unsigned long)max_den);
  return rat(num, den);
}

std::vector<Line> rand_lines(long n, std::uint64_t seed, long span) {
  std::mt19937_64 rng(seed);
  std::set<Line, LineLess> pool;
  while ((long)pool.size() < n) {
    long a = (long)(rng() % (2 * (unsigned long)span + 1)) - span;
    long b = (long)(rng() % (2 * (unsigned long)span + 1)) - span;
    long c = (long)(rng() % (2 * (unsigned long)span + 1)) - span;
    if (a == 0 && b == 0) continue;
    pool.insert(Line(Rat(a), Rat(b), Rat(c)));
  }
  return {pool.begin(), pool.end()};
}

// ---------------------------------------------------------------- criterion 1
bool criterion_duality(std::string& detail) {
  std::mt19937_64 rng(101);
  long fails = 0;
  const long pairs = 10000;
  for (long i = 0; i < pairs; ++i) {
    Point p{rand_rat(rng, 1000, 8), rand_rat(rng, 1000, 8)};
    Rat m = rand_rat(rng, 1000, 8), k = rand_rat(rng, 1000, 8);
    Line l = Line::slope_intercept(m, k);

    // involution both ways
    Point p2 = dual_line(dual_point(p));
    if (point_cmp(p2, p) != 0) ++fails;
    if (line_cmp(dual_point(dual_line(l)), l) != 0) ++fails;

    // above/below/on is preserved: p vs l matches dual_line(l) vs dual_point(p)
    int side_primal = sign(p.y - l.y_at(p.x));
    Point dl = dual_line(l);
    Line dp = dual_point(p);
    int side_dual = sign(dl.y - dp.y_at(dl.x));
    if (side_primal != side_dual) ++fails;
  }
  std::ostringstream os;
  os << pairs << " pairs, " << fails << " failures";
  detail = os.str();
  return fails == 0;
}

// ---------------------------------------------------------------- criterion 2
bool criterion_arrangement_counts(std::string& detail) {
  long fails = 0;
  // generic family: lines y = i*x + i^2 meet pairwise at distinct points
  for (long n = 1; n <= 8; ++n) {
    std::vector<Line> ls;
    for (long i = 1; i <= n; ++i) ls.push_back(Line::slope_intercept(Rat(i), Rat(i * i)));
    Arrangement arr = build_arrangement(ls);
    if ((long)arr.vertex_count() != n * (n - 1) / 2) ++fails;
    if ((long)arr.edge_count() != n * n) ++fails;
    if ((long)arr.face_count() != 1 + n + n * (n - 1) / 2) ++fails;
    if ((long)arr.vertex_count() - (long)arr.edge_count() + (long)arr.face_count() != 1)
      ++fails;
  }
  // degenerate seeds: verticals, parallels, concurrences from a tiny grid
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<Line, LineLess> pool;
    long n = 1 + (long)(rng() % 8);
    while ((long)pool.size() < n) {
      long a = (long)(rng() % 7) - 3, b = (long)(rng() % 7) - 3;
      if (rng() % 4 == 0)
        pool.insert(Line::vertical(Rat(a)));
      else
        pool.insert(Line::slope_intercept(Rat(a), Rat(b)));
    }
    std::vector<Line> ls(pool.begin(), pool.end());
    Arrangement arr = build_arrangement(ls);
    if ((long)arr.vertex_count() - (long)arr.edge_count() + (long)arr.face_count() != 1)
      ++fails;
  }
  std::ostringstream os;
  os << "n=1..8 exact, 50 degenerate Euler, " << fails << " failures";
  detail = os.str();
  return fails == 0;
}

// ---------------------------------------------------------------- criterion 3
bool criterion_cutting_soundness(std::string& detail) {
  long fails = 0, runs = 0;
  const long ns[3] = {50, 100, 300};
  const std::pair<long, long> epss[3] = {{1, 5}, {1, 10}, {1, 20}};
  // each (n, eps) combo three times, plus three small extras = 30 instances
  std::vector<std::pair<long, Rat>> plan;
  for (int round = 0; round < 3; ++round)
    for (int ni = 0; ni < 3; ++ni)
      for (int ei = 0; ei < 3; ++ei)
        plan.emplace_back(ns[ni], rat(epss[ei].first, epss[ei].second));
  plan.emplace_back(50, rat(1, 10));
  plan.emplace_back(100, rat(1, 20));
  plan.emplace_back(50, rat(1, 20));
  for (size_t i = 0; i < plan.size(); ++i) {
    auto [n, eps] = plan[i];
    std::uint64_t seed = 3000 + (std::uint64_t)i;
    WeightedLineSet L = WeightedLineSet::uniform(rand_lines(n, seed, 1000));
    Cutting weak = weak_cutting(L, eps, seed);
    if (!verify_cutting(L, weak, eps).valid) ++fails;
    Cutting simple = simple_weak_cutting(L, eps, seed);
    if (!verify_cutting(L, simple, eps).valid) ++fails;
    runs += 2;
  }
  std::ostringstream os;
  os << runs << " cuttings verified, " << fails << " invalid";
  detail = os.str();
  return fails == 0;
}

// ---------------------------------------------------------------- criterion 4
bool criterion_cutting_size_trend(const Calibration& cal, std::string& detail) {
  const Rat eps = rat(1, 20);
  const long n = 300;
  std::vector<long> weak_sizes, simple_sizes;
  long soft_fails = 0;
  for (std::uint64_t seed = 4000; seed < 4010; ++seed) {
    WeightedLineSet L = WeightedLineSet::uniform(rand_lines(n, seed, 1000));
    Cutting weak = weak_cutting(L, eps, seed);
    Cutting simple = simple_weak_cutting(L, eps, seed);
    weak_sizes.push_back((long)weak.lines.size());
    simple_sizes.push_back((long)simple.lines.size());
    // soft calibrated size bound for the subquadratic construction
    if ((double)weak.lines.size() > cal.cutting_const / (to_double(eps) * to_double(eps)))
      ++soft_fails;
  }
  std::sort(weak_sizes.begin(), weak_sizes.end());
  std::sort(simple_sizes.begin(), simple_sizes.end());
  long mw = (weak_sizes[4] + weak_sizes[5]) / 2, ms = (simple_sizes[4] + simple_sizes[5]) / 2;
  std::ostringstream os;
  os << "median |R| " << mw << " vs " << ms << ", " << soft_fails << " size-bound misses";
  detail = os.str();
  return mw < ms && soft_fails == 0;
}

// ---------------------------------------------------------------- criterion 5
bool criterion_face_complexity(const Calibration& cal, std::string& detail) {
  const long nu = 64;
  long fails = 0;
  double worst = 0;
  for (std::uint64_t seed = 5000; seed < 5020; ++seed) {
    Arrangement arr = build_arrangement(rand_lines(nu, seed, 500));
    FaceComplexityProfile prof = complexity_profile(arr);
    for (size_t i = 0; i < prof.c.size(); ++i) {
      double bound = cal.complexity_const *
                     (std::pow((double)nu, 2.0 / 3.0) / std::cbrt((double)(i + 1)) +
                      (double)nu / (double)(i + 1) + 1.0);
      double ratio = (double)prof.c[i] / bound;
      worst = std::max(worst, ratio);
      if ((double)prof.c[i] > bound) ++fails;
    }
  }
  std::ostringstream os;
  os << "20 arrangements, C=" << cal.complexity_const << ", worst ratio " << worst << ", "
     << fails << " violations";
  detail = os.str();
  return fails == 0;
}

// ---------------------------------------------------------------- criterion 6
bool criterion_caratheodory(std::string& detail) {
  std::mt19937_64 rng(606);
  long fails = 0;
  const long pairs = 1000;
  for (long i = 0; i < pairs; ++i) {
    std::set<Line, LineLess> gens;
    long g = 3 + (long)(rng() % 6);
    while ((long)gens.size() < g)
      gens.insert(Line::slope_intercept(rand_rat(rng, 30, 4), rand_rat(rng, 30, 4)));
    Corridor C = Corridor::of({gens.begin(), gens.end()});

    // a contained line: random convex combination of the generators
    std::vector<Rat> coeffs(C.generators.size(), Rat(0));
    Rat sum(0);
    for (Rat& c : coeffs) {
      c = Rat((long)(rng() % 10));
      sum += c;
    }
    if (sum == 0) {
      coeffs[0] = Rat(1);
      sum = Rat(1);
    }
    for (Rat& c : coeffs) c /= sum;
    Line inner = combine(C.generators, coeffs);
    if (!corridor_contains_line(C, inner)) {
      ++fails;
      continue;
    }
    std::vector<Line> triple = caratheodory_triple(C, inner);
    if (triple.size() > 3 || !corridor_contains_line(Corridor::of(triple), inner)) ++fails;
  }
  std::ostringstream os;
  os << pairs << " pairs, " << fails << " failures";
  detail = os.str();
  return fails == 0;
}

// ------------------------------------------------------------ criteria 7 + 8
struct ReductionOutcome {
  bool ok = true;
  std::string detail7, detail8;
  bool constraints_ok = true;
};

void recheck_constraint(const Instance& sheared, const ViolatedConstraint& vc, long& fails) {
  if (!(vc.fractional_value * 2 < 1)) ++fails;
  if (!(Rat(vc.witness_count) > vc.allowed)) ++fails;
  Arrangement arr = build_arrangement(vc.region_cut);
  FaceId fid = arr.locate(vc.rep);
  if (fid.dim != 2) {
    ++fails;
    return;
  }
  if (arr.faces[fid.index].sig != vc.region_sig) ++fails;
  const PointSet& ps = sheared.sets[vc.witness_set_index];
  if (vc.allowed != ps.fraction * Rat((long)ps.points.size())) ++fails;
  long count = 0;
  for (const Point& p : ps.points)
    if (arr.locate(p) == fid) ++count;
  if (count != vc.witness_count) ++fails;
  for (const Line& l : vc.lines_crossing)
    if (!line_crosses_face(arr, fid.index, l)) ++fails;
}

ReductionOutcome criterion_reduction() {
  ReductionOutcome out;
  std::mt19937_64 rng(707);
  long invalid = 0, constraint_fails = 0, constraints_seen = 0;

  // 100 seeded instances, k <= 3, total points <= 60. Fractions below 1/2 run
  // only as single-set instances with few points: the constraint-generation
  // loop visits a large share of the candidates there, and its LP spans the
  // candidates of every set, so cost grows steeply with both the fraction's
  // set and its neighbors.
  for (int trial = 0; trial < 100; ++trial) {
    long k = 1 + (long)(rng() % 3);
    long pick = (long)(rng() % 4);
    std::vector<PointSet> sets;
    if (k == 1 && pick >= 2) {
      long den = pick == 2 ? 3 : 4;
      long m = den == 3 ? 6 + (long)(rng() % 7) : 6 + (long)(rng() % 5);
      sets.push_back(PointSet{gen_instance({GenKind::UniformRandom, m, rng(), 120}),
                              rat(1, den)});
    } else {
      long budget = 60;
      for (long i = 0; i < k; ++i) {
        long avail = budget - 6 * (k - i - 1);
        long m = 6 + (long)(rng() % (unsigned long)std::max<long>(1, avail - 5));
        m = std::min(m, avail);
        budget -= m;
        sets.push_back(PointSet{gen_instance({GenKind::UniformRandom, m, rng(), 120}),
                                rat(1, 2)});
      }
    }
    Instance inst = Instance::of(sets);
    ReductionConfig cfg;
    cfg.seed = rng();
    Solution s = solve_reduction(inst, cfg);
    if (!verify_halving(inst, s.lines).valid) ++invalid;

    Instance sheared = shear_instance(inst, choose_shear(inst, cfg.seed));
    constraints_seen += (long)s.constraints.size();
    for (const ViolatedConstraint& vc : s.constraints)
      recheck_constraint(sheared, vc, constraint_fails);
  }

  // 20 brute-forceable instances (m <= 12): lower bound and candidate quality
  long lower_bound_fails = 0, sufficiency_fails = 0, sufficiency_checked = 0;
  long size_sum = 0, opt_sum = 0;
  for (int trial = 0; trial < 20; ++trial) {
    long den = trial < 14 ? 2 : 3;
    long m = den == 2 ? 6 + (long)(rng() % 7) : 9 + (long)(rng() % 4);
    Instance inst = Instance::of(
        {PointSet{gen_instance({GenKind::UniformRandom, m, rng(), 40}), rat(1, den)}});
    ReductionConfig cfg;
    cfg.seed = rng();
    Solution s = solve_reduction(inst, cfg);
    if (!verify_halving(inst, s.lines).valid) ++invalid;
    Instance sheared = shear_instance(inst, choose_shear(inst, cfg.seed));
    constraints_seen += (long)s.constraints.size();
    for (const ViolatedConstraint& vc : s.constraints)
      recheck_constraint(sheared, vc, constraint_fails);

    BruteHalving brute = brute_optimal_halving(inst, 3);
    if (!brute.found) continue;  // opt > 3: out of oracle range, skip comparisons
    size_sum += (long)s.lines.size();
    opt_sum += brute.size;
    if (s.stats.t_lower > brute.size) ++lower_bound_fails;

    // candidate sufficiency: some candidate subset of size <= 3*opt halves the
    // instance; exhaustively checkable when 3*opt <= 3
    if (brute.size <= 1) {
      ++sufficiency_checked;
      std::vector<Line> cand = candidate_lines(sheared, cfg.seed);
      bool found = verify_halving(sheared, {}).valid;
      for (size_t a = 0; a < cand.size() && !found; ++a) {
        if (verify_halving_signs(sheared, {cand[a]}).valid) found = true;
        for (size_t b = a + 1; b < cand.size() && !found; ++b) {
          if (verify_halving_signs(sheared, {cand[a], cand[b]}).valid) found = true;
          for (size_t c = b + 1; c < cand.size() && !found; ++c)
            if (verify_halving_signs(sheared, {cand[a], cand[b], cand[c]}).valid) found = true;
        }
      }
      if (!found) ++sufficiency_fails;
    }
  }

  std::ostringstream os7;
  os7 << "120 solves, " << invalid << " invalid; lower-bound misses " << lower_bound_fails
      << "; sizes " << size_sum << " vs opt " << opt_sum << " on brute set; sufficiency "
      << sufficiency_checked << " checked, " << sufficiency_fails << " misses";
  out.detail7 = os7.str();
  out.ok = invalid == 0 && lower_bound_fails == 0 && sufficiency_fails == 0;

  std::ostringstream os8;
  os8 << constraints_seen << " constraints audited, " << constraint_fails << " failures";
  out.detail8 = os8.str();
  out.constraints_ok = constraint_fails == 0;
  return out;
}

// ---------------------------------------------------------------- criterion 9
bool criterion_bad_polygon(std::string& detail) {
  std::mt19937_64 rng(909);
  long fails = 0;
  const long trials = 200;
  for (long t = 0; t < trials; ++t) {
    long n = 3 + (long)(rng() % 8);
    std::set<long> xs;
    std::vector<Point> P;
    while ((long)P.size() < n) {
      long x = (long)(rng() % 41) - 20;
      if (!xs.insert(x).second) continue;
      P.push_back(pt(x, (long)(rng() % 41) - 20));
    }
    std::vector<Point> W;
    long w = (long)(rng() % 5);
    for (long j = 0; j < w; ++j) {
      if (rng() % 3 == 0) {
        W.push_back(P[rng() % P.size()]);  // on an input point
      } else {
        W.push_back(Point{rat((long)(rng() % 81) - 40, 2), rat((long)(rng() % 81) - 40, 2)});
      }
    }
    auto found = find_bad_polygon(P, 1, W);
    long got = found ? found->count : 0;
    long want = brute_max_empty_convex(P, W).count;
    if (got != want) ++fails;
    if (found && (long)found->poly.vs.size() > 0) {
      for (const Point& g : W)
        if (found->poly.contains(g)) ++fails;  // returned region must be guard-free
    }
  }
  std::ostringstream os;
  os << trials << " micro-instances, " << fails << " mismatches";
  detail = os.str();
  return fails == 0;
}

// --------------------------------------------------------------- criterion 10
bool criterion_guarding(std::string& detail) {
  std::mt19937_64 rng(1010);
  long invalid = 0;
  for (int trial = 0; trial < 50; ++trial) {
    long k = 1 + (long)(rng() % 2);
    std::vector<PointSet> sets;
    for (long i = 0; i < k; ++i) {
      long m = 4 + (long)(rng() % (20 / k - 3));
      long den = 2 + (long)(rng() % 2);
      sets.push_back(PointSet{gen_instance({GenKind::UniformRandom, m, rng(), 60}),
                              rat(1, den)});
    }
    Instance inst = Instance::of(sets);
    GuardConfig cfg;
    cfg.seed = rng();
    GuardSet gs = solve_guarding(inst, cfg);
    if (!verify_guarding(inst, gs.guards).valid) ++invalid;
  }

  // pinned examples
  Instance three = Instance::of({PointSet{{pt(0, 0), pt(5, 1), pt(2, 7)}, rat(1, 3)}});
  GuardSet g3 = solve_guarding(three);
  bool three_ok = g3.guards.size() == 3 && verify_guarding(three, g3.guards).valid;

  Instance tri = Instance::of({PointSet{{pt(0, 0), pt(6, 1), pt(3, 8)}, Rat(1)}});
  GuardSet g1 = solve_guarding(tri);
  bool tri_ok = g1.guards.size() == 1 && verify_guarding(tri, g1.guards).valid;

  std::ostringstream os;
  os << "50 solves, " << invalid << " invalid; 3-point -> " << g3.guards.size()
     << " guards, triangle -> " << g1.guards.size();
  detail = os.str();
  return invalid == 0 && three_ok && tri_ok;
}

// --------------------------------------------------------------- criterion 11
#ifndef PLANCUT_CLI_PATH
#define PLANCUT_CLI_PATH "plancut"
#endif

int run_cli(const std::string& args) {
  std::string cmd = std::string(PLANCUT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return "<missing>";
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
  std::fclose(f);
  return out;
}

bool criterion_cli(std::string& detail) {
  char tmpl[] = "/tmp/plancut_accept_XXXXXX";
  if (!mkdtemp(tmpl)) {
    detail = "cannot create scratch directory";
    return false;
  }
  std::string dir = tmpl;
  long fails = 0;
  auto expect = [&](const std::string& args, int want) {
    int got = run_cli(args);
    if (got != want) ++fails;
  };

  std::string inst = dir + "/grid.json", r1 = dir + "/r1.json", r2 = dir + "/r2.json";
  expect("gen --kind grid --n 16 --fraction 1/2 --out " + inst, 0);
  expect("halve " + inst + " --seed 5 --out " + r1, 0);
  expect("halve " + inst + " --seed 5 --out " + r2, 0);
  if (slurp_file(r1) != slurp_file(r2)) ++fails;  // byte-identical rerun
  expect("verify " + inst + " --result " + r1, 0);

  // guard pipeline, same shape
  std::string ginst = dir + "/par.json", g1 = dir + "/g1.json", g2 = dir + "/g2.json";
  expect("gen --kind parabola --n 6 --fraction 1/2 --out " + ginst, 0);
  expect("guard " + ginst + " --seed 9 --out " + g1, 0);
  expect("guard " + ginst + " --seed 9 --out " + g2, 0);
  if (slurp_file(g1) != slurp_file(g2)) ++fails;
  expect("verify " + ginst + " --result " + g1, 0);

  // tampering: drop the found lines, keep the file shape intact
  ResultDoc doc = parse_result(slurp_file(r1));
  if (doc.lines.empty()) ++fails;
  ReductionStats zero;
  std::string tampered = dir + "/tampered.json";
  std::FILE* f = std::fopen(tampered.c_str(), "wb");
  std::string body = write_halving_result({}, zero, doc.shear, true);
  std::fwrite(body.data(), 1, body.size(), f);
  std::fclose(f);
  expect("verify " + inst + " --result " + tampered, 2);

  // malformed input and usage errors
  expect("verify " + inst + " --result " + dir + "/absent.json", 1);
  expect("halve", 1);

  std::ostringstream os;
  os << "pipelines in " << dir << ", " << fails << " failures";
  detail = os.str();
  return fails == 0;
}

}  // namespace

int main() {
  Gate gate;
  std::string detail;
  auto timed = [&](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = fn(detail);
    return std::pair<bool, double>(ok, secs_since(t0));
  };

  {
    auto [ok, t] = timed(criterion_duality);
    gate.report(1, "duality", ok, t, detail);
  }
  {
    auto [ok, t] = timed(criterion_arrangement_counts);
    gate.report(2, "arrangement counts", ok, t, detail);
  }
  {
    auto [ok, t] = timed(criterion_cutting_soundness);
    gate.report(3, "weak-cutting soundness", ok, t, detail);
  }

  auto tc = std::chrono::steady_clock::now();
  Calibration cal = calibrate_constants(50, 77);
  double cal_secs = secs_since(tc);
  std::printf("     calibration: C_complexity=%.3f C_cutting=%.3f (50 trials; %.1fs)\n",
              cal.complexity_const, cal.cutting_const, cal_secs);

  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = criterion_cutting_size_trend(cal, detail);
    gate.report(4, "weak-cutting size trend", ok, secs_since(t0), detail);
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = criterion_face_complexity(cal, detail);
    gate.report(5, "face-complexity bound", ok, secs_since(t0), detail);
  }
  {
    auto [ok, t] = timed(criterion_caratheodory);
    gate.report(6, "Caratheodory triples", ok, t, detail);
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    ReductionOutcome ro = criterion_reduction();
    double t = secs_since(t0);
    gate.report(7, "reduction end-to-end", ro.ok, t, ro.detail7);
    gate.report(8, "constraint soundness", ro.constraints_ok, 0.0, ro.detail8);
  }
  {
    auto [ok, t] = timed(criterion_bad_polygon);
    gate.report(9, "bad-polygon DP oracle", ok, t, detail);
  }
  {
    auto [ok, t] = timed(criterion_guarding);
    gate.report(10, "guarding end-to-end", ok, t, detail);
  }
  {
    auto [ok, t] = timed(criterion_cli);
    gate.report(11, "CLI round-trip", ok, t, detail);
  }

  std::printf("%d of 11 criteria passed\n", 11 - gate.failures);
  return gate.failures;
}
