#include "plancut/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "plancut/lp.hpp"

namespace plancut {

namespace {

std::vector<Rat> allowed_counts(const Instance& inst) {
  std::vector<Rat> allowed;
  allowed.reserve(inst.sets.size());
  for (const PointSet& ps : inst.sets)
    allowed.push_back(ps.fraction * Rat((long)ps.points.size()));
  return allowed;
}

void require_partitionable(const Instance& inst, const char* who) {
  for (const PointSet& ps : inst.sets)
    if (ps.fraction * Rat((long)ps.points.size()) < 1)
      throw std::invalid_argument(std::string(who) +
                                  ": a set with fraction * size < 1 cannot be halved");
}

// Recompute every constraint's crossing row against the (grown) candidate
// pool, re-deriving the region from its stored lines and sign vector.
void refresh_rows(std::vector<ViolatedConstraint>& constraints,
                  const std::vector<Line>& candidates) {
  for (ViolatedConstraint& vc : constraints) {
    Arrangement arr = build_arrangement(vc.region_cut);
    FaceId fid = arr.locate(vc.rep);
    if (fid.dim != 2 || arr.faces[fid.index].sig != vc.region_sig)
      throw std::logic_error("reduction: stored constraint region is inconsistent");
    vc.lines_crossing.clear();
    for (const Line& cand : candidates)
      if (line_crosses_face(arr, fid.index, cand)) vc.lines_crossing.push_back(cand);
  }
}

}  // namespace

std::vector<Line> candidate_lines(const Instance& inst, std::uint64_t seed, long net_c) {
  std::set<Point, PointLess> net;
  double k = (double)std::max<size_t>(inst.k(), 1);
  for (size_t i = 0; i < inst.sets.size(); ++i) {
    const PointSet& ps = inst.sets[i];
    double fr = ps.fraction.get_d();
    size_t want = (size_t)std::ceil((double)net_c * (2.0 / fr) * std::log2(k / fr + 2.0));
    if (want < 1) want = 1;
    size_t m = ps.points.size();
    if (want >= m) {
      net.insert(ps.points.begin(), ps.points.end());
      continue;
    }
    // partial Fisher-Yates: a seeded draw of `want` indices without replacement
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t)(i + 1)));
    std::vector<size_t> idx(m);
    std::iota(idx.begin(), idx.end(), (size_t)0);
    for (size_t t = 0; t < want; ++t) {
      std::swap(idx[t], idx[t + (size_t)(rng() % (std::uint64_t)(m - t))]);
      net.insert(ps.points[idx[t]]);
    }
  }
  std::vector<Point> pts(net.begin(), net.end());
  std::set<Line, LineLess> out;
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b) out.insert(Line::through(pts[a], pts[b]));
  return std::vector<Line>(out.begin(), out.end());
}

LpOutcome lp_feasible(const std::vector<Line>& candidates,
                      const std::vector<ViolatedConstraint>& constraints, const Rat& t) {
  LpOutcome out;
  std::map<Line, size_t, LineLess> id;
  for (size_t j = 0; j < candidates.size(); ++j) id.emplace(candidates[j], j);
  std::vector<std::vector<size_t>> rows;
  rows.reserve(constraints.size());
  for (const ViolatedConstraint& vc : constraints) {
    std::vector<size_t> row;
    for (const Line& l : vc.lines_crossing) {
      auto it = id.find(l);
      if (it != id.end()) row.push_back(it->second);
    }
    if (row.empty()) {
      out.uncoverable = true;
      return out;
    }
    rows.push_back(std::move(row));
  }
  std::optional<CoverResult> res = min_cover(candidates.size(), rows);
  if (!res) {
    out.uncoverable = true;
    return out;
  }
  out.lp_min = res->value;
  out.iterations = res->iterations;
  if (res->value <= t) {
    FractionalSolution fs;
    fs.lines = candidates;
    fs.x = std::move(res->x);
    fs.t = t;
    fs.value = res->value;
    out.solution = std::move(fs);
  }
  return out;
}

RoundOutcome round_fractional(const Instance& inst, const FractionalSolution& fs,
                              const CuttingParams& params) {
  require_partitionable(inst, "round_fractional");
  std::vector<Line> sup;
  std::vector<Rat> supw;
  for (size_t j = 0; j < fs.lines.size(); ++j)
    if (fs.x[j] > 0) {
      sup.push_back(fs.lines[j]);
      supw.push_back(fs.x[j]);
    }
  Rat vmax = fs.value < 1 ? Rat(1) : fs.value;
  Rat eps = Rat(1) / (2 * vmax);
  std::vector<Rat> allowed = allowed_counts(inst);
  std::vector<std::vector<Point>> lists = inst.point_lists();

  RoundOutcome out;
  for (long attempt = 0; attempt <= 8; ++attempt) {
    std::set<Line, LineLess> rset;
    if (!sup.empty()) {
      WeightedLineSet W = WeightedLineSet::weighted(sup, supw);
      CuttingParams cp =
          CuttingParams::defaults(eps, params.seed + 0x9e3779b9ULL * (std::uint64_t)attempt);
      cp.max_retries = params.max_retries;
      Cutting cut = weak_cutting(W, eps, cp);
      rset.insert(cut.lines.begin(), cut.lines.end());
    }
    // Split any overfull cell of dimension < 2 by verticals through its
    // points. X-coordinates are pairwise distinct, so after one pass every
    // such point is a vertex of the refined arrangement and no cell below
    // dimension two can stay overfull.
    Arrangement arr;
    std::map<FaceId, std::vector<long>> counts;
    for (long pass = 0;; ++pass) {
      arr = build_arrangement(std::vector<Line>(rset.begin(), rset.end()));
      counts = face_counts(arr, lists);
      std::set<Rat> wall_xs;
      for (const auto& [fid, per_set] : counts) {
        if (fid.dim == 2) continue;
        for (size_t i = 0; i < per_set.size(); ++i) {
          if (Rat(per_set[i]) <= allowed[i]) continue;
          for (const Point& p : lists[i])
            if (arr.locate(p) == fid) wall_xs.insert(p.x);
        }
      }
      if (wall_xs.empty()) break;
      if (pass >= 2) throw std::logic_error("round_fractional: repair did not stabilize");
      for (const Rat& x : wall_xs) rset.insert(Line::vertical(x));
    }
    out.cutting_size = (long)rset.size();

    std::optional<FaceId> bad;
    size_t bad_set = 0;
    long bad_count = 0;
    for (const auto& [fid, per_set] : counts) {
      for (size_t i = 0; i < per_set.size() && !bad; ++i) {
        if (Rat(per_set[i]) <= allowed[i]) continue;
        if (fid.dim != 2)
          throw std::logic_error("round_fractional: low-dimension cell stayed overfull");
        bad = fid;
        bad_set = i;
        bad_count = per_set[i];
      }
      if (bad) break;
    }
    if (!bad) {
      out.lines = std::vector<Line>(rset.begin(), rset.end());
      return out;
    }

    std::vector<Line> row;
    Rat fv(0);
    for (size_t j = 0; j < fs.lines.size(); ++j)
      if (line_crosses_face(arr, bad->index, fs.lines[j])) {
        row.push_back(fs.lines[j]);
        fv += fs.x[j];
      }
    if (fv * 2 >= 1) {
      // the cutting bounds cell mass by eps * value <= 1/2; only the exact
      // boundary can land here, and a finer cutting clears it
      if (fv * 2 > 1) throw std::logic_error("round_fractional: cell mass above the cutting bound");
      eps /= 2;
      ++out.eps_halvings;
      continue;
    }
    ViolatedConstraint vc;
    vc.region_cut.assign(rset.begin(), rset.end());
    vc.region_sig = arr.faces[bad->index].sig;
    vc.rep = arr.faces[bad->index].rep;
    vc.lines_crossing = std::move(row);
    vc.witness_set_index = bad_set;
    vc.witness_count = bad_count;
    vc.allowed = allowed[bad_set];
    vc.fractional_value = fv;
    out.violated = std::move(vc);
    return out;
  }
  throw std::logic_error("round_fractional: could not certify a sub-half constraint");
}

Solution solve_reduction(const Instance& inst, const ReductionConfig& config) {
  require_partitionable(inst, "solve_reduction");
  ReductionStats stats;
  bool need_lines = false;
  for (const PointSet& ps : inst.sets)
    if (ps.fraction < 1) need_lines = true;
  if (!need_lines) {
    Solution s;
    if (!verify_halving(inst, s.lines).valid)
      throw std::logic_error("solve_reduction: trivial solution failed verification");
    s.stats = stats;
    return s;
  }

  Rat q = choose_shear(inst, config.seed);
  Instance sheared = shear_instance(inst, q);
  std::vector<Line> candidates = candidate_lines(sheared, config.seed, config.net_c);
  std::vector<ViolatedConstraint> constraints;
  long resample_round = 0;
  Rat fr = inst.min_fraction();
  long cap = std::max<long>(1, ceil_long(Rat(config.t_cap_c * (long)inst.k()) / fr));
  Rat final_lp_min(0);

  for (long t = 1;; t = std::min(t * 2, cap)) {
    long iter_cap = config.iter_cap_mult * std::max<long>(8, (long)candidates.size());
    long rounds = 0;
    while (true) {
      if (++rounds > iter_cap)
        throw std::runtime_error("solve_reduction: round-and-cut iteration cap exceeded");
      LpOutcome lp = lp_feasible(candidates, constraints, Rat(t));
      ++stats.lp_solves;
      stats.lp_iterations += lp.iterations;
      if (lp.uncoverable) {
        if (++resample_round > config.resample_rounds)
          throw std::runtime_error("solve_reduction: candidate resampling exhausted");
        ++stats.resamples;
        std::set<Line, LineLess> pool(candidates.begin(), candidates.end());
        std::vector<Line> extra = candidate_lines(
            sheared, config.seed + 0x51ed2701ULL * (std::uint64_t)resample_round, config.net_c);
        pool.insert(extra.begin(), extra.end());
        candidates.assign(pool.begin(), pool.end());
        refresh_rows(constraints, candidates);
        continue;
      }
      final_lp_min = lp.lp_min;
      if (!lp.solution) break;  // proven infeasible at this budget

      ++stats.rounding_attempts;
      CuttingParams cp = CuttingParams::defaults(
          rat(1, 2),
          config.seed ^ (0x2545F4914F6CDD1DULL * (std::uint64_t)stats.rounding_attempts));
      RoundOutcome ro = round_fractional(sheared, *lp.solution, cp);
      stats.cutting_sizes.push_back(ro.cutting_size);
      if (ro.lines) {
        if (!verify_halving(sheared, *ro.lines).valid)
          throw std::logic_error("solve_reduction: sheared solution failed verification");
        Solution s;
        s.lines.reserve(ro.lines->size());
        for (const Line& l : *ro.lines) s.lines.push_back(unshear_line(l, q));
        if (!verify_halving(inst, s.lines).valid)
          throw std::logic_error("solve_reduction: solution failed verification");
        stats.t_used = t;
        stats.t_lower = std::max<long>(0, ceil_long(final_lp_min));
        stats.candidate_count = (long)candidates.size();
        s.stats = stats;
        s.constraints = std::move(constraints);
        return s;
      }
      // an already-present row would carry mass >= 1, yet this one is < 1/2
      for (const ViolatedConstraint& vc : constraints)
        if (vc.lines_crossing == ro.violated->lines_crossing)
          throw std::logic_error("solve_reduction: duplicate constraint emitted");
      constraints.push_back(std::move(*ro.violated));
    }
    if (t >= cap) throw std::runtime_error("solve_reduction: budget exhausted without a solution");
  }
}

namespace {

// Shared reporting: feed per-group counts with a representative point and
// keep the worst violation.
struct WorstTracker {
  HalvingReport rep;
  Rat worst = Rat(-1);

  void feed(size_t set_index, long count, const Rat& allowed, const Point& witness) {
    Rat excess = Rat(count) - allowed;
    if (excess <= 0 || excess <= worst) return;
    worst = excess;
    rep.valid = false;
    rep.set_index = set_index;
    rep.count = count;
    rep.allowed = allowed;
    rep.witness = witness;
  }
};

std::vector<Line> dedup_lines(const std::vector<Line>& lines) {
  std::set<Line, LineLess> s(lines.begin(), lines.end());
  return std::vector<Line>(s.begin(), s.end());
}

}  // namespace

HalvingReport verify_halving(const Instance& inst, const std::vector<Line>& lines) {
  Arrangement arr = build_arrangement(dedup_lines(lines));
  WorstTracker tracker;
  for (size_t i = 0; i < inst.sets.size(); ++i) {
    const PointSet& ps = inst.sets[i];
    Rat allowed = ps.fraction * Rat((long)ps.points.size());
    std::map<FaceId, long> counts;
    std::map<FaceId, Point> firstp;
    for (const Point& p : ps.points) {
      FaceId f = arr.locate(p);
      ++counts[f];
      firstp.emplace(f, p);
    }
    for (const auto& [f, c] : counts) tracker.feed(i, c, allowed, firstp.at(f));
  }
  return tracker.rep;
}

HalvingReport verify_halving_signs(const Instance& inst, const std::vector<Line>& lines) {
  std::vector<Line> ls = dedup_lines(lines);
  WorstTracker tracker;
  for (size_t i = 0; i < inst.sets.size(); ++i) {
    const PointSet& ps = inst.sets[i];
    Rat allowed = ps.fraction * Rat((long)ps.points.size());
    std::map<std::string, long> counts;
    std::map<std::string, Point> firstp;
    for (const Point& p : ps.points) {
      std::string key(ls.size(), ' ');
      for (size_t j = 0; j < ls.size(); ++j) {
        int s = ls[j].side(p);
        key[j] = s < 0 ? '-' : (s > 0 ? '+' : '0');
      }
      ++counts[key];
      firstp.emplace(key, p);
    }
    for (const auto& [key, c] : counts) tracker.feed(i, c, allowed, firstp.at(key));
  }
  return tracker.rep;
}

}  // namespace plancut
