#include "plancut/instance.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace plancut {

Instance Instance::of(std::vector<PointSet> raw) {
  for (auto& ps : raw) {
    if (ps.fraction <= 0 || ps.fraction > 1)
      throw std::invalid_argument("Instance: fraction outside (0, 1]");
    if (ps.points.empty()) throw std::invalid_argument("Instance: empty point set");
    std::sort(ps.points.begin(), ps.points.end(), PointLess{});
    ps.points.erase(std::unique(ps.points.begin(), ps.points.end()), ps.points.end());
  }
  Instance inst;
  inst.sets = std::move(raw);
  return inst;
}

size_t Instance::total_points() const {
  size_t m = 0;
  for (const auto& ps : sets) m += ps.points.size();
  return m;
}

Rat Instance::min_fraction() const {
  if (sets.empty()) throw std::logic_error("min_fraction: no sets");
  Rat m = sets[0].fraction;
  for (const auto& ps : sets)
    if (ps.fraction < m) m = ps.fraction;
  return m;
}

std::vector<Point> Instance::all_points() const {
  std::set<Point, PointLess> uniq;
  for (const auto& ps : sets) uniq.insert(ps.points.begin(), ps.points.end());
  return std::vector<Point>(uniq.begin(), uniq.end());
}

std::vector<std::vector<Point>> Instance::point_lists() const {
  std::vector<std::vector<Point>> out;
  out.reserve(sets.size());
  for (const auto& ps : sets) out.push_back(ps.points);
  return out;
}

Instance shear_instance(const Instance& inst, const Rat& q) {
  Instance out = inst;
  for (auto& ps : out.sets) {
    for (auto& p : ps.points) p = shear_point(p, q);
    std::sort(ps.points.begin(), ps.points.end(), PointLess{});
  }
  return out;
}

Rat choose_shear(const Instance& inst, uint64_t seed) {
  std::vector<Point> pts;
  for (const auto& ps : inst.sets) pts.insert(pts.end(), ps.points.begin(), ps.points.end());
  std::sort(pts.begin(), pts.end(), PointLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rat q = rat(1 + (long)(rng() % 65536), 65536);
    std::set<Rat> xs;
    bool ok = true;
    for (const Point& p : pts) {
      if (!xs.insert(p.x + q * p.y).second) {
        ok = false;
        break;
      }
    }
    if (ok) return q;
  }
  throw std::runtime_error("choose_shear: no admissible shear found");
}

}  // namespace plancut
