#include "plancut/cutting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace plancut {

namespace {

constexpr std::uint64_t kSeedMix = 0x9e3779b97f4a7c15ULL;

// Independent draws proportional to weight, deduplicated in draw order.
std::vector<Line> draw_weighted(const WeightedLineSet& L, long count, std::mt19937_64& rng) {
  std::vector<Rat> cum;
  cum.reserve(L.size());
  Rat acc(0);
  for (const Rat& w : L.weights) {
    acc += w;
    cum.push_back(acc);
  }
  const Rat den = Rat(Int(1) << 64);
  std::vector<Line> out;
  std::set<Line, LineLess> seen;
  for (long i = 0; i < count; ++i) {
    Rat target = L.total * Rat(Int((unsigned long)rng())) / den;
    size_t idx = std::upper_bound(cum.begin(), cum.end(), target) - cum.begin();
    if (idx >= L.size()) idx = L.size() - 1;
    if (seen.insert(L.lines[idx]).second) out.push_back(L.lines[idx]);
  }
  return out;
}

// Enough draws to have collected every line with overwhelming probability;
// drawing more only burns time without changing the deduplicated result.
long draw_cap(size_t n) {
  if (n == 0) return 0;
  long lg = 1;
  while ((1ull << lg) < n) ++lg;
  return 64 * (long)n * lg;
}

// Crossing structure of one line against a list of lines: the sign of every
// list line at the far negative end of the walk and the crossing parameters
// in ascending order, grouped when several lines meet the walk at one point.
struct LineWalk {
  Point p0{Rat(0), Rat(0)}, dir{Rat(0), Rat(0)};
  std::vector<int> init_sign;
  std::vector<std::pair<Rat, std::vector<int>>> groups;
};

LineWalk walk_line(const std::vector<Line>& R, const Line& l) {
  LineWalk w;
  if (l.b != 0)
    w.p0 = Point(Rat(0), Rat(l.c) / Rat(l.b));
  else
    w.p0 = Point(Rat(l.c) / Rat(l.a), Rat(0));
  w.dir = Point(Rat(l.b), Rat(-l.a));
  w.init_sign.assign(R.size(), 0);
  std::vector<std::pair<Rat, int>> cross;
  for (size_t i = 0; i < R.size(); ++i) {
    const Line& r = R[i];
    Rat denom = Rat(r.a) * w.dir.x + Rat(r.b) * w.dir.y;
    Rat v0 = r.eval(w.p0);
    if (denom == 0) {
      // parallel, constant sign; callers exclude the coincident case
      w.init_sign[i] = sgn(v0);
    } else {
      w.init_sign[i] = -sgn(denom);
      cross.emplace_back(-v0 / denom, (int)i);
    }
  }
  std::sort(cross.begin(), cross.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i < cross.size();) {
    size_t j = i;
    std::vector<int> idx;
    while (j < cross.size() && cross[j].first == cross[i].first) idx.push_back(cross[j++].second);
    w.groups.emplace_back(cross[i].first, std::move(idx));
    i = j;
  }
  return w;
}

Point walk_point(const LineWalk& w, const Rat& t) {
  return Point(w.p0.x + t * w.dir.x, w.p0.y + t * w.dir.y);
}

// max_trapezoid_weight on an already-built arrangement.
Rat max_trap_weight_on(const WeightedLineSet& L, const Arrangement& arr) {
  struct FaceTraps {
    std::vector<Trapezoid> traps;  // ascending slabs
    std::vector<Rat> weight;
  };
  std::vector<FaceTraps> per_face(arr.face_count());
  for (size_t f = 0; f < arr.face_count(); ++f) {
    auto& ft = per_face[f];
    ft.traps = vertical_decompose(arr, (int)f);
    std::sort(ft.traps.begin(), ft.traps.end(), [](const Trapezoid& a, const Trapezoid& b) {
      if (!a.left_x) return (bool)b.left_x;
      if (!b.left_x) return false;
      return *a.left_x < *b.left_x;
    });
    ft.weight.assign(ft.traps.size(), Rat(0));
  }

  std::set<Line, LineLess> sset(arr.lines.begin(), arr.lines.end());
  for (size_t li = 0; li < L.size(); ++li) {
    const Line& l = L.lines[li];
    if (sset.count(l)) continue;
    LineWalk w = walk_line(arr.lines, l);
    std::string sig(arr.lines.size(), '+');
    for (size_t i = 0; i < arr.lines.size(); ++i) sig[i] = w.init_sign[i] > 0 ? '+' : '-';
    for (size_t g = 0;; ++g) {
      std::optional<Rat> tlo, thi;
      if (g > 0) tlo = w.groups[g - 1].first;
      if (g < w.groups.size()) thi = w.groups[g].first;
      auto it = arr.face_of_sig.find(sig);
      if (it == arr.face_of_sig.end())
        throw std::logic_error("max_trapezoid_weight: unknown face signature");
      auto& ft = per_face[it->second];
      // open x-extent of this in-face piece of l
      std::optional<Rat> xlo, xhi;
      if (w.dir.x > 0) {
        if (tlo) xlo = walk_point(w, *tlo).x;
        if (thi) xhi = walk_point(w, *thi).x;
      } else if (w.dir.x < 0) {
        if (thi) xlo = walk_point(w, *thi).x;
        if (tlo) xhi = walk_point(w, *tlo).x;
      }
      if (w.dir.x == 0) {
        const Rat& x = w.p0.x;
        for (size_t ti = 0; ti < ft.traps.size(); ++ti) {
          const Trapezoid& tr = ft.traps[ti];
          if (tr.left_x && !(*tr.left_x < x)) continue;
          if (tr.right_x && !(x < *tr.right_x)) continue;
          ft.weight[ti] += L.weights[li];
          break;  // a vertical piece meets one slab interior at most
        }
      } else {
        for (size_t ti = 0; ti < ft.traps.size(); ++ti) {
          const Trapezoid& tr = ft.traps[ti];
          // strict overlap of (xlo, xhi) and (tr.left_x, tr.right_x)
          if (tr.right_x && xlo && !(*xlo < *tr.right_x)) continue;  // trap left of piece
          if (tr.left_x && xhi && !(*tr.left_x < *xhi)) break;  // slabs ascend: rest is right
          ft.weight[ti] += L.weights[li];
        }
      }
      if (g == w.groups.size()) break;
      for (int i : w.groups[g].second) sig[i] = sig[i] == '+' ? '-' : '+';
    }
  }

  Rat best(0);
  for (const auto& ft : per_face)
    for (const Rat& wt : ft.weight)
      if (wt > best) best = wt;
  return best;
}

}  // namespace

long CuttingParams::log2r() const {
  if (r < 2) return 1;
  long lg = 0;
  while ((1L << lg) < r) ++lg;
  return std::max(1L, lg);
}

long CuttingParams::nu() const { return c * alpha * r * log2r(); }

CuttingParams CuttingParams::defaults(const Rat& eps, std::uint64_t seed) {
  if (!(eps > 0 && eps <= 1))
    throw std::invalid_argument("cutting: eps must be in (0, 1]");
  CuttingParams p;
  p.eps = eps;
  p.r = ceil_long(Rat(10) / eps);
  Int v = Int(p.r) * p.log2r();
  Int s = sqrt(v);
  if (s * s < v) s += 1;
  p.alpha = (long)s.get_si();
  p.seed = seed;
  return p;
}

std::vector<Line> Cutting::sampled() const {
  std::vector<Line> out;
  for (size_t i = 0; i < lines.size(); ++i)
    if (origin[i] == Origin::Sampled) out.push_back(lines[i]);
  return out;
}

std::vector<Line> Cutting::refinement() const {
  std::vector<Line> out;
  for (size_t i = 0; i < lines.size(); ++i)
    if (origin[i] == Origin::VerticalRefinement) out.push_back(lines[i]);
  return out;
}

long net_sample_count(const Rat& delta, const Rat& phi) {
  if (!(delta > 0 && delta <= 1) || !(phi > 0 && phi < 1))
    throw std::invalid_argument("sample_net: need 0 < delta <= 1 and 0 < phi < 1");
  double d = to_double(delta), p = to_double(phi);
  double m = (double)kNetC * (1.0 / d) * (std::log2(1.0 / p) + (double)kNetD * std::log2(1.0 / d));
  return std::max(1L, (long)std::ceil(m));
}

std::vector<Line> sample_net(const WeightedLineSet& L, const Rat& delta, const Rat& phi,
                             std::uint64_t seed) {
  if (L.empty()) throw std::invalid_argument("sample_net: empty line set");
  long m = net_sample_count(delta, phi);
  std::mt19937_64 rng(seed);
  return draw_weighted(L, m, rng);
}

Rat max_trapezoid_weight(const WeightedLineSet& L, const std::vector<Line>& S) {
  if (L.empty()) return Rat(0);
  if (S.empty()) return L.total;  // one all-plane cell crossed by everything
  return max_trap_weight_on(L, build_arrangement(S));
}

Cutting simple_weak_cutting(const WeightedLineSet& L, const Rat& eps, std::uint64_t seed,
                            long max_retries) {
  if (!(eps > 0 && eps <= 1))
    throw std::invalid_argument("cutting: eps must be in (0, 1]");
  Cutting cut;
  if (L.empty() || eps == 1) return cut;  // the empty cutting already qualifies
  long m0 = net_sample_count(eps, rat(1, 4));
  long cap = draw_cap(L.size());
  long rounds = std::max<long>(1, max_retries);
  Rat budget = eps * L.total;
  for (long attempt = 0; attempt < rounds; ++attempt) {
    std::vector<Line> S;
    if (attempt + 1 == rounds) {
      S = L.lines;  // final fallback: nothing left to cross any cell
    } else {
      long draws = m0;
      for (long a = 0; a < attempt && draws < cap; ++a) draws *= 2;
      std::mt19937_64 rng(seed ^ (kSeedMix * (std::uint64_t)(attempt + 1)));
      S = draw_weighted(L, std::min(draws, cap), rng);
    }
    Arrangement arr = build_arrangement(S);
    if (max_trap_weight_on(L, arr) > budget) continue;
    std::set<Line, LineLess> rset(S.begin(), S.end());
    std::set<Rat> xs;
    for (const auto& v : arr.vertices) xs.insert(v.p.x);
    cut.lines = S;
    cut.origin.assign(S.size(), Cutting::Origin::Sampled);
    for (const Rat& x : xs) {
      Line wall = Line::vertical(x);
      if (!rset.insert(wall).second) continue;
      cut.lines.push_back(wall);
      cut.origin.push_back(Cutting::Origin::VerticalRefinement);
      ++cut.stats.refinement_lines;
    }
    cut.stats.sample_size = (long)S.size();
    cut.stats.faces_refined = (long)arr.face_count();
    for (const auto& f : arr.faces) cut.stats.refined_complexity += (long)f.complexity;
    cut.stats.attempts = attempt + 1;
    return cut;
  }
  throw std::runtime_error("simple_weak_cutting: retries exhausted");
}

Cutting weak_cutting(const WeightedLineSet& L, const Rat& eps, const CuttingParams& params) {
  if (!(eps > 0 && eps <= 1))
    throw std::invalid_argument("cutting: eps must be in (0, 1]");
  if (params.r < 1 || params.alpha < 1 || params.c < 1 ||
      Int(params.alpha) > Int(params.r) * params.r * params.r)
    throw std::invalid_argument("cutting: inconsistent params");
  Cutting cut;
  if (L.empty() || eps == 1) return cut;
  long cap = draw_cap(L.size());
  long c = params.c;
  long rounds = std::max<long>(1, params.max_retries);
  Rat worst(0);
  Point witness{Rat(0), Rat(0)};
  for (long attempt = 0; attempt < rounds; ++attempt) {
    std::mt19937_64 rng(params.seed ^ (kSeedMix * (std::uint64_t)(attempt + 1)));
    long nu = c * params.alpha * params.r * params.log2r();
    std::vector<Line> R1 = draw_weighted(L, std::min(nu, cap), rng);
    Arrangement arr = build_arrangement(R1);
    std::set<Line, LineLess> rset(R1.begin(), R1.end());
    std::vector<Line> R2;
    long refined = 0, sumc = 0;
    for (const auto& f : arr.faces) {
      if ((long)f.complexity <= params.alpha) continue;
      ++refined;
      sumc += (long)f.complexity;
      std::vector<Point> vs;
      vs.reserve(f.chain.size());
      for (int vid : f.chain) vs.push_back(arr.vertices[vid].p);
      std::sort(vs.begin(), vs.end(), PointLess{});
      for (size_t i = params.alpha; i <= vs.size(); i += params.alpha) {
        Line wall = Line::vertical(vs[i - 1].x);
        if (rset.insert(wall).second) R2.push_back(wall);
      }
    }
    std::vector<Line> R = R1;
    R.insert(R.end(), R2.begin(), R2.end());
    CutCheck rep = verify_cutting(L, R, eps);
    if (rep.valid) {
      cut.lines = std::move(R);
      cut.origin.assign(R1.size(), Cutting::Origin::Sampled);
      cut.origin.resize(cut.lines.size(), Cutting::Origin::VerticalRefinement);
      cut.stats.sample_size = (long)R1.size();
      cut.stats.faces_refined = refined;
      cut.stats.refinement_lines = (long)R2.size();
      cut.stats.refined_complexity = sumc;
      cut.stats.attempts = attempt + 1;
      return cut;
    }
    worst = rep.worst_weight;
    witness = rep.witness;
    c *= 2;
  }
  std::ostringstream os;
  os << "weak_cutting: retries exhausted; worst cell weight " << rat_str(worst) << " near "
     << point_str(witness);
  throw std::runtime_error(os.str());
}

Cutting weak_cutting(const WeightedLineSet& L, const Rat& eps, std::uint64_t seed) {
  return weak_cutting(L, eps, CuttingParams::defaults(eps, seed));
}

CutCheck verify_cutting(const WeightedLineSet& L, const std::vector<Line>& R_in, const Rat& eps) {
  std::vector<Line> R;
  std::set<Line, LineLess> rset;
  for (const Line& r : R_in)
    if (rset.insert(r).second) R.push_back(r);

  CutCheck out;
  out.valid = true;
  if (L.empty()) return out;

  // Wide per-line, per-sign hash material; fixed seed keeps runs identical.
  std::mt19937_64 zrng(0x7c0ffee123456789ULL);
  struct Z {
    std::uint64_t lo[2], hi[2];  // index 0: '-', 1: '+'
  };
  std::vector<Z> z(R.size());
  for (auto& v : z) {
    v.lo[0] = zrng();
    v.hi[0] = zrng();
    v.lo[1] = zrng();
    v.hi[1] = zrng();
  }

  struct Acc {
    Rat w{0};
    Point witness{Rat(0), Rat(0)};
  };
  std::map<std::pair<std::uint64_t, std::uint64_t>, Acc> cells;

  for (size_t li = 0; li < L.size(); ++li) {
    const Line& l = L.lines[li];
    if (rset.count(l)) continue;  // boundary lines cross no open cell
    LineWalk w = walk_line(R, l);
    std::uint64_t lo = 0, hi = 0;
    for (size_t i = 0; i < R.size(); ++i) {
      int s = w.init_sign[i] > 0 ? 1 : 0;
      lo ^= z[i].lo[s];
      hi ^= z[i].hi[s];
    }
    for (size_t g = 0;; ++g) {
      Rat mid;
      if (w.groups.empty())
        mid = Rat(0);
      else if (g == 0)
        mid = w.groups[0].first - 1;
      else if (g == w.groups.size())
        mid = w.groups.back().first + 1;
      else
        mid = (w.groups[g - 1].first + w.groups[g].first) / 2;
      auto [it, fresh] = cells.try_emplace({lo, hi});
      if (fresh) it->second.witness = walk_point(w, mid);
      it->second.w += L.weights[li];
      if (g == w.groups.size()) break;
      for (int i : w.groups[g].second) {
        lo ^= z[i].lo[0] ^ z[i].lo[1];
        hi ^= z[i].hi[0] ^ z[i].hi[1];
      }
    }
  }

  for (const auto& [key, acc] : cells) {
    if (acc.w > out.worst_weight) {
      out.worst_weight = acc.w;
      out.witness = acc.witness;
    }
  }
  out.valid = out.worst_weight <= eps * L.total;
  return out;
}

CutCheck verify_cutting(const WeightedLineSet& L, const Cutting& R, const Rat& eps) {
  return verify_cutting(L, R.lines, eps);
}

}  // namespace plancut
