#include "plancut/guarding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "plancut/lp.hpp"

namespace plancut {

namespace {

// y of the supporting line of segment (p, q) at x; requires p.x != q.x
Rat seg_y_at(const Point& p, const Point& q, const Rat& x) {
  return p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x);
}

Rat seg_slope(const std::vector<Point>& pts, const TrapDag::Seg& s) {
  const Point &p = pts[s.p], &q = pts[s.q];
  return (q.y - p.y) / (q.x - p.x);
}

bool node_contains(const TrapDag& dag, const TrapDag::Node& nd, const Point& w) {
  if (w.x < nd.xl || w.x > nd.xr) return false;
  const TrapDag::Seg& f = dag.segs[nd.floor_seg];
  const TrapDag::Seg& c = dag.segs[nd.ceil_seg];
  Rat yf = seg_y_at(dag.pts[f.p], dag.pts[f.q], w.x);
  Rat yc = seg_y_at(dag.pts[c.p], dag.pts[c.q], w.x);
  return yf <= w.y && w.y <= yc;
}

std::vector<long> segment_counts(const TrapDag& dag) {
  std::vector<long> out(dag.segs.size(), 0);
  for (size_t s = 0; s < dag.segs.size(); ++s) {
    Segment seg{dag.pts[dag.segs[s].p], dag.pts[dag.segs[s].q]};
    long c = 0;
    for (const Point& p : dag.pts)
      if (seg.contains(p)) ++c;
    out[s] = c;
  }
  return out;
}

void kill_masks(const TrapDag& dag, const Point& w, std::vector<char>& node_alive,
                std::vector<char>& pt_alive, std::vector<char>& seg_alive) {
  for (size_t i = 0; i < dag.nodes.size(); ++i)
    if (node_alive[i] && node_contains(dag, dag.nodes[i], w)) node_alive[i] = 0;
  for (size_t i = 0; i < dag.pts.size(); ++i)
    if (pt_alive[i] && dag.pts[i] == w) pt_alive[i] = 0;
  for (size_t s = 0; s < dag.segs.size(); ++s)
    if (seg_alive[s] && Segment{dag.pts[dag.segs[s].p], dag.pts[dag.segs[s].q]}.contains(w))
      seg_alive[s] = 0;
}

// Best surviving canonical polygon: degenerate hulls by direct scan, full
// ones as maximal trapezoid paths (path weight misses only the rightmost
// vertex, hence the +1).
std::optional<BadPolygon> dp_query(const TrapDag& dag, const std::vector<long>& seg_count,
                                   const std::vector<char>& node_alive,
                                   const std::vector<char>& pt_alive,
                                   const std::vector<char>& seg_alive, long threshold) {
  bool found = false;
  long best = 0;
  Polygon best_poly;
  auto consider = [&](long cnt, Polygon poly) {
    if (!found || cnt > best) {
      found = true;
      best = cnt;
      best_poly = std::move(poly);
    }
  };
  for (size_t i = 0; i < dag.pts.size(); ++i)
    if (pt_alive[i]) consider(1, convex_hull({dag.pts[i]}));
  for (size_t s = 0; s < dag.segs.size(); ++s)
    if (seg_alive[s])
      consider(seg_count[s], convex_hull({dag.pts[dag.segs[s].p], dag.pts[dag.segs[s].q]}));

  size_t rn = dag.nodes.size();
  const long kNeg = std::numeric_limits<long>::min();
  std::vector<long> dist(rn + (size_t)dag.relay_count, kNeg);
  std::vector<int> par(dist.size(), -1);
  for (int vid : dag.topo_order) {
    if ((size_t)vid < rn) {
      if (!node_alive[vid]) continue;
      const TrapDag::Node& nd = dag.nodes[vid];
      if (nd.start && nd.weight > dist[vid]) {
        dist[vid] = nd.weight;
        par[vid] = -1;
      }
    }
    if (dist[vid] == kNeg) continue;
    for (int nxt : dag.adj[vid]) {
      long w = 0;
      if ((size_t)nxt < rn) {
        if (!node_alive[nxt]) continue;
        w = dag.nodes[nxt].weight;
      }
      if (dist[vid] + w > dist[nxt]) {
        dist[nxt] = dist[vid] + w;
        par[nxt] = vid;
      }
    }
  }
  int best_final = -1;
  for (size_t i = 0; i < rn; ++i)
    if (dag.nodes[i].final_ && node_alive[i] && dist[i] != kNeg &&
        (best_final < 0 || dist[i] > dist[best_final]))
      best_final = (int)i;
  if (best_final >= 0 && (!found || dist[best_final] + 1 > best)) {
    std::vector<Point> vsrc;
    for (int cur = best_final; cur != -1; cur = par[cur])
      if ((size_t)cur < rn) {
        const TrapDag::Node& nd = dag.nodes[cur];
        for (int s : {nd.floor_seg, nd.ceil_seg}) {
          vsrc.push_back(dag.pts[dag.segs[s].p]);
          vsrc.push_back(dag.pts[dag.segs[s].q]);
        }
      }
    consider(dist[best_final] + 1, convex_hull(vsrc));
  }
  if (found && best >= threshold) return BadPolygon{best_poly, best};
  return std::nullopt;
}

// Per-set solver state: the DAG is built once, guards only shrink the set of
// usable nodes/points/segments.
struct SetOracle {
  TrapDag dag;
  std::vector<long> seg_count;
  std::vector<char> node_alive, pt_alive, seg_alive;

  void init(const std::vector<Point>& pts, bool chained_edges) {
    dag = TrapDag::build(pts, chained_edges);
    seg_count = segment_counts(dag);
    reset();
  }
  void reset() {
    node_alive.assign(dag.nodes.size(), 1);
    pt_alive.assign(dag.pts.size(), 1);
    seg_alive.assign(dag.segs.size(), 1);
  }
  void add_guard(const Point& w) { kill_masks(dag, w, node_alive, pt_alive, seg_alive); }
  std::optional<BadPolygon> query(long threshold) const {
    return dp_query(dag, seg_count, node_alive, pt_alive, seg_alive, threshold);
  }
};

}  // namespace

GuardCandidates candidate_points(const std::vector<Point>& P) {
  std::map<Point, std::array<int, 4>, PointLess> seen;
  for (size_t i = 0; i < P.size(); ++i)
    seen.emplace(P[i], std::array<int, 4>{(int)i, (int)i, (int)i, (int)i});
  std::vector<std::pair<int, int>> segs;
  std::vector<Line> lines;
  for (size_t a = 0; a < P.size(); ++a)
    for (size_t b = a + 1; b < P.size(); ++b) {
      if (P[a] == P[b]) continue;
      segs.push_back({(int)a, (int)b});
      lines.push_back(Line::through(P[a], P[b]));
    }
  for (size_t s = 0; s < segs.size(); ++s)
    for (size_t u = s + 1; u < segs.size(); ++u) {
      LineIntersection li = line_intersection(lines[s], lines[u]);
      if (li.kind != LineRelation::Proper) continue;
      Segment s1{P[segs[s].first], P[segs[s].second]};
      Segment s2{P[segs[u].first], P[segs[u].second]};
      if (!s1.contains(li.p) || !s2.contains(li.p)) continue;
      seen.emplace(li.p, std::array<int, 4>{segs[s].first, segs[s].second, segs[u].first,
                                            segs[u].second});
    }
  GuardCandidates out;
  for (const auto& [p, from] : seen) {
    out.Q.push_back(p);
    out.from.push_back(from);
  }
  return out;
}

TrapDag TrapDag::build(const std::vector<Point>& P, bool chained_edges) {
  TrapDag dag;
  dag.pts = P;
  std::sort(dag.pts.begin(), dag.pts.end(), PointLess{});
  size_t n = dag.pts.size();
  for (size_t i = 0; i + 1 < n; ++i)
    if (dag.pts[i].x == dag.pts[i + 1].x)
      throw std::invalid_argument("trapezoid decomposition requires pairwise distinct x");
  for (int p = 0; p < (int)n; ++p)
    for (int q = p + 1; q < (int)n; ++q) dag.segs.push_back({p, q});

  std::vector<Rat> slope(dag.segs.size());
  for (size_t s = 0; s < dag.segs.size(); ++s) slope[s] = seg_slope(dag.pts, dag.segs[s]);

  size_t ns = dag.segs.size();
  for (int f = 0; f < (int)ns; ++f)
    for (int c = 0; c < (int)ns; ++c) {
      if (f == c) continue;
      const Seg& sf = dag.segs[f];
      const Seg& sc = dag.segs[c];
      const Point &fp = dag.pts[sf.p], &fq = dag.pts[sf.q];
      const Point &cp = dag.pts[sc.p], &cq = dag.pts[sc.q];
      Rat xl = std::max(fp.x, cp.x);
      Rat xr = std::min(fq.x, cq.x);
      if (!(xl < xr)) continue;
      bool share_left = sf.p == sc.p;
      bool share_right = sf.q == sc.q;
      // floor strictly below ceiling inside the slab; the walls may close up
      // only at a shared endpoint
      if (!share_left && !(seg_y_at(fp, fq, xl) < seg_y_at(cp, cq, xl))) continue;
      if (!share_right && !(seg_y_at(fp, fq, xr) < seg_y_at(cp, cq, xr))) continue;
      Node nd;
      nd.floor_seg = f;
      nd.ceil_seg = c;
      nd.xl = xl;
      nd.xr = xr;
      nd.start = share_left;
      nd.final_ = share_right;
      long w = 0;
      for (const Point& r : dag.pts) {
        if (r.x < xl || r.x >= xr) continue;
        if (seg_y_at(fp, fq, r.x) <= r.y && r.y <= seg_y_at(cp, cq, r.x)) ++w;
      }
      nd.weight = w;
      dag.nodes.push_back(nd);
    }

  size_t rn = dag.nodes.size();
  dag.adj.assign(rn, {});
  dag.relay_count = 0;

  // switch groups at a vertex: sources end one chain segment there, targets
  // start the replacement; the other chain segment carries over
  std::map<std::pair<int, int>, std::vector<int>> floor_from, floor_to, ceil_from, ceil_to;
  for (int i = 0; i < (int)rn; ++i) {
    const Node& nd = dag.nodes[i];
    const Seg& f = dag.segs[nd.floor_seg];
    const Seg& c = dag.segs[nd.ceil_seg];
    if (!nd.final_) {
      if (dag.pts[f.q].x < dag.pts[c.q].x)
        floor_from[{nd.ceil_seg, f.q}].push_back(i);
      else
        ceil_from[{nd.floor_seg, c.q}].push_back(i);
    }
    if (!nd.start) {
      if (dag.pts[f.p].x > dag.pts[c.p].x)
        floor_to[{nd.ceil_seg, f.p}].push_back(i);
      else
        ceil_to[{nd.floor_seg, c.p}].push_back(i);
    }
  }

  struct RelayKey {
    Rat x;
    long rank;
  };
  std::vector<RelayKey> relays;

  // lower chain slopes increase left to right, upper chain slopes decrease
  auto link = [&](std::map<std::pair<int, int>, std::vector<int>>& from,
                  std::map<std::pair<int, int>, std::vector<int>>& to, bool floor_side) {
    auto slope_of = [&](int id) {
      const Node& nd = dag.nodes[id];
      return slope[floor_side ? nd.floor_seg : nd.ceil_seg];
    };
    for (auto& [key, froms] : from) {
      auto it = to.find(key);
      if (it == to.end()) continue;
      std::vector<int>& tos = it->second;
      std::sort(tos.begin(), tos.end(), [&](int a, int b) {
        Rat sa = slope_of(a), sb = slope_of(b);
        if (sa != sb) return floor_side ? sa < sb : sa > sb;
        return a < b;
      });
      if (!chained_edges) {
        for (int u : froms) {
          Rat su = slope_of(u);
          for (int w : tos)
            if (floor_side ? slope_of(w) > su : slope_of(w) < su) dag.adj[u].push_back(w);
        }
        continue;
      }
      // distinct slopes in chain order, each holding its target nodes
      std::vector<Rat> gslope;
      std::vector<std::vector<int>> gmember;
      for (int w : tos) {
        Rat s = slope_of(w);
        if (gslope.empty() || s != gslope.back()) {
          gslope.push_back(s);
          gmember.push_back({});
        }
        gmember.back().push_back(w);
      }
      int base = (int)(rn + relays.size());
      Rat wallx = dag.pts[key.second].x;
      for (size_t i = 0; i < gslope.size(); ++i) {
        relays.push_back({wallx, (long)i});
        dag.adj.push_back({});
      }
      for (size_t i = 0; i < gslope.size(); ++i) {
        for (int w : gmember[i]) dag.adj[base + (int)i].push_back(w);
        if (i + 1 < gslope.size()) dag.adj[base + (int)i].push_back(base + (int)i + 1);
      }
      for (int u : froms) {
        Rat su = slope_of(u);
        size_t lo;
        if (floor_side)
          lo = std::upper_bound(gslope.begin(), gslope.end(), su) - gslope.begin();
        else
          lo = std::upper_bound(gslope.begin(), gslope.end(), su, std::greater<Rat>()) -
               gslope.begin();
        if (lo < gslope.size()) dag.adj[u].push_back(base + (int)lo);
      }
    }
  };
  link(floor_from, floor_to, true);
  link(ceil_from, ceil_to, false);
  dag.relay_count = (long)relays.size();

  // edges strictly increase the wall x; relays at a wall precede the
  // trapezoids starting there and follow their own chain order
  dag.topo_order.resize(rn + relays.size());
  for (size_t i = 0; i < dag.topo_order.size(); ++i) dag.topo_order[i] = (int)i;
  auto key = [&](int id) {
    if ((size_t)id < rn) return std::tuple<const Rat&, int, long>(dag.nodes[id].xl, 1, 0L);
    const RelayKey& rk = relays[(size_t)id - rn];
    return std::tuple<const Rat&, int, long>(rk.x, 0, rk.rank);
  };
  std::sort(dag.topo_order.begin(), dag.topo_order.end(), [&](int a, int b) {
    auto [xa, pa, ra] = key(a);
    auto [xb, pb, rb] = key(b);
    if (xa != xb) return xa < xb;
    if (pa != pb) return pa < pb;
    if (ra != rb) return ra < rb;
    return a < b;
  });
  return dag;
}

std::optional<BadPolygon> find_bad_polygon(const std::vector<Point>& P, long threshold,
                                           const std::vector<Point>& W, bool chained_edges) {
  if (threshold < 1) throw std::invalid_argument("find_bad_polygon: threshold must be at least 1");
  TrapDag dag = TrapDag::build(P, chained_edges);
  std::vector<long> seg_count = segment_counts(dag);
  std::vector<char> node_alive(dag.nodes.size(), 1);
  std::vector<char> pt_alive(dag.pts.size(), 1);
  std::vector<char> seg_alive(dag.segs.size(), 1);
  for (const Point& w : W) kill_masks(dag, w, node_alive, pt_alive, seg_alive);
  return dp_query(dag, seg_count, node_alive, pt_alive, seg_alive, threshold);
}

long guard_budget(long t, long m, long c) {
  if (t < 1 || m < 1 || c < 1) throw std::invalid_argument("guard_budget: arguments must be >= 1");
  double b = (double)c * (double)t * (double)t * (1.0 + std::log2((double)m + 1.0));
  return (long)std::ceil(b);
}

GuardSet solve_guarding(const Instance& inst, const GuardConfig& config) {
  long m_total = 0;
  for (const PointSet& s : inst.sets) m_total += (long)s.points.size();
  for (const PointSet& s : inst.sets)
    if (s.fraction * Rat(m_total) < 1)
      throw std::invalid_argument("solve_guarding: every fraction must be at least 1/m");

  Rat q = choose_shear(inst, config.seed);
  Instance sh = shear_instance(inst, q);
  std::vector<std::vector<Point>> lists = sh.point_lists();
  std::vector<long> thr(lists.size());
  for (size_t i = 0; i < lists.size(); ++i)
    thr[i] = ceil_long(sh.sets[i].fraction * Rat((long)lists[i].size()));

  GuardCandidates cand = candidate_points(sh.all_points());
  const std::vector<Point>& Q = cand.Q;

  GuardSet out;
  out.stats.candidate_count = (long)Q.size();
  std::vector<SetOracle> oracles(lists.size());
  for (size_t i = 0; i < lists.size(); ++i) oracles[i].init(lists[i], true);

  std::vector<std::vector<size_t>> rows;
  Rat final_lp_min(0);
  long t = 1;
  long iter = 0;
  const long iter_cap = 200 + 50 * m_total;
  for (;;) {
    if (++iter > iter_cap) throw std::runtime_error("solve_guarding: iteration budget exhausted");
    auto res = min_cover(Q.size(), rows);
    if (!res) throw std::logic_error("guard constraint lost its candidates");
    ++out.stats.lp_solves;
    out.stats.lp_iterations += res->iterations;
    final_lp_min = res->value;
    if (res->value > Rat(t)) {
      if (t >= m_total) {
        out.stats.fallback_all_points = true;
        out.stats.t_used = t;
        out.guards = inst.all_points();
        break;
      }
      t = std::min(2 * t, m_total);
      continue;
    }

    ++out.stats.rounding_attempts;
    long budget = guard_budget(t, m_total, config.budget_c);
    for (SetOracle& o : oracles) o.reset();
    std::vector<Point> W;
    std::optional<GuardConstraint> emitted;
    bool failed = false;
    for (size_t j = 0; j < lists.size() && !emitted && !failed; ++j) {
      for (;;) {
        ++out.stats.dp_calls;
        std::optional<BadPolygon> bad = oracles[j].query(thr[j]);
        if (!bad) break;
        std::vector<size_t> hit;
        Rat v(0);
        for (size_t qi = 0; qi < Q.size(); ++qi)
          if (bad->poly.contains(Q[qi])) {
            hit.push_back(qi);
            v += res->x[qi];
          }
        if (v * 2 < 1) {
          emitted = GuardConstraint{bad->poly, hit, j, bad->count, thr[j], v};
          break;
        }
        size_t pick = hit.front();
        for (size_t qi : hit)
          if (res->x[qi] > res->x[pick]) pick = qi;
        W.push_back(Q[pick]);
        for (SetOracle& o : oracles) o.add_guard(Q[pick]);
        if ((long)W.size() > budget) {
          failed = true;
          break;
        }
      }
    }
    if (emitted) {
      for (const std::vector<size_t>& r : rows)
        if (r == emitted->q_hits) throw std::logic_error("duplicate guard constraint emitted");
      rows.push_back(emitted->q_hits);
      out.constraints.push_back(std::move(*emitted));
      continue;
    }
    if (failed) {
      if (t >= m_total) {
        out.stats.fallback_all_points = true;
        out.stats.t_used = t;
        out.guards = inst.all_points();
        break;
      }
      t = std::min(2 * t, m_total);
      continue;
    }
    out.stats.t_used = t;
    for (const Point& w : W) out.guards.push_back(unshear_point(w, q));
    break;
  }
  out.stats.t_lower = std::max(0L, ceil_long(final_lp_min));
  GuardingReport rep = verify_guarding(inst, out.guards);
  if (!rep.valid) throw std::logic_error("solve_guarding: produced guards failed verification");
  return out;
}

GuardingReport verify_guarding(const Instance& inst, const std::vector<Point>& W) {
  Rat q = choose_shear(inst, 0);
  Instance sh = shear_instance(inst, q);
  std::vector<Point> ws;
  ws.reserve(W.size());
  for (const Point& w : W) ws.push_back(shear_point(w, q));
  GuardingReport rep;
  std::vector<std::vector<Point>> lists = sh.point_lists();
  for (size_t i = 0; i < lists.size(); ++i) {
    long thr = ceil_long(sh.sets[i].fraction * Rat((long)lists[i].size()));
    std::optional<BadPolygon> bad = find_bad_polygon(lists[i], thr, ws);
    if (bad) {
      rep.valid = false;
      rep.set_index = i;
      rep.count = bad->count;
      rep.threshold = thr;
      Polygon orig;
      for (const Point& v : bad->poly.vs) orig.vs.push_back(unshear_point(v, q));
      rep.witness = orig;
      return rep;
    }
  }
  return rep;
}

}  // namespace plancut
