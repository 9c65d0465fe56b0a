#include "plancut/arrangement.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace plancut {

namespace {

void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

// Convex body as convex hull of points plus a recession cone of directions.
struct Body {
  std::vector<Point> pts;
  std::vector<Point> dirs;
};

Rat dir_eval(const Line& g, const Point& d) { return g.a * d.x + g.b * d.y; }

// Sides of the body relative to g: (all points >=, all points <=, strictly).
struct SideTally {
  bool all_nonneg = true, all_nonpos = true;
  bool all_pos = true, all_neg = true;
  bool dirs_nonneg = true, dirs_nonpos = true;
};

SideTally tally(const Body& B, const Line& g) {
  SideTally t;
  for (const Point& p : B.pts) {
    int s = sgn(g.eval(p));
    if (s < 0) { t.all_nonneg = false; t.all_pos = false; }
    if (s > 0) { t.all_nonpos = false; t.all_neg = false; }
    if (s == 0) { t.all_pos = false; t.all_neg = false; }
  }
  for (const Point& d : B.dirs) {
    int s = sgn(dir_eval(g, d));
    if (s < 0) t.dirs_nonneg = false;
    if (s > 0) t.dirs_nonpos = false;
  }
  return t;
}

// Closed region: g misses iff the region lies strictly on one side.
bool crosses_closed(const Body& B, const Line& g) {
  SideTally t = tally(B, g);
  bool miss = (t.all_pos && t.dirs_nonneg) || (t.all_neg && t.dirs_nonpos);
  return !miss;
}

// Open (full-dimensional) region described by its boundary points: g misses
// iff the closure lies in one closed halfplane, since then the interior is
// strictly inside it.
bool crosses_open(const Body& B, const Line& g) {
  SideTally t = tally(B, g);
  bool miss = (t.all_nonneg && t.dirs_nonneg) || (t.all_nonpos && t.dirs_nonpos);
  return !miss;
}

Body body_of_polygon(const Polygon& poly) {
  Body b;
  b.pts = poly.vs;
  return b;
}

Body body_of_trapezoid(const Trapezoid& T) {
  Body b;
  auto y_on = [](const Line& l, const Rat& x) { return l.y_at(x); };
  for (int side = 0; side < 2; ++side) {
    const std::optional<Rat>& wall = side == 0 ? T.left_x : T.right_x;
    Rat e(side == 0 ? -1 : 1);
    if (wall) {
      if (T.floor) b.pts.emplace_back(*wall, y_on(*T.floor, *wall));
      if (T.ceiling) b.pts.emplace_back(*wall, y_on(*T.ceiling, *wall));
      if (!T.floor && !T.ceiling) b.pts.emplace_back(*wall, Rat(0));
    } else {
      if (T.floor) b.dirs.emplace_back(e, e * T.floor->slope());
      if (T.ceiling) b.dirs.emplace_back(e, e * T.ceiling->slope());
      if (!T.floor && !T.ceiling) b.dirs.emplace_back(e, Rat(0));
    }
  }
  if (!T.floor) b.dirs.emplace_back(Rat(0), Rat(-1));
  if (!T.ceiling) b.dirs.emplace_back(Rat(0), Rat(1));
  if (b.pts.empty()) {
    Rat x0(0);
    if (T.floor) b.pts.emplace_back(x0, y_on(*T.floor, x0));
    if (T.ceiling) b.pts.emplace_back(x0, y_on(*T.ceiling, x0));
    if (!T.floor && !T.ceiling) b.pts.emplace_back(x0, Rat(0));
  }
  return b;
}

Body body_of_face(const Arrangement& A, int fi) {
  const Arrangement::Face& f = A.faces[fi];
  Body b;
  if (A.lines.empty()) {
    b.pts.emplace_back(Rat(0), Rat(0));
    b.dirs.emplace_back(Rat(1), Rat(0));
    b.dirs.emplace_back(Rat(-1), Rat(0));
    b.dirs.emplace_back(Rat(0), Rat(1));
    b.dirs.emplace_back(Rat(0), Rat(-1));
    return b;
  }
  if (!f.side_lines.empty()) {
    for (int li : f.side_lines) {
      const Arrangement::LineTrace& tr = A.traces[li];
      b.pts.push_back(tr.p0);
      b.dirs.push_back(tr.dir);
      b.dirs.emplace_back(-tr.dir.x, -tr.dir.y);
    }
    if (f.side_lines.size() == 1) {
      int li = f.side_lines[0];
      const Line& l = A.lines[li];
      Rat s(f.sig[li] == '+' ? 1 : -1);
      b.dirs.emplace_back(s * l.a, s * l.b);
    }
    return b;
  }
  for (int v : f.chain) b.pts.push_back(A.vertices[v].p);
  if (!f.bounded) {
    b.dirs.push_back(*f.ray_in);
    b.dirs.push_back(*f.ray_out);
  }
  return b;
}

}  // namespace

WeightedLineSet WeightedLineSet::uniform(const std::vector<Line>& ls) {
  return weighted(ls, std::vector<Rat>(ls.size(), Rat(1)));
}

WeightedLineSet WeightedLineSet::weighted(const std::vector<Line>& ls,
                                          const std::vector<Rat>& ws) {
  if (ls.size() != ws.size())
    throw std::invalid_argument("WeightedLineSet: lines/weights length mismatch");
  std::map<Line, Rat, LineLess> acc;
  for (size_t i = 0; i < ls.size(); ++i) {
    if (ws[i] < 0) throw std::invalid_argument("WeightedLineSet: negative weight");
    if (ws[i] == 0) continue;
    acc[ls[i]] += ws[i];
  }
  WeightedLineSet W;
  for (auto& [l, w] : acc) {
    W.lines.push_back(l);
    W.weights.push_back(w);
    W.total += w;
  }
  return W;
}

std::string Arrangement::sign_vector(const Point& p) const {
  std::string s(lines.size(), '0');
  for (size_t i = 0; i < lines.size(); ++i) {
    int sd = lines[i].side(p);
    s[i] = sd > 0 ? '+' : sd < 0 ? '-' : '0';
  }
  return s;
}

Rat Arrangement::line_param(int line, const Point& p) const {
  const LineTrace& tr = traces[line];
  if (tr.dir.x != 0) return (p.x - tr.p0.x) / tr.dir.x;
  return (p.y - tr.p0.y) / tr.dir.y;
}

FaceId Arrangement::locate(const Point& p) const {
  if (lines.empty()) return {2, 0};
  std::string s(lines.size(), '0');
  std::vector<int> zeros;
  for (size_t i = 0; i < lines.size(); ++i) {
    int sd = lines[i].side(p);
    s[i] = sd > 0 ? '+' : sd < 0 ? '-' : '0';
    if (sd == 0) zeros.push_back((int)i);
  }
  if (zeros.empty()) {
    auto it = face_of_sig.find(s);
    check(it != face_of_sig.end(), "locate: unknown full sign vector");
    return {2, it->second};
  }
  if (zeros.size() >= 2) {
    auto it = vertex_ids.find(p);
    check(it != vertex_ids.end(), "locate: point on two lines is not a vertex");
    return {0, it->second};
  }
  int li = zeros[0];
  const LineTrace& tr = traces[li];
  Rat t = line_param(li, p);
  size_t idx = std::upper_bound(tr.ts.begin(), tr.ts.end(), t) - tr.ts.begin();
  check(idx == 0 || tr.ts[idx - 1] != t, "locate: vertex escaped the zero count");
  return {1, tr.eids[idx]};
}

Arrangement build_arrangement(std::vector<Line> lines) {
  Arrangement A;
  A.lines = std::move(lines);
  const int n = (int)A.lines.size();
  {
    std::set<Line, LineLess> uniq(A.lines.begin(), A.lines.end());
    if ((int)uniq.size() != n)
      throw std::invalid_argument("build_arrangement: duplicate lines");
  }
  if (n == 0) {
    Arrangement::Face f;
    f.bounded = false;
    f.rep = Point(Rat(0), Rat(0));
    A.faces.push_back(std::move(f));
    A.face_of_sig.emplace(std::string(), 0);
    return A;
  }

  // --- vertices: every pairwise proper intersection, merged by location ---
  std::map<Point, std::set<int>, PointLess> vmap;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      LineIntersection it = line_intersection(A.lines[i], A.lines[j]);
      if (it.kind == LineRelation::Proper) {
        auto& s = vmap[it.p];
        s.insert(i);
        s.insert(j);
      }
    }
  for (auto& [p, ls] : vmap) {
    A.vertex_ids.emplace(p, (int)A.vertices.size());
    A.vertices.push_back({p, std::vector<int>(ls.begin(), ls.end())});
  }
  const int V = (int)A.vertices.size();
  std::vector<std::vector<int>> on_line(n);
  for (int v = 0; v < V; ++v)
    for (int l : A.vertices[v].on_lines) on_line[l].push_back(v);

  // --- bounding box strictly beyond every vertex and line anchor ---
  Rat M(1);
  auto grow = [&M](const Rat& v) {
    Rat av = v < 0 ? Rat(-v) : v;
    if (av + 1 > M) M = av + 1;
  };
  for (const auto& v : A.vertices) {
    grow(v.p.x);
    grow(v.p.y);
  }
  A.traces.resize(n);
  for (int i = 0; i < n; ++i) {
    const Line& l = A.lines[i];
    auto& tr = A.traces[i];
    if (l.b != 0)
      tr.p0 = Point(Rat(0), rat(Int(l.c), Int(l.b)));
    else
      tr.p0 = Point(rat(Int(l.c), Int(l.a)), Rat(0));
    tr.dir = Point(Rat(l.b), Rat(-l.a));
    grow(tr.p0.x);
    grow(tr.p0.y);
  }

  // --- node table: real vertices plus box-boundary points ---
  struct Node {
    Point p;
    int real_id;
  };
  std::vector<Node> nodes;
  std::map<Point, int, PointLess> node_ids;
  auto node_of = [&](const Point& p, int real_id) {
    auto [it, fresh] = node_ids.emplace(p, (int)nodes.size());
    if (fresh) nodes.push_back({p, real_id});
    else if (real_id >= 0) nodes[it->second].real_id = real_id;
    return it->second;
  };
  for (int v = 0; v < V; ++v) node_of(A.vertices[v].p, v);
  node_of(Point(Rat(-M), Rat(-M)), -1);
  node_of(Point(Rat(M), Rat(-M)), -1);
  node_of(Point(Rat(M), Rat(M)), -1);
  node_of(Point(Rat(-M), Rat(M)), -1);

  // --- edges along each line (clipped to the box) and along the box rim ---
  struct GEdge {
    int u, v;
    int line;      // -1 for box rim edges
    int arr_edge;  // index into A.edges, -1 for rim edges
  };
  std::vector<GEdge> gedges;

  for (int i = 0; i < n; ++i) {
    auto& tr = A.traces[i];
    bool has = false;
    Rat tlo(0), thi(0);
    auto clip = [&](const Rat& base, const Rat& d) {
      if (d == 0) return;
      Rat t1 = (-M - base) / d, t2 = (M - base) / d;
      if (t1 > t2) std::swap(t1, t2);
      if (!has) {
        tlo = t1;
        thi = t2;
        has = true;
      } else {
        if (t1 > tlo) tlo = t1;
        if (t2 < thi) thi = t2;
      }
    };
    clip(tr.p0.x, tr.dir.x);
    clip(tr.p0.y, tr.dir.y);
    check(has && tlo < thi, "build_arrangement: line misses the box");

    struct Stop {
      Rat t;
      int node;
      int vid;
    };
    std::vector<Stop> stops;
    stops.reserve(on_line[i].size());
    for (int v : on_line[i]) {
      const Point& p = A.vertices[v].p;
      stops.push_back({A.line_param(i, p), node_of(p, v), v});
    }
    std::sort(stops.begin(), stops.end(),
              [](const Stop& a, const Stop& b) { return a.t < b.t; });
    Point plo(tr.p0.x + tlo * tr.dir.x, tr.p0.y + tlo * tr.dir.y);
    Point phi(tr.p0.x + thi * tr.dir.x, tr.p0.y + thi * tr.dir.y);
    int prev_node = node_of(plo, -1);
    int prev_vid = -1;
    for (const Stop& st : stops) {
      check(st.t > tlo && st.t < thi, "build_arrangement: vertex outside box");
      int e = (int)A.edges.size();
      A.edges.push_back({i, prev_vid, st.vid, -1, -1});
      gedges.push_back({prev_node, st.node, i, e});
      tr.eids.push_back(e);
      tr.ts.push_back(st.t);
      tr.vids.push_back(st.vid);
      prev_node = st.node;
      prev_vid = st.vid;
    }
    int e = (int)A.edges.size();
    A.edges.push_back({i, prev_vid, -1, -1, -1});
    gedges.push_back({prev_node, node_of(phi, -1), i, e});
    tr.eids.push_back(e);
  }

  {  // box rim: walk boundary nodes in perimeter order
    auto peri = [&](const Point& p) -> std::pair<int, Rat> {
      bool xl = p.x == -M, xr = p.x == M, yb = p.y == -M, yt = p.y == M;
      if (yb && !xr) return {0, p.x};
      if (xr && !yt) return {1, p.y};
      if (yt && !xl) return {2, -p.x};
      return {3, -p.y};
    };
    std::vector<int> rim;
    for (int id = 0; id < (int)nodes.size(); ++id) {
      const Point& p = nodes[id].p;
      if (rat_abs(p.x) == M || rat_abs(p.y) == M) rim.push_back(id);
    }
    std::sort(rim.begin(), rim.end(), [&](int a, int b) {
      auto pa = peri(nodes[a].p), pb = peri(nodes[b].p);
      if (pa.first != pb.first) return pa.first < pb.first;
      return pa.second < pb.second;
    });
    for (size_t k = 0; k < rim.size(); ++k)
      gedges.push_back({rim[k], rim[(k + 1) % rim.size()], -1, -1});
  }

  // --- half-edge structure: angular order around nodes, face orbits ---
  const int GE = (int)gedges.size();
  auto he_src = [&](int h) { return (h & 1) ? gedges[h >> 1].v : gedges[h >> 1].u; };
  auto he_dst = [&](int h) { return (h & 1) ? gedges[h >> 1].u : gedges[h >> 1].v; };
  std::vector<std::vector<int>> out(nodes.size());
  for (int e = 0; e < GE; ++e) {
    out[gedges[e].u].push_back(2 * e);
    out[gedges[e].v].push_back(2 * e + 1);
  }
  auto half = [](const Point& d) {
    int sy = sgn(d.y);
    if (sy != 0) return sy > 0 ? 0 : 1;
    return sgn(d.x) > 0 ? 0 : 1;
  };
  for (auto& o : out) {
    std::sort(o.begin(), o.end(), [&](int h1, int h2) {
      const Point& s1 = nodes[he_src(h1)].p;
      const Point& s2 = nodes[he_src(h2)].p;
      Point d1(nodes[he_dst(h1)].p.x - s1.x, nodes[he_dst(h1)].p.y - s1.y);
      Point d2(nodes[he_dst(h2)].p.x - s2.x, nodes[he_dst(h2)].p.y - s2.y);
      int ha = half(d1), hb = half(d2);
      if (ha != hb) return ha < hb;
      Rat cr = d1.x * d2.y - d1.y * d2.x;
      int s = sgn(cr);
      check(s != 0, "build_arrangement: coincident edge directions");
      return s > 0;
    });
  }
  std::vector<int> pos(2 * GE, -1);
  for (const auto& o : out)
    for (size_t k = 0; k < o.size(); ++k) pos[o[k]] = (int)k;
  std::vector<int> he_next(2 * GE, -1);
  for (int h = 0; h < 2 * GE; ++h) {
    const auto& o = out[he_dst(h)];
    int i = pos[h ^ 1];
    he_next[h] = o[(i + (int)o.size() - 1) % o.size()];
  }

  std::vector<int> orbit_of(2 * GE, -1);
  std::vector<std::vector<int>> orbits;
  for (int h0 = 0; h0 < 2 * GE; ++h0) {
    if (orbit_of[h0] >= 0) continue;
    int id = (int)orbits.size();
    orbits.emplace_back();
    int h = h0;
    do {
      orbit_of[h] = id;
      orbits[id].push_back(h);
      h = he_next[h];
    } while (h != h0);
  }

  int outer = -1;
  for (size_t k = 0; k < orbits.size(); ++k) {
    Rat area2(0);
    for (int h : orbits[k]) {
      const Point& u = nodes[he_src(h)].p;
      const Point& w = nodes[he_dst(h)].p;
      area2 += u.x * w.y - w.x * u.y;
    }
    if (area2 < 0) {
      check(outer < 0, "build_arrangement: two clockwise orbits");
      outer = (int)k;
    }
  }
  check(outer >= 0, "build_arrangement: no outer orbit");

  // --- faces from orbits ---
  std::vector<int> face_of_orbit(orbits.size(), -1);
  for (size_t k = 0; k < orbits.size(); ++k) {
    if ((int)k == outer) continue;
    const std::vector<int>& hs0 = orbits[k];
    std::vector<int> hs(hs0);
    auto is_real = [&](int h) { return gedges[h >> 1].line >= 0; };
    int reals = 0;
    for (int h : hs)
      if (is_real(h)) ++reals;
    check(reals > 0, "build_arrangement: interior face with no real edge");

    Arrangement::Face f;
    {  // interior representative: average of the cycle's corner points
      Rat sx(0), sy(0);
      for (int h : hs) {
        const Point& p = nodes[he_src(h)].p;
        sx += p.x;
        sy += p.y;
      }
      f.rep = Point(sx / (int)hs.size(), sy / (int)hs.size());
    }

    if (reals == (int)hs.size()) {
      // bounded face: rotate for a deterministic starting corner
      size_t best = 0;
      for (size_t i = 1; i < hs.size(); ++i)
        if (point_cmp(nodes[he_src(hs[i])].p, nodes[he_src(hs[best])].p) < 0) best = i;
      std::rotate(hs.begin(), hs.begin() + best, hs.end());
      f.bounded = true;
      for (int h : hs) {
        int rid = nodes[he_src(h)].real_id;
        check(rid >= 0, "build_arrangement: bounded face touches the box");
        f.chain.push_back(rid);
        f.chain_edges.push_back(gedges[h >> 1].arr_edge);
      }
      f.complexity = hs.size();
    } else {
      // rotate so a maximal real run starts at position 0
      size_t start = hs.size();
      for (size_t i = 0; i < hs.size(); ++i) {
        size_t prev = (i + hs.size() - 1) % hs.size();
        if (is_real(hs[i]) && !is_real(hs[prev])) {
          start = i;
          break;
        }
      }
      check(start < hs.size(), "build_arrangement: mixed orbit without transition");
      std::rotate(hs.begin(), hs.begin() + start, hs.end());
      // collect maximal real runs
      std::vector<std::pair<size_t, size_t>> runs;  // [begin, end)
      size_t i = 0;
      while (i < hs.size()) {
        if (!is_real(hs[i])) {
          ++i;
          continue;
        }
        size_t j = i;
        while (j < hs.size() && is_real(hs[j])) ++j;
        runs.emplace_back(i, j);
        i = j;
      }
      f.bounded = false;
      if (runs.size() == 1) {
        size_t b = runs[0].first, e = runs[0].second;
        size_t klen = e - b;
        if (klen == 1) {
          f.side_lines.push_back(gedges[hs[b] >> 1].line);
          f.chain_edges.push_back(gedges[hs[b] >> 1].arr_edge);
        } else {
          for (size_t t = b; t < e; ++t)
            f.chain_edges.push_back(gedges[hs[t] >> 1].arr_edge);
          for (size_t t = b; t + 1 < e; ++t) {
            int rid = nodes[he_dst(hs[t])].real_id;
            check(rid >= 0, "build_arrangement: interior chain node not a vertex");
            f.chain.push_back(rid);
          }
          const Point& in_far = nodes[he_src(hs[b])].p;
          const Point& in_near = nodes[he_dst(hs[b])].p;
          f.ray_in = Point(in_far.x - in_near.x, in_far.y - in_near.y);
          const Point& out_near = nodes[he_src(hs[e - 1])].p;
          const Point& out_far = nodes[he_dst(hs[e - 1])].p;
          f.ray_out = Point(out_far.x - out_near.x, out_far.y - out_near.y);
        }
        f.complexity = klen;
      } else if (runs.size() == 2) {
        check(runs[0].second - runs[0].first == 1 && runs[1].second - runs[1].first == 1,
              "build_arrangement: two-run face with a vertex");
        for (const auto& r : runs) {
          f.side_lines.push_back(gedges[hs[r.first] >> 1].line);
          f.chain_edges.push_back(gedges[hs[r.first] >> 1].arr_edge);
        }
        f.complexity = 2;
      } else {
        check(false, "build_arrangement: face with more than two boundary arcs");
      }
    }
    face_of_orbit[k] = (int)A.faces.size();
    A.faces.push_back(std::move(f));
  }

  // --- adjacent faces of every real edge ---
  for (int h = 0; h < 2 * GE; ++h) {
    const GEdge& ge = gedges[h >> 1];
    if (ge.line < 0) continue;
    int fi = face_of_orbit[orbit_of[h]];
    check(fi >= 0, "build_arrangement: real edge touches the outer orbit");
    const auto& tr = A.traces[ge.line];
    const Point& s = nodes[he_src(h)].p;
    const Point& d = nodes[he_dst(h)].p;
    Rat along = (d.x - s.x) * tr.dir.x + (d.y - s.y) * tr.dir.y;
    if (along > 0)
      A.edges[ge.arr_edge].f_left = fi;
    else
      A.edges[ge.arr_edge].f_right = fi;
  }
  for (const auto& e : A.edges)
    check(e.f_left >= 0 && e.f_right >= 0, "build_arrangement: edge missing a face");

  // --- sign vectors by flood fill over shared edges ---
  const int F = (int)A.faces.size();
  {
    std::vector<char> seen(F, 0);
    std::queue<int> bfs;
    A.faces[0].sig.resize(n);
    for (int i = 0; i < n; ++i) {
      int s = A.lines[i].side(A.faces[0].rep);
      check(s != 0, "build_arrangement: face witness on a line");
      A.faces[0].sig[i] = s > 0 ? '+' : '-';
    }
    seen[0] = 1;
    bfs.push(0);
    while (!bfs.empty()) {
      int fi = bfs.front();
      bfs.pop();
      for (int ei : A.faces[fi].chain_edges) {
        const auto& e = A.edges[ei];
        int g = e.f_left == fi ? e.f_right : e.f_left;
        if (seen[g]) continue;
        seen[g] = 1;
        A.faces[g].sig = A.faces[fi].sig;
        A.faces[g].sig[e.line] = A.faces[fi].sig[e.line] == '+' ? '-' : '+';
        bfs.push(g);
      }
    }
    for (int fi = 0; fi < F; ++fi) {
      check(seen[fi], "build_arrangement: disconnected face graph");
      A.face_of_sig.emplace(A.faces[fi].sig, fi);
    }
    check((int)A.face_of_sig.size() == F, "build_arrangement: duplicate sign vector");
  }
  return A;
}

std::map<FaceId, std::vector<long>> face_counts(const Arrangement& arr,
                                                const std::vector<std::vector<Point>>& sets) {
  std::map<FaceId, std::vector<long>> out;
  for (size_t si = 0; si < sets.size(); ++si) {
    for (const Point& p : sets[si]) {
      FaceId id = arr.locate(p);
      auto it = out.find(id);
      if (it == out.end()) it = out.emplace(id, std::vector<long>(sets.size(), 0)).first;
      ++it->second[si];
    }
  }
  return out;
}

FaceComplexityProfile complexity_profile(const Arrangement& arr) {
  FaceComplexityProfile prof;
  prof.c.reserve(arr.faces.size());
  for (const auto& f : arr.faces) prof.c.push_back(f.complexity);
  std::sort(prof.c.rbegin(), prof.c.rend());
  return prof;
}

std::vector<Trapezoid> vertical_decompose(const Arrangement& A, int fi) {
  check(fi >= 0 && fi < (int)A.faces.size(), "vertical_decompose: bad face index");
  const Arrangement::Face& f = A.faces[fi];
  if (A.lines.empty()) return {Trapezoid{}};

  if (!f.side_lines.empty()) {
    if (f.side_lines.size() == 1) {
      int li = f.side_lines[0];
      const Line& l = A.lines[li];
      Trapezoid T;
      if (l.is_vertical()) {
        Rat w = rat(Int(l.c), Int(l.a));
        if (f.sig[li] == '+') T.left_x = w;  // canonical a > 0: '+' means x > c/a
        else T.right_x = w;
      } else {
        bool above = (f.sig[li] == '+') == (sgn(l.b) > 0);
        if (above) T.floor = l;
        else T.ceiling = l;
      }
      return {T};
    }
    const Line& l1 = A.lines[f.side_lines[0]];
    const Line& l2 = A.lines[f.side_lines[1]];
    Trapezoid T;
    if (l1.is_vertical()) {
      Rat x1 = rat(Int(l1.c), Int(l1.a)), x2 = rat(Int(l2.c), Int(l2.a));
      T.left_x = x1 < x2 ? x1 : x2;
      T.right_x = x1 < x2 ? x2 : x1;
    } else {
      bool first_lower = sgn(l1.b) > 0 ? l1.c * l2.b < l2.c * l1.b : l1.c * l2.b > l2.c * l1.b;
      T.floor = first_lower ? l1 : l2;
      T.ceiling = first_lower ? l2 : l1;
    }
    return {T};
  }

  // Faces with vertices: classify boundary elements as lower/upper cover.
  struct Elem {
    std::optional<Rat> xlo, xhi;
    int line;
    bool lower;
  };
  std::vector<Elem> elems;
  auto add_elem = [&](const Point& a, const Point& b, int line) {
    // segment traversed a -> b
    int dx = cmp(b.x, a.x);
    if (dx == 0) return;  // vertical edge acts as a wall
    Elem e;
    e.line = line;
    e.lower = dx > 0;
    e.xlo = a.x < b.x ? a.x : b.x;
    e.xhi = a.x < b.x ? b.x : a.x;
    elems.push_back(std::move(e));
  };
  auto add_ray = [&](const Point& v, const Point& outward, int line, bool entering) {
    int dx = sgn(outward.x);
    if (dx == 0) return;  // vertical ray: no floor/ceiling contribution
    Elem e;
    e.line = line;
    // traversal direction: entering rays run infinity -> v, so flip
    int tdx = entering ? -dx : dx;
    e.lower = tdx > 0;
    if (dx < 0) e.xhi = v.x;
    else e.xlo = v.x;
    elems.push_back(std::move(e));
  };

  if (f.bounded) {
    for (size_t i = 0; i < f.chain.size(); ++i) {
      const Point& a = A.vertices[f.chain[i]].p;
      const Point& b = A.vertices[f.chain[(i + 1) % f.chain.size()]].p;
      add_elem(a, b, A.edges[f.chain_edges[i]].line);
    }
  } else {
    const Point& front = A.vertices[f.chain.front()].p;
    const Point& back = A.vertices[f.chain.back()].p;
    add_ray(front, *f.ray_in, A.edges[f.chain_edges.front()].line, true);
    for (size_t i = 0; i + 1 < f.chain.size(); ++i) {
      const Point& a = A.vertices[f.chain[i]].p;
      const Point& b = A.vertices[f.chain[i + 1]].p;
      add_elem(a, b, A.edges[f.chain_edges[i + 1]].line);
    }
    add_ray(back, *f.ray_out, A.edges[f.chain_edges.back()].line, false);
  }

  std::vector<Rat> xs;
  for (int v : f.chain) xs.push_back(A.vertices[v].p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  bool left_inf = !f.bounded && (sgn(f.ray_in->x) < 0 || sgn(f.ray_out->x) < 0);
  bool right_inf = !f.bounded && (sgn(f.ray_in->x) > 0 || sgn(f.ray_out->x) > 0);

  struct Slab {
    std::optional<Rat> lo, hi;
  };
  std::vector<Slab> slabs;
  if (left_inf) slabs.push_back({std::nullopt, xs.front()});
  for (size_t i = 0; i + 1 < xs.size(); ++i) slabs.push_back({xs[i], xs[i + 1]});
  if (right_inf) slabs.push_back({xs.back(), std::nullopt});
  check(!slabs.empty(), "vertical_decompose: face with no horizontal extent");

  std::vector<Trapezoid> out;
  for (const Slab& sl : slabs) {
    auto covers = [&](const Elem& e) {
      if (sl.lo) {
        if (e.xlo && *e.xlo > *sl.lo) return false;
      } else if (e.xlo) {
        return false;
      }
      if (sl.hi) {
        if (e.xhi && *e.xhi < *sl.hi) return false;
      } else if (e.xhi) {
        return false;
      }
      return true;
    };
    Trapezoid T;
    T.left_x = sl.lo;
    T.right_x = sl.hi;
    int nlo = 0, nhi = 0;
    for (const Elem& e : elems) {
      if (!covers(e)) continue;
      if (e.lower) {
        T.floor = A.lines[e.line];
        ++nlo;
      } else {
        T.ceiling = A.lines[e.line];
        ++nhi;
      }
    }
    check(nlo <= 1 && nhi <= 1, "vertical_decompose: ambiguous slab cover");
    check(nlo + nhi > 0, "vertical_decompose: uncovered slab");
    out.push_back(std::move(T));
  }
  return out;
}

Rat crossing_weight(const Polygon& region, const WeightedLineSet& W) {
  if (region.vs.empty()) throw std::invalid_argument("crossing_weight: empty polygon");
  Body b = body_of_polygon(region);
  Rat sum(0);
  for (size_t i = 0; i < W.size(); ++i)
    if (crosses_closed(b, W.lines[i])) sum += W.weights[i];
  return sum;
}

Rat crossing_weight(const Trapezoid& region, const WeightedLineSet& W) {
  Body b = body_of_trapezoid(region);
  Rat sum(0);
  for (size_t i = 0; i < W.size(); ++i)
    if (crosses_closed(b, W.lines[i])) sum += W.weights[i];
  return sum;
}

Rat crossing_weight_open(const Trapezoid& region, const WeightedLineSet& W) {
  Body b = body_of_trapezoid(region);
  Rat sum(0);
  for (size_t i = 0; i < W.size(); ++i)
    if (crosses_open(b, W.lines[i])) sum += W.weights[i];
  return sum;
}

Rat crossing_weight(const Arrangement& arr, FaceId cell, const WeightedLineSet& W) {
  Rat sum(0);
  if (cell.dim == 2) {
    Body b = body_of_face(arr, cell.index);
    for (size_t i = 0; i < W.size(); ++i)
      if (crosses_open(b, W.lines[i])) sum += W.weights[i];
    return sum;
  }
  if (cell.dim == 0) {
    const Point& p = arr.vertices[cell.index].p;
    for (size_t i = 0; i < W.size(); ++i)
      if (W.lines[i].side(p) == 0) sum += W.weights[i];
    return sum;
  }
  const Arrangement::Edge& e = arr.edges[cell.index];
  const Line& supp = arr.lines[e.line];
  std::optional<Rat> tlo, thi;
  if (e.v_from >= 0) tlo = arr.line_param(e.line, arr.vertices[e.v_from].p);
  if (e.v_to >= 0) thi = arr.line_param(e.line, arr.vertices[e.v_to].p);
  for (size_t i = 0; i < W.size(); ++i) {
    const Line& g = W.lines[i];
    if (g == supp) {
      sum += W.weights[i];  // contains the whole relative interior
      continue;
    }
    LineIntersection it = line_intersection(g, supp);
    if (it.kind != LineRelation::Proper) continue;
    Rat t = arr.line_param(e.line, it.p);
    if ((!tlo || t > *tlo) && (!thi || t < *thi)) sum += W.weights[i];
  }
  return sum;
}

bool line_crosses_face(const Arrangement& arr, int face_index, const Line& l) {
  // The open 2-face is exactly { p : sign(eval_j(p)) matches sig[j] for all
  // j }. Along p(t) = anchor + t*dir each constraint is linear in t; the line
  // crosses iff the open t-intervals have a common point.
  const Arrangement::Face& f = arr.faces.at((size_t)face_index);
  Point dir(Rat(l.b), Rat(-l.a));
  Point anchor = l.b != 0 ? Point(Rat(0), rat(l.c, l.b)) : Point(rat(l.c, l.a), Rat(0));
  bool has_lo = false, has_hi = false;
  Rat lo(0), hi(0);
  for (size_t j = 0; j < arr.lines.size(); ++j) {
    const Line& g = arr.lines[j];
    Rat v0 = g.eval(anchor);
    Rat dv = Rat(g.a) * dir.x + Rat(g.b) * dir.y;
    bool want_pos = f.sig[j] == '+';
    if (dv == 0) {
      // parallel or coincident: constant side, satisfied everywhere or nowhere
      if (want_pos ? v0 > 0 : v0 < 0) continue;
      return false;
    }
    Rat bound = -v0 / dv;
    if ((dv > 0) == want_pos) {
      if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
    } else {
      if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
    }
  }
  return !(has_lo && has_hi && lo >= hi);
}

}  // namespace plancut
