#include "plancut/lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace plancut {

namespace {

// Bounded-variable revised simplex over exact rationals, specialized to the
// cover system  A x >= 1. Variables, in id order:
//   [0, np)          pattern classes: cost 1, bounds [0, mult], column = +1
//                    on every row the pattern belongs to
//   [np, np+r)       surplus per row: cost 0, bounds [0, inf), column -1
//   [np+r, np+2r)    phase-1 artificials: bounds [0, inf) then [0, 0]
enum VStat { kLower, kUpper, kBasic };

struct Simplex {
  size_t np, r;
  std::vector<std::vector<int>> pat;  // rows of each class pattern
  std::vector<Rat> ub;                // class upper bounds (multiplicities)
  size_t nv;                          // np + 2r

  std::vector<VStat> stat;
  std::vector<int> basic;              // var id per row
  std::vector<std::vector<Rat>> binv;  // basis inverse, r x r
  std::vector<Rat> xb;                 // basic variable values
  long iterations = 0;

  bool is_class(size_t v) const { return v < np; }
  bool is_surplus(size_t v) const { return v >= np && v < np + r; }
  bool is_artificial(size_t v) const { return v >= np + r; }

  bool upper_finite(size_t v) const { return is_class(v); }
  const Rat& upper(size_t v) const { return ub[v]; }  // classes only

  Rat cost(size_t v, int phase) const {
    if (phase == 1) return Rat(is_artificial(v) ? 1 : 0);
    return Rat(is_class(v) ? 1 : 0);
  }

  // column of v applied to a dense r-vector: returns dot(col_v, y)
  Rat col_dot(size_t v, const std::vector<Rat>& y) const {
    if (is_class(v)) {
      Rat s(0);
      for (int i : pat[v]) s += y[i];
      return s;
    }
    size_t row = v - np - (is_artificial(v) ? r : 0);
    return is_artificial(v) ? y[row] : -y[row];
  }

  std::vector<Rat> binv_col(size_t v) const {
    std::vector<Rat> w(r, Rat(0));
    if (is_class(v)) {
      for (size_t i = 0; i < r; ++i)
        for (int j : pat[v]) w[i] += binv[i][j];
    } else {
      size_t row = v - np - (is_artificial(v) ? r : 0);
      int sign = is_artificial(v) ? 1 : -1;
      for (size_t i = 0; i < r; ++i) w[i] = sign > 0 ? binv[i][row] : -binv[i][row];
    }
    return w;
  }

  Rat objective(int phase) const {
    Rat z(0);
    for (size_t i = 0; i < r; ++i) z += cost(basic[i], phase) * xb[i];
    for (size_t v = 0; v < nv; ++v)
      if (stat[v] == kUpper) z += cost(v, phase) * ub[v];
    return z;
  }

  void optimize(int phase) {
    long stall = 0;
    bool bland = false;
    Rat best_z = objective(phase);
    const long hard_cap = 50000 + 200 * (long)(np + 2 * r);
    while (true) {
      if (++iterations > hard_cap) throw std::logic_error("cover lp: iteration cap exceeded");
      // y = cB^T binv
      std::vector<Rat> y(r, Rat(0));
      for (size_t i = 0; i < r; ++i) {
        Rat cb = cost(basic[i], phase);
        if (cb != 0)
          for (size_t j = 0; j < r; ++j) y[j] += cb * binv[i][j];
      }
      // pricing
      size_t enter = nv;
      Rat enter_score(0);
      for (size_t v = 0; v < nv; ++v) {
        if (stat[v] == kBasic) continue;
        if (is_artificial(v)) continue;  // never re-enter artificials
        Rat d = cost(v, phase) - col_dot(v, y);
        bool improving = (stat[v] == kLower) ? d < 0 : d > 0;
        if (!improving) continue;
        Rat score = d < 0 ? -d : d;
        if (bland) { enter = v; break; }
        if (enter == nv || score > enter_score) { enter = v; enter_score = score; }
      }
      if (enter == nv) return;  // optimal for this phase

      int sigma = stat[enter] == kLower ? 1 : -1;
      std::vector<Rat> w = binv_col(enter);
      // Ratio test along g = sigma * w: basic values move as xb_i - theta*g_i,
      // the entering variable moves theta away from its current bound.
      bool theta_set = false;
      Rat theta(0);
      int leave = -1;  // -1 marks a bound flip of the entering variable
      if (upper_finite(enter)) { theta = upper(enter); theta_set = true; }
      for (size_t i = 0; i < r; ++i) {
        Rat g = sigma > 0 ? w[i] : -w[i];
        if (g == 0) continue;
        Rat cand;
        if (g > 0) {
          cand = xb[i] / g;  // falling basic hits its lower bound 0
        } else {
          size_t bv = basic[i];
          // rising basic hits a finite upper bound only: classes always,
          // artificials once phase 1 has pinned them at zero
          if (is_class(bv)) cand = (upper(bv) - xb[i]) / (-g);
          else if (is_artificial(bv) && phase == 2) cand = (Rat(0) - xb[i]) / (-g);
          else continue;
        }
        if (cand < 0) cand = Rat(0);  // degenerate guard
        if (!theta_set || cand < theta ||
            (cand == theta && (leave < 0 || (size_t)basic[i] < (size_t)basic[leave]))) {
          theta = cand;
          theta_set = true;
          leave = (int)i;
        }
      }
      if (!theta_set) throw std::logic_error("cover lp: unbounded direction");

      // apply the step
      if (theta != 0) {
        for (size_t i = 0; i < r; ++i) {
          Rat g = sigma > 0 ? w[i] : -w[i];
          if (g != 0) xb[i] -= theta * g;
        }
      }
      if (leave < 0) {
        // bound flip of the entering variable
        stat[enter] = stat[enter] == kLower ? kUpper : kLower;
      } else {
        size_t lv = basic[leave];
        Rat glv = sigma > 0 ? w[leave] : -w[leave];
        stat[lv] = glv > 0 ? kLower : kUpper;
        if (is_artificial(lv)) stat[lv] = kLower;  // pinned at zero either way
        Rat enter_val = sigma > 0 ? theta : upper(enter) - theta;
        basic[leave] = (int)enter;
        stat[enter] = kBasic;
        xb[leave] = enter_val;
        // pivot binv on row `leave` with column w
        Rat piv = w[leave];
        if (piv == 0) throw std::logic_error("cover lp: zero pivot");
        for (size_t j = 0; j < r; ++j) binv[leave][j] /= piv;
        for (size_t i = 0; i < r; ++i) {
          if ((int)i == leave || w[i] == 0) continue;
          Rat f = w[i];
          for (size_t j = 0; j < r; ++j) binv[i][j] -= f * binv[leave][j];
        }
      }

      Rat z = objective(phase);
      if (z < best_z) { best_z = z; stall = 0; }
      else if (++stall > 3 * (long)(r + 5)) bland = true;
    }
  }
};

}  // namespace

std::optional<CoverResult> min_cover(size_t n, const std::vector<std::vector<size_t>>& rows) {
  // normalize rows: sorted unique valid indices
  std::vector<std::vector<size_t>> rs;
  rs.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<size_t> r;
    for (size_t j : row)
      if (j < n) r.push_back(j);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    if (r.empty()) return std::nullopt;
    rs.push_back(std::move(r));
  }
  CoverResult res;
  res.x.assign(n, Rat(0));
  res.value = Rat(0);
  if (rs.empty()) return res;

  size_t r = rs.size();
  // membership pattern per column; collapse duplicates
  std::vector<std::vector<int>> colrows(n);
  for (size_t i = 0; i < r; ++i)
    for (size_t j : rs[i]) colrows[j].push_back((int)i);
  std::map<std::vector<int>, std::vector<size_t>> groups;
  for (size_t j = 0; j < n; ++j)
    if (!colrows[j].empty()) groups[colrows[j]].push_back(j);

  Simplex sx;
  sx.np = groups.size();
  sx.r = r;
  sx.nv = sx.np + 2 * r;
  sx.pat.reserve(sx.np);
  sx.ub.reserve(sx.np);
  std::vector<const std::vector<size_t>*> members;
  for (const auto& [pattern, js] : groups) {
    sx.pat.push_back(pattern);
    sx.ub.push_back(Rat((long)js.size()));
    members.push_back(&js);
  }
  sx.stat.assign(sx.nv, kLower);
  sx.basic.resize(r);
  sx.xb.assign(r, Rat(1));
  sx.binv.assign(r, std::vector<Rat>(r, Rat(0)));
  for (size_t i = 0; i < r; ++i) {
    sx.basic[i] = (int)(sx.np + r + i);  // artificials
    sx.stat[sx.basic[i]] = kBasic;
    sx.binv[i][i] = Rat(1);
  }

  sx.optimize(1);
  if (sx.objective(1) != 0) throw std::logic_error("cover lp: phase 1 did not reach zero");
  sx.optimize(2);

  // extract class values
  std::vector<Rat> cls(sx.np, Rat(0));
  for (size_t v = 0; v < sx.np; ++v)
    if (sx.stat[v] == kUpper) cls[v] = sx.ub[v];
  for (size_t i = 0; i < r; ++i)
    if (sx.is_class(sx.basic[i])) cls[sx.basic[i]] = sx.xb[i];

  // distribute class mass over members, each member capped at 1
  for (size_t p = 0; p < sx.np; ++p) {
    Rat rem = cls[p];
    if (rem < 0) throw std::logic_error("cover lp: negative class value");
    for (size_t j : *members[p]) {
      if (rem <= 0) break;
      Rat take = rem < 1 ? rem : Rat(1);
      res.x[j] = take;
      rem -= take;
    }
    if (rem > 0) throw std::logic_error("cover lp: class value exceeds multiplicity");
    res.value += cls[p];
  }
  res.iterations = sx.iterations;
  res.patterns = (long)sx.np;

  // certification: primal feasibility ...
  for (size_t j = 0; j < n; ++j)
    if (res.x[j] < 0 || res.x[j] > 1) throw std::logic_error("cover lp: box violation");
  for (const auto& row : rs) {
    Rat s(0);
    for (size_t j : row) s += res.x[j];
    if (s < 1) throw std::logic_error("cover lp: uncovered row");
  }
  // ... and optimality via the exact dual bound. With final duals y >= 0 the
  // quantity sum(y) - sum_j u_j * max(0, (A^T y)_j - 1) lower-bounds every
  // feasible objective; at an optimal basis it equals the primal value.
  {
    std::vector<Rat> y(r, Rat(0));
    for (size_t i = 0; i < r; ++i) {
      Rat cb = sx.cost(sx.basic[i], 2);
      if (cb != 0)
        for (size_t j = 0; j < r; ++j) y[j] += cb * sx.binv[i][j];
    }
    Rat bound(0);
    for (size_t i = 0; i < r; ++i) {
      if (y[i] < 0) throw std::logic_error("cover lp: negative dual");
      bound += y[i];
    }
    for (size_t p = 0; p < sx.np; ++p) {
      Rat a(0);
      for (int i : sx.pat[p]) a += y[i];
      if (a > 1) bound -= sx.ub[p] * (a - 1);
    }
    if (bound != res.value) throw std::logic_error("cover lp: duality gap");
  }
  return res;
}

}  // namespace plancut
