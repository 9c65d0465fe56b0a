#include "plancut/io.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace plancut {

namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

long to_ll(const Int& v, const char* what) {
  if (!v.fits_slong_p()) fail(std::string(what) + " does not fit a 64-bit integer");
  return v.get_si();
}

long int_at(const ojson& arr, size_t i, const char* where) {
  const ojson& el = arr[i];
  if (!el.is_number_integer() && !el.is_number_unsigned())
    fail(std::string(where) + ": expected an integer");
  return el.get<long>();
}

void expect_keys(const ojson& obj, std::initializer_list<const char*> allowed,
                 const char* where) {
  if (!obj.is_object()) fail(std::string(where) + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) fail(std::string(where) + ": unknown key \"" + key + "\"");
  }
}

Rat parse_rat_pair(const ojson& arr, const char* where) {
  if (!arr.is_array() || arr.size() != 2) fail(std::string(where) + ": expected [num, den]");
  long num = int_at(arr, 0, where), den = int_at(arr, 1, where);
  if (den == 0) fail(std::string(where) + ": zero denominator");
  return rat(num, den);
}

Point parse_point(const ojson& arr, const char* where) {
  if (!arr.is_array() || (arr.size() != 2 && arr.size() != 4))
    fail(std::string(where) + ": expected [x, y] or [x_num, x_den, y_num, y_den]");
  if (arr.size() == 2)
    return Point{Rat(int_at(arr, 0, where)), Rat(int_at(arr, 1, where))};
  long xd = int_at(arr, 1, where), yd = int_at(arr, 3, where);
  if (xd == 0 || yd == 0) fail(std::string(where) + ": zero denominator");
  return Point{rat(int_at(arr, 0, where), xd), rat(int_at(arr, 2, where), yd)};
}

ojson rat_json(const Rat& r) {
  return ojson::array({to_ll(r.get_num(), "numerator"), to_ll(r.get_den(), "denominator")});
}

ojson point_json(const Point& p) {
  if (p.x.get_den() == 1 && p.y.get_den() == 1)
    return ojson::array({to_ll(p.x.get_num(), "x"), to_ll(p.y.get_num(), "y")});
  return ojson::array({to_ll(p.x.get_num(), "x"), to_ll(p.x.get_den(), "x"),
                       to_ll(p.y.get_num(), "y"), to_ll(p.y.get_den(), "y")});
}

ojson line_json(const Line& l) {
  ojson out = ojson::array();
  for (const Int* v : {&l.a, &l.b, &l.c})
    out.push_back(ojson::array({to_ll(*v, "line coefficient"), 1}));
  return out;
}

Line parse_line(const ojson& arr, const char* where) {
  if (!arr.is_array() || arr.size() != 3)
    fail(std::string(where) + ": expected [[a_n,a_d],[b_n,b_d],[c_n,c_d]]");
  Rat a = parse_rat_pair(arr[0], where);
  Rat b = parse_rat_pair(arr[1], where);
  Rat c = parse_rat_pair(arr[2], where);
  if (sign(a) == 0 && sign(b) == 0) fail(std::string(where) + ": degenerate line (a = b = 0)");
  return Line(a, b, c);
}

ojson parse_top(const std::string& text, const char* what) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::exception& e) {
    std::string msg = e.what();
    for (char& ch : msg)
      if (ch == '\n') ch = ' ';
    fail(std::string(what) + ": " + msg);
  }
  if (!doc.is_object()) fail(std::string(what) + ": expected a top-level object");
  return doc;
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

std::vector<Line> parse_lines_array(const ojson& arr, const char* where) {
  if (!arr.is_array()) fail(std::string(where) + ": expected an array of lines");
  std::vector<Line> out;
  for (const ojson& el : arr) out.push_back(parse_line(el, where));
  return out;
}

}  // namespace

InstanceDoc parse_instance(const std::string& text) {
  ojson doc = parse_top(text, "instance");
  expect_keys(doc, {"sets", "meta"}, "instance");
  if (!doc.contains("sets") || !doc["sets"].is_array() || doc["sets"].empty())
    fail("instance: needs a nonempty \"sets\" array");
  std::vector<PointSet> sets;
  for (const ojson& s : doc["sets"]) {
    expect_keys(s, {"points", "fraction"}, "set");
    if (!s.contains("points") || !s["points"].is_array() || s["points"].empty())
      fail("set: needs a nonempty \"points\" array");
    if (!s.contains("fraction")) fail("set: needs a \"fraction\" [num, den]");
    PointSet ps;
    ps.fraction = parse_rat_pair(s["fraction"], "fraction");
    for (const ojson& p : s["points"]) ps.points.push_back(parse_point(p, "point"));
    sets.push_back(std::move(ps));
  }
  InstanceDoc out{Instance::of(std::move(sets)), {}};
  if (doc.contains("meta")) {
    const ojson& meta = doc["meta"];
    expect_keys(meta, {"seed", "name"}, "meta");
    if (meta.contains("seed")) {
      if (!meta["seed"].is_number_unsigned() && !meta["seed"].is_number_integer())
        fail("meta: \"seed\" must be a nonnegative integer");
      long long s = meta["seed"].get<long long>();
      if (s < 0) fail("meta: \"seed\" must be a nonnegative integer");
      out.meta.seed = (std::uint64_t)s;
    }
    if (meta.contains("name")) {
      if (!meta["name"].is_string()) fail("meta: \"name\" must be a string");
      out.meta.name = meta["name"].get<std::string>();
    }
  }
  return out;
}

std::string write_instance(const Instance& inst, const InstanceMeta& meta) {
  ojson doc;
  doc["sets"] = ojson::array();
  for (const PointSet& ps : inst.sets) {
    ojson s;
    s["points"] = ojson::array();
    for (const Point& p : ps.points) s["points"].push_back(point_json(p));
    s["fraction"] = rat_json(ps.fraction);
    doc["sets"].push_back(std::move(s));
  }
  if (meta.seed || meta.name) {
    ojson m = ojson::object();
    if (meta.seed) m["seed"] = *meta.seed;
    if (meta.name) m["name"] = *meta.name;
    doc["meta"] = std::move(m);
  }
  return dump(doc);
}

ResultDoc parse_result(const std::string& text) {
  ojson doc = parse_top(text, "result");
  expect_keys(doc, {"lines", "guards", "stats", "shear", "valid"}, "result");
  bool has_lines = doc.contains("lines"), has_guards = doc.contains("guards");
  if (has_lines == has_guards)
    fail("result: needs exactly one of \"lines\" or \"guards\"");
  ResultDoc out;
  if (has_lines) {
    out.kind = ResultKind::Halving;
    out.lines = parse_lines_array(doc["lines"], "result line");
  } else {
    out.kind = ResultKind::Guarding;
    if (!doc["guards"].is_array()) fail("result: \"guards\" must be an array");
    for (const ojson& g : doc["guards"]) out.guards.push_back(parse_point(g, "guard"));
  }
  if (!doc.contains("shear")) fail("result: needs a \"shear\" [num, den]");
  out.shear = parse_rat_pair(doc["shear"], "shear");
  if (!doc.contains("valid") || !doc["valid"].is_boolean())
    fail("result: needs a boolean \"valid\"");
  out.valid = doc["valid"].get<bool>();
  return out;
}

std::string write_halving_result(const std::vector<Line>& lines, const ReductionStats& stats,
                                 const Rat& shear, bool valid) {
  ojson doc;
  doc["lines"] = ojson::array();
  for (const Line& l : lines) doc["lines"].push_back(line_json(l));
  ojson st;
  st["t_used"] = stats.t_used;
  st["t_lower"] = stats.t_lower;
  st["lp_solves"] = stats.lp_solves;
  st["lp_iterations"] = stats.lp_iterations;
  st["rounding_attempts"] = stats.rounding_attempts;
  st["candidate_count"] = stats.candidate_count;
  st["resamples"] = stats.resamples;
  st["cutting_sizes"] = stats.cutting_sizes;
  doc["stats"] = std::move(st);
  doc["shear"] = rat_json(shear);
  doc["valid"] = valid;
  return dump(doc);
}

std::string write_guarding_result(const std::vector<Point>& guards, const GuardStats& stats,
                                  const Rat& shear, bool valid) {
  ojson doc;
  doc["guards"] = ojson::array();
  for (const Point& g : guards) doc["guards"].push_back(point_json(g));
  ojson st;
  st["t_used"] = stats.t_used;
  st["t_lower"] = stats.t_lower;
  st["lp_solves"] = stats.lp_solves;
  st["lp_iterations"] = stats.lp_iterations;
  st["dp_calls"] = stats.dp_calls;
  st["rounding_attempts"] = stats.rounding_attempts;
  st["candidate_count"] = stats.candidate_count;
  st["size_bound_guaranteed"] = stats.size_bound_guaranteed;
  st["fallback_all_points"] = stats.fallback_all_points;
  doc["stats"] = std::move(st);
  doc["shear"] = rat_json(shear);
  doc["valid"] = valid;
  return dump(doc);
}

std::vector<Line> parse_lines(const std::string& text) {
  ojson doc = parse_top(text, "lines");
  expect_keys(doc, {"lines", "stats", "shear", "valid"}, "lines");
  if (!doc.contains("lines")) fail("lines: needs a \"lines\" array");
  return parse_lines_array(doc["lines"], "line");
}

std::string write_cutting_result(const Cutting& cut, const CutCheck& check, const Rat& eps) {
  ojson doc;
  doc["lines"] = ojson::array();
  for (const Line& l : cut.lines) doc["lines"].push_back(line_json(l));
  ojson st;
  st["eps"] = rat_json(eps);
  st["size"] = cut.lines.size();
  st["sample_size"] = cut.stats.sample_size;
  st["refinement_lines"] = cut.stats.refinement_lines;
  st["faces_refined"] = cut.stats.faces_refined;
  st["attempts"] = cut.stats.attempts;
  st["worst_weight"] = rat_json(check.worst_weight);
  doc["stats"] = std::move(st);
  doc["valid"] = check.valid;
  return dump(doc);
}

std::string svg_figure(const Instance& inst, const std::vector<Line>& lines,
                       const std::vector<Point>& guards) {
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  auto grow = [&](const Point& p) {
    double x = to_double(p.x), y = to_double(p.y);
    if (first) {
      minx = maxx = x;
      miny = maxy = y;
      first = false;
    } else {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  };
  for (const PointSet& ps : inst.sets)
    for (const Point& p : ps.points) grow(p);
  for (const Point& g : guards) grow(g);
  double cx = (minx + maxx) / 2, cy = (miny + maxy) / 2;
  double hw = std::max({(maxx - minx) / 2, (maxy - miny) / 2, 1.0}) * 1.2;
  double x0 = cx - hw, y0 = cy - hw, w = 2 * hw;
  double stroke = w / 300, r = w / 120;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << " " << -(y0 + w) << " "
      << w << " " << w << "\" width=\"800\" height=\"800\">\n";
  svg << "<g transform=\"scale(1,-1)\">\n";
  svg << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << w << "\" height=\"" << w
      << "\" fill=\"white\"/>\n";
  for (const Line& l : lines) {
    // endpoints across the dominant axis of the padded box
    double a = to_double(Rat(l.a)), b = to_double(Rat(l.b)), c = to_double(Rat(l.c));
    double px0, py0, px1, py1;
    if (std::abs(b) >= std::abs(a)) {
      px0 = x0;
      px1 = x0 + w;
      py0 = (c - a * px0) / b;
      py1 = (c - a * px1) / b;
    } else {
      py0 = y0;
      py1 = y0 + w;
      px0 = (c - b * py0) / a;
      px1 = (c - b * py1) / a;
    }
    svg << "<line x1=\"" << px0 << "\" y1=\"" << py0 << "\" x2=\"" << px1 << "\" y2=\"" << py1
        << "\" stroke=\"#555\" stroke-width=\"" << stroke << "\"/>\n";
  }
  const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  for (size_t i = 0; i < inst.sets.size(); ++i)
    for (const Point& p : inst.sets[i].points)
      svg << "<circle cx=\"" << to_double(p.x) << "\" cy=\"" << to_double(p.y) << "\" r=\"" << r
          << "\" fill=\"" << palette[i % 6] << "\"/>\n";
  for (const Point& g : guards) {
    double gx = to_double(g.x), gy = to_double(g.y);
    svg << "<path d=\"M " << gx - r << " " << gy - r << " L " << gx + r << " " << gy + r << " M "
        << gx - r << " " << gy + r << " L " << gx + r << " " << gy - r
        << "\" stroke=\"black\" stroke-width=\"" << stroke * 1.5 << "\" fill=\"none\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace plancut
