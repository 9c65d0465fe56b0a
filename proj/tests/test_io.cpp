#include <doctest.h>

#include "plancut/io.hpp"
#include "plancut/oracle.hpp"

using namespace plancut;

namespace {

Point pt(long x, long y) { return Point{Rat(x), Rat(y)}; }

bool same_instance(const Instance& a, const Instance& b) {
  if (a.sets.size() != b.sets.size()) return false;
  for (size_t i = 0; i < a.sets.size(); ++i) {
    if (a.sets[i].fraction != b.sets[i].fraction) return false;
    if (a.sets[i].points.size() != b.sets[i].points.size()) return false;
    for (size_t j = 0; j < a.sets[i].points.size(); ++j)
      if (point_cmp(a.sets[i].points[j], b.sets[i].points[j]) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("instance round-trip is exact and byte-stable") {
  Instance inst = Instance::of({
      PointSet{{pt(0, 0), pt(3, 1), pt(-2, 5)}, rat(1, 2)},
      PointSet{{Point{rat(1, 3), rat(-7, 2)}, pt(4, 4)}, rat(2, 3)},
  });
  InstanceMeta meta;
  meta.seed = 42;
  meta.name = "mixed";
  std::string text = write_instance(inst, meta);
  InstanceDoc back = parse_instance(text);
  CHECK(same_instance(back.instance, inst));
  REQUIRE(back.meta.seed.has_value());
  CHECK(*back.meta.seed == 42);
  REQUIRE(back.meta.name.has_value());
  CHECK(*back.meta.name == "mixed");
  CHECK(write_instance(back.instance, back.meta) == text);

  // no meta -> no meta key, still parses
  std::string bare = write_instance(inst);
  CHECK(bare.find("meta") == std::string::npos);
  CHECK(same_instance(parse_instance(bare).instance, inst));
  CHECK(!parse_instance(bare).meta.seed.has_value());
}

TEST_CASE("generated instances survive the file format") {
  for (GenKind kind :
       {GenKind::Grid, GenKind::ConvexPosition, GenKind::Parabola, GenKind::UniformRandom}) {
    Instance inst = Instance::of({PointSet{gen_instance({kind, 12, 9, 50}), rat(1, 3)}});
    InstanceDoc back = parse_instance(write_instance(inst));
    CHECK(same_instance(back.instance, inst));
  }
}

TEST_CASE("point forms: two-entry integers, four-entry rationals") {
  InstanceDoc doc = parse_instance(R"({
    "sets": [{"points": [[2, -3], [1, 2, -3, 4]], "fraction": [1, 1]}]
  })");
  REQUIRE(doc.instance.sets.size() == 1);
  const auto& ps = doc.instance.sets[0].points;
  REQUIRE(ps.size() == 2);
  // sorted lex: (1/2, -3/4) before (2, -3)
  CHECK(ps[0].x == rat(1, 2));
  CHECK(ps[0].y == rat(-3, 4));
  CHECK(ps[1].x == Rat(2));
  CHECK(ps[1].y == Rat(-3));
  // integer points are re-emitted in the short form
  std::string text = write_instance(doc.instance);
  CHECK(text.find("[\n          2,\n          -3\n        ]") != std::string::npos);
}

TEST_CASE("strict instance parsing rejects malformed documents") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(parse_instance(text), std::invalid_argument);
  };
  bad("not json at all");
  bad("[1, 2]");                                                      // top level not an object
  bad("{}");                                                          // no sets
  bad(R"({"sets": []})");                                             // empty sets
  bad(R"({"sets": [{"points": [], "fraction": [1, 1]}]})");           // empty points
  bad(R"({"sets": [{"points": [[0, 0]]}]})");                         // missing fraction
  bad(R"({"sets": [{"points": [[0, 0]], "fraction": [0, 1]}]})");     // fraction 0
  bad(R"({"sets": [{"points": [[0, 0]], "fraction": [3, 2]}]})");     // fraction > 1
  bad(R"({"sets": [{"points": [[0, 0]], "fraction": [1, 0]}]})");     // zero denominator
  bad(R"({"sets": [{"points": [[0.5, 0]], "fraction": [1, 1]}]})");   // float coordinate
  bad(R"({"sets": [{"points": [[0, 0, 1]], "fraction": [1, 1]}]})");  // 3-entry point
  bad(R"({"sets": [{"points": [[0, 0]], "fraction": [1, 1], "color": 1}]})");  // unknown key
  bad(R"({"sets": [{"points": [[0, 0]], "fraction": [1, 1]}], "extra": 0})");  // unknown key
  bad(R"({"sets": [{"points": [[0, 0]], "fraction": [1, 1]}], "meta": {"x": 1}})");
  bad(R"({"sets": [{"points": [[0, 0]], "fraction": [1, 1]}], "meta": {"seed": -1}})");
  bad(R"({"sets": [{"points": [[0, 0]], "fraction": [1, 1]}], "meta": {"name": 7}})");
}

TEST_CASE("halving result round-trip") {
  std::vector<Line> lines = {Line::through(pt(0, 0), pt(1, 3)), Line::vertical(Rat(2))};
  ReductionStats stats;
  stats.t_used = 2;
  stats.t_lower = 1;
  stats.lp_solves = 5;
  stats.cutting_sizes = {3, 2};
  std::string text = write_halving_result(lines, stats, rat(1, 8), true);
  ResultDoc doc = parse_result(text);
  CHECK(doc.kind == ResultKind::Halving);
  REQUIRE(doc.lines.size() == 2);
  CHECK(line_cmp(doc.lines[0], lines[0]) == 0);
  CHECK(line_cmp(doc.lines[1], lines[1]) == 0);
  CHECK(doc.shear == rat(1, 8));
  CHECK(doc.valid);
  CHECK(doc.guards.empty());
}

TEST_CASE("guarding result round-trip") {
  std::vector<Point> guards = {pt(1, 1), Point{rat(5, 3), rat(-1, 2)}};
  GuardStats stats;
  stats.t_used = 1;
  std::string text = write_guarding_result(guards, stats, Rat(0), false);
  ResultDoc doc = parse_result(text);
  CHECK(doc.kind == ResultKind::Guarding);
  REQUIRE(doc.guards.size() == 2);
  CHECK(point_cmp(doc.guards[0], guards[0]) == 0);
  CHECK(point_cmp(doc.guards[1], guards[1]) == 0);
  CHECK(doc.shear == Rat(0));
  CHECK(!doc.valid);
  CHECK(doc.lines.empty());
}

TEST_CASE("lines parse through canonicalization") {
  // 4/2 x + 8/2 y = 12/2 canonicalizes to x + 2y = 3
  std::vector<Line> ls = parse_lines(R"({"lines": [[[4, 2], [8, 2], [12, 2]]]})");
  REQUIRE(ls.size() == 1);
  CHECK(ls[0].a == 1);
  CHECK(ls[0].b == 2);
  CHECK(ls[0].c == 3);
}

TEST_CASE("strict result parsing rejects malformed documents") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(parse_result(text), std::invalid_argument);
  };
  bad(R"({"stats": {}, "shear": [0, 1], "valid": true})");  // neither lines nor guards
  bad(R"({"lines": [], "guards": [], "shear": [0, 1], "valid": true})");  // both
  bad(R"({"lines": [], "valid": true})");                                 // missing shear
  bad(R"({"lines": [], "shear": [0, 1]})");                               // missing valid
  bad(R"({"lines": [], "shear": [0, 1], "valid": 1})");          // valid not boolean
  bad(R"({"lines": [], "shear": [0, 1], "valid": true, "x": 0})");        // unknown key
  bad(R"({"lines": [[[0, 1], [0, 1], [1, 1]]], "shear": [0, 1], "valid": true})");  // a=b=0
  bad(R"({"lines": [[[1, 0], [1, 1], [1, 1]]], "shear": [0, 1], "valid": true})");  // den 0
}

TEST_CASE("parse_lines accepts bare, result, and cutting documents") {
  CHECK(parse_lines(R"({"lines": []})").empty());
  std::vector<Line> ls = {Line::through(pt(0, 0), pt(1, 1))};
  ReductionStats stats;
  CHECK(parse_lines(write_halving_result(ls, stats, Rat(0), true)).size() == 1);

  WeightedLineSet L = WeightedLineSet::uniform(
      {Line::through(pt(0, 0), pt(1, 1)), Line::through(pt(0, 1), pt(1, 0)),
       Line::through(pt(0, 3), pt(2, 0)), Line::through(pt(-1, 0), pt(0, 2))});
  Cutting cut = simple_weak_cutting(L, rat(1, 2), 7);
  CutCheck check = verify_cutting(L, cut, rat(1, 2));
  CHECK(check.valid);
  std::string text = write_cutting_result(cut, check, rat(1, 2));
  CHECK(parse_lines(text).size() == cut.lines.size());
  CHECK_THROWS_AS(parse_lines(R"({"guards": []})"), std::invalid_argument);
}

TEST_CASE("svg figure smoke") {
  Instance inst = Instance::of({
      PointSet{{pt(0, 0), pt(4, 0), pt(2, 3)}, Rat(1)},
      PointSet{{pt(1, 1), pt(3, 1)}, rat(1, 2)},
  });
  std::vector<Line> lines = {Line::through(pt(0, 2), pt(4, 1)), Line::vertical(Rat(2))};
  std::vector<Point> guards = {pt(2, 1)};
  std::string svg = svg_figure(inst, lines, guards);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  size_t circles = 0;
  for (size_t at = svg.find("<circle"); at != std::string::npos;
       at = svg.find("<circle", at + 1))
    ++circles;
  CHECK(circles == 5);
  CHECK(svg.find("<path") != std::string::npos);   // guard marker
  CHECK(svg.find("<line") != std::string::npos);   // solution lines
  // degenerate inputs stay well-formed
  CHECK(svg_figure(inst, {}, {}).rfind("<svg", 0) == 0);
}
