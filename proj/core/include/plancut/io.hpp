#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plancut/cutting.hpp"
#include "plancut/guarding.hpp"
#include "plancut/instance.hpp"
#include "plancut/reduction.hpp"

namespace plancut {

// Structured-text formats with exact integer-pair rationals (no floats on
// disk). Parsing is strict: unknown keys, non-integer numbers, and malformed
// shapes raise std::invalid_argument with a one-line message.
//
// Instance file:
//   { "sets": [ { "points": [[x, y] | [x_num, x_den, y_num, y_den], ...],
//                 "fraction": [num, den] }, ... ],
//     "meta": { "seed"?: uint, "name"?: string } }
//
// Result file (one of "lines" / "guards" chooses the problem):
//   { "lines": [[[a_n,a_d],[b_n,b_d],[c_n,c_d]], ...] | "guards": [points],
//     "stats": {...}, "shear": [num, den], "valid": bool }
// Lines and guards are reported in pre-shear input coordinates; "shear"
// records the frame the solver worked in. Validity is recomputed on load by
// consumers; the stored flag is informational.

struct InstanceMeta {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> name;
};

struct InstanceDoc {
  Instance instance;
  InstanceMeta meta;
};

InstanceDoc parse_instance(const std::string& text);
std::string write_instance(const Instance& inst, const InstanceMeta& meta = {});

enum class ResultKind { Halving, Guarding };

struct ResultDoc {
  ResultKind kind = ResultKind::Halving;
  std::vector<Line> lines;
  std::vector<Point> guards;
  Rat shear = Rat(0);
  bool valid = false;
};

ResultDoc parse_result(const std::string& text);
std::string write_halving_result(const std::vector<Line>& lines, const ReductionStats& stats,
                                 const Rat& shear, bool valid);
std::string write_guarding_result(const std::vector<Point>& guards, const GuardStats& stats,
                                  const Rat& shear, bool valid);

// Line-set input: a bare { "lines": [...] } document; the keys of result and
// cutting files are tolerated, so their line sets load directly.
std::vector<Line> parse_lines(const std::string& text);

// Cutting output: { "lines": [...], "stats": {...}, "valid": bool }.
std::string write_cutting_result(const Cutting& cut, const CutCheck& check, const Rat& eps);

// Pure side output: instance points colored per set, solution lines clipped
// to the 1.2x-scaled instance bounding box, guards as cross markers.
// Rendered with doubles; never feeds back into any computation.
std::string svg_figure(const Instance& inst, const std::vector<Line>& lines,
                       const std::vector<Point>& guards);

}  // namespace plancut
