#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "plancut/geom.hpp"

namespace plancut {

// Finite set of distinct lines with positive rational weights. Duplicate
// lines passed to the factories are merged, accumulating their weight.
struct WeightedLineSet {
  std::vector<Line> lines;
  std::vector<Rat> weights;
  Rat total = Rat(0);

  static WeightedLineSet uniform(const std::vector<Line>& ls);
  static WeightedLineSet weighted(const std::vector<Line>& ls, const std::vector<Rat>& ws);

  size_t size() const { return lines.size(); }
  bool empty() const { return lines.empty(); }
};

// Cell handle: dim 0 = vertex, 1 = edge, 2 = face; index into the matching
// array of the owning Arrangement.
struct FaceId {
  int dim = 2;
  int index = 0;
  auto operator<=>(const FaceId&) const = default;
};

// One cell of a vertical decomposition: the region between an optional floor
// and ceiling line over an x-interval. A missing side is unbounded.
struct Trapezoid {
  std::optional<Line> floor, ceiling;   // non-vertical supporting lines
  std::optional<Rat> left_x, right_x;
};

// Planar line arrangement with exact coordinates. Faces of every dimension
// are first-class: vertices, edges (segments, rays, or full lines), and
// two-dimensional faces, bounded or not. Built in one batch pass; immutable
// afterwards, so queries are safe to run concurrently.
struct Arrangement {
  struct Vertex {
    Point p;
    std::vector<int> on_lines;  // ascending indices of incident lines
  };
  // Maximal piece of a line between consecutive vertices on it. An end with
  // vertex id -1 extends to infinity.
  struct Edge {
    int line;
    int v_from = -1, v_to = -1;  // ordered by the line's direction parameter
    int f_left = -1, f_right = -1;
  };
  struct Face {
    std::vector<int> chain;        // boundary vertices in ccw order
    std::vector<int> chain_edges;  // boundary edges in ccw order
    bool bounded = false;
    // Outward directions of the two unbounded boundary rays (faces that have
    // vertices only).
    std::optional<Point> ray_in, ray_out;
    // Faces with no vertices (halfplanes, strips, or the whole plane): the
    // supporting line ids of their full-line boundary edges.
    std::vector<int> side_lines;
    Point rep;        // interior witness point
    std::string sig;  // sign of rep against every line: '-' or '+' per line
    size_t complexity = 0;  // number of boundary edges/rays
  };

  std::vector<Line> lines;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  // Acceleration structures (filled by build_arrangement).
  std::map<Point, int, PointLess> vertex_ids;
  std::unordered_map<std::string, int> face_of_sig;
  struct LineTrace {
    Point p0, dir;          // parametrization p(t) = p0 + t*dir
    std::vector<Rat> ts;    // parameters of the vertices on the line, ascending
    std::vector<int> vids;  // matching vertex ids
    std::vector<int> eids;  // the ts.size()+1 edges along the line, in order
  };
  std::vector<LineTrace> traces;

  size_t vertex_count() const { return vertices.size(); }
  size_t edge_count() const { return edges.size(); }
  size_t face_count() const { return faces.size(); }

  std::string sign_vector(const Point& p) const;
  // The unique cell (of any dimension) containing p.
  FaceId locate(const Point& p) const;
  Rat line_param(int line, const Point& p) const;
};

// Lines must be pairwise distinct (canonical form equality).
Arrangement build_arrangement(std::vector<Line> lines);

// Per-cell point tallies: for every cell that contains at least one point of
// any of the sets, the number of points of each set inside it.
std::map<FaceId, std::vector<long>> face_counts(const Arrangement& arr,
                                                const std::vector<std::vector<Point>>& sets);

struct FaceComplexityProfile {
  std::vector<size_t> c;  // complexity of every 2-face, descending
};
FaceComplexityProfile complexity_profile(const Arrangement& arr);

// Split one 2-face into vertical trapezoids (walls at the x-coordinates of
// its vertices). Bounded faces yield at most max(1, complexity-1) cells;
// unbounded faces straddling the vertical direction may need one more.
std::vector<Trapezoid> vertical_decompose(const Arrangement& arr, int face_index);

// Total weight of the lines meeting the region. Polygon/Trapezoid overloads
// use closed containment; the face-id overload asks for the open cell
// (supporting lines of the cell's boundary do not cross it).
Rat crossing_weight(const Polygon& region, const WeightedLineSet& W);
Rat crossing_weight(const Trapezoid& region, const WeightedLineSet& W);
Rat crossing_weight(const Arrangement& arr, FaceId cell, const WeightedLineSet& W);

// Like the Trapezoid overload but counts only lines meeting the open
// interior (boundary-supporting lines excluded).
Rat crossing_weight_open(const Trapezoid& region, const WeightedLineSet& W);

// True iff the line meets the open 2-face. A line supporting part of the
// face's boundary -- in particular any line of the arrangement itself --
// never crosses.
bool line_crosses_face(const Arrangement& arr, int face_index, const Line& l);

}  // namespace plancut
