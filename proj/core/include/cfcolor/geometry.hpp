#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "cfcolor/graph.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfc {

struct Point {
  int x = 0;
  int y = 0;
  bool operator==(const Point&) const = default;
};

struct RawPoint {
  double x = 0;
  double y = 0;
};

/// n points on the n x n grid whose x- and y-coordinates are each a
/// permutation of 1..n. Vertex v of every derived hypergraph is points()[v].
class PointSet {
 public:
  PointSet() = default;
  /// Throws InputError unless both coordinate columns are permutations of 1..n.
  explicit PointSet(std::vector<Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](Vertex v) const { return points_[static_cast<std::size_t>(v)]; }
  const std::vector<Point>& points() const { return points_; }

  bool operator==(const PointSet&) const = default;

 private:
  std::vector<Point> points_;
};

/// Replaces each coordinate by its 1-based rank. Ties on one axis are broken
/// by the other coordinate, then by input index. Throws InputError on
/// duplicate points.
PointSet rank_normalize(std::span<const RawPoint> raw);

/// Closed axis-parallel rectangle. Boundaries are stored doubled so that the
/// half-integer grid (k + 1/2) is exact: a boundary at k + 1/2 is 2k + 1.
struct Rect {
  std::int64_t x_lo2 = 0;
  std::int64_t x_hi2 = 0;
  std::int64_t y_lo2 = 0;
  std::int64_t y_hi2 = 0;

  /// Rectangle [x_lo - 1/2, x_hi + 1/2] x [y_lo - 1/2, y_hi + 1/2].
  static Rect around_cells(int x_lo, int x_hi, int y_lo, int y_hi);

  bool contains(Point p) const;
  bool contains(const Rect& other) const;
  std::int64_t width2() const { return x_hi2 - x_lo2; }
  std::int64_t height2() const { return y_hi2 - y_lo2; }
  bool operator==(const Rect&) const = default;
};

/// Closed disc with exact rational centre and squared radius.
struct Disc {
  boost::rational<std::int64_t> cx;
  boost::rational<std::int64_t> cy;
  boost::rational<std::int64_t> radius2;

  bool contains(Point p) const;
};

/// Where a point of S sits on the bounding rectangle of S.
enum class Location {
  Interior,
  LeftEdge,
  RightEdge,
  BottomEdge,
  TopEdge,
  BottomLeft,
  BottomRight,
  TopLeft,
  TopRight,
};

/// r(S): the closed rectangle [min x, max x] x [min y, max y] of S.
Rect min_bounding_rect(std::span<const Point> points, std::span<const Vertex> subset);
Rect min_bounding_rect(const PointSet& points, std::span<const Vertex> subset);

/// Location of `p` relative to `box`; `p` must lie in `box`. A degenerate
/// box (single point) reports BottomLeft.
Location locate(const Rect& box, Point p);

/// ceil(log2 n) for n >= 1; ratio classes range over [-bound, bound].
int ratio_class_bound(int n);

/// Two rectangles of one ratio class 2^i, both inside r, whose union is r.
struct RatioCover {
  int ratio_class = 0;
  Rect first;
  Rect second;
};
RatioCover cover_by_ratio_pair(const Rect& r);

/// All contiguous runs {a..b} of n points on a line.
Hypergraph interval_hypergraph(int n);

/// Distinct nonempty traces of closed axis-parallel rectangles. Works for
/// any point list with pairwise distinct x and pairwise distinct y.
Hypergraph rectangle_hypergraph(std::span<const Point> points);
Hypergraph rectangle_hypergraph(const PointSet& points);

/// Distinct nonempty traces of closed discs.
Hypergraph disc_hypergraph(std::span<const Point> points);
Hypergraph disc_hypergraph(const PointSet& points);

/// Minimum of |d ∩ P| over rectangles d of width-to-height ratio exactly
/// 2^ratio_class that contain points p and q. Requires p != q and pairwise
/// distinct coordinates on each axis.
int min_points_ratio_rect(std::span<const Point> points, Vertex p, Vertex q, int ratio_class);
int min_points_ratio_rect(const PointSet& points, Vertex p, Vertex q, int ratio_class);

/// Edge {p, q} iff some ratio class i with |i| <= class_bound admits a
/// rectangle of that class holding p, q and at most t + 1 points.
Graph ratio_graph(std::span<const Point> points, int t, int class_bound);
/// ratio_graph over the classes -ceil(log2 n)..ceil(log2 n).
Graph build_G(const PointSet& points, int t);

/// Lower estimate of the hereditary linear Delaunay parameter: the maximum
/// of |E(Del(H[V']))| / |V'| over every V' with |V'| <= 6, the full vertex
/// set, and `sample_budget` random subsets drawn from `seed`.
boost::rational<std::int64_t> hld_parameter(const Hypergraph& h, int sample_budget,
                                            std::uint64_t seed = 0);

}  // namespace cfc
