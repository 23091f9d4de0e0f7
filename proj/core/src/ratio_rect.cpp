// Ratio-class rectangles: rectangles whose width is exactly 2^i times their
// height. For a pair p, q the smallest such rectangle containing both has
// height H0 = max(dy, dx / 2^i); any larger one contains a copy of scale H0
// that still holds p and q, so the minimum point count is attained at H0.
// At that scale the count only changes when a boundary crosses a point, and
// sliding a window left until its left side meets a point (or the feasible
// limit) never adds points, so the left edges worth trying are the feasible
// limit itself and "just right of" each point in the feasible range.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>

#include "cfcolor/errors.hpp"
#include "cfcolor/geometry.hpp"

namespace cfc {

namespace {

// Inclusive range of original integer coordinates.
struct Range {
  std::int64_t lo;
  std::int64_t hi;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// 2D dominance counts over the coordinate box [0, max_x] x [0, max_y].
class PrefixCounts {
 public:
  explicit PrefixCounts(std::span<const Point> points) {
    for (const auto& p : points) {
      max_x_ = std::max<std::int64_t>(max_x_, p.x);
      max_y_ = std::max<std::int64_t>(max_y_, p.y);
    }
    stride_ = static_cast<std::size_t>(max_y_ + 2);
    table_.assign(static_cast<std::size_t>(max_x_ + 2) * stride_, 0);
    for (const auto& p : points) ++at(p.x + 1, p.y + 1);
    for (std::int64_t x = 1; x <= max_x_ + 1; ++x)
      for (std::int64_t y = 1; y <= max_y_ + 1; ++y)
        at(x, y) += at(x - 1, y) + at(x, y - 1) - at(x - 1, y - 1);
  }

  int count(Range xs, Range ys) const {
    const std::int64_t x0 = std::max<std::int64_t>(xs.lo, 0), x1 = std::min(xs.hi, max_x_);
    const std::int64_t y0 = std::max<std::int64_t>(ys.lo, 0), y1 = std::min(ys.hi, max_y_);
    if (x0 > x1 || y0 > y1) return 0;
    return get(x1 + 1, y1 + 1) - get(x0, y1 + 1) - get(x1 + 1, y0) + get(x0, y0);
  }

 private:
  int& at(std::int64_t x, std::int64_t y) {
    return table_[static_cast<std::size_t>(x) * stride_ + static_cast<std::size_t>(y)];
  }
  int get(std::int64_t x, std::int64_t y) const {
    return table_[static_cast<std::size_t>(x) * stride_ + static_cast<std::size_t>(y)];
  }

  std::int64_t max_x_ = 0;
  std::int64_t max_y_ = 0;
  std::size_t stride_ = 1;
  std::vector<int> table_;
};

// Candidate windows along one axis for a span [lo, hi] of the pair in
// coordinates scaled by `scale`, window length `length` (scaled).
void axis_windows(std::span<const Point> points, bool use_x, std::int64_t lo, std::int64_t hi,
                  std::int64_t length, std::int64_t scale, std::vector<Range>& out) {
  out.clear();
  const std::int64_t start = hi - length;  // leftmost feasible left edge
  // Closed window [start, start + length] = [start, hi].
  out.push_back({ceil_div(start, scale), floor_div(hi, scale)});
  for (const auto& p : points) {
    const std::int64_t c = std::int64_t{use_x ? p.x : p.y} * scale;
    if (c < start || c >= lo) continue;
    // Half-open window (c, c + length].
    out.push_back({floor_div(c, scale) + 1, floor_div(c + length, scale)});
  }
}

struct PairGeometry {
  std::int64_t scale;
  std::int64_t x_lo, x_hi, y_lo, y_hi;  // scaled pair span
  std::int64_t width, height;           // scaled minimal window
};

PairGeometry pair_geometry(const Point& a, const Point& b, int ratio_class) {
  const int k = std::abs(ratio_class);
  if (k > 40) throw ArgumentError("ratio class out of range");
  const std::int64_t scale = std::int64_t{1} << k;
  PairGeometry g{};
  g.scale = scale;
  g.x_lo = std::int64_t{std::min(a.x, b.x)} * scale;
  g.x_hi = std::int64_t{std::max(a.x, b.x)} * scale;
  g.y_lo = std::int64_t{std::min(a.y, b.y)} * scale;
  g.y_hi = std::int64_t{std::max(a.y, b.y)} * scale;
  const std::int64_t dx = std::abs(a.x - b.x);
  const std::int64_t dy = std::abs(a.y - b.y);
  if (ratio_class >= 0) {
    // width = 2^k * height
    g.height = std::max(dy * scale, dx);
    g.width = g.height * scale;
  } else {
    // height = 2^k * width
    g.width = std::max(dx * scale, dy);
    g.height = g.width * scale;
  }
  return g;
}

// Minimum count over the minimal-scale windows; stops early once a count
// <= stop_at is seen.
int min_count(std::span<const Point> points, const PrefixCounts& prefix, const Point& a,
              const Point& b, int ratio_class, int stop_at, std::vector<Range>& xs,
              std::vector<Range>& ys) {
  const PairGeometry g = pair_geometry(a, b, ratio_class);
  axis_windows(points, true, g.x_lo, g.x_hi, g.width, g.scale, xs);
  axis_windows(points, false, g.y_lo, g.y_hi, g.height, g.scale, ys);
  int best = std::numeric_limits<int>::max();
  for (const auto& xr : xs) {
    for (const auto& yr : ys) {
      best = std::min(best, prefix.count(xr, yr));
      if (best <= stop_at) return best;
    }
  }
  return best;
}

void check_pair(std::span<const Point> points, Vertex p, Vertex q) {
  const auto n = static_cast<Vertex>(points.size());
  if (p < 0 || q < 0 || p >= n || q >= n) throw ArgumentError("vertex out of range");
  if (p == q) throw ArgumentError("min_points_ratio_rect needs two distinct points");
}

}  // namespace

int min_points_ratio_rect(std::span<const Point> points, Vertex p, Vertex q, int ratio_class) {
  check_pair(points, p, q);
  PrefixCounts prefix(points);
  std::vector<Range> xs, ys;
  return min_count(points, prefix, points[static_cast<std::size_t>(p)],
                   points[static_cast<std::size_t>(q)], ratio_class, 0, xs, ys);
}

int min_points_ratio_rect(const PointSet& points, Vertex p, Vertex q, int ratio_class) {
  if (std::abs(ratio_class) > ratio_class_bound(points.size())) {
    throw ArgumentError("ratio class outside -ceil(log2 n)..ceil(log2 n)");
  }
  return min_points_ratio_rect(std::span<const Point>(points.points()), p, q, ratio_class);
}

Graph ratio_graph(std::span<const Point> points, int t, int class_bound) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  const int n = static_cast<int>(points.size());
  PrefixCounts prefix(points);
  std::vector<Range> xs, ys;
  std::vector<Graph::Edge> edges;
  for (Vertex p = 0; p < n; ++p) {
    const Point& a = points[static_cast<std::size_t>(p)];
    for (Vertex q = p + 1; q < n; ++q) {
      const Point& b = points[static_cast<std::size_t>(q)];
      // Every candidate contains the bounding box of the pair.
      const int inside = prefix.count({std::min(a.x, b.x), std::max(a.x, b.x)},
                                      {std::min(a.y, b.y), std::max(a.y, b.y)});
      if (inside > t + 1) continue;
      for (int i = -class_bound; i <= class_bound; ++i) {
        if (min_count(points, prefix, a, b, i, t + 1, xs, ys) <= t + 1) {
          edges.emplace_back(p, q);
          break;
        }
      }
    }
  }
  return Graph(n, std::move(edges));
}

Graph build_G(const PointSet& points, int t) {
  return ratio_graph(std::span<const Point>(points.points()), t, ratio_class_bound(points.size()));
}

}  // namespace cfc
