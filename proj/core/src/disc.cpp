// Disc traces. Lifting p -> (x, y, x^2 + y^2) turns discs into lower
// halfspaces, so every trace is cut off by a plane that can be moved to a
// vertex of the feasible region: a plane through three lifted points
// (a circumcircle) or, for collinear sets, through two (a diametral circle).
// The trace is then the points strictly inside plus the on-circle points
// realised by small perturbations of that circle, i.e. the cyclically
// contiguous arcs of the on-circle points.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>

#include "cfcolor/errors.hpp"
#include "cfcolor/geometry.hpp"

namespace cfc {

namespace {

__extension__ typedef __int128 i128;

struct Vec {
  i128 x;
  i128 y;
};

// Upper half-plane first (angle in [0, pi)), then by cross product.
bool angle_less(const Vec& a, const Vec& b) {
  auto half = [](const Vec& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

class TraceCollector {
 public:
  explicit TraceCollector(std::span<const Point> points) : points_(points) {}

  // Circle with centre c / scale and a point on it; vectors are scaled so
  // that all arithmetic stays integral.
  void add_circle(i128 scale, i128 cx, i128 cy, const Point& on) {
    auto vec = [&](const Point& p) { return Vec{scale * p.x - cx, scale * p.y - cy}; };
    const Vec r = vec(on);
    const i128 radius2 = r.x * r.x + r.y * r.y;
    VertexSet inside;
    std::vector<std::pair<Vec, Vertex>> boundary;
    for (std::size_t v = 0; v < points_.size(); ++v) {
      const Vec d = vec(points_[v]);
      const i128 dist2 = d.x * d.x + d.y * d.y;
      if (dist2 < radius2) inside.push_back(static_cast<Vertex>(v));
      else if (dist2 == radius2) boundary.emplace_back(d, static_cast<Vertex>(v));
    }
    std::sort(boundary.begin(), boundary.end(),
              [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    const std::size_t k = boundary.size();
    if (!inside.empty()) traces_.insert(inside);
    for (std::size_t start = 0; start < k; ++start) {
      VertexSet trace = inside;
      for (std::size_t len = 1; len <= k; ++len) {
        trace.push_back(boundary[(start + len - 1) % k].second);
        if (len == k && start != 0) break;
        VertexSet sorted = trace;
        std::sort(sorted.begin(), sorted.end());
        traces_.insert(std::move(sorted));
      }
    }
  }

  std::vector<VertexSet> take() { return {traces_.begin(), traces_.end()}; }

 private:
  std::span<const Point> points_;
  std::set<VertexSet> traces_;
};

}  // namespace

Hypergraph disc_hypergraph(std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  {
    std::vector<std::pair<int, int>> seen;
    for (const auto& p : points) seen.emplace_back(p.x, p.y);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw InputError("disc_hypergraph: duplicate points");
    }
  }
  TraceCollector collector(points);
  std::vector<VertexSet> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v});
  for (int i = 0; i < n; ++i) {
    const Point& a = points[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      const Point& b = points[static_cast<std::size_t>(j)];
      collector.add_circle(2, i128{a.x} + b.x, i128{a.y} + b.y, a);
      for (int k = j + 1; k < n; ++k) {
        const Point& c = points[static_cast<std::size_t>(k)];
        const i128 bx = b.x - a.x, by = b.y - a.y;
        const i128 cx = c.x - a.x, cy = c.y - a.y;
        const i128 d = 2 * (bx * cy - by * cx);
        if (d == 0) continue;  // collinear: no circumcircle
        const i128 b2 = bx * bx + by * by;
        const i128 c2 = cx * cx + cy * cy;
        const i128 ux = b2 * cy - c2 * by;
        const i128 uy = c2 * bx - b2 * cx;
        // Centre = a + (ux, uy) / d.
        collector.add_circle(d, d * a.x + ux, d * a.y + uy, a);
      }
    }
  }
  for (auto& e : collector.take()) edges.push_back(std::move(e));
  return Hypergraph(n, std::move(edges));
}

Hypergraph disc_hypergraph(const PointSet& points) {
  return disc_hypergraph(std::span<const Point>(points.points()));
}

}  // namespace cfc
