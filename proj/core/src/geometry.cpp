#include "cfcolor/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

#include "cfcolor/errors.hpp"

namespace cfc {

namespace {

void require_distinct_axes(std::span<const Point> points) {
  std::vector<int> xs, ys;
  for (const auto& p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end() ||
      std::adjacent_find(ys.begin(), ys.end()) != ys.end()) {
    throw InputError("points must have pairwise distinct x and pairwise distinct y");
  }
}

}  // namespace

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  const int n = size();
  std::vector<char> seen_x(static_cast<std::size_t>(n) + 1, 0), seen_y(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& p : points_) {
    if (p.x < 1 || p.x > n || p.y < 1 || p.y > n) {
      throw InputError("point coordinates must lie in [1, n]");
    }
    if (seen_x[static_cast<std::size_t>(p.x)]++ || seen_y[static_cast<std::size_t>(p.y)]++) {
      throw InputError("point coordinates must be a permutation of 1..n on each axis");
    }
  }
}

PointSet rank_normalize(std::span<const RawPoint> raw) {
  const std::size_t n = raw.size();
  for (const auto& p : raw) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InputError("non-finite coordinate");
  }
  std::vector<std::size_t> by_x(n), by_y(n);
  std::iota(by_x.begin(), by_x.end(), 0);
  std::iota(by_y.begin(), by_y.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].x != raw[b].x) return raw[a].x < raw[b].x;
    if (raw[a].y != raw[b].y) return raw[a].y < raw[b].y;
    return a < b;
  });
  for (std::size_t i = 1; i < n; ++i) {
    const auto& a = raw[by_x[i - 1]];
    const auto& b = raw[by_x[i]];
    if (a.x == b.x && a.y == b.y) throw InputError("duplicate points");
  }
  std::sort(by_y.begin(), by_y.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].y != raw[b].y) return raw[a].y < raw[b].y;
    if (raw[a].x != raw[b].x) return raw[a].x < raw[b].x;
    return a < b;
  });
  std::vector<Point> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    out[by_x[r]].x = static_cast<int>(r) + 1;
    out[by_y[r]].y = static_cast<int>(r) + 1;
  }
  return PointSet(std::move(out));
}

Rect Rect::around_cells(int x_lo, int x_hi, int y_lo, int y_hi) {
  return {2 * std::int64_t{x_lo} - 1, 2 * std::int64_t{x_hi} + 1, 2 * std::int64_t{y_lo} - 1,
          2 * std::int64_t{y_hi} + 1};
}

bool Rect::contains(Point p) const {
  const std::int64_t x = 2 * std::int64_t{p.x};
  const std::int64_t y = 2 * std::int64_t{p.y};
  return x_lo2 <= x && x <= x_hi2 && y_lo2 <= y && y <= y_hi2;
}

bool Rect::contains(const Rect& o) const {
  return x_lo2 <= o.x_lo2 && o.x_hi2 <= x_hi2 && y_lo2 <= o.y_lo2 && o.y_hi2 <= y_hi2;
}

bool Disc::contains(Point p) const {
  auto dx = boost::rational<std::int64_t>(p.x) - cx;
  auto dy = boost::rational<std::int64_t>(p.y) - cy;
  return dx * dx + dy * dy <= radius2;
}

Rect min_bounding_rect(std::span<const Point> points, std::span<const Vertex> subset) {
  if (subset.empty()) throw ArgumentError("bounding rectangle of an empty set");
  const Point& first = points[static_cast<std::size_t>(subset.front())];
  int x_lo = first.x, x_hi = first.x, y_lo = first.y, y_hi = first.y;
  for (Vertex v : subset) {
    const Point& p = points[static_cast<std::size_t>(v)];
    x_lo = std::min(x_lo, p.x);
    x_hi = std::max(x_hi, p.x);
    y_lo = std::min(y_lo, p.y);
    y_hi = std::max(y_hi, p.y);
  }
  return {2 * std::int64_t{x_lo}, 2 * std::int64_t{x_hi}, 2 * std::int64_t{y_lo},
          2 * std::int64_t{y_hi}};
}

Rect min_bounding_rect(const PointSet& points, std::span<const Vertex> subset) {
  return min_bounding_rect(std::span<const Point>(points.points()), subset);
}

Location locate(const Rect& box, Point p) {
  const std::int64_t x = 2 * std::int64_t{p.x};
  const std::int64_t y = 2 * std::int64_t{p.y};
  // 0: strictly inside, 1: low side, 2: high side.
  const int h = x == box.x_lo2 ? 1 : (x == box.x_hi2 ? 2 : 0);
  const int v = y == box.y_lo2 ? 1 : (y == box.y_hi2 ? 2 : 0);
  static constexpr Location table[3][3] = {
      {Location::Interior, Location::BottomEdge, Location::TopEdge},
      {Location::LeftEdge, Location::BottomLeft, Location::TopLeft},
      {Location::RightEdge, Location::BottomRight, Location::TopRight},
  };
  return table[h][v];
}

int ratio_class_bound(int n) {
  if (n <= 1) return 0;
  return std::bit_width(static_cast<unsigned>(n - 1));
}

RatioCover cover_by_ratio_pair(const Rect& r) {
  const std::int64_t w = r.width2();
  const std::int64_t h = r.height2();
  if (w <= 0 || h <= 0) throw ArgumentError("cover_by_ratio_pair needs a rectangle with area");
  RatioCover out;
  if (w >= h) {
    int i = 0;
    while ((h << (i + 1)) <= w) ++i;
    const std::int64_t sub = h << i;
    out.ratio_class = i;
    out.first = {r.x_lo2, r.x_lo2 + sub, r.y_lo2, r.y_hi2};
    out.second = {r.x_hi2 - sub, r.x_hi2, r.y_lo2, r.y_hi2};
  } else {
    int j = 0;
    while ((w << (j + 1)) <= h) ++j;
    const std::int64_t sub = w << j;
    out.ratio_class = -j;
    out.first = {r.x_lo2, r.x_hi2, r.y_lo2, r.y_lo2 + sub};
    out.second = {r.x_lo2, r.x_hi2, r.y_hi2 - sub, r.y_hi2};
  }
  return out;
}

Hypergraph interval_hypergraph(int n) {
  if (n < 1) throw ArgumentError("interval hypergraph needs n >= 1");
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2);
  for (Vertex a = 0; a < n; ++a) {
    VertexSet run;
    for (Vertex b = a; b < n; ++b) {
      run.push_back(b);
      edges.push_back(run);
    }
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph rectangle_hypergraph(std::span<const Point> points) {
  require_distinct_axes(points);
  const int n = static_cast<int>(points.size());
  std::vector<Vertex> by_x(points.size());
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](Vertex a, Vertex b) {
    return points[static_cast<std::size_t>(a)].x < points[static_cast<std::size_t>(b)].x;
  });
  auto y_of = [&](Vertex v) { return points[static_cast<std::size_t>(v)].y; };

  std::vector<VertexSet> edges;
  if (n <= 64) {
    std::unordered_set<std::uint64_t> masks;
    for (int a = 0; a < n; ++a) {
      std::vector<Vertex> column;  // points of the x-slab, sorted by y
      for (int b = a; b < n; ++b) {
        Vertex v = by_x[static_cast<std::size_t>(b)];
        column.insert(std::upper_bound(column.begin(), column.end(), v,
                                       [&](Vertex l, Vertex r) { return y_of(l) < y_of(r); }),
                      v);
        for (std::size_t i = 0; i < column.size(); ++i) {
          std::uint64_t mask = 0;
          for (std::size_t j = i; j < column.size(); ++j) {
            mask |= std::uint64_t{1} << column[j];
            masks.insert(mask);
          }
        }
      }
    }
    edges.reserve(masks.size());
    for (std::uint64_t mask : masks) {
      VertexSet e;
      for (std::uint64_t m = mask; m; m &= m - 1) e.push_back(std::countr_zero(m));
      edges.push_back(std::move(e));
    }
  } else {
    for (int a = 0; a < n; ++a) {
      std::vector<Vertex> column;
      for (int b = a; b < n; ++b) {
        Vertex v = by_x[static_cast<std::size_t>(b)];
        column.insert(std::upper_bound(column.begin(), column.end(), v,
                                       [&](Vertex l, Vertex r) { return y_of(l) < y_of(r); }),
                      v);
        for (std::size_t i = 0; i < column.size(); ++i) {
          VertexSet e;
          for (std::size_t j = i; j < column.size(); ++j) {
            e.insert(std::upper_bound(e.begin(), e.end(), column[j]), column[j]);
            edges.push_back(e);
          }
        }
      }
    }
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph rectangle_hypergraph(const PointSet& points) {
  return rectangle_hypergraph(std::span<const Point>(points.points()));
}

namespace {

// |E(Del(H[subset]))| for a subset given as a membership mask.
std::size_t induced_delaunay_edges(const Hypergraph& h, const std::vector<char>& member) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : h.edges()) {
    Vertex first = -1, second = -1;
    int count = 0;
    for (Vertex v : e) {
      if (!member[static_cast<std::size_t>(v)]) continue;
      if (++count > 2) break;
      (count == 1 ? first : second) = v;
    }
    if (count == 2) pairs.emplace_back(first, second);
  }
  std::sort(pairs.begin(), pairs.end());
  return static_cast<std::size_t>(std::unique(pairs.begin(), pairs.end()) - pairs.begin());
}

}  // namespace

boost::rational<std::int64_t> hld_parameter(const Hypergraph& h, int sample_budget,
                                            std::uint64_t seed) {
  using Ratio = boost::rational<std::int64_t>;
  const int n = h.num_vertices();
  Ratio best(0);
  std::vector<char> member(static_cast<std::size_t>(n), 0);
  auto consider = [&](int size) {
    if (size == 0) return;
    Ratio r(static_cast<std::int64_t>(induced_delaunay_edges(h, member)), size);
    best = std::max(best, r);
  };

  // Every subset of size <= 6, by recursive choice.
  const int small = std::min(n, 6);
  std::vector<Vertex> chosen;
  auto recurse = [&](auto&& self, Vertex from) -> void {
    consider(static_cast<int>(chosen.size()));
    if (static_cast<int>(chosen.size()) == small) return;
    for (Vertex v = from; v < n; ++v) {
      chosen.push_back(v);
      member[static_cast<std::size_t>(v)] = 1;
      self(self, v + 1);
      member[static_cast<std::size_t>(v)] = 0;
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);

  std::fill(member.begin(), member.end(), 1);
  consider(n);

  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int s = 0; s < sample_budget && n > 0; ++s) {
    std::shuffle(order.begin(), order.end(), rng);
    const int size = std::uniform_int_distribution<int>(1, n)(rng);
    std::fill(member.begin(), member.end(), 0);
    for (int i = 0; i < size; ++i) member[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;
    consider(size);
  }
  return best;
}

}  // namespace cfc
