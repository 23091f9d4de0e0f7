#include <algorithm>
#include <cstdint>
#include <map>

#include "cfcolor/colouring.hpp"
#include "cfcolor/errors.hpp"

namespace cfc {

namespace {

constexpr std::int64_t kNoLocation = 9;
constexpr std::int64_t kNoOrder = 2;

std::vector<Point> select(const PointSet& points, std::span<const Vertex> vertices) {
  std::vector<Point> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(points[v]);
  return out;
}

}  // namespace

QCode compute_qcode(const PointSet& points, const VertexColouring& c,
                    std::span<const Vertex> subset) {
  if (subset.empty()) throw ArgumentError("empty subset");
  Colour m = c[subset.front()];
  for (Vertex v : subset) m = std::min(m, c[v]);
  Vertex p = -1;
  QCode q;
  q.min_in_subset = 0;
  for (Vertex v : subset) {
    if (c[v] == m) {
      ++q.min_in_subset;
      p = v;
    }
  }
  if (q.min_in_subset > 2) throw ArgumentError("colour occurs three times in the subset");

  const Rect box = min_bounding_rect(points, subset);
  q.min_in_box = 0;
  Vertex partner = -1;
  for (Vertex v = 0; v < points.size(); ++v) {
    if (c[v] != m || !box.contains(points[v])) continue;
    ++q.min_in_box;
    if (v != p) partner = v;
  }
  q.min_in_box = std::min(q.min_in_box, 3);

  if (q.min_in_subset == 1) {
    q.location = locate(box, points[p]);
    if (q.min_in_box == 2) q.left_of_partner = points[p].x < points[partner].x;
  }
  return q;
}

RectSubsetResult rect_subset_cf(const PointSet& points, int t) {
  if (t < 2) throw ArgumentError("rect_subset_cf needs t >= 2");
  const int n = points.size();
  if (t > n) throw ArgumentError("t exceeds the number of points");

  RectSubsetResult result;
  result.ratio_graph = build_G(points, t);
  result.ratio_graph_colours =
      static_cast<int>(degeneracy_greedy_colouring(result.ratio_graph).colours_used());

  // Each round colours the ratio graph of the surviving points themselves.
  // The induced subgraph of the full graph is not enough: a pair may lose
  // its witness rectangle only because removed points sat inside it, and
  // then c need not even be unique-maximum.
  const int bound = ratio_class_bound(n);
  result.vertex_colouring = meta_colour_subsets(
      n,
      [&](std::span<const Vertex> surviving) {
        const std::vector<Point> sub = select(points, surviving);
        return degeneracy_greedy_colouring(ratio_graph(sub, t, bound));
      },
      &result.trace);

  const VertexColouring& c = result.vertex_colouring;
  result.colouring = SubsetColouring::generate(n, t, [&](std::span<const Vertex> s) {
    std::map<Colour, int> mult;
    std::int64_t sum = 0;
    for (Vertex v : s) {
      sum += c[v];
      if (++mult[c[v]] >= 3) return Token::dummy();
    }
    const QCode q = compute_qcode(points, c, s);
    const std::int64_t loc = q.location ? static_cast<std::int64_t>(*q.location) : kNoLocation;
    const std::int64_t order = q.left_of_partner ? (*q.left_of_partner ? 0 : 1) : kNoOrder;
    return Token{sum, q.min_in_subset, q.min_in_box, loc, order};
  });
  return result;
}

ClaimVerdict claim_colourcount_check(const PointSet& points, int t,
                                     std::span<const MetaStep> trace) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  for (std::size_t round = 0; round < trace.size(); ++round) {
    const MetaStep& step = trace[round];
    if (step.aux.size() != step.surviving.size()) {
      throw ContractError("trace step colouring does not match its surviving set");
    }
    const std::vector<Point> sub = select(points, step.surviving);
    const Hypergraph ranges = rectangle_hypergraph(sub);
    for (const auto& r : ranges.edges()) {
      const int size = static_cast<int>(r.size());
      const int limit = std::max(2, size - t);
      std::map<Colour, int> mult;
      bool breach = false;
      for (Vertex v : r) breach |= ++mult[step.aux[v]] > limit;
      if (breach) {
        VertexSet original;
        for (Vertex v : r) original.push_back(step.surviving[static_cast<std::size_t>(v)]);
        return {false, round, original};
      }
    }
  }
  return {};
}

}  // namespace cfc
