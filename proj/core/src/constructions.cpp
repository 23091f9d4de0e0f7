#include <string>

#include "cfcolor/constructions.hpp"
#include "cfcolor/errors.hpp"
#include "cfcolor/exact.hpp"
#include "cfcolor/geometry.hpp"

namespace cfc {

Hypergraph star_hypergraph(int n, int t) {
  if (t < 2) throw ArgumentError("star_hypergraph needs t >= 2");
  if (n < t + 2) throw ArgumentError("star_hypergraph needs n >= t + 2");
  const SubsetIndexer leaves(n - 1, t + 1);
  std::vector<VertexSet> edges;
  VertexSet s = leaves.first();
  do {
    VertexSet e{0};
    for (Vertex v : s) e.push_back(v + 1);
    edges.push_back(std::move(e));
  } while (leaves.next(s));
  return Hypergraph(n, std::move(edges));
}

int IntervalLowerBoundTable::chi(int n) const {
  for (const auto& row : rows) {
    if (row.n == n) return row.chi;
  }
  throw ArgumentError("no table row for n = " + std::to_string(n));
}

IntervalLowerBoundTable interval_lb_table(int max_n) {
  if (max_n > kIntervalTableLimit) {
    throw SizeLimitError("interval_lb_table refuses max_n = " + std::to_string(max_n) +
                         " (limit " + std::to_string(kIntervalTableLimit) + ")");
  }
  IntervalLowerBoundTable table;
  for (int n = 3; n <= max_n; ++n) {
    table.rows.push_back({n, exact_chi_subset_cf(interval_hypergraph(n), 2).colours});
  }
  for (int m = 3; 2 * m + 1 <= max_n; ++m) {
    ++table.recurrence_checks;
    if (table.chi(2 * m + 1) < 1 + table.chi(m)) table.recurrence_holds = false;
  }
  return table;
}

Hypergraph interval_union_large_edges(int n) {
  return filter_by_min_size(union_hypergraph(interval_hypergraph(n)), 3);
}

LbUnionResult lbunion_check(int n) {
  if (n < 1) throw ArgumentError("n must be >= 1");
  if (n > kLbUnionLimit) {
    throw SizeLimitError("lbunion_check refuses n = " + std::to_string(n) + " (limit " +
                         std::to_string(kLbUnionLimit) + ")");
  }
  LbUnionResult r;
  r.n = n;
  r.restricted = interval_union_large_edges(n);
  const ExactVertexResult exact = exact_chi(r.restricted, Notion::CF);
  r.chi = exact.colours;
  r.witness = exact.witness;
  while (r.bound * r.bound < n - 1) ++r.bound;
  r.holds = r.chi >= r.bound;
  return r;
}

BigInt tower(int t, std::int64_t m) {
  if (t < 1) throw ArgumentError("tower needs t >= 1");
  if (m < 0) throw ArgumentError("tower needs m >= 0");
  BigInt value = m;
  for (int level = 2; level <= t; ++level) {
    // 2^e has floor(e * log10 2) + 1 decimal digits.
    if (value > 4'000'000) throw SizeLimitError("tower value exceeds the digit limit");
    const auto e = value.convert_to<std::uint64_t>();
    const auto digits = static_cast<std::uint64_t>(static_cast<double>(e) * 0.30102999566398120) + 1;
    if (digits > kTowerDigitLimit) throw SizeLimitError("tower value exceeds the digit limit");
    value = BigInt(1) << e;
  }
  return value;
}

}  // namespace cfc
