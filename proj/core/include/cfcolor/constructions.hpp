#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cfcolor/colourings.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfc {

/// Vertex 0 joined with every (t+1)-subset of {1..n-1}. Needs t >= 2 and
/// n >= t + 2, otherwise ArgumentError.
Hypergraph star_hypergraph(int n, int t);

inline constexpr int kIntervalTableLimit = 7;

struct IntervalLowerBoundRow {
  int n = 0;
  int chi = 0;
};

struct IntervalLowerBoundTable {
  std::vector<IntervalLowerBoundRow> rows;
  /// Every checked pair (m, 2m+1) satisfied chi(2m+1) >= 1 + chi(m).
  bool recurrence_holds = true;
  int recurrence_checks = 0;

  int chi(int n) const;
};

/// Exact pairs-CF chromatic numbers of interval hypergraphs for n = 1..max_n
/// (max_n <= kIntervalTableLimit, otherwise SizeLimitError).
IntervalLowerBoundTable interval_lb_table(int max_n);

inline constexpr int kLbUnionLimit = 10;

struct LbUnionResult {
  int n = 0;
  int chi = 0;
  int bound = 0;
  bool holds = false;
  Hypergraph restricted;
  VertexColouring witness;
};

/// Hyperedges of size >= 3 of the union hypergraph of n points on a line.
Hypergraph interval_union_large_edges(int n);

/// Exact CF chromatic number of interval_union_large_edges(n) compared to
/// ceil(sqrt(n - 1)). Throws SizeLimitError for n > kLbUnionLimit.
LbUnionResult lbunion_check(int n);

using BigInt = boost::multiprecision::cpp_int;

/// Largest decimal length tower() will produce.
inline constexpr std::uint64_t kTowerDigitLimit = 1'000'000;

/// twr_1(m) = m, twr_t(m) = 2^twr_{t-1}(m). Throws SizeLimitError when the
/// result would exceed kTowerDigitLimit digits, ArgumentError for t < 1 or m < 0.
BigInt tower(int t, std::int64_t m);

}  // namespace cfc
