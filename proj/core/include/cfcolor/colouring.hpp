#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cfcolor/colourings.hpp"
#include "cfcolor/geometry.hpp"
#include "cfcolor/graph.hpp"
#include "cfcolor/hypergraph.hpp"
#include "cfcolor/validate.hpp"

namespace cfc {

/// Colouring subroutine handed to meta_colour; must colour every vertex of
/// the hypergraph it receives.
using AuxColouringFn = std::function<VertexColouring(const Hypergraph&)>;

/// One round of meta_colour: the vertices still uncoloured (original
/// indices, ascending) and the auxiliary colouring computed on them.
struct MetaStep {
  std::vector<Vertex> surviving;
  VertexColouring aux;
};

/// Repeatedly colours the surviving vertices with `aux`, gives the largest
/// colour class (ties: smallest colour) the next final colour 1, 2, ... and
/// removes it. Later rounds get larger colours. Throws ContractError if aux
/// returns a colouring of the wrong size.
VertexColouring meta_colour(const Hypergraph& h, const AuxColouringFn& aux,
                            std::vector<MetaStep>* trace = nullptr);

/// Same scheme with an auxiliary colouring defined directly on the set of
/// surviving original vertices.
using SubsetAuxFn = std::function<VertexColouring(std::span<const Vertex>)>;
VertexColouring meta_colour_subsets(int n, const SubsetAuxFn& aux,
                                    std::vector<MetaStep>* trace = nullptr);

/// (t+1)-colourful colouring: degeneracy-greedy proper colouring of
/// build_Gt(h, t + 1). Hyperedges that still lack colours (possible only
/// when some hyperedge larger than t + 1 has no hyperedge one vertex
/// smaller inside it) get fresh colours on repeated vertices, so the bound
/// degeneracy + 1 applies to interval, rectangle and disc hypergraphs.
VertexColouring greedy_colourful(const Hypergraph& h, int t);

/// t-UM colouring: meta_colour with greedy_colourful(., t) as subroutine.
VertexColouring t_um_colouring(const Hypergraph& h, int t);

/// phi(S) = sum of psi over S. Valid t-subset-CF for every hypergraph on
/// which psi is t-UM; at most t * max(psi) distinct tokens.
SubsetColouring subset_cf_from_t_um(const VertexColouring& psi, int t, int n);

/// phi(S) = (c(v_1), ..., c(v_t)) over S sorted by vertex index.
SubsetColouring subset_cf_from_t_strong(const VertexColouring& c, int t, int n);

/// Pair colouring {x, y} -> (psi(x) + psi(y), psi(x) == psi(y) ? 0 : 1).
/// Pairs-CF on the size >= 3 hyperedges of H^∪ when psi is 2-UM on H.
SubsetColouring union_pairs_colouring(const Hypergraph& h, const VertexColouring& psi);

/// UM colouring of n points on a line by recursive midpoint colouring of
/// the padded length 2^s - 1, s = ceil(log2(n + 1)).
VertexColouring interval_um(int n);

/// Token kinds of interval_union_pairs.
inline constexpr std::int64_t kAdjacentPair = 0;
inline constexpr std::int64_t kSeparatedPair = 1;

/// Pairs colouring of the union hypergraph of n points on a line:
/// {i, i+1} -> (adjacent, max psi, psi(i) < psi(i+1) ? 0 : 1) and
/// {i, j}, j > i + 1 -> (separated, psi(i) + psi(j), 0), psi = interval_um(n).
SubsetColouring interval_union_pairs(int n);

/// Exact pairs-CF check of `sigma` on union_hypergraph(interval_hypergraph(n))
/// without listing its hyperedges. Intervals are aggregated by colour
/// profile under psi = interval_um(n), so the token of {i, j} must depend
/// only on (psi(i), psi(j)) for adjacent pairs and on {psi(i), psi(j)}
/// otherwise; ArgumentError if it does not or if t != 2. The reported
/// counterexample is a violating hyperedge, not necessarily the smallest.
Verdict validate_interval_union(const SubsetColouring& sigma);

/// Constant-size descriptor attached to each t-subset S by rect_subset_cf.
/// m is the smallest c-colour in S.
struct QCode {
  /// Multiplicity of m in S (1 or 2).
  int min_in_subset = 1;
  /// Multiplicity of m among the points of P inside r(S), capped at 3.
  int min_in_box = 1;
  /// Position of the single m-point on r(S); set iff min_in_subset == 1.
  std::optional<Location> location;
  /// For min_in_subset == 1 and min_in_box == 2: whether the m-point of S
  /// lies left of the other m-point of r(S).
  std::optional<bool> left_of_partner;

  bool operator==(const QCode&) const = default;
};

/// Number of distinct QCode values: 2 * 3 * 10 * 3 upper bound.
inline constexpr int kQCodeSpace = 2 * 3 * 10 * 3;

/// QCode of `subset` under final colouring `c` of `points`. The subset must
/// not contain any colour three times.
QCode compute_qcode(const PointSet& points, const VertexColouring& c,
                    std::span<const Vertex> subset);

struct RectSubsetResult {
  SubsetColouring colouring;
  /// Ratio-class graph on the full point set and its degeneracy colouring.
  Graph ratio_graph;
  int ratio_graph_colours = 0;
  /// Unique-maximum vertex colouring c produced by the meta scheme.
  VertexColouring vertex_colouring;
  std::vector<MetaStep> trace;
};

/// t-subset-CF colouring of the rectangle hypergraph of `points`. The
/// auxiliary colouring of each round is the degeneracy colouring of the
/// ratio graph rebuilt on the surviving points. Throws ArgumentError if
/// t < 2 or t > n.
RectSubsetResult rect_subset_cf(const PointSet& points, int t);

struct ClaimVerdict {
  bool valid = true;
  std::optional<std::size_t> round;
  std::optional<VertexSet> range;
};

/// For every round and every rectangle range r ∩ P' with |r ∩ P'| = t + k:
/// each aux colour occurs at most max(2, k) times. Reports the first breach.
ClaimVerdict claim_colourcount_check(const PointSet& points, int t,
                                     std::span<const MetaStep> trace);

}  // namespace cfc
