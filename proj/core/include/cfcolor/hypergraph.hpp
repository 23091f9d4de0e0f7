#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cfc {

using Vertex = std::int32_t;
/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// A finite hypergraph on the vertices 0..n-1.
///
/// Hyperedges are stored canonically: members sorted ascending, the edge
/// list sorted lexicographically and free of duplicates. Two hypergraphs
/// are equal iff their canonical forms are equal.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Canonicalises `edges`. Members are sorted and deduplicated inside an
  /// edge; throws InputError for an empty edge or a vertex outside [0, n).
  explicit Hypergraph(int n, std::vector<VertexSet> edges = {});

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<VertexSet>& edges() const { return edges_; }

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

/// Result of restricting a hypergraph to a vertex subset.
struct InducedHypergraph {
  Hypergraph hypergraph;
  /// original[v'] is the vertex of the parent hypergraph that v' stands for.
  std::vector<Vertex> original;
};

/// H[V']: vertices re-indexed by increasing original index, hyperedges are
/// the nonempty traces h ∩ V'.
InducedHypergraph induced_subhypergraph(const Hypergraph& h,
                                        std::span<const Vertex> subset);

/// All unions e ∪ f of two (not necessarily distinct) hyperedges.
Hypergraph union_hypergraph(const Hypergraph& h);

/// Keeps only hyperedges with at least `min_size` vertices.
Hypergraph filter_by_min_size(const Hypergraph& h, std::size_t min_size);

/// Number of vertex pairs that lie together in some hyperedge of size <= k.
std::size_t count_pairs_in_small_hyperedges(const Hypergraph& h, int k);

/// The hypergraph whose hyperedges are all pairs of {0..n-1}.
Hypergraph complete_pairs_hypergraph(int n);

}  // namespace cfc
