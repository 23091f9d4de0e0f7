#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cfcolor/colourings.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfc {

/// Simple undirected graph on 0..n-1.
class Graph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  Graph() = default;
  /// Normalises every edge to (min, max) and drops duplicates. Throws
  /// InputError on self-loops and out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<std::vector<Vertex>> adjacency() const;
  bool has_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Del(H): the graph of the size-2 hyperedges.
Graph delaunay_graph(const Hypergraph& h);

/// Graph joining u and v whenever some hyperedge of size <= k holds both.
Graph build_Gt(const Hypergraph& h, int k);

/// G[subset] re-indexed by position in `subset` (sorted ascending).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

/// Removal order of repeated minimum-degree deletion (ties: smallest index).
std::vector<Vertex> degeneracy_order(const Graph& g);

/// Largest minimum degree seen during the degeneracy peeling.
int degeneracy(const Graph& g);

/// Proper colouring obtained by colouring the degeneracy order backwards,
/// each vertex taking the smallest colour missing among its already
/// coloured neighbours. Uses at most degeneracy(g) + 1 colours.
VertexColouring degeneracy_greedy_colouring(const Graph& g);

}  // namespace cfc
