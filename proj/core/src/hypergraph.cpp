#include "cfcolor/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "cfcolor/errors.hpp"

namespace cfc {

namespace {

void canonicalise(std::vector<VertexSet>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

VertexSet merge(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InputError("negative vertex count");
  for (auto& e : edges_) {
    if (e.empty()) throw InputError("empty hyperedge");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.front() < 0 || e.back() >= n) {
      throw InputError("hyperedge vertex out of range [0, " + std::to_string(n) + ")");
    }
  }
  canonicalise(edges_);
}

InducedHypergraph induced_subhypergraph(const Hypergraph& h, std::span<const Vertex> subset) {
  std::vector<Vertex> original(subset.begin(), subset.end());
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()), original.end());
  if (!original.empty() && (original.front() < 0 || original.back() >= h.num_vertices())) {
    throw InputError("induced subset vertex out of range");
  }

  std::vector<Vertex> index(static_cast<std::size_t>(h.num_vertices()), -1);
  for (std::size_t i = 0; i < original.size(); ++i) {
    index[static_cast<std::size_t>(original[i])] = static_cast<Vertex>(i);
  }

  std::vector<VertexSet> edges;
  edges.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    VertexSet trace;
    for (Vertex v : e) {
      Vertex mapped = index[static_cast<std::size_t>(v)];
      if (mapped >= 0) trace.push_back(mapped);
    }
    if (!trace.empty()) edges.push_back(std::move(trace));
  }
  return {Hypergraph(static_cast<int>(original.size()), std::move(edges)), std::move(original)};
}

Hypergraph union_hypergraph(const Hypergraph& h) {
  const auto& edges = h.edges();
  std::vector<VertexSet> out;
  out.reserve(edges.size() * (edges.size() + 1) / 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.push_back(edges[i]);
    for (std::size_t j = i + 1; j < edges.size(); ++j) out.push_back(merge(edges[i], edges[j]));
  }
  return Hypergraph(h.num_vertices(), std::move(out));
}

Hypergraph filter_by_min_size(const Hypergraph& h, std::size_t min_size) {
  std::vector<VertexSet> kept;
  for (const auto& e : h.edges()) {
    if (e.size() >= min_size) kept.push_back(e);
  }
  return Hypergraph(h.num_vertices(), std::move(kept));
}

std::size_t count_pairs_in_small_hyperedges(const Hypergraph& h, int k) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : h.edges()) {
    if (e.size() > static_cast<std::size_t>(k)) continue;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) pairs.emplace(e[i], e[j]);
  }
  return pairs.size();
}

Hypergraph complete_pairs_hypergraph(int n) {
  std::vector<VertexSet> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Hypergraph(n, std::move(edges));
}

}  // namespace cfc
