#include "cfcolor/graph.hpp"

#include <algorithm>
#include <set>

#include "cfcolor/errors.hpp"

namespace cfc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw InputError("self-loop in graph");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw InputError("graph edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n_));
  for (auto [u, v] : edges_) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph delaunay_graph(const Hypergraph& h) {
  std::vector<Graph::Edge> edges;
  for (const auto& e : h.edges()) {
    if (e.size() == 2) edges.emplace_back(e[0], e[1]);
  }
  return Graph(h.num_vertices(), std::move(edges));
}

Graph build_Gt(const Hypergraph& h, int k) {
  if (k < 2) throw ArgumentError("build_Gt needs k >= 2");
  std::vector<Graph::Edge> edges;
  for (const auto& e : h.edges()) {
    if (e.size() > static_cast<std::size_t>(k)) continue;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) edges.emplace_back(e[i], e[j]);
  }
  return Graph(h.num_vertices(), std::move(edges));
}

namespace {

struct Peeling {
  std::vector<Vertex> order;
  int degeneracy = 0;
};

Peeling peel(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  auto adj = g.adjacency();
  std::vector<int> degree(n);
  std::set<std::pair<int, Vertex>> queue;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    queue.emplace(degree[v], static_cast<Vertex>(v));
  }
  std::vector<char> removed(n, 0);
  Peeling out;
  out.order.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    out.degeneracy = std::max(out.degeneracy, d);
    out.order.push_back(v);
    removed[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : adj[static_cast<std::size_t>(v)]) {
      auto wi = static_cast<std::size_t>(w);
      if (removed[wi]) continue;
      queue.erase({degree[wi], w});
      --degree[wi];
      queue.emplace(degree[wi], w);
    }
  }
  return out;
}

}  // namespace

std::vector<Vertex> degeneracy_order(const Graph& g) { return peel(g).order; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const Vertex v = subset[i];
    if (v < 0 || v >= g.num_vertices()) throw InputError("subset vertex out of range");
    index[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
  std::vector<Graph::Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    const Vertex a = index[static_cast<std::size_t>(u)], b = index[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  return Graph(static_cast<int>(subset.size()), std::move(edges));
}

int degeneracy(const Graph& g) { return peel(g).degeneracy; }

VertexColouring degeneracy_greedy_colouring(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (n == 0) return VertexColouring{};
  auto adj = g.adjacency();
  auto order = peel(g).order;
  std::vector<Colour> colour(n, 0);
  std::vector<char> taken;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto v = static_cast<std::size_t>(*it);
    taken.assign(adj[v].size() + 2, 0);
    for (Vertex w : adj[v]) {
      Colour c = colour[static_cast<std::size_t>(w)];
      if (c > 0 && static_cast<std::size_t>(c) < taken.size()) taken[static_cast<std::size_t>(c)] = 1;
    }
    Colour c = 1;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    colour[v] = c;
  }
  return VertexColouring(std::move(colour));
}

}  // namespace cfc
