#include <algorithm>
#include <bit>
#include <map>
#include <cstdint>

#include "cfcolor/colouring.hpp"
#include "cfcolor/errors.hpp"

namespace cfc {

namespace {

void require_size(const VertexColouring& c, int n) {
  if (static_cast<int>(c.size()) != n) {
    throw ArgumentError("colouring size does not match the vertex count");
  }
}

// Gives fresh colours to repeated vertices of hyperedges that still see
// fewer than min(|e|, k) colours. A fresh colour never lowers the number of
// colours another hyperedge sees. Never fires when every hyperedge larger
// than k contains a hyperedge one vertex smaller.
void top_up_colours(const Hypergraph& h, int k, std::vector<Colour>& c) {
  Colour next = c.empty() ? 1 : *std::max_element(c.begin(), c.end()) + 1;
  for (const VertexSet& e : h.edges()) {
    const std::size_t want = std::min(e.size(), static_cast<std::size_t>(k));
    std::map<Colour, int> count;
    for (Vertex v : e) ++count[c[static_cast<std::size_t>(v)]];
    for (auto it = e.rbegin(); it != e.rend() && count.size() < want; ++it) {
      Colour& cv = c[static_cast<std::size_t>(*it)];
      if (count[cv] < 2) continue;
      --count[cv];
      cv = next++;
      count[cv] = 1;
    }
  }
}

}  // namespace

VertexColouring greedy_colourful(const Hypergraph& h, int t) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  std::vector<Colour> c = degeneracy_greedy_colouring(build_Gt(h, t + 1)).colours();
  top_up_colours(h, t + 1, c);
  return VertexColouring(std::move(c));
}

VertexColouring t_um_colouring(const Hypergraph& h, int t) {
  if (t < 1) throw ArgumentError("t must be >= 1");
  return meta_colour(h, [t](const Hypergraph& sub) { return greedy_colourful(sub, t); });
}

SubsetColouring subset_cf_from_t_um(const VertexColouring& psi, int t, int n) {
  require_size(psi, n);
  return SubsetColouring::generate(n, t, [&](std::span<const Vertex> s) {
    std::int64_t sum = 0;
    for (Vertex v : s) sum += psi[v];
    return Token{sum};
  });
}

SubsetColouring subset_cf_from_t_strong(const VertexColouring& c, int t, int n) {
  require_size(c, n);
  return SubsetColouring::generate(n, t, [&](std::span<const Vertex> s) {
    std::vector<std::int64_t> fields;
    fields.reserve(s.size());
    for (Vertex v : s) fields.push_back(c[v]);
    return Token(std::move(fields));
  });
}

SubsetColouring union_pairs_colouring(const Hypergraph& h, const VertexColouring& psi) {
  require_size(psi, h.num_vertices());
  return SubsetColouring::generate(h.num_vertices(), 2, [&](std::span<const Vertex> s) {
    const Colour a = psi[s[0]], b = psi[s[1]];
    return Token{std::int64_t{a} + b, a == b ? 0 : 1};
  });
}

VertexColouring interval_um(int n) {
  if (n < 1) throw ArgumentError("n must be >= 1");
  // Midpoint recursion on 1..2^s - 1 colours position p by 1 + (trailing
  // zeros of p); emit the first n positions.
  std::vector<Colour> colours(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    colours[static_cast<std::size_t>(i)] =
        1 + std::countr_zero(static_cast<unsigned>(i + 1));
  }
  return VertexColouring(std::move(colours));
}

SubsetColouring interval_union_pairs(int n) {
  if (n < 2) throw ArgumentError("n must be >= 2");
  const VertexColouring psi = interval_um(n);
  return SubsetColouring::generate(n, 2, [&](std::span<const Vertex> s) {
    const Colour a = psi[s[0]], b = psi[s[1]];
    if (s[1] == s[0] + 1) {
      return Token{kAdjacentPair, std::max(a, b), a < b ? 0 : 1};
    }
    return Token{kSeparatedPair, std::int64_t{a} + b, 0};
  });
}

}  // namespace cfc
