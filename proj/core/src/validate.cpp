#include "cfcolor/validate.hpp"

#include <algorithm>
#include <string>

#include "cfcolor/errors.hpp"

namespace cfc {

std::string_view to_string(Notion notion) {
  switch (notion) {
    case Notion::Proper: return "proper";
    case Notion::CF: return "cf";
    case Notion::UM: return "um";
    case Notion::Colourful: return "colourful";
    case Notion::StrongCF: return "strong-cf";
    case Notion::TUM: return "t-um";
  }
  return "?";
}

Notion parse_notion(std::string_view text) {
  for (Notion n : {Notion::Proper, Notion::CF, Notion::UM, Notion::Colourful, Notion::StrongCF,
                   Notion::TUM}) {
    if (text == to_string(n)) return n;
  }
  throw ArgumentError("unknown colouring notion '" + std::string(text) + "'");
}

bool is_parametric(Notion notion) {
  return notion == Notion::Colourful || notion == Notion::StrongCF || notion == Notion::TUM;
}

bool edge_satisfies(std::span<const Vertex> edge, const VertexColouring& colouring, Notion notion,
                    int t) {
  // (colour, multiplicity) in descending colour order.
  std::vector<Colour> colours;
  colours.reserve(edge.size());
  for (Vertex v : edge) colours.push_back(colouring[v]);
  std::sort(colours.begin(), colours.end(), std::greater<>());
  std::vector<std::pair<Colour, int>> groups;
  for (Colour c : colours) {
    if (!groups.empty() && groups.back().first == c) {
      ++groups.back().second;
    } else {
      groups.emplace_back(c, 1);
    }
  }
  const auto size = edge.size();
  auto unique_count = static_cast<std::size_t>(
      std::count_if(groups.begin(), groups.end(), [](const auto& g) { return g.second == 1; }));
  const std::size_t need = std::min(size, static_cast<std::size_t>(std::max(t, 1)));

  switch (notion) {
    case Notion::Proper: return size < 2 || groups.size() >= 2;
    case Notion::CF: return size == 0 || unique_count >= 1;
    case Notion::UM: return size == 0 || groups.front().second == 1;
    case Notion::Colourful: return groups.size() >= need;
    case Notion::StrongCF: return unique_count >= need;
    case Notion::TUM:
      if (groups.size() < need) return false;
      for (std::size_t i = 0; i < need; ++i) {
        if (groups[i].second != 1) return false;
      }
      return true;
  }
  return false;
}

Verdict validate(const Hypergraph& h, const VertexColouring& colouring, Notion notion,
                 std::optional<int> t) {
  if (is_parametric(notion)) {
    if (!t) throw ArgumentError(std::string(to_string(notion)) + " needs a parameter t");
    if (*t < 1) throw ArgumentError("t must be >= 1");
  }
  if (colouring.size() != static_cast<std::size_t>(h.num_vertices())) {
    throw InputError("colouring does not cover the vertex set");
  }
  const int param = t.value_or(1);
  for (const auto& e : h.edges()) {
    if (!edge_satisfies(e, colouring, notion, param)) return {false, e};
  }
  return {};
}

namespace {

// Visits the colex rank of every t-subset of `edge`.
template <class Visit>
void for_each_subset_rank(const SubsetIndexer& indexer, std::span<const Vertex> edge, int t,
                          Visit&& visit) {
  const auto m = edge.size();
  if (t == 1) {
    for (Vertex v : edge) visit(static_cast<std::uint64_t>(v));
    return;
  }
  if (t == 2) {
    for (std::size_t j = 1; j < m; ++j) {
      const std::uint64_t base = indexer.binomial(edge[j], 2);
      for (std::size_t i = 0; i < j; ++i) visit(base + static_cast<std::uint64_t>(edge[i]));
    }
    return;
  }
  const auto k = static_cast<std::size_t>(t);
  if (m < k) return;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  while (true) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < k; ++i) r += indexer.binomial(edge[pos[i]], static_cast<int>(i) + 1);
    visit(r);
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace

Verdict validate_subset_cf(const Hypergraph& h, const SubsetColouring& colouring) {
  if (colouring.num_vertices() != h.num_vertices()) {
    throw InputError("subset colouring and hypergraph disagree on the vertex count");
  }
  const int t = colouring.t();
  const auto& indexer = colouring.indexer();
  std::vector<std::uint32_t> counts(colouring.tokens_used(), 0);
  std::vector<std::uint32_t> touched;
  for (const auto& e : h.edges()) {
    if (e.size() <= static_cast<std::size_t>(t)) continue;
    touched.clear();
    for_each_subset_rank(indexer, e, t, [&](std::uint64_t rank) {
      std::uint32_t id = colouring.token_id(rank);
      if (counts[id]++ == 0) touched.push_back(id);
    });
    bool found = false;
    for (std::uint32_t id : touched) {
      if (counts[id] == 1) found = true;
      counts[id] = 0;
    }
    if (!found) return {false, e};
  }
  return {};
}

}  // namespace cfc
