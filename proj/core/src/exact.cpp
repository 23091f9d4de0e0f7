#include "cfcolor/exact.hpp"

#include <algorithm>
#include <string>

#include "cfcolor/errors.hpp"

namespace cfc {

namespace {

bool permutation_invariant(Notion notion) { return notion != Notion::UM && notion != Notion::TUM; }

// Plain depth-first search over vertex colourings with at most k colours.
class VertexSearch {
 public:
  VertexSearch(const Hypergraph& h, Notion notion, int t)
      : notion_(notion), t_(t), n_(h.num_vertices()), closing_(static_cast<std::size_t>(n_)) {
    for (const auto& e : h.edges()) closing_[static_cast<std::size_t>(e.back())].push_back(&e);
  }

  bool run(int k, std::vector<Colour>& out) {
    k_ = k;
    colours_.assign(static_cast<std::size_t>(n_), 1);
    if (!extend(0, 0)) return false;
    out = colours_;
    return true;
  }

 private:
  bool extend(Vertex v, Colour used) {
    if (v == n_) return true;
    const Colour limit = permutation_invariant(notion_) ? std::min<Colour>(k_, used + 1) : k_;
    for (Colour c = 1; c <= limit; ++c) {
      colours_[static_cast<std::size_t>(v)] = c;
      VertexColouring view(colours_);
      bool ok = true;
      for (const VertexSet* e : closing_[static_cast<std::size_t>(v)]) {
        if (!edge_satisfies(*e, view, notion_, t_)) {
          ok = false;
          break;
        }
      }
      if (ok && extend(v + 1, std::max(used, c))) return true;
    }
    colours_[static_cast<std::size_t>(v)] = 1;
    return false;
  }

  Notion notion_;
  int t_;
  int n_;
  Colour k_ = 1;
  std::vector<Colour> colours_;
  // Hyperedges grouped by their largest vertex: checkable once it is coloured.
  std::vector<std::vector<const VertexSet*>> closing_;
};

}  // namespace

ExactVertexResult exact_chi(const Hypergraph& h, Notion notion, std::optional<int> t) {
  if (is_parametric(notion)) {
    if (!t) throw ArgumentError(std::string(to_string(notion)) + " needs a parameter t");
    if (*t < 1) throw ArgumentError("t must be >= 1");
  }
  const int n = h.num_vertices();
  if (n > kExactVertexLimit) {
    throw SizeLimitError("exact_chi refuses " + std::to_string(n) + " vertices (limit " +
                         std::to_string(kExactVertexLimit) + ")");
  }
  if (n == 0) return {0, VertexColouring{}};
  VertexSearch search(h, notion, t.value_or(1));
  std::vector<Colour> colours;
  for (int k = 1; k <= n; ++k) {
    if (search.run(k, colours)) return {k, VertexColouring(colours)};
  }
  // All-distinct colours satisfy every notion except proper on a
  // hyperedge with a single vertex, which is unconstrained anyway.
  throw ContractError("exact_chi found no colouring with n colours");
}

namespace {

class SubsetSearch {
 public:
  SubsetSearch(const Hypergraph& h, const SubsetIndexer& indexer)
      : m_(indexer.count()), closing_(m_) {
    const int t = indexer.t();
    for (const auto& e : h.edges()) {
      if (e.size() <= static_cast<std::size_t>(t)) continue;
      std::vector<std::uint64_t> ranks;
      VertexSet pos = SubsetIndexer(static_cast<int>(e.size()), t).first();
      SubsetIndexer local(static_cast<int>(e.size()), t);
      VertexSet subset(static_cast<std::size_t>(t));
      do {
        for (std::size_t i = 0; i < pos.size(); ++i) subset[i] = e[static_cast<std::size_t>(pos[i])];
        ranks.push_back(indexer.rank(subset));
      } while (local.next(pos));
      auto last = *std::max_element(ranks.begin(), ranks.end());
      closing_[last].push_back(std::move(ranks));
    }
  }

  bool run(int k, std::vector<int>& out) {
    k_ = k;
    ids_.assign(m_, 0);
    counts_.assign(static_cast<std::size_t>(k), 0);
    if (!extend(0, -1)) return false;
    out = ids_;
    return true;
  }

 private:
  bool has_unique(const std::vector<std::uint64_t>& ranks) {
    for (auto r : ranks) ++counts_[static_cast<std::size_t>(ids_[r])];
    bool found = false;
    for (auto r : ranks) {
      auto& c = counts_[static_cast<std::size_t>(ids_[r])];
      if (c == 1) found = true;
      c = 0;
    }
    return found;
  }

  bool extend(std::uint64_t rank, int used) {
    if (rank == m_) return true;
    const int limit = std::min(k_ - 1, used + 1);
    for (int id = 0; id <= limit; ++id) {
      ids_[rank] = id;
      bool ok = true;
      for (const auto& ranks : closing_[rank]) {
        if (!has_unique(ranks)) {
          ok = false;
          break;
        }
      }
      if (ok && extend(rank + 1, std::max(used, id))) return true;
    }
    ids_[rank] = 0;
    return false;
  }

  std::uint64_t m_;
  int k_ = 1;
  std::vector<int> ids_;
  std::vector<int> counts_;
  std::vector<std::vector<std::vector<std::uint64_t>>> closing_;
};

}  // namespace

ExactSubsetResult exact_chi_subset_cf(const Hypergraph& h, int t) {
  SubsetIndexer indexer(h.num_vertices(), t);
  if (indexer.count() > kExactSubsetLimit) {
    throw SizeLimitError("exact_chi_subset_cf refuses " + std::to_string(indexer.count()) +
                         " subsets (limit " + std::to_string(kExactSubsetLimit) + ")");
  }
  SubsetSearch search(h, indexer);
  std::vector<int> ids;
  for (int k = 1; k <= static_cast<int>(indexer.count()); ++k) {
    if (search.run(k, ids)) {
      std::vector<Token> tokens;
      tokens.reserve(ids.size());
      for (int id : ids) tokens.push_back(Token{id + 1});
      return {k, SubsetColouring::from_tokens(h.num_vertices(), t, tokens)};
    }
  }
  throw ContractError("exact_chi_subset_cf found no colouring with all tokens distinct");
}

}  // namespace cfc
