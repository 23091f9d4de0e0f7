#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cfcolor/colourings.hpp"
#include "cfcolor/hypergraph.hpp"

namespace cfc {

/// Vertex-colouring notions. Colourful, StrongCF and TUM take a parameter t.
enum class Notion { Proper, CF, UM, Colourful, StrongCF, TUM };

std::string_view to_string(Notion notion);
/// Accepts "proper", "cf", "um", "colourful", "strong-cf", "t-um".
Notion parse_notion(std::string_view text);
bool is_parametric(Notion notion);

struct Verdict {
  bool valid = true;
  /// Smallest violating hyperedge in canonical order.
  std::optional<VertexSet> counterexample;

  explicit operator bool() const { return valid; }
};

/// Checks the defining condition of `notion` on every hyperedge.
/// Throws ArgumentError if a parametric notion lacks t (or t < 1) and
/// InputError if the colouring does not cover the vertices.
Verdict validate(const Hypergraph& h, const VertexColouring& colouring, Notion notion,
                 std::optional<int> t = std::nullopt);

/// True iff the colour multiset of one hyperedge satisfies `notion`.
bool edge_satisfies(std::span<const Vertex> edge, const VertexColouring& colouring,
                    Notion notion, int t);

/// Every hyperedge with more than t vertices must contain a t-subset whose
/// token differs from the tokens of all other t-subsets of that hyperedge.
Verdict validate_subset_cf(const Hypergraph& h, const SubsetColouring& colouring);

}  // namespace cfc
