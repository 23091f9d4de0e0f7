#pragma once

#include <cstddef>
#include <optional>

#include "cfcolor/colourings.hpp"
#include "cfcolor/hypergraph.hpp"
#include "cfcolor/validate.hpp"

namespace cfc {

/// Largest vertex count accepted by exact_chi.
inline constexpr int kExactVertexLimit = 12;
/// Largest number of t-subsets accepted by exact_chi_subset_cf (n <= 7 for t = 2).
inline constexpr std::uint64_t kExactSubsetLimit = 21;

struct ExactVertexResult {
  int colours = 0;
  VertexColouring witness;
};

struct ExactSubsetResult {
  int colours = 0;
  SubsetColouring witness;
};

/// Minimum number of colours of a colouring valid for `notion`, with a
/// witness. Iterative deepening over backtracking; permutation-invariant
/// notions only explore first-use canonical colourings. Throws
/// SizeLimitError above kExactVertexLimit vertices.
ExactVertexResult exact_chi(const Hypergraph& h, Notion notion, std::optional<int> t = std::nullopt);

/// Minimum number of tokens of a t-subset-CF colouring, with a witness.
/// Throws SizeLimitError if C(n, t) exceeds kExactSubsetLimit.
ExactSubsetResult exact_chi_subset_cf(const Hypergraph& h, int t);

}  // namespace cfc
