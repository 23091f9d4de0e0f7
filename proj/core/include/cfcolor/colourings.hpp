#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfcolor/hypergraph.hpp"

namespace cfc {

using Colour = std::int32_t;

/// Colour per vertex, all colours >= 1. Integer order doubles as the order
/// used by the unique-maximum notions.
class VertexColouring {
 public:
  VertexColouring() = default;
  /// Throws InputError if some colour is < 1.
  explicit VertexColouring(std::vector<Colour> colours);

  std::size_t size() const { return colours_.size(); }
  Colour operator[](Vertex v) const { return colours_[static_cast<std::size_t>(v)]; }
  const std::vector<Colour>& colours() const { return colours_; }

  /// Number of distinct colour values.
  std::size_t colours_used() const;
  Colour max_colour() const;

  bool operator==(const VertexColouring&) const = default;

 private:
  std::vector<Colour> colours_;
};

/// Opaque colour of a t-subset: a tuple of integers compared structurally,
/// or the distinguished dummy token.
class Token {
 public:
  Token() = default;
  Token(std::initializer_list<std::int64_t> fields) : fields_(fields) {}
  explicit Token(std::vector<std::int64_t> fields) : fields_(std::move(fields)) {}

  static Token dummy() {
    Token t;
    t.dummy_ = true;
    return t;
  }

  bool is_dummy() const { return dummy_; }
  const std::vector<std::int64_t>& fields() const { return fields_; }

  /// "bot" for the dummy token, otherwise the fields joined with ':'.
  std::string to_string() const;
  /// Inverse of to_string; throws InputError on malformed text.
  static Token parse(std::string_view text);

  auto operator<=>(const Token&) const = default;
  bool operator==(const Token&) const = default;

 private:
  bool dummy_ = false;
  std::vector<std::int64_t> fields_;
};

/// Colex ranking of the t-subsets of {0..n-1}.
class SubsetIndexer {
 public:
  SubsetIndexer() = default;
  SubsetIndexer(int n, int t);

  int n() const { return n_; }
  int t() const { return t_; }
  std::uint64_t count() const { return count_; }

  /// `subset` must be sorted ascending with exactly t members.
  std::uint64_t rank(std::span<const Vertex> subset) const;
  VertexSet unrank(std::uint64_t rank) const;
  std::uint64_t binomial(int a, int b) const;

  /// Advances `subset` to its colex successor; false after the last one.
  bool next(VertexSet& subset) const;
  VertexSet first() const;

 private:
  int n_ = 0;
  int t_ = 0;
  std::uint64_t count_ = 0;
  // binom_[a * (t_ + 1) + b] = C(a, b) for 0 <= a <= n, 0 <= b <= t.
  std::vector<std::uint64_t> binom_;
};

/// Assignment of a Token to every t-subset of {0..n-1}.
///
/// Tokens are interned: each subset stores a dense id into the table of
/// distinct tokens. The number of distinct tokens is the colour count.
class SubsetColouring {
 public:
  /// Largest number of t-subsets a colouring may hold.
  static constexpr std::uint64_t kMaxSubsets = 50'000'000;

  SubsetColouring() = default;

  /// Calls fn(subset) for every t-subset (sorted, colex order). Throws
  /// ArgumentError if t < 1 or t > n, SizeLimitError above kMaxSubsets.
  template <class Fn>
  static SubsetColouring generate(int n, int t, Fn&& fn) {
    SubsetColouring out(n, t);
    std::map<Token, std::uint32_t> intern;
    VertexSet subset = out.indexer_.first();
    do {
      Token tok = fn(std::span<const Vertex>(subset));
      auto [it, inserted] =
          intern.try_emplace(std::move(tok), static_cast<std::uint32_t>(out.tokens_.size()));
      if (inserted) out.tokens_.push_back(it->first);
      out.ids_.push_back(it->second);
    } while (out.indexer_.next(subset));
    return out;
  }

  /// Builds from one token per subset in colex order.
  static SubsetColouring from_tokens(int n, int t, const std::vector<Token>& by_rank);

  int num_vertices() const { return indexer_.n(); }
  int t() const { return indexer_.t(); }
  std::uint64_t num_subsets() const { return ids_.size(); }
  const SubsetIndexer& indexer() const { return indexer_; }

  const Token& token(std::span<const Vertex> subset) const;
  std::uint32_t token_id(std::uint64_t rank) const { return ids_[rank]; }
  const std::vector<Token>& distinct_tokens() const { return tokens_; }
  std::size_t tokens_used() const { return tokens_.size(); }

 private:
  SubsetColouring(int n, int t);

  SubsetIndexer indexer_;
  std::vector<Token> tokens_;
  std::vector<std::uint32_t> ids_;
};

}  // namespace cfc
