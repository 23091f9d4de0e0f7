#include "cfcolor/colourings.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

#include "cfcolor/errors.hpp"

namespace cfc {

VertexColouring::VertexColouring(std::vector<Colour> colours) : colours_(std::move(colours)) {
  for (Colour c : colours_) {
    if (c < 1) throw InputError("vertex colours must be >= 1");
  }
}

std::size_t VertexColouring::colours_used() const {
  return std::set<Colour>(colours_.begin(), colours_.end()).size();
}

Colour VertexColouring::max_colour() const {
  return colours_.empty() ? 0 : *std::max_element(colours_.begin(), colours_.end());
}

std::string Token::to_string() const {
  if (dummy_) return "bot";
  std::string out;
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ':';
    out += std::to_string(fields_[i]);
  }
  return out;
}

Token Token::parse(std::string_view text) {
  if (text == "bot") return dummy();
  std::vector<std::int64_t> fields;
  if (text.empty()) return Token(std::move(fields));
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(':', pos);
    auto piece = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty()) {
      throw InputError("malformed token '" + std::string(text) + "'");
    }
    fields.push_back(value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return Token(std::move(fields));
}

SubsetIndexer::SubsetIndexer(int n, int t) : n_(n), t_(t) {
  if (t < 1) throw ArgumentError("subset size t must be >= 1");
  if (t > n) throw ArgumentError("subset size t exceeds vertex count");
  const auto cols = static_cast<std::size_t>(t + 1);
  binom_.assign(static_cast<std::size_t>(n + 1) * cols, 0);
  constexpr auto kCap = std::numeric_limits<std::uint64_t>::max() / 2;
  for (int a = 0; a <= n; ++a) {
    binom_[static_cast<std::size_t>(a) * cols] = 1;
    for (int b = 1; b <= std::min(a, t); ++b) {
      std::uint64_t left = binom_[static_cast<std::size_t>(a - 1) * cols + static_cast<std::size_t>(b - 1)];
      std::uint64_t right = binom_[static_cast<std::size_t>(a - 1) * cols + static_cast<std::size_t>(b)];
      binom_[static_cast<std::size_t>(a) * cols + static_cast<std::size_t>(b)] = std::min(kCap, left + right);
    }
  }
  count_ = binomial(n, t);
}

std::uint64_t SubsetIndexer::binomial(int a, int b) const {
  if (a < 0 || b < 0 || b > a || b > t_) return 0;
  return binom_[static_cast<std::size_t>(a) * static_cast<std::size_t>(t_ + 1) + static_cast<std::size_t>(b)];
}

std::uint64_t SubsetIndexer::rank(std::span<const Vertex> subset) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) r += binomial(subset[i], static_cast<int>(i) + 1);
  return r;
}

VertexSet SubsetIndexer::unrank(std::uint64_t rank) const {
  VertexSet out(static_cast<std::size_t>(t_));
  int a = n_ - 1;
  for (int i = t_; i >= 1; --i) {
    while (binomial(a, i) > rank) --a;
    out[static_cast<std::size_t>(i - 1)] = a;
    rank -= binomial(a, i);
    --a;
  }
  return out;
}

VertexSet SubsetIndexer::first() const {
  VertexSet s(static_cast<std::size_t>(t_));
  for (int i = 0; i < t_; ++i) s[static_cast<std::size_t>(i)] = i;
  return s;
}

bool SubsetIndexer::next(VertexSet& s) const {
  const auto t = s.size();
  for (std::size_t i = 0; i < t; ++i) {
    Vertex limit = (i + 1 < t) ? s[i + 1] : n_;
    if (s[i] + 1 < limit) {
      ++s[i];
      for (std::size_t j = 0; j < i; ++j) s[j] = static_cast<Vertex>(j);
      return true;
    }
  }
  return false;
}

SubsetColouring::SubsetColouring(int n, int t) : indexer_(n, t) {
  if (indexer_.count() > kMaxSubsets) {
    throw SizeLimitError("too many t-subsets to colour explicitly");
  }
  ids_.reserve(indexer_.count());
}

SubsetColouring SubsetColouring::from_tokens(int n, int t, const std::vector<Token>& by_rank) {
  SubsetIndexer indexer(n, t);
  if (by_rank.size() != indexer.count()) {
    throw InputError("token list does not cover every t-subset");
  }
  return generate(n, t, [&](std::span<const Vertex> s) { return by_rank[indexer.rank(s)]; });
}

const Token& SubsetColouring::token(std::span<const Vertex> subset) const {
  return tokens_[ids_[indexer_.rank(subset)]];
}

}  // namespace cfc
