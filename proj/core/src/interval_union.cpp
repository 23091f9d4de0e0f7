// Pairs-CF check on the union hypergraph of an interval hypergraph.
//
// A hyperedge of H^∪ is either an interval or the union of two intervals
// separated by at least one point. When tokens depend only on psi-values
// (ordered for adjacent pairs, unordered otherwise), the token multiset of
// an interval is fixed by its profile: colour counts plus counts of ordered
// adjacent colour pairs. For a separated union the profiles add and every
// cross pair is a non-adjacent pair, so the multiset is fixed by the two
// profiles. The check therefore runs over pairs of distinct profiles, most
// of which are discharged in bulk by a token that is unique in one part,
// absent from the other and only ever produced by adjacent pairs.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>

#include "cfcolor/colouring.hpp"
#include "cfcolor/errors.hpp"

namespace cfc {

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

struct ProfileInfo {
  std::vector<int> data;  // colour counts, then counts of occurring adjacent pairs
  int size = 0;
  int max_colour = -1;
  std::uint64_t unique_bits = 0;
  std::uint64_t absent_bits = 0;
  // Interval with the smallest right end and one with the largest left end.
  int min_end = std::numeric_limits<int>::max();
  std::pair<int, int> min_end_interval;
  int max_start = -1;
  std::pair<int, int> max_start_interval;
};

// Profiles sharing certificate masks and top-colour data.
struct GroupKey {
  std::uint64_t unique_bits;
  std::uint64_t absent_bits;
  int max_colour;
  int top_count;
  int top_adjacent;
  auto operator<=>(const GroupKey&) const = default;
};

class UnionChecker {
 public:
  explicit UnionChecker(const SubsetColouring& sigma)
      : n_(sigma.num_vertices()), psi_(interval_um(n_)), s_(psi_.max_colour()) {
    key_token_.assign(static_cast<std::size_t>(2 * s_ * s_), -1);
    // Profiles store only the adjacent colour pairs that actually occur.
    adjacent_slot_.assign(static_cast<std::size_t>(s_ * s_), -1);
    for (Vertex i = 0; i + 1 < n_; ++i) {
      int& slot = adjacent_slot_[static_cast<std::size_t>(adjacent_key(colour(i), colour(i + 1)))];
      if (slot < 0) slot = static_cast<int>(adjacent_slots_++);
    }
    const SubsetIndexer& idx = sigma.indexer();
    for (Vertex j = 1; j < n_; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        const Vertex pair[2] = {i, j};
        const int tok = static_cast<int>(sigma.token_id(idx.rank(pair)));
        int& slot = key_token_[static_cast<std::size_t>(key_of(i, j))];
        if (slot == -1) slot = tok;
        else if (slot != tok) {
          throw ArgumentError(
              "validate_interval_union: token of {" + std::to_string(i) + ", " +
              std::to_string(j) + "} is not determined by the interval_um colours");
        }
      }
    }
    token_keys_.resize(sigma.tokens_used());
    for (int k = 0; k < static_cast<int>(key_token_.size()); ++k) {
      if (key_token_[static_cast<std::size_t>(k)] >= 0) {
        token_keys_[static_cast<std::size_t>(key_token_[static_cast<std::size_t>(k)])].push_back(k);
      }
    }
    tokens_by_top_.resize(static_cast<std::size_t>(s_));
    for (std::size_t tok = 0; tok < token_keys_.size(); ++tok) {
      // Smallest top colour over the token's keys: above it the count is 0.
      int top = s_;
      for (int k : token_keys_[tok]) top = std::min(top, key_top_colour(k));
      if (top < s_) tokens_by_top_[static_cast<std::size_t>(top)].push_back(tok);
    }
    for (std::size_t tok = 0; tok < token_keys_.size(); ++tok) {
      const auto& keys = token_keys_[tok];
      const bool adjacent_only = std::all_of(keys.begin(), keys.end(),
                                             [&](int k) { return k < s_ * s_; });
      if (adjacent_only && !keys.empty() && certificate_tokens_.size() < 64) {
        certificate_tokens_.push_back(static_cast<int>(tok));
      }
    }
  }

  Verdict run() {
    build_profiles();
    // Single intervals.
    for (const auto& p : profiles_) {
      if (p.size < 3) continue;
      if (!has_unique(p.data, p.max_colour)) {
        const auto [a, b] = p.min_end_interval;
        return fail(a, b, -1, -1);
      }
    }
    // Separated unions, grouped by certificate masks.
    std::map<GroupKey, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(profiles_.size()); ++i) {
      const auto& p = profiles_[static_cast<std::size_t>(i)];
      const int m = p.max_colour;
      groups[{p.unique_bits, p.absent_bits, m, p.data[static_cast<std::size_t>(m)],
              adjacent_count(p.data, adjacent_key(m, m))}]
          .push_back(i);
    }
    std::vector<const std::vector<int>*> members;
    std::vector<GroupKey> keys;
    for (const auto& [key, list] : groups) {
      keys.push_back(key);
      members.push_back(&list);
    }
    // Members of each group by decreasing latest start.
    std::vector<std::vector<int>> start_sorted(members.size());
    std::vector<const std::vector<int>*> by_start(members.size());
    for (std::size_t g = 0; g < members.size(); ++g) {
      start_sorted[g] = *members[g];
      std::sort(start_sorted[g].begin(), start_sorted[g].end(), [&](int x, int y) {
        return profiles_[static_cast<std::size_t>(x)].max_start >
               profiles_[static_cast<std::size_t>(y)].max_start;
      });
      by_start[g] = &start_sorted[g];
    }
    std::vector<int> combined(profiles_.front().data.size());
    for (std::size_t g1 = 0; g1 < keys.size(); ++g1) {
      for (std::size_t g2 = g1; g2 < keys.size(); ++g2) {
        const GroupKey& k1 = keys[g1];
        const GroupKey& k2 = keys[g2];
        if (((k1.unique_bits & k2.absent_bits) | (k2.unique_bits & k1.absent_bits)) != 0) continue;
        if (top_pair_unique(k1, k2)) continue;
        // Ordered pairs (left, right) with a gap: right's latest start lies
        // beyond left's earliest end plus one. Both orders for distinct groups.
        for (int pass = 0; pass < (g1 == g2 ? 1 : 2); ++pass) {
          const std::vector<int>& lefts = pass == 0 ? *members[g1] : *members[g2];
          const std::vector<int>& rights = pass == 0 ? *by_start[g2] : *by_start[g1];
          for (int li : lefts) {
            const ProfileInfo& left = profiles_[static_cast<std::size_t>(li)];
            for (int ri : rights) {
              const ProfileInfo& right = profiles_[static_cast<std::size_t>(ri)];
              if (right.max_start <= left.min_end + 1) break;
              if (left.size + right.size < 3) continue;
              for (std::size_t k = 0; k < combined.size(); ++k) {
                combined[k] = left.data[k] + right.data[k];
              }
              if (has_unique(combined, std::max(left.max_colour, right.max_colour))) continue;
              return fail(left.min_end_interval.first, left.min_end_interval.second,
                          right.max_start_interval.first, right.max_start_interval.second);
            }
          }
        }
      }
    }
    return {};
  }

 private:
  int colour(Vertex v) const { return psi_[v] - 1; }

  int adjacent_key(int a, int b) const { return a * s_ + b; }
  int separated_key(int a, int b) const {
    return s_ * s_ + std::min(a, b) * s_ + std::max(a, b);
  }
  int key_of(Vertex i, Vertex j) const {
    return j == i + 1 ? adjacent_key(colour(i), colour(j)) : separated_key(colour(i), colour(j));
  }

  int adjacent_count(const std::vector<int>& d, int key) const {
    const int slot = adjacent_slot_[static_cast<std::size_t>(key)];
    return slot < 0 ? 0 : d[static_cast<std::size_t>(s_ + slot)];
  }

  // Number of pairs of a profile-described vertex set falling on `key`.
  long long key_count(const std::vector<int>& d, int key) const {
    if (key < s_ * s_) return adjacent_count(d, key);
    const int a = (key - s_ * s_) / s_, b = (key - s_ * s_) % s_;
    const long long ca = d[static_cast<std::size_t>(a)], cb = d[static_cast<std::size_t>(b)];
    if (a == b) return ca * (ca - 1) / 2 - adjacent_count(d, adjacent_key(a, a));
    return ca * cb - adjacent_count(d, adjacent_key(a, b)) - adjacent_count(d, adjacent_key(b, a));
  }

  long long token_count(const std::vector<int>& d, std::size_t tok) const {
    long long total = 0;
    for (int k : token_keys_[tok]) total += key_count(d, k);
    return total;
  }

  // A token all of whose keys need a colour above `top` cannot occur; the
  // rest are tried from the highest colour down, where witnesses usually sit.
  bool has_unique(const std::vector<int>& d, int top) const {
    for (int c = top; c >= 0; --c) {
      for (std::size_t tok : tokens_by_top_[static_cast<std::size_t>(c)]) {
        if (token_count(d, tok) == 1) return true;
      }
    }
    return false;
  }

  int key_top_colour(int key) const {
    if (key < s_ * s_) return std::max(key / s_, key % s_);
    return (key - s_ * s_) % s_;
  }

  // Whether the token of two top-coloured vertices is unique in every union
  // of the two groups. Decidable from the group keys when that token
  // arises from no other key.
  bool top_pair_unique(const GroupKey& a, const GroupKey& b) const {
    const int m = std::max(a.max_colour, b.max_colour);
    const int key = separated_key(m, m);
    const int tok = key_token_[static_cast<std::size_t>(key)];
    if (tok < 0 || token_keys_[static_cast<std::size_t>(tok)].size() != 1) return false;
    long long count = 0, adjacent = 0;
    for (const GroupKey* g : {&a, &b}) {
      if (g->max_colour != m) continue;
      count += g->top_count;
      adjacent += g->top_adjacent;
    }
    return count * (count - 1) / 2 - adjacent == 1;
  }

  void build_profiles() {
    const std::size_t width = static_cast<std::size_t>(s_) + adjacent_slots_;
    std::unordered_map<std::vector<int>, int, VectorHash> ids;
    std::vector<int> current(width);
    for (int a = 0; a < n_; ++a) {
      std::fill(current.begin(), current.end(), 0);
      int max_colour = -1;
      for (int b = a; b < n_; ++b) {
        ++current[static_cast<std::size_t>(colour(b))];
        max_colour = std::max(max_colour, colour(b));
        if (b > a) {
          const int slot = adjacent_slot_[static_cast<std::size_t>(adjacent_key(colour(b - 1), colour(b)))];
          ++current[static_cast<std::size_t>(s_ + slot)];
        }
        auto [it, inserted] = ids.try_emplace(current, static_cast<int>(profiles_.size()));
        if (inserted) {
          ProfileInfo info;
          info.data = current;
          info.size = b - a + 1;
          info.max_colour = max_colour;
          for (std::size_t bit = 0; bit < certificate_tokens_.size(); ++bit) {
            const long long c = token_count(current, static_cast<std::size_t>(certificate_tokens_[bit]));
            if (c == 1) info.unique_bits |= std::uint64_t{1} << bit;
            if (c == 0) info.absent_bits |= std::uint64_t{1} << bit;
          }
          profiles_.push_back(std::move(info));
        }
        ProfileInfo& p = profiles_[static_cast<std::size_t>(it->second)];
        if (b < p.min_end) {
          p.min_end = b;
          p.min_end_interval = {a, b};
        }
        if (a > p.max_start) {
          p.max_start = a;
          p.max_start_interval = {a, b};
        }
      }
    }
  }

  static Verdict fail(int a, int b, int c, int d) {
    VertexSet edge;
    for (int v = a; v <= b; ++v) edge.push_back(v);
    for (int v = c; c >= 0 && v <= d; ++v) edge.push_back(v);
    std::sort(edge.begin(), edge.end());
    return {false, edge};
  }

  int n_;
  VertexColouring psi_;
  int s_;
  std::vector<int> key_token_;
  std::vector<int> adjacent_slot_;
  std::size_t adjacent_slots_ = 0;
  std::vector<std::vector<int>> token_keys_;
  std::vector<int> certificate_tokens_;
  std::vector<std::vector<std::size_t>> tokens_by_top_;
  std::vector<ProfileInfo> profiles_;
};

}  // namespace

Verdict validate_interval_union(const SubsetColouring& sigma) {
  if (sigma.t() != 2) throw ArgumentError("validate_interval_union needs a pairs colouring");
  if (sigma.num_vertices() < 3) return {};
  return UnionChecker(sigma).run();
}

}  // namespace cfc
