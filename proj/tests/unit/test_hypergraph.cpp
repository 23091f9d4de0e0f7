#include <gtest/gtest.h>

#include <set>

#include "cfcolor/errors.hpp"
#include "cfcolor/geometry.hpp"
#include "cfcolor/graph.hpp"
#include "cfcolor/hypergraph.hpp"
#include "cfcolor/validate.hpp"

namespace cfc {
namespace {

using Edges = std::vector<VertexSet>;

TEST(Hypergraph, CanonicalFormMakesEqualityStructural) {
  Hypergraph a(3, {{2, 0}, {1}, {0, 2}, {1, 1}});
  Hypergraph b(3, {{1}, {0, 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.edges(), (Edges{{0, 2}, {1}}));
}

TEST(Hypergraph, RejectsEmptyAndOutOfRangeEdges) {
  EXPECT_THROW(Hypergraph(3, {{}}), InputError);
  EXPECT_THROW(Hypergraph(3, {{0, 3}}), InputError);
  EXPECT_THROW(Hypergraph(3, {{-1}}), InputError);
}

TEST(InducedSubhypergraph, RestrictsSingleEdge) {
  const auto r = induced_subhypergraph(Hypergraph(3, {{0, 1, 2}}), VertexSet{0, 2});
  EXPECT_EQ(r.hypergraph, Hypergraph(2, {{0, 1}}));
  EXPECT_EQ(r.original, (std::vector<Vertex>{0, 2}));
}

TEST(InducedSubhypergraph, EdgeCollapsesToSingleton) {
  const auto r = induced_subhypergraph(Hypergraph(3, {{0, 1}, {1, 2}}), VertexSet{0, 1});
  EXPECT_EQ(r.hypergraph.edges(), (Edges{{0, 1}, {1}}));
}

TEST(InducedSubhypergraph, MergesDuplicateTraces) {
  const auto r = induced_subhypergraph(Hypergraph(3, {{0, 1}, {0, 2}}), VertexSet{0});
  EXPECT_EQ(r.hypergraph.edges(), (Edges{{0}}));
}

TEST(InducedSubhypergraph, EmptySubsetGivesEmptyHypergraph) {
  const auto r = induced_subhypergraph(Hypergraph(3, {{0, 1}}), VertexSet{});
  EXPECT_EQ(r.hypergraph.num_vertices(), 0);
  EXPECT_EQ(r.hypergraph.num_edges(), 0u);
}

TEST(DelaunayGraph, IntervalsGiveAPath) {
  const Graph g = delaunay_graph(interval_hypergraph(3));
  EXPECT_EQ(g.edges(), (std::vector<Graph::Edge>{{0, 1}, {1, 2}}));
}

TEST(DelaunayGraph, NoPairEdgesGiveEmptyGraph) {
  EXPECT_EQ(delaunay_graph(Hypergraph(4, {{0, 1, 2}, {3}})).num_edges(), 0u);
}

TEST(DelaunayGraph, AllPairsGiveCompleteGraph) {
  EXPECT_EQ(delaunay_graph(complete_pairs_hypergraph(6)).num_edges(), 15u);
}

TEST(UnionHypergraph, Singletons) {
  EXPECT_EQ(union_hypergraph(Hypergraph(2, {{0}, {1}})).edges(), (Edges{{0}, {0, 1}, {1}}));
}

TEST(UnionHypergraph, OverlappingPairs) {
  EXPECT_EQ(union_hypergraph(Hypergraph(3, {{0, 1}, {1, 2}})).edges(),
            (Edges{{0, 1}, {0, 1, 2}, {1, 2}}));
}

TEST(UnionHypergraph, ThreePointIntervalsMatchDirectEnumeration) {
  const Hypergraph h = interval_hypergraph(3);
  std::set<VertexSet> expected;
  for (const auto& e : h.edges()) {
    for (const auto& f : h.edges()) {
      std::set<Vertex> u(e.begin(), e.end());
      u.insert(f.begin(), f.end());
      expected.insert(VertexSet(u.begin(), u.end()));
    }
  }
  const Hypergraph u = union_hypergraph(h);
  EXPECT_EQ(u.edges(), Edges(expected.begin(), expected.end()));
  EXPECT_EQ(u.num_edges(), 7u);
}

TEST(Validate, AllDistinctIsConflictFree) {
  const Hypergraph h(4, {{0, 1, 2, 3}, {1, 3}, {2}});
  EXPECT_TRUE(validate(h, VertexColouring({1, 2, 3, 4}), Notion::CF).valid);
}

TEST(Validate, UniqueMaximumVersusTwoUm) {
  const Hypergraph h(3, {{0, 1, 2}});
  const VertexColouring c({1, 1, 2});
  EXPECT_TRUE(validate(h, c, Notion::UM).valid);
  const Verdict v = validate(h, c, Notion::TUM, 2);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.counterexample, (VertexSet{0, 1, 2}));
}

TEST(Validate, RulerColouringIsUmOnSevenPoints) {
  const VertexColouring c({1, 2, 1, 3, 1, 2, 1});
  const Hypergraph h = interval_hypergraph(7);
  ASSERT_EQ(h.num_edges(), 28u);
  // Independent check: the maximum of every run occurs once.
  for (int a = 0; a < 7; ++a) {
    for (int b = a; b < 7; ++b) {
      int best = 0, count = 0;
      for (int v = a; v <= b; ++v) {
        if (c[v] > best) best = c[v], count = 1;
        else if (c[v] == best) ++count;
      }
      EXPECT_EQ(count, 1);
    }
  }
  EXPECT_TRUE(validate(h, c, Notion::UM).valid);
}

TEST(Validate, ReportsSmallestViolatingEdge) {
  const Hypergraph h(4, {{2, 3}, {0, 1}, {0, 1, 2, 3}});
  const Verdict v = validate(h, VertexColouring({1, 1, 1, 1}), Notion::Proper);
  EXPECT_EQ(v.counterexample, (VertexSet{0, 1}));
}

TEST(Validate, ParametricNotionNeedsT) {
  const Hypergraph h(2, {{0, 1}});
  const VertexColouring c({1, 2});
  EXPECT_THROW(validate(h, c, Notion::TUM), ArgumentError);
  EXPECT_THROW(validate(h, c, Notion::Colourful, 0), ArgumentError);
  EXPECT_THROW(validate(h, VertexColouring({1}), Notion::CF), InputError);
}

TEST(Validate, NotionNamesRoundTrip) {
  for (Notion n : {Notion::Proper, Notion::CF, Notion::UM, Notion::Colourful, Notion::StrongCF,
                   Notion::TUM}) {
    EXPECT_EQ(parse_notion(to_string(n)), n);
  }
  EXPECT_THROW(parse_notion("rainbow"), ArgumentError);
}

TEST(VertexColouring, RejectsNonPositiveColours) {
  EXPECT_THROW(VertexColouring({1, 0}), InputError);
  EXPECT_EQ(VertexColouring({3, 1, 3}).colours_used(), 2u);
  EXPECT_EQ(VertexColouring({3, 1, 3}).max_colour(), 3);
}

SubsetColouring pairs_from(int n, std::vector<Token> by_rank) {
  return SubsetColouring::from_tokens(n, 2, by_rank);
}

TEST(ValidateSubsetCf, ConstantPairsOnCompleteGraphAreValid) {
  const auto sigma = SubsetColouring::generate(4, 2, [](auto) { return Token{7}; });
  EXPECT_TRUE(validate_subset_cf(complete_pairs_hypergraph(4), sigma).valid);
  EXPECT_EQ(sigma.tokens_used(), 1u);
}

TEST(ValidateSubsetCf, ConstantPairsOnTripleFail) {
  const auto sigma = pairs_from(3, {Token{1}, Token{1}, Token{1}});
  const Verdict v = validate_subset_cf(Hypergraph(3, {{0, 1, 2}}), sigma);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.counterexample, (VertexSet{0, 1, 2}));
}

TEST(ValidateSubsetCf, OneDistinctPairSuffices) {
  // Colex order: {0,1}, {0,2}, {1,2}.
  const auto sigma = pairs_from(3, {Token{1}, Token{1}, Token{2}});
  EXPECT_TRUE(validate_subset_cf(Hypergraph(3, {{0, 1, 2}}), sigma).valid);
}

TEST(ValidateSubsetCf, SmallEdgesAreUnconstrained) {
  const auto sigma = SubsetColouring::generate(4, 3, [](auto) { return Token::dummy(); });
  EXPECT_TRUE(validate_subset_cf(Hypergraph(4, {{0, 1, 2}, {3}}), sigma).valid);
  EXPECT_FALSE(validate_subset_cf(Hypergraph(4, {{0, 1, 2, 3}}), sigma).valid);
}

TEST(CountPairs, IntervalsUpToThreePoints) {
  EXPECT_EQ(count_pairs_in_small_hyperedges(interval_hypergraph(5), 3), 7u);
}

TEST(CountPairs, SingletonsHaveNoPairs) {
  EXPECT_EQ(count_pairs_in_small_hyperedges(interval_hypergraph(6), 1), 0u);
}

TEST(CountPairs, CompletePairsHypergraph) {
  EXPECT_EQ(count_pairs_in_small_hyperedges(complete_pairs_hypergraph(7), 2), 21u);
  EXPECT_THROW(count_pairs_in_small_hyperedges(complete_pairs_hypergraph(3), 0), ArgumentError);
}

TEST(Token, StringRoundTrip) {
  for (const Token& t : {Token{3}, Token{4, 0}, Token{-2, 1, 9}, Token::dummy(), Token{}}) {
    EXPECT_EQ(Token::parse(t.to_string()), t) << t.to_string();
  }
  EXPECT_EQ((Token{5, 1, 2}.to_string()), "5:1:2");
  EXPECT_EQ(Token::dummy().to_string(), "bot");
  EXPECT_THROW(Token::parse("1::2"), InputError);
  EXPECT_THROW(Token::parse("x"), InputError);
}

TEST(SubsetIndexer, ColexRankRoundTrip) {
  const SubsetIndexer idx(7, 3);
  ASSERT_EQ(idx.count(), 35u);
  VertexSet s = idx.first();
  std::uint64_t expected = 0;
  do {
    EXPECT_EQ(idx.rank(s), expected);
    EXPECT_EQ(idx.unrank(expected), s);
    ++expected;
  } while (idx.next(s));
  EXPECT_EQ(expected, 35u);
}

TEST(Graph, RejectsSelfLoopsAndDeduplicates) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  const Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Graph, InducedSubgraphReindexes) {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 4}, {3, 4}});
  const VertexSet keep{1, 2, 4};
  EXPECT_EQ(induced_subgraph(g, keep), Graph(3, {{0, 1}, {1, 2}}));
  EXPECT_THROW(induced_subgraph(g, VertexSet{7}), InputError);
}

}  // namespace
}  // namespace cfc
