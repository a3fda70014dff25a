#include <gtest/gtest.h>

#include "concentra/rich_club.hpp"
#include "generators.hpp"

using namespace concentra;
namespace t = concentra::testing;

TEST(DegreeOrder, TiesBreakByLabel) {
  const auto g = Graph::from_edges({"d", "c", "b", "a"}, std::vector<Edge>{{0, 1}, {2, 3}, {0, 2}});
  // degrees: d=2, c=1, b=2, a=1
  const auto order = degree_order(g);
  EXPECT_EQ(labels_of(g, order), (std::vector<std::string>{"b", "d", "a", "c"}));
}

TEST(RichClubProfile, FirstAndLastRanks) {
  const auto g = t::random_graph(25, 0.3, 8);
  const auto profile = rich_club_profile(g);
  ASSERT_EQ(profile.size(), 25u);
  EXPECT_EQ(profile.at(1).phi, 1.0);
  EXPECT_DOUBLE_EQ(profile.at(25).phi, density(g));
  EXPECT_EQ(profile.at(25).internal_edges, g.edge_count());
  EXPECT_THROW(rich_club_profile(t::edgeless(1)), UndefinedInput);
}

TEST(RichClubProfile, PrefixDensityMatchesInducedSubgraph) {
  const auto g = t::random_graph(20, 0.35, 21);
  const auto profile = rich_club_profile(g);
  const auto order = degree_order(g);
  for (std::size_t r = 2; r <= 20; ++r) {
    const auto sub = induced_subgraph(g, std::span<const VertexId>(order.data(), r));
    EXPECT_DOUBLE_EQ(profile.at(r).phi, density(sub)) << r;
    EXPECT_EQ(profile.at(r).vertex, order[r - 1]);
    EXPECT_EQ(profile.at(r).connected, connected_components(sub).size() == 1);
  }
}

TEST(RichClubProfile, OneMissingEdgeAmongTenHubs) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = t::one_missing_edge_club(seed);
    const auto profile = rich_club_profile(g);
    EXPECT_DOUBLE_EQ(profile.at(10).phi, 44.0 / 45.0);
    EXPECT_EQ(profile.at(10).internal_edges, 44u);
    const auto club = detect_rich_club(profile, 0.95, 3);
    ASSERT_TRUE(club.has_value());
    EXPECT_EQ(club->size, 10u);
    EXPECT_EQ(club->missing_edges, 1u);
    EXPECT_EQ(club->diameter, 2);
  }
}

TEST(DetectRichClub, PlantedCliqueIsRecovered) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = t::planted_rich_club(60, 8, 0.1, 0.2 / 0.9, seed);
    const auto club = detect_rich_club(g, 0.95, 3);
    ASSERT_TRUE(club.has_value()) << seed;
    EXPECT_EQ(club->size, 8u) << seed;
    auto members = club->members;
    std::sort(members.begin(), members.end());
    EXPECT_EQ(members, (VertexSet{0, 1, 2, 3, 4, 5, 6, 7})) << seed;
    ASSERT_TRUE(club->next_phi.has_value());
    EXPECT_LT(*club->next_phi, 0.95);
  }
}

TEST(DetectRichClub, ThresholdAboveOneFindsNothing) {
  EXPECT_FALSE(detect_rich_club(t::complete(6), 1.01, 3).has_value());
  EXPECT_EQ(detect_rich_club(t::complete(6), 1.0, 3)->size, 6u);
}

TEST(DetectRichClub, SparseRandomGraphsUsuallyHaveNone) {
  // false positives are top-3 triangles, about one sample in ten
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    if (const auto club = detect_rich_club(t::random_graph(51, 0.2, seed), 0.95, 3)) {
      ++found;
      EXPECT_LE(club->size, 4u) << seed;
    }
  EXPECT_LE(found, 30u);
}

TEST(DetectRichClub, RejectsBadParameters) {
  const auto profile = rich_club_profile(t::complete(5));
  EXPECT_THROW(detect_rich_club(profile, 0.0, 3), Error);
  EXPECT_THROW(detect_rich_club(profile, 0.9, 1), Error);
}

TEST(CentralityByDegree, RowsFollowDegreeOrder) {
  const auto g = t::star(4);
  const auto rows = centrality_by_degree_report(g);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].vertex, 0u);
  EXPECT_EQ(rows[0].degree, 4u);
  EXPECT_DOUBLE_EQ(rows[0].betweenness, 6.0);
  EXPECT_DOUBLE_EQ(rows[0].closeness, 1.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].rank, i + 1);
    EXPECT_EQ(rows[i].betweenness, 0.0);
  }
}
