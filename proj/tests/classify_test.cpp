#include <gtest/gtest.h>

#include "mnt/classify.hpp"
#include "mnt/constructions.hpp"
#include "mnt/search.hpp"
#include "oracles.hpp"

namespace mnt {
namespace {

std::optional<Edge> oracle_first_failure(const Graph& g, bool cycle) {
  for (const Edge& e : non_edges(g)) {
    if (!oracle::has_spanning(oracle::matrix(g.with_edge(e.u, e.v)), cycle)) return e;
  }
  return std::nullopt;
}

TEST(Classify, PetersenIsMnhButNotMnt) {
  const auto r = classify(named("petersen"));
  EXPECT_TRUE(r.traceable);
  EXPECT_FALSE(r.hamiltonian);
  EXPECT_EQ(r.mnt, false);
  EXPECT_EQ(r.mnh, true);
  EXPECT_FALSE(r.mnt_failing_edge.has_value());
  EXPECT_FALSE(r.mnh_failing_edge.has_value());
  ASSERT_TRUE(r.path_witness.has_value());
  EXPECT_TRUE(is_valid_witness(named("petersen"), *r.path_witness));
  EXPECT_FALSE(r.cycle_witness.has_value());
}

TEST(Classify, PartialReportsLeaveOtherPropertyUnset) {
  EXPECT_FALSE(is_mnt(named("paw")).mnh.has_value());
  EXPECT_FALSE(is_mnh(named("paw")).mnt.has_value());
  EXPECT_TRUE(classify(named("paw")).mnt.has_value());
  EXPECT_TRUE(classify(named("paw")).mnh.has_value());
}

TEST(Classify, SmallKnownCases) {
  EXPECT_EQ(is_mnh(named("paw")).mnh, true);
  EXPECT_EQ(is_mnt(disjoint_cliques(3, 4)).mnt, true);
  EXPECT_EQ(is_mnt(disjoint_cliques(1, 1)).mnt, true);
  EXPECT_EQ(is_mnt(named("complete_5")).mnt, false);
  EXPECT_EQ(is_mnh(named("complete_5")).mnh, false);

  const auto star = is_mnt(named("star_3"));
  EXPECT_EQ(star.mnt, true);  // K_{1,3}: any added edge creates a spanning path

  const auto three = is_mnt(Graph(3));
  EXPECT_EQ(three.mnt, false);
  ASSERT_TRUE(three.mnt_failing_edge.has_value());
  EXPECT_EQ(*three.mnt_failing_edge, Edge(0, 1));

  const auto c5 = is_mnh(named("cycle_5"));
  EXPECT_EQ(c5.mnh, false);
  EXPECT_FALSE(c5.mnh_failing_edge.has_value());  // hamiltonian, so no failing edge
}

TEST(Classify, FailuresListEveryBadEdge) {
  const Graph p4 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}});  // P4 plus isolated 4
  EXPECT_EQ(mnt_failures(p4).size(), non_edges(p4).size() - 2);  // only 0-4 and 3-4 help
  EXPECT_TRUE(mnt_failures(named("path_4")).empty());              // traceable
  EXPECT_TRUE(mnh_failures(named("petersen")).empty());
  const auto fails = mnh_failures(named("path_4"));
  EXPECT_EQ(fails, (std::vector<Edge>{{0, 2}, {1, 3}}));
}

TEST(Classify, AgreesWithDefinitionOnAllClassesUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      for (const Graph& g : enumerate_classes(n, m, false)) {
        const auto a = oracle::matrix(g);
        const auto r = classify(g);
        ASSERT_EQ(r.mnt, oracle::mnt(a)) << to_graph6(g);
        ASSERT_EQ(r.mnh, oracle::mnh(a)) << to_graph6(g);
        if (!r.traceable) EXPECT_EQ(r.mnt_failing_edge, oracle_first_failure(g, false)) << to_graph6(g);
        if (!r.hamiltonian) EXPECT_EQ(r.mnh_failing_edge, oracle_first_failure(g, true)) << to_graph6(g);
      }
    }
  }
}

TEST(Classify, DisconnectedMntGraphsAreTwoCliques) {
  for (int n = 2; n <= 7; ++n) {
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      for (const Graph& g : enumerate_classes(n, m, false)) {
        if (is_connected(g) || !is_mnt(g).mnt.value_or(false)) continue;
        const auto parts = components(g);
        ASSERT_EQ(parts.size(), 2U) << to_graph6(g);
        EXPECT_TRUE(induces_clique(g, parts[0]));
        EXPECT_TRUE(induces_clique(g, parts[1]));
      }
    }
  }
}

TEST(DkwEligible, AllPetersenEdges) {
  const Graph pet = named("petersen");
  const auto edges = dkw_eligible(pet);
  EXPECT_EQ(edges, pet.edges());
}

TEST(DkwEligible, EmptyForNonCubicOrNonMnh) {
  EXPECT_TRUE(dkw_eligible(named("cycle_6")).empty());
  // K4 is cubic but hamiltonian.
  EXPECT_TRUE(dkw_eligible(named("complete_4")).empty());
  // K_{3,3} is cubic and hamiltonian as well.
  const Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_TRUE(dkw_eligible(k33).empty());
}

// Independent check of the two conditions for a few Petersen edges: no common
// neighbour, and each G+e has a Hamiltonian cycle through y1y2, found by
// permuting the other vertices between y1 and y2.
TEST(DkwEligible, ConditionsMatchBruteForce) {
  const Graph pet = named("petersen");
  for (const Edge y : {Edge(0, 1), Edge(0, 5), Edge(5, 7)}) {
    EXPECT_TRUE((pet.neighbors(y.u) & pet.neighbors(y.v)).empty());
    for (const Edge& e : non_edges(pet)) {
      const auto a = oracle::matrix(pet.with_edge(e.u, e.v));
      std::vector<int> rest;
      for (int w = 0; w < 10; ++w) {
        if (w != y.u && w != y.v) rest.push_back(w);
      }
      bool found = false;
      do {
        bool ok = a[y.u][rest.front()] && a[rest.back()][y.v];
        for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = a[rest[i]][rest[i + 1]];
        found = ok;
      } while (!found && std::next_permutation(rest.begin(), rest.end()));
      EXPECT_TRUE(found) << to_string(y) << " + " << to_string(e);
    }
    EXPECT_TRUE(dkw_edge_conditions_hold(pet, y));
  }
}

TEST(DkwEligible, CommonNeighbourDisqualifies) {
  // In K4 every edge has common neighbours.
  EXPECT_FALSE(dkw_edge_conditions_hold(named("complete_4"), Edge(0, 1)));
}

}  // namespace
}  // namespace mnt
