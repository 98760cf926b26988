#include "doctest.h"

#include "konig/errors.hpp"
#include "konig/koenig.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace konig;
using testutil::complete_graph;
using testutil::cycle_graph;
using testutil::edgeless_graph;
using testutil::counterexample14_graph;
using testutil::counterexample14_matching;
using testutil::random_graph;

TEST_CASE("recognition on the fixtures") {
  auto c4 = koenig_witness(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK(c4->cover == VertexSet{1, 3});
  CHECK(c4->matching.size() == 2);
  CHECK(check_witness(cycle_graph(4), *c4));

  CHECK_FALSE(is_koenig(complete_graph(3)));
  CHECK(is_koenig(edgeless_graph(3)));
  CHECK(is_koenig(cycle_graph(6)));
  CHECK_FALSE(is_koenig(cycle_graph(5)));

  Graph cx14 = counterexample14_graph();
  CHECK_FALSE(is_koenig(cx14));
  Graph fixed = delete_edges(cx14, EdgeSet{{3, 4}, {5, 6}});
  auto w = koenig_witness(fixed);
  REQUIRE(w.has_value());
  CHECK(check_witness(fixed, *w));
}

TEST_CASE("check_witness rejects bad certificates") {
  Graph c4 = cycle_graph(4);
  CHECK(check_witness(
      c4, KoenigWitness{VertexSet{1, 3},
                        Matching::checked(c4, EdgeSet{{1, 2}, {3, 4}})}));
  // {1,2} leaves edge {3,4} uncovered.
  CHECK_FALSE(check_witness(
      c4, KoenigWitness{VertexSet{1, 2},
                        Matching::checked(c4, EdgeSet{{1, 4}, {2, 3}})}));
  Graph k3 = complete_graph(3);
  // |M| != |S|.
  CHECK_FALSE(check_witness(
      k3, KoenigWitness{VertexSet{1, 2}, Matching::checked(k3, EdgeSet{{1, 3}})}));
  // Matching edge inside the cover.
  CHECK_FALSE(check_witness(
      c4, KoenigWitness{VertexSet{1, 2},
                        Matching::checked(c4, EdgeSet{{1, 2}, {3, 4}})}));
}

TEST_CASE("recognition agrees with the definition oracle") {
  // Exhaustive on all graphs with 5 vertices.
  std::vector<Edge> all;
  for (int u = 1; u <= 5; ++u)
    for (int v = u + 1; v <= 5; ++v) all.push_back({u, v});
  for (long long mask = 0; mask < (1 << 10); ++mask) {
    std::vector<Edge> es;
    for (int i = 0; i < 10; ++i)
      if (mask >> i & 1) es.push_back(all[i]);
    Graph g = Graph::from_edges(5, es);
    bool lp_route = is_koenig(g);
    bool oracle = oracles::exhaust_mu(g) ==
                  static_cast<int>(brute_force_min_vc(g).size());
    CHECK(lp_route == oracle);
    if (lp_route) CHECK(check_witness(g, *koenig_witness(g)));
  }
  // Seeded random graphs up to 10 vertices.
  for (uint64_t seed = 0; seed < 60; ++seed) {
    int n = 6 + static_cast<int>(seed % 5);
    Graph g = random_graph(n, 1 + seed % 3, 4, 60000 + seed);
    bool lp_route = is_koenig(g);
    bool oracle = oracles::exhaust_mu(g) ==
                  static_cast<int>(brute_force_min_vc(g).size());
    CHECK(lp_route == oracle);
  }
}

TEST_CASE("brute_force_min_vc") {
  CHECK(brute_force_min_vc(complete_graph(3)) == VertexSet{1, 2});
  CHECK(brute_force_min_vc(cycle_graph(5)).size() == 3);
  CHECK(brute_force_min_vc(cycle_graph(5)) == VertexSet{1, 2, 4});
  CHECK(brute_force_min_vc(edgeless_graph(4)).empty());

  Graph fixed = delete_edges(counterexample14_graph(), EdgeSet{{3, 4}, {5, 6}});
  CHECK(brute_force_min_vc(fixed).size() == 6);
  CHECK(maximum_matching(fixed).size() == 6);

  CHECK_THROWS_AS(brute_force_min_vc(edgeless_graph(27)), GuardError);
}

TEST_CASE("brute_force_min_ked") {
  auto k3 = brute_force_min_ked(complete_graph(3), 1);
  REQUIRE(k3.has_value());
  CHECK(*k3 == EdgeSet{{1, 2}});

  auto c4 = brute_force_min_ked(cycle_graph(4), 0);
  REQUIRE(c4.has_value());
  CHECK(c4->empty());

  CHECK_FALSE(brute_force_min_ked(complete_graph(3), 0).has_value());

  // Deleting everything always works.
  Graph g = random_graph(6, 2, 3, 123);
  auto all = brute_force_min_ked(g, static_cast<int>(g.edge_count()));
  CHECK(all.has_value());

  // Monotone in k: absent at k implies absent below.
  for (uint64_t seed = 0; seed < 15; ++seed) {
    Graph h = random_graph(6, 2, 3, 321 + seed);
    int first_yes = -1;
    for (int k = 0; k <= 3; ++k) {
      bool yes = brute_force_min_ked(h, k).has_value();
      if (yes && first_yes < 0) first_yes = k;
      if (first_yes >= 0) CHECK(yes);
    }
  }
}

TEST_CASE("counterexample fixture facts") {
  Graph cx14 = counterexample14_graph();
  Matching declared = Matching::checked(cx14, counterexample14_matching());

  // Unique maximum matching of size 7.
  auto maxima = oracles::all_maximum_matchings(cx14);
  REQUIRE(maxima.size() == 1);
  CHECK(maxima[0] == declared.edges());
  CHECK(maximum_matching(cx14).edges() == declared.edges());

  CHECK_FALSE(is_koenig(cx14));

  // Minimum deletion size is exactly two.
  CHECK_FALSE(brute_force_min_ked(cx14, 1).has_value());
  auto best = brute_force_min_ked(cx14, 2);
  REQUIRE(best.has_value());
  CHECK(best->size() == 2);

  // Every size-2 solution intersects the matching.
  const auto& edges = cx14.edges().edges();
  int solutions = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      EdgeSet f{edges[i], edges[j]};
      if (koenig_by_definition(delete_edges(cx14, f))) {
        ++solutions;
        bool hits_m = declared.edges().contains(edges[i]) ||
                      declared.edges().contains(edges[j]);
        CHECK(hits_m);
      }
    }
  }
  CHECK(solutions > 0);

  // No solution avoiding the matching, for any budget up to 2.
  for (int k = 0; k <= 2; ++k) {
    CHECK_FALSE(brute_force_min_ked_dfm(cx14, declared, k).has_value());
  }
}

TEST_CASE("brute_force_min_ked_dfm") {
  Graph k3 = complete_graph(3);
  Matching m = Matching::checked(k3, EdgeSet{{1, 2}});
  auto f = brute_force_min_ked_dfm(k3, m, 1);
  REQUIRE(f.has_value());
  CHECK(*f == EdgeSet{{1, 3}});
  CHECK(is_koenig(delete_edges(k3, *f)));

  Graph c4 = cycle_graph(4);
  Matching pm = Matching::checked(c4, EdgeSet{{1, 2}, {3, 4}});
  auto none_needed = brute_force_min_ked_dfm(c4, pm, 0);
  REQUIRE(none_needed.has_value());
  CHECK(none_needed->empty());

  // Non-maximum declared matchings are rejected.
  CHECK_THROWS_AS(brute_force_min_ked_dfm(c4, Matching::checked(c4, EdgeSet{{1, 2}}), 1),
                  std::invalid_argument);
}

TEST_CASE("oracle guards") {
  // C(780, 4) blows past the enumeration guard.
  Graph k40 = complete_graph(40);
  CHECK_THROWS_AS(brute_force_min_ked(k40, 4), GuardError);
}
