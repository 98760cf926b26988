#pragma once

// Test-side oracles, kept independent of the library code paths they
// check: matchings by exhaustive recursion instead of blossom search, the
// LP by full {0,1/2,1}^n enumeration instead of the double cover, and
// 2-SAT by truth tables instead of SCCs.

#include <optional>
#include <vector>

#include "konig/graph.hpp"
#include "konig/matching.hpp"
#include "konig/twosat.hpp"

namespace oracles {

// Maximum matching size by branching on the lowest unsaturated vertex.
int exhaust_mu(const konig::Graph& g);

// All maximum matchings, as canonical edge sets.
std::vector<konig::EdgeSet> all_maximum_matchings(const konig::Graph& g);

// Exhaustive simple alternating-path search for an augmenting path.
bool has_augmenting_path(const konig::Graph& g, const konig::Matching& m);

struct LpOracle {
  long long value_twice = 0;
  int min_half = 0;
};

// Optimum of the vertex-cover LP over half-integral assignments, and the
// minimum number of 1/2 values among the optima. 3^n enumeration.
LpOracle lp_enumerate(const konig::Graph& g);

// Truth-table 2-SAT.
bool truth_table_satisfiable(const konig::TwoCnf& phi);

// Some independent set of size k, lexicographically least, or nullopt.
std::optional<konig::VertexSet> brute_independent_set(const konig::Graph& g,
                                                      int k);

}  // namespace oracles
