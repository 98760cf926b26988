#pragma once

#include <optional>

#include "konig/graph.hpp"
#include "konig/lp.hpp"
#include "konig/matching.hpp"

namespace konig {

// Certificate that a graph is Konig: a vertex cover S and a matching lying
// across (S, V \ S) that saturates S, with |M| = |S|.
struct KoenigWitness {
  VertexSet cover;
  Matching matching;
};

// Konig recognition through the LP route: the graph is Konig iff the
// minimum-half decomposition has no 1/2 vertices; the witness is then
// (S1, a matching saturating S1 across the cut).
std::optional<KoenigWitness> koenig_witness(const Graph& g);
bool is_koenig(const Graph& g);

// All witness invariants: cover is a vertex cover, matching is a matching
// of g with exactly one endpoint of each edge in the cover, the matching
// saturates the cover, and |M| = |S|.
bool check_witness(const Graph& g, const KoenigWitness& w);

// Minimum vertex cover by subset enumeration (size-ascending, then
// lexicographic, so the result is the lexicographically least minimum).
// Guard: n <= 26.
VertexSet brute_force_min_vc(const Graph& g);

// True iff g has a vertex cover of size at most s. Exhaustive branching on
// an uncovered edge; independent of the LP and blossom routes.
bool exists_cover_of_size(const Graph& g, std::size_t s);

// Definition-route Konig test: blossom matching size vs. exhaustive cover
// search. Used by the deletion oracles below.
bool koenig_by_definition(const Graph& g);

// Minimum Konig edge deletion set of size <= k, or nullopt. Enumerates
// edge subsets size-ascending then lexicographically on the canonical edge
// order. Guard: sum of C(|E|, s) for s <= k must stay below 10^8.
std::optional<EdgeSet> brute_force_min_ked(const Graph& g, int k);

// Same, restricted to subsets of E \ M for a given maximum matching m.
// Throws std::invalid_argument if m is not a maximum matching of g.
std::optional<EdgeSet> brute_force_min_ked_dfm(const Graph& g,
                                               const Matching& m, int k);

}  // namespace konig
