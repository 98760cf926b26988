#pragma once

#include <optional>
#include <string>
#include <vector>

#include "konig/graph.hpp"
#include "konig/matching.hpp"
#include "konig/twosat.hpp"

namespace konig {

// Konig-edge-deletion instance produced from an independent-set instance.
// Layout is fixed so reduced instances are byte-reproducible: originals
// keep 1..n, pendant of v is n+v, and the hub takes 2n+1..2n+2k.
class KedInstance {
 public:
  KedInstance(Graph graph, int n_original, int k);

  const Graph& graph() const { return graph_; }
  int k() const { return k_; }
  int original_count() const { return n_original_; }
  int pendant_of(int v) const;
  VertexSet originals() const;
  VertexSet pendants() const;
  VertexSet hub() const;

 private:
  Graph graph_;
  int n_original_ = 0;
  int k_ = 0;
};

// Konig-edge-deletion-disjoint-from-matching instance: a graph together
// with a maximum matching and the deletion budget.
class KedDfmInstance {
 public:
  // Validates that matching is a maximum matching of graph.
  KedDfmInstance(Graph graph, Matching matching, int k);

  const Graph& graph() const { return graph_; }
  const Matching& matching() const { return matching_; }
  int k() const { return k_; }

 private:
  Graph graph_;
  Matching matching_;
  int k_ = 0;
};

// Independent set -> Konig edge deletion: adds a pendant to every original
// vertex and a hub of 2k independent vertices joined to all originals and
// pendants. The parameter is preserved. Requires k < n/2; larger budgets
// make the source instance trivially solvable and are rejected.
KedInstance reduce_is_to_ked(const Graph& g, int k);

// Forward solution map: an independent set I of size k becomes the pendant
// edges of its members. Verifies the result is a Konig edge deletion set
// before returning.
EdgeSet build_ked_from_is(const KedInstance& inst, const VertexSet& i);

// Backward solution map: the original endpoints of the pendant edges in f.
// Requires |f| = k and that f is a Konig edge deletion set of the instance.
VertexSet lift_ked_to_is(const KedInstance& inst, const EdgeSet& f);

// Literal vertices for formula-derived graphs: variable v owns vertices
// 2v-1 (positive literal) and 2v (negative literal).
int literal_vertex(const Literal& l);

struct A2SatReduction {
  KedDfmInstance instance;
  // The formula actually encoded (degenerate clauses normalized, units
  // eliminated when present).
  TwoCnf preprocessed;
  std::vector<std::string> warnings;
};

// Almost-2-SAT -> KED disjoint from matching. Clauses over the same two
// literals would collapse into one simple edge, so formulas with duplicate
// deletable clauses (multiplicity between 2 and k) are rejected. A clause
// (a|a) is treated as the singleton (a); tautologies (a|~a) are dropped
// with a warning.
A2SatReduction reduce_a2sat_to_keddfm(const TwoCnf& phi, int k);

// KED disjoint from matching -> Almost-2-SAT: (u|v) per edge, (~u|~v) per
// matching edge, (~v) per unsaturated vertex; matching-edge clauses of both
// kinds and unsaturated singletons carry multiplicity k+1.
TwoCnf reduce_keddfm_to_a2sat(const KedDfmInstance& inst);

// Deleted (u|v) clauses of reduce_keddfm_to_a2sat(inst) become deleted
// edges. Rejects deletions touching any duplicated (protected) clause.
// Verifies the result leaves a Konig graph before returning.
EdgeSet lift_a2sat_to_keddfm(const KedDfmInstance& inst,
                             const ClauseDeletionSet& d);

// Inverse direction: edge deletions become clause deletions.
ClauseDeletionSet lift_keddfm_to_a2sat(const KedDfmInstance& inst,
                                       const EdgeSet& f);

// End-to-end solver: reduce, run the exact Almost-2-SAT solver, lift, and
// verify. Returns a minimum-size deletion set of size <= k or nullopt.
std::optional<EdgeSet> solve_keddfm(const KedDfmInstance& inst);

// Demo path for independent set: solve via the reduction and the deletion
// oracle when k < n/2, by direct enumeration otherwise.
std::optional<VertexSet> solve_independent_set(const Graph& g, int k);

}  // namespace konig
