#pragma once

#include <optional>

#include "konig/graph.hpp"

namespace konig {

// A set of pairwise vertex-disjoint edges of some host graph.
class Matching {
 public:
  Matching() = default;

  // Validates that es lies in g and is pairwise disjoint.
  static Matching checked(const Graph& g, EdgeSet es);

  const EdgeSet& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool saturates(int v) const;
  // Partner of v, or 0 when v is unsaturated.
  int mate(int v) const;
  bool operator==(const Matching&) const = default;

 private:
  EdgeSet edges_;
};

// Maximum-cardinality matching via augmenting paths with blossom
// contraction. Deterministic: roots are scanned in ascending order and the
// search queue follows the sorted adjacency lists.
Matching maximum_matching(const Graph& g);

// True iff m is a subset of E(g) whose edges are pairwise disjoint.
bool is_matching(const Graph& g, const EdgeSet& m);

// Vertices of g touched by no edge of m. Throws std::invalid_argument if m
// is not a matching of g.
VertexSet unsaturated_vertices(const Graph& g, const Matching& m);

// A matching inside cut_edges(g, s, V \ s) saturating every vertex of s,
// or nullopt when none exists.
std::optional<Matching> saturating_cut_matching(const Graph& g,
                                                const VertexSet& s);

// Same, restricted to edges between the disjoint sets a and b; saturates a.
std::optional<Matching> saturating_matching_between(const Graph& g,
                                                    const VertexSet& a,
                                                    const VertexSet& b);

}  // namespace konig
