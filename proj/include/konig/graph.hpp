#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace konig {

// Undirected edge, kept normalized with u < v. Vertices are 1-indexed.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Builds a normalized edge; throws std::invalid_argument on a self-loop.
Edge make_edge(int a, int b);

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> ids);
  VertexSet(std::initializer_list<int> ids);

  bool contains(int v) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<int> ids_;
};

// Sorted, duplicate-free set of normalized edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);
  EdgeSet(std::initializer_list<Edge> edges);

  bool contains(const Edge& e) const;
  bool contains(int u, int v) const;
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<Edge> edges_;
};

// Simple undirected graph on vertices 1..n. Immutable after construction;
// all operations below are pure functions, so values can be shared freely
// across threads.
class Graph {
 public:
  Graph() = default;

  // Validates endpoints, rejects self-loops and duplicate edges.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const EdgeSet& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  // Sorted neighbor list; throws std::invalid_argument if v is out of range.
  const std::vector<int>& adjacency(int v) const;
  int degree(int v) const;

 private:
  int n_ = 0;
  EdgeSet edges_;
  std::vector<std::vector<int>> adj_;
};

// Returns the graph on the same vertex set with the edges of f removed.
// Throws std::invalid_argument if f contains a non-edge of g.
Graph delete_edges(const Graph& g, const EdgeSet& f);

// Edges of g with one endpoint in a and the other in b. The sets may
// overlap; cut_edges(g, a, a) yields the edges inside a.
EdgeSet cut_edges(const Graph& g, const VertexSet& a, const VertexSet& b);

// Neighbors of v as a VertexSet.
VertexSet neighbors(const Graph& g, int v);

}  // namespace konig
