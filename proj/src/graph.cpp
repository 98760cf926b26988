#include "konig/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace konig {

Edge make_edge(int a, int b) {
  if (a == b) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::initializer_list<int> ids)
    : VertexSet(std::vector<int>(ids)) {}

bool VertexSet::contains(int v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

EdgeSet::EdgeSet(std::initializer_list<Edge> edges)
    : EdgeSet(std::vector<Edge>(edges)) {}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool EdgeSet::contains(int u, int v) const { return contains(make_edge(u, v)); }

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.n_ = n;
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    Edge ne = make_edge(e.u, e.v);
    if (ne.u < 1 || ne.v > n) {
      throw std::invalid_argument("edge endpoint out of range: {" +
                                  std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
    }
    normalized.push_back(ne);
  }
  std::sort(normalized.begin(), normalized.end());
  if (std::adjacent_find(normalized.begin(), normalized.end()) !=
      normalized.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  g.edges_ = EdgeSet(std::move(normalized));
  g.adj_.assign(n + 1, {});
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return edges_.contains(u, v);
}

const std::vector<int>& Graph::adjacency(int v) const {
  if (v < 1 || v > n_) {
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  }
  return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(adjacency(v).size()); }

Graph delete_edges(const Graph& g, const EdgeSet& f) {
  for (const Edge& e : f) {
    if (!g.edges().contains(e)) {
      throw std::invalid_argument("deletion set contains non-edge {" +
                                  std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
    }
  }
  std::vector<Edge> rest;
  rest.reserve(g.edge_count() - f.size());
  for (const Edge& e : g.edges()) {
    if (!f.contains(e)) rest.push_back(e);
  }
  return Graph::from_edges(g.vertex_count(), rest);
}

EdgeSet cut_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (int v : a) {
    if (v < 1 || v > g.vertex_count())
      throw std::invalid_argument("cut set vertex out of range");
  }
  for (int v : b) {
    if (v < 1 || v > g.vertex_count())
      throw std::invalid_argument("cut set vertex out of range");
  }
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    bool ab = a.contains(e.u) && b.contains(e.v);
    bool ba = a.contains(e.v) && b.contains(e.u);
    if (ab || ba) out.push_back(e);
  }
  return EdgeSet(std::move(out));
}

VertexSet neighbors(const Graph& g, int v) {
  return VertexSet(g.adjacency(v));
}

}  // namespace konig
