#include "konig/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace konig {

namespace {

// Classic O(V^3) blossom search. `mate_[v] == 0` means unsaturated.
// During a search rooted at an unsaturated vertex, `parent_` holds the
// forest predecessor of odd-level vertices and `base_` the contracted
// blossom representative of each vertex.
class BlossomSolver {
 public:
  explicit BlossomSolver(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        mate_(n_ + 1, 0),
        parent_(n_ + 1, 0),
        base_(n_ + 1, 0),
        in_queue_(n_ + 1, false),
        in_blossom_(n_ + 1, false),
        seen_(n_ + 1, false) {}

  std::vector<int> run() {
    for (int v = 1; v <= n_; ++v) {
      if (mate_[v] == 0) find_augmenting_path(v);
    }
    return mate_;
  }

 private:
  int lca(int a, int b) {
    std::fill(seen_.begin(), seen_.end(), false);
    int cur = a;
    for (;;) {
      cur = base_[cur];
      seen_[cur] = true;
      if (mate_[cur] == 0) break;
      cur = parent_[mate_[cur]];
    }
    cur = b;
    for (;;) {
      cur = base_[cur];
      if (seen_[cur]) return cur;
      cur = parent_[mate_[cur]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void augment(int v) {
    while (v != 0) {
      int pv = parent_[v];
      int next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  bool find_augmenting_path(int root) {
    std::fill(parent_.begin(), parent_.end(), 0);
    std::fill(in_queue_.begin(), in_queue_.end(), false);
    for (int i = 0; i <= n_; ++i) base_[i] = i;

    std::vector<int> queue;
    queue.push_back(root);
    in_queue_[root] = true;

    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int to : g_.adjacency(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != 0 && parent_[mate_[to]] != 0)) {
          // Both ends even: an odd cycle closes, contract the blossom.
          int cur_base = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 1; i <= n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!in_queue_[i]) {
                in_queue_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == 0) {
          parent_[to] = v;
          if (mate_[to] == 0) {
            augment(to);
            return true;
          }
          if (!in_queue_[mate_[to]]) {
            in_queue_[mate_[to]] = true;
            queue.push_back(mate_[to]);
          }
        }
      }
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> in_queue_;
  std::vector<bool> in_blossom_;
  std::vector<bool> seen_;
};

Matching matching_from_mates(const Graph& g, const std::vector<int>& mate) {
  std::vector<Edge> edges;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (mate[v] > v) edges.push_back(Edge{v, mate[v]});
  }
  return Matching::checked(g, EdgeSet(std::move(edges)));
}

}  // namespace

Matching Matching::checked(const Graph& g, EdgeSet es) {
  std::vector<char> touched(g.vertex_count() + 1, 0);
  for (const Edge& e : es) {
    if (!g.edges().contains(e)) {
      throw std::invalid_argument("matching edge {" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) +
                                  "} is not an edge of the graph");
    }
    if (touched[e.u] || touched[e.v]) {
      throw std::invalid_argument("matching edges share vertex");
    }
    touched[e.u] = touched[e.v] = 1;
  }
  Matching m;
  m.edges_ = std::move(es);
  return m;
}

bool Matching::saturates(int v) const { return mate(v) != 0; }

int Matching::mate(int v) const {
  for (const Edge& e : edges_) {
    if (e.u == v) return e.v;
    if (e.v == v) return e.u;
  }
  return 0;
}

Matching maximum_matching(const Graph& g) {
  BlossomSolver solver(g);
  return matching_from_mates(g, solver.run());
}

bool is_matching(const Graph& g, const EdgeSet& m) {
  std::vector<char> touched(g.vertex_count() + 1, 0);
  for (const Edge& e : m) {
    if (!g.edges().contains(e)) return false;
    if (touched[e.u] || touched[e.v]) return false;
    touched[e.u] = touched[e.v] = 1;
  }
  return true;
}

VertexSet unsaturated_vertices(const Graph& g, const Matching& m) {
  if (!is_matching(g, m.edges())) {
    throw std::invalid_argument("not a matching of the graph");
  }
  std::vector<char> touched(g.vertex_count() + 1, 0);
  for (const Edge& e : m.edges()) touched[e.u] = touched[e.v] = 1;
  std::vector<int> out;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (!touched[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

std::optional<Matching> saturating_matching_between(const Graph& g,
                                                    const VertexSet& a,
                                                    const VertexSet& b) {
  for (int v : a) {
    if (b.contains(v)) {
      throw std::invalid_argument("saturating matching sets must be disjoint");
    }
  }
  EdgeSet cut = cut_edges(g, a, b);
  Graph restricted = Graph::from_edges(g.vertex_count(), cut.edges());
  Matching m = maximum_matching(restricted);
  if (m.size() != a.size()) return std::nullopt;
  return Matching::checked(g, m.edges());
}

std::optional<Matching> saturating_cut_matching(const Graph& g,
                                                const VertexSet& s) {
  std::vector<int> rest;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (!s.contains(v)) rest.push_back(v);
  }
  return saturating_matching_between(g, s, VertexSet(std::move(rest)));
}

}  // namespace konig
