#include "oracles.hpp"

#include <algorithm>

namespace oracles {

using konig::Edge;
using konig::EdgeSet;
using konig::Graph;
using konig::Matching;
using konig::TwoCnf;
using konig::VertexSet;

namespace {

int mu_rec(const Graph& g, int v, std::vector<char>& used) {
  int n = g.vertex_count();
  while (v <= n && used[v]) ++v;
  if (v > n) return 0;
  // v stays unmatched...
  int best = mu_rec(g, v + 1, used);
  // ...or pairs with an unused neighbor.
  used[v] = 1;
  for (int u : g.adjacency(v)) {
    if (used[u]) continue;
    used[u] = 1;
    best = std::max(best, 1 + mu_rec(g, v + 1, used));
    used[u] = 0;
  }
  used[v] = 0;
  return best;
}

void collect_matchings(const Graph& g, int v, std::vector<char>& used,
                       std::vector<Edge>& current, std::size_t target,
                       std::vector<EdgeSet>& out) {
  int n = g.vertex_count();
  while (v <= n && used[v]) ++v;
  if (v > n) {
    if (current.size() == target) out.push_back(EdgeSet(current));
    return;
  }
  if (current.size() + static_cast<std::size_t>((n - v + 2) / 2) < target) {
    return;  // cannot reach the target size any more
  }
  collect_matchings(g, v + 1, used, current, target, out);
  used[v] = 1;
  for (int u : g.adjacency(v)) {
    if (used[u]) continue;
    used[u] = 1;
    current.push_back(konig::make_edge(v, u));
    collect_matchings(g, v + 1, used, current, target, out);
    current.pop_back();
    used[u] = 0;
  }
  used[v] = 0;
}

bool alternating_dfs(const Graph& g, const Matching& m, int even_end,
                     std::vector<char>& visited) {
  for (int w : g.adjacency(even_end)) {
    if (visited[w]) continue;
    if (m.mate(even_end) == w) continue;  // must leave on a non-matching edge
    int mate = m.mate(w);
    if (mate == 0) return true;  // reached another unsaturated vertex
    if (visited[mate]) continue;
    visited[w] = visited[mate] = 1;
    if (alternating_dfs(g, m, mate, visited)) return true;
    visited[w] = visited[mate] = 0;
  }
  return false;
}

}  // namespace

int exhaust_mu(const Graph& g) {
  std::vector<char> used(g.vertex_count() + 1, 0);
  return mu_rec(g, 1, used);
}

std::vector<EdgeSet> all_maximum_matchings(const Graph& g) {
  std::size_t mu = static_cast<std::size_t>(exhaust_mu(g));
  std::vector<char> used(g.vertex_count() + 1, 0);
  std::vector<Edge> current;
  std::vector<EdgeSet> out;
  collect_matchings(g, 1, used, current, mu, out);
  std::sort(out.begin(), out.end(),
            [](const EdgeSet& a, const EdgeSet& b) { return a.edges() < b.edges(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool has_augmenting_path(const Graph& g, const Matching& m) {
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (m.saturates(v)) continue;
    std::vector<char> visited(g.vertex_count() + 1, 0);
    visited[v] = 1;
    if (alternating_dfs(g, m, v, visited)) return true;
  }
  return false;
}

LpOracle lp_enumerate(const Graph& g) {
  int n = g.vertex_count();
  LpOracle best{2LL * n + 1, n + 1};
  std::vector<int> a(n + 1, 0);
  for (;;) {
    bool feasible = true;
    for (const Edge& e : g.edges()) {
      if (a[e.u] + a[e.v] < 2) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      long long value = 0;
      int half = 0;
      for (int v = 1; v <= n; ++v) {
        value += a[v];
        half += a[v] == 1;
      }
      if (value < best.value_twice) {
        best.value_twice = value;
        best.min_half = half;
      } else if (value == best.value_twice) {
        best.min_half = std::min(best.min_half, half);
      }
    }
    int i = 1;
    while (i <= n && a[i] == 2) a[i++] = 0;
    if (i > n) break;
    ++a[i];
  }
  return best;
}

bool truth_table_satisfiable(const TwoCnf& phi) {
  int n = phi.nvars();
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    konig::Assignment a(n + 1, false);
    for (int v = 1; v <= n; ++v) a[v] = (mask >> (v - 1)) & 1;
    if (konig::satisfies(phi, a)) return true;
  }
  return false;
}

std::optional<VertexSet> brute_independent_set(const Graph& g, int k) {
  int n = g.vertex_count();
  if (k > n) return std::nullopt;
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int pos, int next) -> bool {
    if (pos == k) return true;
    for (int v = next; v <= n; ++v) {
      bool ok = true;
      for (int j = 0; j < pos && ok; ++j) {
        if (g.has_edge(pick[j], v)) ok = false;
      }
      if (!ok) continue;
      pick[pos] = v;
      if (self(self, pos + 1, v + 1)) return true;
    }
    return false;
  };
  if (rec(rec, 0, 1)) return VertexSet(pick);
  return std::nullopt;
}

}  // namespace oracles
