#include "konig/koenig.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "konig/errors.hpp"

namespace konig {

namespace {

constexpr long long kEnumerationGuard = 100'000'000;

// Sum of C(m, s) for s <= k, saturating at the guard threshold.
long long cumulative_binomial(int m, int k) {
  long long total = 0;
  long long current = 1;  // C(m, 0)
  for (int s = 0; s <= k; ++s) {
    total += current;
    if (total > kEnumerationGuard) return kEnumerationGuard + 1;
    if (s == k) break;
    if (current > kEnumerationGuard) return kEnumerationGuard + 1;
    current = current * (m - s) / (s + 1);
  }
  return total;
}

// Calls fn on every size-s index combination of {0,..,m-1} in
// lexicographic order until fn returns true.
template <typename Fn>
bool for_each_combination(int m, int s, Fn&& fn) {
  if (s > m) return false;
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  for (;;) {
    if (fn(idx)) return true;
    int i = s - 1;
    while (i >= 0 && idx[i] == m - s + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool covers_all_edges(const Graph& g, const std::vector<char>& in_cover) {
  for (const Edge& e : g.edges()) {
    if (!in_cover[e.u] && !in_cover[e.v]) return false;
  }
  return true;
}

bool cover_branch(std::vector<uint64_t>& adj, int n, int budget) {
  int first = 0;
  for (int v = 1; v <= n; ++v) {
    if (adj[v] != 0) {
      first = v;
      break;
    }
  }
  if (first == 0) return true;
  if (budget == 0) return false;
  int other = __builtin_ctzll(adj[first]) + 1;
  for (int pick : {first, other}) {
    std::vector<uint64_t> next = adj;
    uint64_t bit = 1ull << (pick - 1);
    for (int v = 1; v <= n; ++v) next[v] &= ~bit;
    next[pick] = 0;
    if (cover_branch(next, n, budget - 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<KoenigWitness> koenig_witness(const Graph& g) {
  HalfIntegralVC sol = nt_decomposition(g);
  if (!sol.s_half().empty()) return std::nullopt;
  auto m = saturating_cut_matching(g, sol.s1());
  if (!m) {
    throw std::logic_error("integral LP optimum without a saturating matching");
  }
  return KoenigWitness{sol.s1(), *m};
}

bool is_koenig(const Graph& g) { return koenig_witness(g).has_value(); }

bool check_witness(const Graph& g, const KoenigWitness& w) {
  for (int v : w.cover) {
    if (v < 1 || v > g.vertex_count()) return false;
  }
  std::vector<char> in_cover(g.vertex_count() + 1, 0);
  for (int v : w.cover) in_cover[v] = 1;
  if (!covers_all_edges(g, in_cover)) return false;
  if (!is_matching(g, w.matching.edges())) return false;
  if (w.matching.size() != w.cover.size()) return false;
  std::vector<char> saturated(g.vertex_count() + 1, 0);
  for (const Edge& e : w.matching.edges()) {
    if (in_cover[e.u] + in_cover[e.v] != 1) return false;
    saturated[e.u] = saturated[e.v] = 1;
  }
  for (int v : w.cover) {
    if (!saturated[v]) return false;
  }
  return true;
}

VertexSet brute_force_min_vc(const Graph& g) {
  int n = g.vertex_count();
  if (n > 26) {
    throw GuardError("minimum vertex cover oracle limited to 26 vertices");
  }
  for (int s = 0; s <= n; ++s) {
    std::optional<std::vector<int>> found;
    for_each_combination(n, s, [&](const std::vector<int>& idx) {
      std::vector<char> in_cover(n + 1, 0);
      for (int i : idx) in_cover[i + 1] = 1;
      if (covers_all_edges(g, in_cover)) {
        found.emplace();
        for (int i : idx) found->push_back(i + 1);
        return true;
      }
      return false;
    });
    if (found) return VertexSet(std::move(*found));
  }
  throw std::logic_error("vertex cover search fell through");
}

bool exists_cover_of_size(const Graph& g, std::size_t s) {
  int n = g.vertex_count();
  if (n > 63) throw GuardError("cover search limited to 63 vertices");
  std::vector<uint64_t> adj(n + 1, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1ull << (e.v - 1);
    adj[e.v] |= 1ull << (e.u - 1);
  }
  return cover_branch(adj, n, static_cast<int>(s));
}

bool koenig_by_definition(const Graph& g) {
  std::size_t mu = maximum_matching(g).size();
  return exists_cover_of_size(g, mu);
}

namespace {

std::optional<EdgeSet> min_deletion_over(const Graph& g,
                                         const std::vector<Edge>& candidates,
                                         int k) {
  int m = static_cast<int>(candidates.size());
  k = std::min(k, m);
  if (cumulative_binomial(m, k) > kEnumerationGuard) {
    throw GuardError("edge deletion oracle: instance too large for oracle");
  }
  for (int s = 0; s <= k; ++s) {
    std::optional<EdgeSet> found;
    for_each_combination(m, s, [&](const std::vector<int>& idx) {
      std::vector<Edge> del;
      del.reserve(s);
      for (int i : idx) del.push_back(candidates[i]);
      EdgeSet f(std::move(del));
      if (koenig_by_definition(delete_edges(g, f))) {
        found = std::move(f);
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<EdgeSet> brute_force_min_ked(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  return min_deletion_over(g, g.edges().edges(), k);
}

std::optional<EdgeSet> brute_force_min_ked_dfm(const Graph& g,
                                               const Matching& m, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (!is_matching(g, m.edges())) {
    throw std::invalid_argument("not a matching of the graph");
  }
  if (m.size() != maximum_matching(g).size()) {
    throw std::invalid_argument("matching is not maximum");
  }
  std::vector<Edge> candidates;
  for (const Edge& e : g.edges()) {
    if (!m.edges().contains(e)) candidates.push_back(e);
  }
  return min_deletion_over(g, candidates, k);
}

}  // namespace konig
