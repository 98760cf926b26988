#include "konig/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "konig/errors.hpp"
#include "konig/koenig.hpp"

namespace konig {

KedInstance::KedInstance(Graph graph, int n_original, int k)
    : graph_(std::move(graph)), n_original_(n_original), k_(k) {
  if (n_original < 0 || k < 0) {
    throw std::invalid_argument("negative instance parameters");
  }
  if (graph_.vertex_count() != 2 * n_original + 2 * k) {
    throw std::invalid_argument("instance must have 2n + 2k vertices");
  }
}

int KedInstance::pendant_of(int v) const {
  if (v < 1 || v > n_original_) {
    throw std::invalid_argument("not an original vertex");
  }
  return n_original_ + v;
}

VertexSet KedInstance::originals() const {
  std::vector<int> ids(n_original_);
  for (int v = 1; v <= n_original_; ++v) ids[v - 1] = v;
  return VertexSet(std::move(ids));
}

VertexSet KedInstance::pendants() const {
  std::vector<int> ids(n_original_);
  for (int v = 1; v <= n_original_; ++v) ids[v - 1] = n_original_ + v;
  return VertexSet(std::move(ids));
}

VertexSet KedInstance::hub() const {
  std::vector<int> ids(2 * k_);
  for (int i = 0; i < 2 * k_; ++i) ids[i] = 2 * n_original_ + 1 + i;
  return VertexSet(std::move(ids));
}

KedDfmInstance::KedDfmInstance(Graph graph, Matching matching, int k)
    : graph_(std::move(graph)), matching_(std::move(matching)), k_(k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (!is_matching(graph_, matching_.edges())) {
    throw std::invalid_argument("declared matching is not a matching");
  }
  if (matching_.size() != maximum_matching(graph_).size()) {
    throw std::invalid_argument("declared matching is not maximum");
  }
}

KedInstance reduce_is_to_ked(const Graph& g, int k) {
  int n = g.vertex_count();
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (2 * k >= n) {
    throw std::invalid_argument(
        "reduction requires k < n/2; solve the independent set instance "
        "directly at this size");
  }
  std::vector<Edge> edges = g.edges().edges();
  for (int v = 1; v <= n; ++v) edges.push_back(Edge{v, n + v});
  for (int c = 2 * n + 1; c <= 2 * n + 2 * k; ++c) {
    for (int v = 1; v <= 2 * n; ++v) edges.push_back(make_edge(v, c));
  }
  return KedInstance(Graph::from_edges(2 * n + 2 * k, edges), n, k);
}

namespace {

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v : s) {
    for (int u : g.adjacency(v)) {
      if (u > v && s.contains(u)) return false;
    }
  }
  return true;
}

}  // namespace

EdgeSet build_ked_from_is(const KedInstance& inst, const VertexSet& i) {
  int n = inst.original_count();
  for (int v : i) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("independent set must use original vertices");
    }
  }
  if (static_cast<int>(i.size()) != inst.k()) {
    throw std::invalid_argument("independent set must have exactly k vertices");
  }
  for (int v : i) {
    for (int u : i) {
      if (u > v && inst.graph().has_edge(u, v)) {
        throw std::invalid_argument("set is not independent");
      }
    }
  }
  std::vector<Edge> del;
  for (int v : i) del.push_back(Edge{v, inst.pendant_of(v)});
  EdgeSet f(std::move(del));

  // Witness from the forward construction: cover = (V \ I) + hub, matched
  // by pendant pairs for V \ I, the first k hub vertices against I, and the
  // second k against the pendants of I.
  Graph reduced = delete_edges(inst.graph(), f);
  std::vector<int> cover_ids;
  std::vector<Edge> mate;
  for (int v = 1; v <= n; ++v) {
    if (!i.contains(v)) {
      cover_ids.push_back(v);
      mate.push_back(Edge{v, inst.pendant_of(v)});
    }
  }
  const VertexSet hub = inst.hub();
  const auto& hub_ids = hub.ids();
  for (int c : hub_ids) cover_ids.push_back(c);
  const auto& picked = i.ids();
  for (int j = 0; j < inst.k(); ++j) {
    mate.push_back(make_edge(hub_ids[j], picked[j]));
    mate.push_back(make_edge(hub_ids[inst.k() + j],
                             inst.pendant_of(picked[j])));
  }
  KoenigWitness w{VertexSet(std::move(cover_ids)),
                  Matching::checked(reduced, EdgeSet(std::move(mate)))};
  if (!check_witness(reduced, w)) {
    throw std::logic_error("forward construction produced an invalid witness");
  }
  return f;
}

VertexSet lift_ked_to_is(const KedInstance& inst, const EdgeSet& f) {
  if (static_cast<int>(f.size()) != inst.k()) {
    throw std::invalid_argument("deletion set must have exactly k edges");
  }
  Graph reduced = delete_edges(inst.graph(), f);
  if (!is_koenig(reduced)) {
    throw std::invalid_argument("not a Konig edge deletion set of the instance");
  }
  std::vector<int> ids;
  int n = inst.original_count();
  for (const Edge& e : f) {
    if (e.u >= 1 && e.u <= n && e.v == inst.pendant_of(e.u)) {
      ids.push_back(e.u);
    }
  }
  VertexSet result(std::move(ids));
  if (static_cast<int>(result.size()) != inst.k() ||
      !is_independent(inst.graph(), result)) {
    throw std::invalid_argument(
        "deletion set does not induce a k-sized independent set");
  }
  return result;
}

int literal_vertex(const Literal& l) { return 2 * l.var - (l.neg ? 0 : 1); }

A2SatReduction reduce_a2sat_to_keddfm(const TwoCnf& phi, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  std::vector<std::string> warnings;

  // Degenerate forms first: (a|a) is the singleton (a); (a|~a) always
  // holds and is dropped.
  TwoCnf normalized(phi.nvars());
  bool has_unit = false;
  for (const auto& entry : phi.entries()) {
    const Clause& c = entry.clause;
    if (c.second && c.first.var == c.second->var) {
      if (c.first.neg == c.second->neg) {
        normalized.add(Clause::unit(c.first), entry.multiplicity);
        has_unit = true;
      } else {
        warnings.push_back("dropped tautological clause on variable " +
                           std::to_string(c.first.var));
      }
      continue;
    }
    if (c.is_unit()) has_unit = true;
    normalized.add(c, entry.multiplicity);
  }

  TwoCnf prepared = has_unit ? eliminate_unit_clauses(normalized, k) : normalized;

  std::vector<Edge> edges;
  for (int v = 1; v <= prepared.nvars(); ++v) {
    edges.push_back(Edge{literal_vertex(pos(v)), literal_vertex(neg(v))});
  }
  std::vector<Edge> matching_edges = edges;
  for (const auto& entry : prepared.entries()) {
    const Clause& c = entry.clause;
    if (entry.multiplicity >= 2 && entry.multiplicity <= k) {
      throw std::invalid_argument(
          "duplicate deletable clause cannot be represented as a simple edge");
    }
    edges.push_back(make_edge(literal_vertex(c.first),
                              literal_vertex(*c.second)));
  }
  Graph graph = Graph::from_edges(2 * prepared.nvars(), edges);
  Matching m = Matching::checked(graph, EdgeSet(std::move(matching_edges)));
  return A2SatReduction{KedDfmInstance(std::move(graph), std::move(m), k),
                        std::move(prepared), std::move(warnings)};
}

TwoCnf reduce_keddfm_to_a2sat(const KedDfmInstance& inst) {
  const Graph& g = inst.graph();
  int k = inst.k();
  TwoCnf phi(g.vertex_count());
  for (const Edge& e : g.edges()) {
    bool in_m = inst.matching().edges().contains(e);
    phi.add(Clause::pair(pos(e.u), pos(e.v)), in_m ? k + 1 : 1);
  }
  for (const Edge& e : inst.matching().edges()) {
    phi.add(Clause::pair(neg(e.u), neg(e.v)), k + 1);
  }
  for (int v : unsaturated_vertices(g, inst.matching())) {
    phi.add(Clause::unit(neg(v)), k + 1);
  }
  return phi;
}

EdgeSet lift_a2sat_to_keddfm(const KedDfmInstance& inst,
                             const ClauseDeletionSet& d) {
  TwoCnf phi = reduce_keddfm_to_a2sat(inst);
  std::vector<Edge> del;
  for (const auto& item : d.items) {
    if (item.index < 0 || item.index >= static_cast<int>(phi.identity_count())) {
      throw std::invalid_argument("deletion index out of range");
    }
    const auto& entry = phi.entries()[item.index];
    const Clause& c = entry.clause;
    if (entry.multiplicity != 1 || c.is_unit() || c.first.neg ||
        c.second->neg) {
      throw std::invalid_argument("deletion touches a protected clause");
    }
    if (item.count != 1) {
      throw std::invalid_argument("deletion count exceeds clause multiplicity");
    }
    Edge e = make_edge(c.first.var, c.second->var);
    if (inst.matching().edges().contains(e)) {
      throw std::invalid_argument("deletion maps to a matching edge");
    }
    del.push_back(e);
  }
  EdgeSet f(std::move(del));
  if (f.size() != d.items.size()) {
    throw std::invalid_argument("deletions map to a repeated edge");
  }
  if (!is_koenig(delete_edges(inst.graph(), f))) {
    throw std::logic_error("lifted deletion set does not leave a Konig graph");
  }
  return f;
}

ClauseDeletionSet lift_keddfm_to_a2sat(const KedDfmInstance& inst,
                                       const EdgeSet& f) {
  TwoCnf phi = reduce_keddfm_to_a2sat(inst);
  ClauseDeletionSet d;
  for (const Edge& e : f) {
    if (!inst.graph().edges().contains(e)) {
      throw std::invalid_argument("deletion set contains a non-edge");
    }
    if (inst.matching().edges().contains(e)) {
      throw std::invalid_argument("deletion set intersects the matching");
    }
    int idx = phi.find(Clause::pair(pos(e.u), pos(e.v)));
    if (idx < 0) throw std::logic_error("edge clause missing from reduction");
    d.items.push_back({idx, 1});
  }
  std::sort(d.items.begin(), d.items.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  return d;
}

std::optional<EdgeSet> solve_keddfm(const KedDfmInstance& inst) {
  TwoCnf phi = reduce_keddfm_to_a2sat(inst);
  auto d = almost_2sat(phi, inst.k());
  if (!d) return std::nullopt;
  return lift_a2sat_to_keddfm(inst, *d);
}

std::optional<VertexSet> solve_independent_set(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  int n = g.vertex_count();
  if (k == 0) return VertexSet{};
  if (k > n) return std::nullopt;
  if (2 * k >= n) {
    // Small-parameter regime of the reduction is unavailable; enumerate.
    if (n > 26) throw GuardError("independent set fallback limited to 26 vertices");
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
  KedInstance inst = reduce_is_to_ked(g, k);
  auto f = brute_force_min_ked(inst.graph(), k);
  if (!f) return std::nullopt;
  return lift_ked_to_is(inst, *f);
}

}  // namespace konig
