#include "konig/twosat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "konig/errors.hpp"

namespace konig {

Literal from_encoded(int lit) {
  if (lit == 0) throw std::invalid_argument("literal 0 is reserved");
  return lit > 0 ? pos(lit) : neg(-lit);
}

Clause Clause::pair(Literal a, Literal b) {
  if (b < a) std::swap(a, b);
  return Clause{a, b};
}

TwoCnf::TwoCnf(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
}

long long TwoCnf::copy_count() const {
  long long total = 0;
  for (const Entry& e : entries_) total += e.multiplicity;
  return total;
}

int TwoCnf::find(const Clause& c) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].clause == c) return static_cast<int>(i);
  }
  return -1;
}

void TwoCnf::add(const Clause& c, int multiplicity) {
  if (multiplicity <= 0) throw std::invalid_argument("multiplicity must be positive");
  auto check = [&](const Literal& l) {
    if (l.var < 1 || l.var > nvars_) {
      throw std::invalid_argument("variable out of range: " +
                                  std::to_string(l.var));
    }
  };
  check(c.first);
  if (c.second) check(*c.second);
  Clause canon = c.second ? Clause::pair(c.first, *c.second) : c;
  int idx = find(canon);
  if (idx >= 0) {
    entries_[idx].multiplicity += multiplicity;
  } else {
    entries_.push_back(Entry{canon, multiplicity});
  }
}

namespace {

// Implication-graph node ids: variable v maps to 2(v-1) for the positive
// literal and 2(v-1)+1 for the negative one.
int node_of(const Literal& l) { return 2 * (l.var - 1) + (l.neg ? 1 : 0); }
int negated_node(int node) { return node ^ 1; }

struct ImplicationGraph {
  // adjacency[from] = (to, clause index) in clause insertion order.
  std::vector<std::vector<std::pair<int, int>>> adjacency;

  static ImplicationGraph build(const TwoCnf& phi,
                                const std::vector<char>* deleted) {
    ImplicationGraph ig;
    ig.adjacency.assign(2 * phi.nvars(), {});
    const auto& entries = phi.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (deleted && (*deleted)[i]) continue;
      const Clause& c = entries[i].clause;
      int idx = static_cast<int>(i);
      int a = node_of(c.first);
      if (c.second) {
        int b = node_of(*c.second);
        ig.adjacency[negated_node(a)].push_back({b, idx});
        if (b != a) ig.adjacency[negated_node(b)].push_back({a, idx});
      } else {
        ig.adjacency[negated_node(a)].push_back({a, idx});
      }
    }
    return ig;
  }
};

// Iterative Tarjan; component ids are assigned in reverse topological
// order (sinks first).
std::vector<int> tarjan_scc(const ImplicationGraph& ig) {
  int n = static_cast<int>(ig.adjacency.size());
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1);
  std::vector<int> stack;
  std::vector<char> on_stack(n, 0);
  int counter = 0, comp_count = 0;

  struct Frame {
    int node;
    std::size_t next_edge;
  };
  std::vector<Frame> call;
  for (int start = 0; start < n; ++start) {
    if (num[start] != -1) continue;
    call.push_back({start, 0});
    num[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next_edge < ig.adjacency[f.node].size()) {
        int to = ig.adjacency[f.node][f.next_edge++].first;
        if (num[to] == -1) {
          num[to] = low[to] = counter++;
          stack.push_back(to);
          on_stack[to] = 1;
          call.push_back({to, 0});
        } else if (on_stack[to]) {
          low[f.node] = std::min(low[f.node], num[to]);
        }
      } else {
        int node = f.node;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().node] = std::min(low[call.back().node], low[node]);
        }
        if (low[node] == num[node]) {
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comp_count;
            if (w == node) break;
          }
          ++comp_count;
        }
      }
    }
  }
  return comp;
}

TwoSatResult solve_masked(const TwoCnf& phi, const std::vector<char>* deleted) {
  ImplicationGraph ig = ImplicationGraph::build(phi, deleted);
  std::vector<int> comp = tarjan_scc(ig);
  TwoSatResult res;
  for (int v = 1; v <= phi.nvars(); ++v) {
    if (comp[node_of(pos(v))] == comp[node_of(neg(v))]) {
      res.satisfiable = false;
      res.witness_var = v;
      return res;
    }
  }
  res.satisfiable = true;
  res.assignment.assign(phi.nvars() + 1, false);
  for (int v = 1; v <= phi.nvars(); ++v) {
    res.assignment[v] = comp[node_of(pos(v))] < comp[node_of(neg(v))];
  }
  return res;
}

// Shortest directed path from one node to another; returns the clause
// indices along it. BFS over the insertion-ordered adjacency keeps the
// result deterministic.
std::vector<int> shortest_path_clauses(const ImplicationGraph& ig, int from,
                                       int to) {
  int n = static_cast<int>(ig.adjacency.size());
  std::vector<int> prev_node(n, -1), prev_clause(n, -1);
  std::vector<char> visited(n, 0);
  std::vector<int> queue{from};
  visited[from] = 1;
  for (std::size_t head = 0; head < queue.size() && !visited[to]; ++head) {
    int cur = queue[head];
    for (auto [next, clause] : ig.adjacency[cur]) {
      if (visited[next]) continue;
      visited[next] = 1;
      prev_node[next] = cur;
      prev_clause[next] = clause;
      queue.push_back(next);
      if (next == to) break;
    }
  }
  if (!visited[to]) {
    throw std::logic_error("contradiction cycle lost during extraction");
  }
  std::vector<int> clauses;
  for (int cur = to; cur != from; cur = prev_node[cur]) {
    clauses.push_back(prev_clause[cur]);
  }
  return clauses;
}

class Almost2SatSearch {
 public:
  Almost2SatSearch(const TwoCnf& phi) : phi_(phi), deleted_(phi.identity_count(), 0) {}

  std::optional<std::vector<char>> run(int budget) {
    if (search(budget)) return deleted_;
    return std::nullopt;
  }

 private:
  bool search(int budget) {
    TwoSatResult res = solve_masked(phi_, &deleted_);
    if (res.satisfiable) return true;
    if (budget == 0) return false;
    ImplicationGraph ig = ImplicationGraph::build(phi_, &deleted_);
    int p = node_of(pos(res.witness_var));
    int q = node_of(neg(res.witness_var));
    std::vector<int> cycle = shortest_path_clauses(ig, p, q);
    std::vector<int> back = shortest_path_clauses(ig, q, p);
    cycle.insert(cycle.end(), back.begin(), back.end());
    std::sort(cycle.begin(), cycle.end());
    cycle.erase(std::unique(cycle.begin(), cycle.end()), cycle.end());
    // Every valid deletion set must fully remove some identity on this
    // cycle, so branching over its affordable identities is exhaustive.
    for (int idx : cycle) {
      int mult = phi_.entries()[idx].multiplicity;
      if (mult > budget) continue;
      deleted_[idx] = 1;
      if (search(budget - mult)) return true;
      deleted_[idx] = 0;
    }
    return false;
  }

  const TwoCnf& phi_;
  std::vector<char> deleted_;
};

ClauseDeletionSet deletion_set_from_mask(const TwoCnf& phi,
                                         const std::vector<char>& mask) {
  ClauseDeletionSet d;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) {
      d.items.push_back({static_cast<int>(i), phi.entries()[i].multiplicity});
    }
  }
  return d;
}

}  // namespace

TwoSatResult solve_2sat(const TwoCnf& phi) { return solve_masked(phi, nullptr); }

bool satisfies(const TwoCnf& phi, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(phi.nvars()) + 1) return false;
  auto value = [&](const Literal& l) { return l.neg ? !a[l.var] : a[l.var]; };
  for (const auto& entry : phi.entries()) {
    bool sat = value(entry.clause.first) ||
               (entry.clause.second && value(*entry.clause.second));
    if (!sat) return false;
  }
  return true;
}

int ClauseDeletionSet::total() const {
  int t = 0;
  for (const Item& item : items) t += item.count;
  return t;
}

TwoCnf apply_deletions(const TwoCnf& phi, const ClauseDeletionSet& d) {
  std::vector<int> remove(phi.identity_count(), 0);
  for (const auto& item : d.items) {
    if (item.index < 0 ||
        item.index >= static_cast<int>(phi.identity_count()) ||
        item.count < 0 ||
        item.count > phi.entries()[item.index].multiplicity) {
      throw std::invalid_argument("deletion exceeds clause multiplicity");
    }
    remove[item.index] += item.count;
    if (remove[item.index] > phi.entries()[item.index].multiplicity) {
      throw std::invalid_argument("deletion exceeds clause multiplicity");
    }
  }
  TwoCnf out(phi.nvars());
  for (std::size_t i = 0; i < phi.identity_count(); ++i) {
    int left = phi.entries()[i].multiplicity - remove[i];
    if (left > 0) out.add(phi.entries()[i].clause, left);
  }
  return out;
}

std::optional<ClauseDeletionSet> almost_2sat(const TwoCnf& phi, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  for (int budget = 0; budget <= k; ++budget) {
    Almost2SatSearch search(phi);
    if (auto mask = search.run(budget)) {
      return deletion_set_from_mask(phi, *mask);
    }
  }
  return std::nullopt;
}

std::optional<ClauseDeletionSet> brute_force_almost_2sat(const TwoCnf& phi,
                                                         int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  int ids = static_cast<int>(phi.identity_count());
  // Rough bound on the number of count vectors: C(ids + k, k).
  long long bound = 1;
  for (int i = 1; i <= k; ++i) {
    bound = bound * (ids + i) / i;
    if (bound > 100'000'000) {
      throw GuardError("almost-2-sat oracle: instance too large for oracle");
    }
  }

  std::vector<int> counts(ids, 0);
  // Enumerates per-identity deletion counts of the given total, earlier
  // identities taking larger counts first, matching the lexicographic
  // order on deletion multisets.
  auto try_total = [&](int total) {
    ClauseDeletionSet found;
    auto rec = [&](auto&& self, int idx, int remaining) -> bool {
      if (idx == ids) {
        if (remaining != 0) return false;
        // Identities survive unless every copy is deleted.
        std::vector<char> gone(ids, 0);
        for (int i = 0; i < ids; ++i) {
          gone[i] = counts[i] == phi.entries()[i].multiplicity;
        }
        if (solve_masked(phi, &gone).satisfiable) {
          for (int i = 0; i < ids; ++i) {
            if (counts[i] > 0) found.items.push_back({i, counts[i]});
          }
          return true;
        }
        return false;
      }
      int cap = std::min(phi.entries()[idx].multiplicity, remaining);
      for (int c = cap; c >= 0; --c) {
        counts[idx] = c;
        if (self(self, idx + 1, remaining - c)) return true;
      }
      counts[idx] = 0;
      return false;
    };
    if (rec(rec, 0, total)) return std::optional<ClauseDeletionSet>(found);
    return std::optional<ClauseDeletionSet>();
  };

  for (int total = 0; total <= k; ++total) {
    if (auto d = try_total(total)) return d;
  }
  return std::nullopt;
}

TwoCnf eliminate_unit_clauses(const TwoCnf& phi, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  int f = phi.nvars() + 1;
  int x = phi.nvars() + 2;
  TwoCnf out(phi.nvars() + 2);
  out.add(Clause::pair(neg(f), pos(x)), k + 1);
  out.add(Clause::pair(neg(f), neg(x)), k + 1);
  for (const auto& entry : phi.entries()) {
    if (entry.clause.is_unit()) {
      out.add(Clause::pair(entry.clause.first, pos(f)), entry.multiplicity);
    } else {
      out.add(entry.clause, entry.multiplicity);
    }
  }
  return out;
}

}  // namespace konig
