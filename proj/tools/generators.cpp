#include "generators.hpp"

#include <set>
#include <stdexcept>

namespace konig_gen {

uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

bool SplitMix64::bernoulli(uint64_t num, uint64_t den) {
  if (den == 0) throw std::runtime_error("probability denominator is zero");
  if (num > den) throw std::runtime_error("probability above one");
  uint64_t r = next() >> 11;  // 53 bits
  return static_cast<unsigned __int128>(r) * den <
         (static_cast<unsigned __int128>(num) << 53);
}

uint64_t SplitMix64::below(uint64_t bound) {
  if (bound == 0) throw std::runtime_error("empty draw range");
  return next() % bound;
}

std::vector<std::pair<int, int>> gen_graph_edges(int n, uint64_t num,
                                                 uint64_t den, uint64_t seed) {
  if (n < 0) throw std::runtime_error("negative vertex count");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u < n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (rng.bernoulli(num, den)) edges.push_back({u, v});
    }
  }
  return edges;
}

std::vector<GenClause> gen_cnf_clauses(int nvars, int nclauses,
                                       uint64_t unit_num, uint64_t unit_den,
                                       uint64_t seed) {
  if (nvars < 1) throw std::runtime_error("need at least one variable");
  if (nclauses < 0) throw std::runtime_error("negative clause count");
  SplitMix64 rng(seed);
  std::vector<GenClause> out;
  std::set<std::pair<int, int>> seen;  // canonical (min lit, max lit or 0)
  long long attempts = 0;
  long long limit = 10'000LL * (nclauses + 1);
  while (static_cast<int>(out.size()) < nclauses) {
    if (++attempts > limit) {
      throw std::runtime_error("cannot draw enough distinct clauses");
    }
    GenClause c;
    if (unit_num > 0 && rng.bernoulli(unit_num, unit_den)) {
      int var = static_cast<int>(rng.below(nvars)) + 1;
      bool negated = rng.next() & 1;
      c.lits = {negated ? -var : var, 0};
    } else {
      int v1 = static_cast<int>(rng.below(nvars)) + 1;
      int v2 = v1;
      while (v2 == v1 && nvars > 1) v2 = static_cast<int>(rng.below(nvars)) + 1;
      if (v2 == v1) continue;  // single variable: no 2-clause possible
      bool n1 = rng.next() & 1;
      bool n2 = rng.next() & 1;
      c.lits = {n1 ? -v1 : v1, n2 ? -v2 : v2};
    }
    std::pair<int, int> key{c.lits[0], c.lits[1]};
    if (key.second != 0) {
      // Identity is order-insensitive; canonicalize on variable then sign.
      auto rank = [](int lit) {
        return std::pair<int, int>{lit < 0 ? -lit : lit, lit < 0 ? 1 : 0};
      };
      if (rank(key.second) < rank(key.first)) std::swap(key.first, key.second);
    }
    if (!seen.insert(key).second) continue;
    c.lits = {key.first, key.second};
    out.push_back(c);
  }
  return out;
}

}  // namespace konig_gen
