#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

// Seeded instance generators shared by the CLI and the test sweeps. They
// are deliberately self-contained (no library dependencies) so the exact
// output is pinned by this file alone.
//
// PRNG: splitmix64. state += 0x9E3779B97F4A7C15; z = state;
// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
// z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
namespace konig_gen {

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next();
  // Top 53 bits compared against p = num/den exactly: true with
  // probability num/den.
  bool bernoulli(uint64_t num, uint64_t den);
  // Uniform draw from 0..bound-1 by modulo (documented, bias accepted).
  uint64_t below(uint64_t bound);

 private:
  uint64_t state_;
};

// Erdos-Renyi G(n, num/den): pairs (u, v), u < v, visited in lexicographic
// order, each kept independently.
std::vector<std::pair<int, int>> gen_graph_edges(int n, uint64_t num,
                                                 uint64_t den, uint64_t seed);

// Clause as DIMACS literals; a unit clause has lits[1] == 0.
struct GenClause {
  std::array<int, 2> lits{0, 0};
};

// nclauses distinct clause identities over nvars variables. Each draw is a
// unit clause with probability unit_num/unit_den, otherwise a 2-clause over
// distinct variables; duplicates are redrawn. Throws std::runtime_error
// when the request cannot be met.
std::vector<GenClause> gen_cnf_clauses(int nvars, int nclauses,
                                       uint64_t unit_num, uint64_t unit_den,
                                       uint64_t seed);

}  // namespace konig_gen
