#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace konig {

// A literal over variable 1..nvars; negated when neg is true.
struct Literal {
  int var = 0;
  bool neg = false;
  auto operator<=>(const Literal&) const = default;
  // DIMACS integer form: var or -var.
  int encoded() const { return neg ? -var : var; }
};

inline Literal pos(int var) { return Literal{var, false}; }
inline Literal neg(int var) { return Literal{var, true}; }
Literal from_encoded(int lit);

// A clause of one or two literals. Pairs are kept in canonical (sorted)
// order so that clause identity is order-insensitive.
struct Clause {
  Literal first;
  std::optional<Literal> second;

  static Clause unit(Literal l) { return Clause{l, std::nullopt}; }
  static Clause pair(Literal a, Literal b);
  bool is_unit() const { return !second.has_value(); }
  auto operator<=>(const Clause&) const = default;
};

// A 2-CNF formula with clause multiplicities. Clause identity is the
// canonical literal pair; adding an existing identity raises its
// multiplicity. Insertion order is preserved and determines all
// deterministic tie-breaks and the serialized form.
class TwoCnf {
 public:
  struct Entry {
    Clause clause;
    int multiplicity = 1;
  };

  TwoCnf() = default;
  explicit TwoCnf(int nvars);

  int nvars() const { return nvars_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t identity_count() const { return entries_.size(); }
  // Total number of clause copies.
  long long copy_count() const;
  // Index of the identity, or -1.
  int find(const Clause& c) const;
  // Validates variable ranges and multiplicity > 0.
  void add(const Clause& c, int multiplicity = 1);

 private:
  int nvars_ = 0;
  std::vector<Entry> entries_;
};

// Total assignment; values[v] for v in 1..nvars.
using Assignment = std::vector<bool>;

struct TwoSatResult {
  bool satisfiable = false;
  Assignment assignment;  // valid when satisfiable
  int witness_var = 0;    // some variable sharing an SCC with its negation
};

// Implication-graph + SCC decision procedure. Deterministic: the
// implication edges follow the clause insertion order.
TwoSatResult solve_2sat(const TwoCnf& phi);

bool satisfies(const TwoCnf& phi, const Assignment& a);

// Deletions applied to a formula: per-identity deletion counts bounded by
// the multiplicities, referencing clauses by their index in the formula.
struct ClauseDeletionSet {
  struct Item {
    int index = 0;
    int count = 0;
  };
  std::vector<Item> items;  // ascending by index
  int total() const;
};

// The formula with the deletions applied (multiplicities reduced, emptied
// identities dropped; entry order otherwise preserved).
TwoCnf apply_deletions(const TwoCnf& phi, const ClauseDeletionSet& d);

// Exact minimum clause deletion: smallest deletion set (total copies) of
// size <= k whose removal leaves phi satisfiable, or nullopt. Implemented
// by iterative-deepening branching on a shortest contradiction cycle of the
// unsatisfiable implication graph; only identities whose full multiplicity
// fits the remaining budget are branched on, since deleting fewer than all
// copies of a clause never changes satisfiability.
std::optional<ClauseDeletionSet> almost_2sat(const TwoCnf& phi, int k);

// Exhaustive oracle with the same contract. Guard on the enumeration size.
std::optional<ClauseDeletionSet> brute_force_almost_2sat(const TwoCnf& phi,
                                                         int k);

// Unit-clause elimination: appends fresh variables f = nvars+1, x = nvars+2,
// prepends guard clauses (~f | x) and (~f | ~x) with multiplicity k+1, and
// rewrites every singleton (l) to (l | f), preserving multiplicities. The
// result contains only binary clauses and has the same minimum deletion
// number for every budget <= k.
TwoCnf eliminate_unit_clauses(const TwoCnf& phi, int k);

}  // namespace konig
