#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "konig/graph.hpp"

namespace konig {

// Exact rational with denominator 1 or 2; the only values the vertex-cover
// LP optimum can take. Stored as twice the value to keep arithmetic integral.
class Fraction {
 public:
  Fraction() = default;
  static Fraction from_twice(long long t) { return Fraction(t); }

  long long twice() const { return twice_; }
  long long numerator() const { return twice_ % 2 == 0 ? twice_ / 2 : twice_; }
  long long denominator() const { return twice_ % 2 == 0 ? 1 : 2; }
  // Canonical "p/q" rendering, e.g. "3/2" or "2/1".
  std::string str() const;
  auto operator<=>(const Fraction&) const = default;

 private:
  explicit Fraction(long long t) : twice_(t) {}
  long long twice_ = 0;
};

// An optimal half-integral solution of the vertex-cover LP: every vertex
// carries 0, 1/2 or 1, every edge sums to at least 1, and the total is the
// LP optimum. Values are stored in half-units (0, 1, 2).
class HalfIntegralVC {
 public:
  HalfIntegralVC() = default;

  // half_units[v] for v in 1..n must be 0, 1 or 2 (index 0 is ignored).
  static HalfIntegralVC from_half_units(int n, std::vector<uint8_t> half_units);

  int vertex_count() const { return n_; }
  // Half-units of vertex v: 0, 1 or 2.
  int half_units(int v) const;
  Fraction value() const;
  const VertexSet& s0() const { return s0_; }
  const VertexSet& s_half() const { return s_half_; }
  const VertexSet& s1() const { return s1_; }
  // LP feasibility for g: every edge sums to at least one.
  bool feasible_for(const Graph& g) const;

 private:
  int n_ = 0;
  std::vector<uint8_t> units_;
  VertexSet s0_, s_half_, s1_;
};

// Optimum of the vertex-cover LP, computed combinatorially as half the
// maximum-matching size of the bipartite double cover.
Fraction fractional_vc_value(const Graph& g);

// Same value as twice the optimum (the double-cover matching size).
long long fractional_vc_value_twice(const Graph& g);

// Optimal half-integral solution with the minimum number of 1/2 vertices,
// found by persistency probing: repeatedly fix the smallest vertex v whose
// removal drops the LP optimum by exactly one (such v takes value 1 in some
// optimum), peel vertices that become isolated to 0, and stop when no
// integral fixing preserves the optimum; the residue takes 1/2 everywhere.
HalfIntegralVC nt_decomposition(const Graph& g);

// Checks feasibility, optimality of the value, and the existence of a
// matching between S1 and S0 saturating S1. Minimality of |S_half| is not
// checked here; the test oracles cover it.
bool verify_nt(const Graph& g, const HalfIntegralVC& sol);

}  // namespace konig
