#include "konig/lp.hpp"

#include <stdexcept>

#include "konig/matching.hpp"

namespace konig {

std::string Fraction::str() const {
  return std::to_string(numerator()) + "/" + std::to_string(denominator());
}

HalfIntegralVC HalfIntegralVC::from_half_units(int n,
                                               std::vector<uint8_t> half_units) {
  if (n < 0 || half_units.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("half-unit vector must have n+1 entries");
  }
  HalfIntegralVC sol;
  sol.n_ = n;
  std::vector<int> s0, sh, s1;
  for (int v = 1; v <= n; ++v) {
    switch (half_units[v]) {
      case 0: s0.push_back(v); break;
      case 1: sh.push_back(v); break;
      case 2: s1.push_back(v); break;
      default:
        throw std::invalid_argument("half-units must be 0, 1 or 2");
    }
  }
  sol.units_ = std::move(half_units);
  sol.s0_ = VertexSet(std::move(s0));
  sol.s_half_ = VertexSet(std::move(sh));
  sol.s1_ = VertexSet(std::move(s1));
  return sol;
}

int HalfIntegralVC::half_units(int v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
  return units_[v];
}

Fraction HalfIntegralVC::value() const {
  long long t = 0;
  for (int v = 1; v <= n_; ++v) t += units_[v];
  return Fraction::from_twice(t);
}

bool HalfIntegralVC::feasible_for(const Graph& g) const {
  if (g.vertex_count() != n_) return false;
  for (const Edge& e : g.edges()) {
    if (units_[e.u] + units_[e.v] < 2) return false;
  }
  return true;
}

namespace {

// Bipartite double cover: vertex u splits into u (left) and n+u (right);
// each edge {u,v} becomes {u, n+v} and {v, n+u}. By Konig's theorem its
// maximum matching size equals twice the half-integral LP optimum.
Graph double_cover(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count());
  for (const Edge& e : g.edges()) {
    edges.push_back(make_edge(e.u, n + e.v));
    edges.push_back(make_edge(e.v, n + e.u));
  }
  return Graph::from_edges(2 * n, edges);
}

long long vcf_twice_of_edges(int n, const std::vector<Edge>& edges) {
  Graph g = Graph::from_edges(n, edges);
  return static_cast<long long>(maximum_matching(double_cover(g)).size());
}

}  // namespace

long long fractional_vc_value_twice(const Graph& g) {
  return static_cast<long long>(maximum_matching(double_cover(g)).size());
}

Fraction fractional_vc_value(const Graph& g) {
  return Fraction::from_twice(fractional_vc_value_twice(g));
}

HalfIntegralVC nt_decomposition(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> alive(n + 1, 1);
  std::vector<uint8_t> units(n + 1, 1);

  // Edges among alive vertices; dead vertices stay in the graph as
  // isolated stubs, which leaves the LP value untouched.
  auto live_edges = [&](int skip) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
      if (alive[e.u] && alive[e.v] && e.u != skip && e.v != skip) {
        out.push_back(e);
      }
    }
    return out;
  };
  auto peel_isolated = [&] {
    std::vector<int> deg(n + 1, 0);
    for (const Edge& e : g.edges()) {
      if (alive[e.u] && alive[e.v]) {
        ++deg[e.u];
        ++deg[e.v];
      }
    }
    for (int v = 1; v <= n; ++v) {
      if (alive[v] && deg[v] == 0) {
        alive[v] = 0;
        units[v] = 0;
      }
    }
  };

  peel_isolated();
  long long target = vcf_twice_of_edges(n, live_edges(0));
  for (;;) {
    bool fixed = false;
    for (int v = 1; v <= n && !fixed; ++v) {
      if (!alive[v]) continue;
      if (vcf_twice_of_edges(n, live_edges(v)) == target - 2) {
        alive[v] = 0;
        units[v] = 2;
        target -= 2;
        fixed = true;
      }
    }
    if (!fixed) break;
    peel_isolated();
  }
  // Whatever is left is 1/2 in every optimum.
  return HalfIntegralVC::from_half_units(n, std::move(units));
}

bool verify_nt(const Graph& g, const HalfIntegralVC& sol) {
  if (sol.vertex_count() != g.vertex_count()) return false;
  if (!sol.feasible_for(g)) return false;
  if (sol.value().twice() != fractional_vc_value_twice(g)) return false;
  if (sol.s1().empty()) return true;
  return saturating_matching_between(g, sol.s1(), sol.s0()).has_value();
}

}  // namespace konig
