#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "konig/graph.hpp"
#include "konig/koenig.hpp"
#include "konig/lp.hpp"
#include "konig/matching.hpp"
#include "konig/twosat.hpp"

namespace konig {

// Parsed contents of a graph file: the graph plus the optional declared
// matching ("m" lines) and parameter ("k" line).
struct GraphFile {
  Graph graph;
  std::optional<Matching> matching;
  std::optional<int> k;
};

// Extended DIMACS graph format, line oriented:
//   c <text>        comments, ignored
//   p edge <n> <m>  exactly once, before any other data line
//   e <u> <v>       m times; either endpoint order, no loops, no duplicates
//   m <u> <v>       optional matching declaration
//   k <int>         optional parameter declaration
// Any other line is a ParseError with its line number.
GraphFile parse_graph_file(std::string_view text);
Graph parse_graph(std::string_view text);

// Canonical serialization: p line, e lines sorted (min endpoint first),
// m lines sorted, then the k line. Round-trips byte-exactly.
std::string write_graph_file(const GraphFile& gf);
std::string write_graph(const Graph& g);

// DIMACS CNF restricted to clauses of one or two literals. Duplicate
// clause lines accumulate multiplicity; the declared clause count is the
// number of clause lines (copies).
TwoCnf parse_cnf(std::string_view text);
std::string write_cnf(const TwoCnf& phi);

// Solution texts. Each format_* emits exactly what the CLI prints and each
// parse_* accepts exactly that.
std::string format_matching(const Matching& m);
EdgeSet parse_matching_text(std::string_view text);

// "s <size>" + "d <u> <v>" lines, or "s NO".
std::string format_edge_deletion(const std::optional<EdgeSet>& f);
std::optional<EdgeSet> parse_edge_deletion_text(std::string_view text);

// "s <size>" + one "d <lit> [<lit>] 0" line per deleted copy, or "s NO".
std::string format_clause_deletion(const TwoCnf& phi,
                                   const std::optional<ClauseDeletionSet>& d);
std::optional<ClauseDeletionSet> parse_clause_deletion_text(
    const TwoCnf& phi, std::string_view text);

// "vcf <p>/<q>" then the S0 / Shalf / S1 partitions in ascending order.
std::string format_lp(const HalfIntegralVC& sol);
HalfIntegralVC parse_lp_text(std::string_view text, int n);

// "KONIG" + witness ("s <ids...>" cover line, "m <u> <v>" matching lines),
// or "NOT-KONIG".
std::string format_witness(const std::optional<KoenigWitness>& w);
struct WitnessText {
  bool is_konig = false;
  VertexSet cover;
  EdgeSet matching;
};
WitnessText parse_witness_text(std::string_view text);

// "s <size>" + "v <id>" lines, or "s NO".
std::string format_vertex_set(const std::optional<VertexSet>& s);
std::optional<VertexSet> parse_vertex_set_text(std::string_view text);

}  // namespace konig
