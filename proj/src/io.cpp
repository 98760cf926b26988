#include "konig/io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "konig/errors.hpp"

namespace konig {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits into non-comment lines with whitespace-separated tokens. Blank
// and whitespace-only lines are rejected; trailing whitespace is ignored.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    bool last = end == std::string_view::npos;
    std::string_view raw = text.substr(start, last ? text.size() - start : end - start);
    start = last ? text.size() + 1 : end + 1;
    if (last && raw.empty()) break;
    ++number;
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && is_space(raw[i])) ++i;
      std::size_t j = i;
      while (j < raw.size() && !is_space(raw[j])) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty()) throw ParseError(number, "blank line");
    if (line.tokens[0] == "c") continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(std::string_view tok, int lineno, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(lineno, std::string("malformed ") + what + " '" +
                                 std::string(tok) + "'");
  }
  return value;
}

void expect_tokens(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, std::string("malformed ") + what + " line");
  }
}

int check_vertex(int v, int n, int lineno) {
  if (v < 1 || v > n) {
    throw ParseError(lineno, "endpoint " + std::to_string(v) +
                                 " out of range 1.." + std::to_string(n));
  }
  return v;
}

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  GraphFile out;
  bool have_p = false;
  int n = 0;
  long long declared_m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::pair<Edge, int>> matching_lines;
  std::optional<int> k;
  int last_line = 0;

  for (const Line& line : lines) {
    last_line = line.number;
    std::string_view head = line.tokens[0];
    if (head == "p") {
      if (have_p) throw ParseError(line.number, "duplicate p line");
      expect_tokens(line, 4, "p");
      if (line.tokens[1] != "edge") {
        throw ParseError(line.number, "expected 'p edge <n> <m>'");
      }
      n = parse_int(line.tokens[2], line.number, "vertex count");
      declared_m = parse_int(line.tokens[3], line.number, "edge count");
      if (n < 0 || declared_m < 0) {
        throw ParseError(line.number, "negative count in p line");
      }
      have_p = true;
      continue;
    }
    if (!have_p) throw ParseError(line.number, "data line before p line");
    if (head == "e") {
      expect_tokens(line, 3, "e");
      int u = check_vertex(parse_int(line.tokens[1], line.number, "endpoint"), n,
                           line.number);
      int v = check_vertex(parse_int(line.tokens[2], line.number, "endpoint"), n,
                           line.number);
      if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
      Edge e = make_edge(u, v);
      if (!seen.insert(e).second) {
        throw ParseError(line.number, "duplicate edge");
      }
      if (static_cast<long long>(edges.size()) == declared_m) {
        throw ParseError(line.number, "more edges than declared");
      }
      edges.push_back(e);
    } else if (head == "m") {
      expect_tokens(line, 3, "m");
      int u = check_vertex(parse_int(line.tokens[1], line.number, "endpoint"), n,
                           line.number);
      int v = check_vertex(parse_int(line.tokens[2], line.number, "endpoint"), n,
                           line.number);
      if (u == v) throw ParseError(line.number, "self-loop in matching line");
      matching_lines.push_back({make_edge(u, v), line.number});
    } else if (head == "k") {
      expect_tokens(line, 2, "k");
      if (k.has_value()) throw ParseError(line.number, "duplicate k line");
      int value = parse_int(line.tokens[1], line.number, "parameter");
      if (value < 0) throw ParseError(line.number, "parameter must be non-negative");
      k = value;
    } else {
      throw ParseError(line.number, "unrecognized line");
    }
  }
  if (!have_p) throw ParseError(last_line == 0 ? 1 : last_line, "missing p line");
  if (static_cast<long long>(edges.size()) != declared_m) {
    throw ParseError(last_line, "declared " + std::to_string(declared_m) +
                                    " edges, found " +
                                    std::to_string(edges.size()));
  }

  out.graph = Graph::from_edges(n, edges);
  out.k = k;
  if (!matching_lines.empty()) {
    std::vector<Edge> mes;
    for (auto& [e, lineno] : matching_lines) {
      if (!out.graph.has_edge(e.u, e.v)) {
        throw ParseError(lineno, "matching line is not an edge of the graph");
      }
      mes.push_back(e);
    }
    EdgeSet set(mes);
    if (set.size() != mes.size()) {
      throw ParseError(matching_lines.back().second, "duplicate matching line");
    }
    if (!is_matching(out.graph, set)) {
      throw ParseError(matching_lines.back().second,
                       "matching lines share a vertex");
    }
    out.matching = Matching::checked(out.graph, set);
  }
  return out;
}

Graph parse_graph(std::string_view text) { return parse_graph_file(text).graph; }

std::string write_graph_file(const GraphFile& gf) {
  std::ostringstream os;
  os << "p edge " << gf.graph.vertex_count() << ' ' << gf.graph.edge_count()
     << '\n';
  for (const Edge& e : gf.graph.edges()) {
    os << "e " << e.u << ' ' << e.v << '\n';
  }
  if (gf.matching) {
    for (const Edge& e : gf.matching->edges()) {
      os << "m " << e.u << ' ' << e.v << '\n';
    }
  }
  if (gf.k) os << "k " << *gf.k << '\n';
  return os.str();
}

std::string write_graph(const Graph& g) {
  return write_graph_file(GraphFile{g, std::nullopt, std::nullopt});
}

TwoCnf parse_cnf(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  bool have_p = false;
  int nvars = 0;
  long long declared = 0;
  long long copies = 0;
  TwoCnf phi;
  int last_line = 0;
  for (const Line& line : lines) {
    last_line = line.number;
    if (line.tokens[0] == "p") {
      if (have_p) throw ParseError(line.number, "duplicate p line");
      expect_tokens(line, 4, "p");
      if (line.tokens[1] != "cnf") {
        throw ParseError(line.number, "expected 'p cnf <nvars> <nclauses>'");
      }
      nvars = parse_int(line.tokens[2], line.number, "variable count");
      declared = parse_int(line.tokens[3], line.number, "clause count");
      if (nvars < 0 || declared < 0) {
        throw ParseError(line.number, "negative count in p line");
      }
      phi = TwoCnf(nvars);
      have_p = true;
      continue;
    }
    if (!have_p) throw ParseError(line.number, "clause line before p line");
    std::vector<int> lits;
    for (std::string_view tok : line.tokens) {
      lits.push_back(parse_int(tok, line.number, "literal"));
    }
    if (lits.back() != 0) {
      throw ParseError(line.number, "clause line must end with 0");
    }
    lits.pop_back();
    if (lits.empty() || lits.size() > 2) {
      throw ParseError(line.number, "clauses must have one or two literals");
    }
    for (int lit : lits) {
      if (lit == 0) throw ParseError(line.number, "literal 0 inside clause");
      if (lit < -nvars || lit > nvars) {
        throw ParseError(line.number, "literal out of range");
      }
    }
    if (copies == declared) {
      throw ParseError(line.number, "more clauses than declared");
    }
    if (lits.size() == 1) {
      phi.add(Clause::unit(from_encoded(lits[0])));
    } else {
      phi.add(Clause::pair(from_encoded(lits[0]), from_encoded(lits[1])));
    }
    ++copies;
  }
  if (!have_p) throw ParseError(last_line == 0 ? 1 : last_line, "missing p line");
  if (copies != declared) {
    throw ParseError(last_line, "declared " + std::to_string(declared) +
                                    " clauses, found " + std::to_string(copies));
  }
  return phi;
}

namespace {

void print_clause_body(std::ostringstream& os, const Clause& c) {
  os << c.first.encoded();
  if (c.second) os << ' ' << c.second->encoded();
  os << " 0";
}

}  // namespace

std::string write_cnf(const TwoCnf& phi) {
  std::ostringstream os;
  os << "p cnf " << phi.nvars() << ' ' << phi.copy_count() << '\n';
  for (const auto& entry : phi.entries()) {
    for (int i = 0; i < entry.multiplicity; ++i) {
      print_clause_body(os, entry.clause);
      os << '\n';
    }
  }
  return os.str();
}

std::string format_matching(const Matching& m) {
  std::ostringstream os;
  os << "s " << m.size() << '\n';
  for (const Edge& e : m.edges()) os << "m " << e.u << ' ' << e.v << '\n';
  return os.str();
}

namespace {

// Shared body for "s <n>" + one-letter data lines.
std::vector<Edge> parse_sized_edge_lines(std::string_view text, char tag,
                                         bool* absent) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty solution");
  const Line& header = lines[0];
  if (header.tokens[0] != "s" || header.tokens.size() != 2) {
    throw ParseError(header.number, "expected 's <size>' or 's NO'");
  }
  if (absent && header.tokens[1] == "NO") {
    if (lines.size() != 1) {
      throw ParseError(lines[1].number, "data after 's NO'");
    }
    *absent = true;
    return {};
  }
  if (absent) *absent = false;
  long long size = parse_int(header.tokens[1], header.number, "size");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 3 || line.tokens[0] != std::string(1, tag)) {
      throw ParseError(line.number, "malformed solution line");
    }
    int u = parse_int(line.tokens[1], line.number, "endpoint");
    int v = parse_int(line.tokens[2], line.number, "endpoint");
    edges.push_back(make_edge(u, v));
  }
  if (static_cast<long long>(edges.size()) != size) {
    throw ParseError(lines.back().number, "size line disagrees with data lines");
  }
  return edges;
}

}  // namespace

EdgeSet parse_matching_text(std::string_view text) {
  std::vector<Edge> edges = parse_sized_edge_lines(text, 'm', nullptr);
  EdgeSet set(edges);
  if (set.size() != edges.size()) throw ParseError(1, "duplicate matching edge");
  return set;
}

std::string format_edge_deletion(const std::optional<EdgeSet>& f) {
  if (!f) return "s NO\n";
  std::ostringstream os;
  os << "s " << f->size() << '\n';
  for (const Edge& e : *f) os << "d " << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::optional<EdgeSet> parse_edge_deletion_text(std::string_view text) {
  bool absent = false;
  std::vector<Edge> edges = parse_sized_edge_lines(text, 'd', &absent);
  if (absent) return std::nullopt;
  EdgeSet set(edges);
  if (set.size() != edges.size()) throw ParseError(1, "duplicate deletion edge");
  return set;
}

std::string format_clause_deletion(const TwoCnf& phi,
                                   const std::optional<ClauseDeletionSet>& d) {
  if (!d) return "s NO\n";
  std::ostringstream os;
  os << "s " << d->total() << '\n';
  for (const auto& item : d->items) {
    const Clause& c = phi.entries().at(item.index).clause;
    for (int i = 0; i < item.count; ++i) {
      os << "d ";
      print_clause_body(os, c);
      os << '\n';
    }
  }
  return os.str();
}

std::optional<ClauseDeletionSet> parse_clause_deletion_text(
    const TwoCnf& phi, std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty solution");
  const Line& header = lines[0];
  if (header.tokens[0] != "s" || header.tokens.size() != 2) {
    throw ParseError(header.number, "expected 's <size>' or 's NO'");
  }
  if (header.tokens[1] == "NO") {
    if (lines.size() != 1) throw ParseError(lines[1].number, "data after 's NO'");
    return std::nullopt;
  }
  long long size = parse_int(header.tokens[1], header.number, "size");
  std::vector<int> counts(phi.identity_count(), 0);
  long long copies = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "d" || line.tokens.size() < 3 ||
        line.tokens.size() > 4) {
      throw ParseError(line.number, "malformed deletion line");
    }
    std::vector<int> lits;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      lits.push_back(parse_int(line.tokens[t], line.number, "literal"));
    }
    if (lits.back() != 0) throw ParseError(line.number, "deletion line must end with 0");
    lits.pop_back();
    Clause c = lits.size() == 1
                   ? Clause::unit(from_encoded(lits[0]))
                   : Clause::pair(from_encoded(lits[0]), from_encoded(lits[1]));
    int idx = phi.find(c);
    if (idx < 0) throw ParseError(line.number, "deleted clause not in formula");
    ++counts[idx];
    ++copies;
  }
  if (copies != size) {
    throw ParseError(lines.back().number, "size line disagrees with data lines");
  }
  ClauseDeletionSet d;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    if (counts[i] > phi.entries()[i].multiplicity) {
      throw ParseError(1, "deletions exceed clause multiplicity");
    }
    d.items.push_back({static_cast<int>(i), counts[i]});
  }
  return d;
}

namespace {

void print_id_line(std::ostringstream& os, const char* label,
                   const VertexSet& s) {
  os << label;
  for (int v : s) os << ' ' << v;
  os << '\n';
}

}  // namespace

std::string format_lp(const HalfIntegralVC& sol) {
  std::ostringstream os;
  os << "vcf " << sol.value().str() << '\n';
  print_id_line(os, "S0:", sol.s0());
  print_id_line(os, "Shalf:", sol.s_half());
  print_id_line(os, "S1:", sol.s1());
  return os.str();
}

HalfIntegralVC parse_lp_text(std::string_view text, int n) {
  std::vector<Line> lines = tokenize(text);
  if (lines.size() != 4) throw ParseError(1, "expected vcf, S0, Shalf, S1 lines");
  if (lines[0].tokens[0] != "vcf" || lines[0].tokens.size() != 2) {
    throw ParseError(lines[0].number, "expected 'vcf <p>/<q>'");
  }
  std::vector<uint8_t> units(n + 1, 255);
  const char* labels[3] = {"S0:", "Shalf:", "S1:"};
  uint8_t values[3] = {0, 1, 2};
  for (int part = 0; part < 3; ++part) {
    const Line& line = lines[part + 1];
    if (line.tokens[0] != labels[part]) {
      throw ParseError(line.number, std::string("expected '") + labels[part] + "'");
    }
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      int v = check_vertex(parse_int(line.tokens[t], line.number, "vertex"), n,
                           line.number);
      if (units[v] != 255) throw ParseError(line.number, "vertex listed twice");
      units[v] = values[part];
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (units[v] == 255) {
      throw ParseError(lines.back().number,
                       "vertex " + std::to_string(v) + " missing from partition");
    }
  }
  HalfIntegralVC sol = HalfIntegralVC::from_half_units(n, std::move(units));
  // The value line must agree with the partition.
  std::string expect = sol.value().str();
  if (std::string(lines[0].tokens[1]) != expect) {
    throw ParseError(lines[0].number, "vcf value disagrees with partition");
  }
  return sol;
}

std::string format_witness(const std::optional<KoenigWitness>& w) {
  if (!w) return "NOT-KONIG\n";
  std::ostringstream os;
  os << "KONIG\n";
  os << "s";
  for (int v : w->cover) os << ' ' << v;
  os << '\n';
  for (const Edge& e : w->matching.edges()) {
    os << "m " << e.u << ' ' << e.v << '\n';
  }
  return os.str();
}

WitnessText parse_witness_text(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty witness");
  WitnessText out;
  if (lines[0].tokens[0] == "NOT-KONIG") {
    if (lines.size() != 1 || lines[0].tokens.size() != 1) {
      throw ParseError(lines[0].number, "malformed NOT-KONIG witness");
    }
    return out;
  }
  if (lines[0].tokens[0] != "KONIG" || lines[0].tokens.size() != 1) {
    throw ParseError(lines[0].number, "expected KONIG or NOT-KONIG");
  }
  if (lines.size() < 2 || lines[1].tokens[0] != "s") {
    throw ParseError(lines.size() < 2 ? lines[0].number : lines[1].number,
                     "expected cover line");
  }
  out.is_konig = true;
  std::vector<int> cover;
  for (std::size_t t = 1; t < lines[1].tokens.size(); ++t) {
    cover.push_back(parse_int(lines[1].tokens[t], lines[1].number, "vertex"));
  }
  out.cover = VertexSet(std::move(cover));
  std::vector<Edge> mes;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "m" || line.tokens.size() != 3) {
      throw ParseError(line.number, "malformed matching line");
    }
    int u = parse_int(line.tokens[1], line.number, "endpoint");
    int v = parse_int(line.tokens[2], line.number, "endpoint");
    mes.push_back(make_edge(u, v));
  }
  out.matching = EdgeSet(std::move(mes));
  return out;
}

std::string format_vertex_set(const std::optional<VertexSet>& s) {
  if (!s) return "s NO\n";
  std::ostringstream os;
  os << "s " << s->size() << '\n';
  for (int v : *s) os << "v " << v << '\n';
  return os.str();
}

std::optional<VertexSet> parse_vertex_set_text(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty solution");
  const Line& header = lines[0];
  if (header.tokens[0] != "s" || header.tokens.size() != 2) {
    throw ParseError(header.number, "expected 's <size>' or 's NO'");
  }
  if (header.tokens[1] == "NO") {
    if (lines.size() != 1) throw ParseError(lines[1].number, "data after 's NO'");
    return std::nullopt;
  }
  long long size = parse_int(header.tokens[1], header.number, "size");
  std::vector<int> ids;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "v" || line.tokens.size() != 2) {
      throw ParseError(line.number, "malformed vertex line");
    }
    ids.push_back(parse_int(line.tokens[1], line.number, "vertex"));
  }
  if (static_cast<long long>(ids.size()) != size) {
    throw ParseError(lines.back().number, "size line disagrees with data lines");
  }
  VertexSet set(ids);
  if (set.size() != ids.size()) throw ParseError(1, "duplicate vertex");
  return set;
}

}  // namespace konig
