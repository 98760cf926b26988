// Command-line front end. All graph and formula work goes through the C
// API of the konig shared library; this file only does argument parsing,
// file plumbing and the seeded instance generators.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "generators.hpp"
#include "konig.h"

namespace {

// Exit code contract: 0 = YES/valid, 1 = NO/absent/invalid,
// 2 = usage or parse error, 3 = oracle guard exceeded.
int exit_code_for(konig_status status) {
  switch (status) {
    case KONIG_OK: return 0;
    case KONIG_ERR_GUARD: return 3;
    default: return 2;
  }
}

[[noreturn]] void die(konig_status status) {
  std::cerr << "error: " << konig_last_error() << '\n';
  std::exit(exit_code_for(status));
}

void check(konig_status status) {
  if (status != KONIG_OK) die(status);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    std::exit(2);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    std::exit(2);
  }
  out << text;
}

struct GraphDeleter {
  void operator()(konig_graph* g) const { konig_graph_free(g); }
};
struct CnfDeleter {
  void operator()(konig_cnf* c) const { konig_cnf_free(c); }
};
struct TextDeleter {
  void operator()(char* t) const { konig_text_free(t); }
};
using GraphPtr = std::unique_ptr<konig_graph, GraphDeleter>;
using CnfPtr = std::unique_ptr<konig_cnf, CnfDeleter>;
using TextPtr = std::unique_ptr<char, TextDeleter>;

GraphPtr load_graph(const std::string& path) {
  std::string text = read_input(path);
  konig_graph* g = nullptr;
  check(konig_graph_parse(text.c_str(), &g));
  return GraphPtr(g);
}

CnfPtr load_cnf(const std::string& path) {
  std::string text = read_input(path);
  konig_cnf* c = nullptr;
  check(konig_cnf_parse(text.c_str(), &c));
  return CnfPtr(c);
}

// The deletion budget comes from --k when given, else from the file's
// "k" line.
int resolve_k(const GraphPtr& g, int flag_k, bool flag_given) {
  if (flag_given) return flag_k;
  if (konig_graph_has_param(g.get())) return konig_graph_param(g.get());
  std::cerr << "error: no parameter: pass --k or add a 'k' line\n";
  std::exit(2);
}

// "num/den", "0" or "1".
void parse_probability(const std::string& text, uint64_t& num, uint64_t& den) {
  auto bad = [&]() {
    std::cerr << "error: probability must be <num>/<den>\n";
    std::exit(2);
  };
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      num = std::stoull(text);
      den = 1;
    } else {
      num = std::stoull(text.substr(0, slash));
      den = std::stoull(text.substr(slash + 1));
    }
  } catch (...) {
    bad();
  }
  if (den == 0 || num > den) bad();
}

int run_recognize(const std::string& in) {
  GraphPtr g = load_graph(in);
  int is_konig = 0;
  char* witness = nullptr;
  check(konig_recognize(g.get(), &is_konig, &witness));
  TextPtr w(witness);
  std::cout << w.get();
  return is_konig ? 0 : 1;
}

int run_matching(const std::string& in) {
  GraphPtr g = load_graph(in);
  char* text = nullptr;
  check(konig_maximum_matching(g.get(), &text));
  std::cout << TextPtr(text).get();
  return 0;
}

int run_lp(const std::string& in) {
  GraphPtr g = load_graph(in);
  char* text = nullptr;
  check(konig_lp(g.get(), &text));
  std::cout << TextPtr(text).get();
  return 0;
}

int run_ked(const std::string& in, int k) {
  GraphPtr g = load_graph(in);
  int found = 0;
  char* text = nullptr;
  check(konig_brute_ked(g.get(), k, &found, &text));
  std::cout << TextPtr(text).get();
  return found ? 0 : 1;
}

int run_keddfm(const std::string& in, int k, bool flag_given, bool oracle) {
  GraphPtr g = load_graph(in);
  int resolved = resolve_k(g, k, flag_given);
  int found = 0;
  char* text = nullptr;
  check(oracle ? konig_brute_ked_dfm(g.get(), resolved, &found, &text)
               : konig_solve_keddfm(g.get(), resolved, &found, &text));
  std::cout << TextPtr(text).get();
  return found ? 0 : 1;
}

int run_a2sat(const std::string& in, int k, bool oracle) {
  CnfPtr c = load_cnf(in);
  int found = 0;
  char* text = nullptr;
  check(oracle ? konig_brute_almost_2sat(c.get(), k, &found, &text)
               : konig_almost_2sat(c.get(), k, &found, &text));
  std::cout << TextPtr(text).get();
  return found ? 0 : 1;
}

int run_is(const std::string& in, int k) {
  GraphPtr g = load_graph(in);
  int found = 0;
  char* text = nullptr;
  check(konig_solve_is(g.get(), k, &found, &text));
  std::cout << TextPtr(text).get();
  return found ? 0 : 1;
}

int run_reduce(const std::string& direction, const std::string& in,
               const std::string& out, int k, bool flag_given) {
  if (direction == "is2ked") {
    if (!flag_given) {
      std::cerr << "error: reduce is2ked requires --k\n";
      return 2;
    }
    GraphPtr g = load_graph(in);
    konig_graph* reduced = nullptr;
    check(konig_reduce_is2ked(g.get(), k, &reduced));
    GraphPtr r(reduced);
    char* text = nullptr;
    check(konig_graph_to_text(r.get(), &text));
    write_output(out, TextPtr(text).get());
    return 0;
  }
  if (direction == "a2sat2keddfm") {
    if (!flag_given) {
      std::cerr << "error: reduce a2sat2keddfm requires --k\n";
      return 2;
    }
    CnfPtr c = load_cnf(in);
    konig_graph* reduced = nullptr;
    char* warnings = nullptr;
    check(konig_reduce_a2sat2keddfm(c.get(), k, &reduced, &warnings));
    TextPtr w(warnings);
    if (w && *w.get() != '\0') std::cerr << w.get();
    GraphPtr r(reduced);
    char* text = nullptr;
    check(konig_graph_to_text(r.get(), &text));
    write_output(out, TextPtr(text).get());
    return 0;
  }
  if (direction == "keddfm2a2sat") {
    GraphPtr g = load_graph(in);
    int resolved = resolve_k(g, k, flag_given);
    konig_cnf* cnf = nullptr;
    check(konig_reduce_keddfm2a2sat(g.get(), resolved, &cnf));
    CnfPtr c(cnf);
    char* text = nullptr;
    check(konig_cnf_to_text(c.get(), &text));
    write_output(out, TextPtr(text).get());
    return 0;
  }
  std::cerr << "error: unknown reduce direction " << direction << '\n';
  return 2;
}

int run_lift(const std::string& direction, const std::string& instance,
             const std::string& solution, const std::string& out, int k,
             bool flag_given) {
  GraphPtr g = load_graph(instance);
  std::string sol = read_input(solution);
  char* text = nullptr;
  if (direction == "is2ked") {
    check(konig_lift_is2ked(g.get(), sol.c_str(), &text));
  } else if (direction == "ked2is") {
    check(konig_lift_ked2is(g.get(), sol.c_str(), &text));
  } else if (direction == "a2sat2keddfm") {
    int resolved = resolve_k(g, k, flag_given);
    check(konig_lift_a2sat2keddfm(g.get(), resolved, sol.c_str(), &text));
  } else if (direction == "keddfm2a2sat") {
    int resolved = resolve_k(g, k, flag_given);
    check(konig_lift_keddfm2a2sat(g.get(), resolved, sol.c_str(), &text));
  } else {
    std::cerr << "error: unknown lift direction " << direction << '\n';
    return 2;
  }
  write_output(out, TextPtr(text).get());
  return 0;
}

int run_verify(const std::string& kind, const std::string& instance,
               const std::string& solution, int k, bool flag_given) {
  std::string sol = read_input(solution);
  int ok = 0;
  if (kind == "a2sat") {
    CnfPtr c = load_cnf(instance);
    if (!flag_given) {
      std::cerr << "error: verify a2sat requires --k\n";
      return 2;
    }
    check(konig_verify_a2sat(c.get(), k, sol.c_str(), &ok));
  } else {
    GraphPtr g = load_graph(instance);
    if (kind == "matching") {
      check(konig_verify_matching(g.get(), sol.c_str(), &ok));
    } else if (kind == "recognize") {
      check(konig_verify_recognize(g.get(), sol.c_str(), &ok));
    } else if (kind == "lp") {
      check(konig_verify_lp(g.get(), sol.c_str(), &ok));
    } else if (kind == "ked") {
      check(konig_verify_ked(g.get(), resolve_k(g, k, flag_given), sol.c_str(),
                             &ok));
    } else if (kind == "keddfm") {
      check(konig_verify_keddfm(g.get(), resolve_k(g, k, flag_given),
                                sol.c_str(), &ok));
    } else {
      std::cerr << "error: unknown verify kind " << kind << '\n';
      return 2;
    }
  }
  std::cout << (ok ? "VALID\n" : "INVALID\n");
  return ok ? 0 : 1;
}

int run_gen_graph(int n, const std::string& p, uint64_t seed,
                  const std::string& out) {
  uint64_t num = 0, den = 1;
  parse_probability(p, num, den);
  std::vector<std::pair<int, int>> edges;
  try {
    edges = konig_gen::gen_graph_edges(n, num, den, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::vector<int> flat;
  flat.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    flat.push_back(u);
    flat.push_back(v);
  }
  konig_graph* g = nullptr;
  check(konig_graph_build(n, flat.data(), edges.size(), &g));
  GraphPtr gp(g);
  char* text = nullptr;
  check(konig_graph_to_text(gp.get(), &text));
  write_output(out, TextPtr(text).get());
  return 0;
}

int run_gen_cnf(int nvars, int nclauses, const std::string& unit_prob,
                uint64_t seed, const std::string& out) {
  uint64_t num = 0, den = 1;
  parse_probability(unit_prob, num, den);
  std::vector<konig_gen::GenClause> clauses;
  try {
    clauses = konig_gen::gen_cnf_clauses(nvars, nclauses, num, den, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::ostringstream os;
  os << "p cnf " << nvars << ' ' << clauses.size() << '\n';
  for (const auto& c : clauses) {
    os << c.lits[0];
    if (c.lits[1] != 0) os << ' ' << c.lits[1];
    os << " 0\n";
  }
  write_output(out, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Konig graph recognition, edge deletion and Almost-2-SAT"};
  app.require_subcommand(1);

  std::string in, instance, solution, out, direction, kind;
  std::string prob = "1/2", unit_prob = "0";
  int k = 0, n = 0, nvars = 0, nclauses = 0;
  uint64_t seed = 0;
  bool oracle = false;

  auto* recognize = app.add_subcommand("recognize", "Konig recognition with witness");
  recognize->add_option("file", in, "graph file or -")->required();

  auto* matching = app.add_subcommand("matching", "maximum matching");
  matching->add_option("file", in)->required();

  auto* lp = app.add_subcommand("lp", "fractional vertex cover decomposition");
  lp->add_option("file", in)->required();

  auto* ked = app.add_subcommand("ked", "minimum Konig edge deletion (oracle)");
  ked->add_option("--k", k, "deletion budget")->required();
  ked->add_option("file", in)->required();

  auto* keddfm = app.add_subcommand(
      "keddfm", "Konig edge deletion disjoint from the declared matching");
  auto* keddfm_k = keddfm->add_option("--k", k, "deletion budget");
  keddfm->add_flag("--oracle", oracle, "use the exhaustive oracle");
  keddfm->add_option("file", in)->required();

  auto* a2sat = app.add_subcommand("a2sat", "minimum clause deletion to satisfiability");
  a2sat->add_option("--k", k)->required();
  a2sat->add_flag("--oracle", oracle, "use the exhaustive oracle");
  a2sat->add_option("file", in, "DIMACS CNF file or -")->required();

  auto* is = app.add_subcommand("is", "independent set via the deletion reduction");
  is->add_option("--k", k)->required();
  is->add_option("file", in)->required();

  auto* reduce = app.add_subcommand("reduce", "instance transformations");
  reduce->add_option("direction", direction, "is2ked | a2sat2keddfm | keddfm2a2sat")
      ->required();
  auto* reduce_k = reduce->add_option("--k", k);
  reduce->add_option("input", in)->required();
  reduce->add_option("output", out, "output file, - for stdout");

  auto* lift = app.add_subcommand("lift", "solution lifting across reductions");
  lift->add_option("direction", direction,
                   "is2ked | ked2is | a2sat2keddfm | keddfm2a2sat")
      ->required();
  auto* lift_k = lift->add_option("--k", k);
  lift->add_option("instance", instance)->required();
  lift->add_option("solution", solution)->required();
  lift->add_option("output", out);

  auto* verify = app.add_subcommand("verify", "check solver outputs");
  verify->add_option("kind", kind,
                     "matching | recognize | lp | ked | keddfm | a2sat")
      ->required();
  auto* verify_k = verify->add_option("--k", k);
  verify->add_option("instance", instance)->required();
  verify->add_option("solution", solution)->required();

  auto* gen_graph = app.add_subcommand("gen-graph", "seeded G(n,p) instance");
  gen_graph->add_option("--n", n)->required();
  gen_graph->add_option("--p", prob, "edge probability num/den");
  gen_graph->add_option("--seed", seed);
  gen_graph->add_option("output", out);

  auto* gen_cnf = app.add_subcommand("gen-cnf", "seeded random 2-CNF");
  gen_cnf->add_option("--nvars", nvars)->required();
  gen_cnf->add_option("--nclauses", nclauses)->required();
  gen_cnf->add_option("--unit-prob", unit_prob, "unit clause probability num/den");
  gen_cnf->add_option("--seed", seed);
  gen_cnf->add_option("output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (recognize->parsed()) return run_recognize(in);
  if (matching->parsed()) return run_matching(in);
  if (lp->parsed()) return run_lp(in);
  if (ked->parsed()) return run_ked(in, k);
  if (keddfm->parsed()) {
    return run_keddfm(in, k, keddfm_k->count() > 0, oracle);
  }
  if (a2sat->parsed()) return run_a2sat(in, k, oracle);
  if (is->parsed()) return run_is(in, k);
  if (reduce->parsed()) {
    return run_reduce(direction, in, out, k, reduce_k->count() > 0);
  }
  if (lift->parsed()) {
    return run_lift(direction, instance, solution, out, k, lift_k->count() > 0);
  }
  if (verify->parsed()) {
    return run_verify(kind, instance, solution, k, verify_k->count() > 0);
  }
  if (gen_graph->parsed()) return run_gen_graph(n, prob, seed, out);
  if (gen_cnf->parsed()) return run_gen_cnf(nvars, nclauses, unit_prob, seed, out);
  return 2;
}
