#include "konig.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "konig/errors.hpp"
#include "konig/graph.hpp"
#include "konig/io.hpp"
#include "konig/koenig.hpp"
#include "konig/lp.hpp"
#include "konig/matching.hpp"
#include "konig/reductions.hpp"
#include "konig/twosat.hpp"

struct konig_graph {
  konig::GraphFile file;
};

struct konig_cnf {
  konig::TwoCnf cnf;
};

namespace {

thread_local std::string g_last_error;

konig_status fail(konig_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
konig_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return KONIG_OK;
  } catch (const konig::ParseError& e) {
    return fail(KONIG_ERR_PARSE, e.what());
  } catch (const konig::GuardError& e) {
    return fail(KONIG_ERR_GUARD, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(KONIG_ERR_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(KONIG_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(KONIG_ERR_INTERNAL, e.what());
  }
}

char* dup_text(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

konig::EdgeSet edges_from_pairs(const int* endpoints, size_t m) {
  std::vector<konig::Edge> edges;
  edges.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    edges.push_back(konig::make_edge(endpoints[2 * i], endpoints[2 * i + 1]));
  }
  return konig::EdgeSet(std::move(edges));
}

const konig::Matching& require_matching(const konig_graph* g) {
  if (!g->file.matching) {
    throw std::invalid_argument("instance has no declared matching");
  }
  return *g->file.matching;
}

konig::KedDfmInstance dfm_instance(const konig_graph* g, int k) {
  return konig::KedDfmInstance(g->file.graph, require_matching(g), k);
}

// Reduced independent-set instances are reconstructed from their layout:
// n' = 2n + 2k with originals 1..n.
konig::KedInstance ked_instance(const konig_graph* g, int declared_k) {
  int k = declared_k >= 0 ? declared_k
                          : (g->file.k ? *g->file.k : -1);
  if (k < 0) throw std::invalid_argument("instance has no parameter");
  int n2 = g->file.graph.vertex_count() - 2 * k;
  if (n2 <= 0 || n2 % 2 != 0) {
    throw std::invalid_argument("vertex count does not match a reduced instance");
  }
  return konig::KedInstance(g->file.graph, n2 / 2, k);
}

}  // namespace

extern "C" {

const char* konig_last_error(void) { return g_last_error.c_str(); }

void konig_graph_free(konig_graph* g) { delete g; }
void konig_cnf_free(konig_cnf* c) { delete c; }
void konig_ints_free(int* p) { std::free(p); }
void konig_text_free(char* p) { std::free(p); }

konig_status konig_graph_parse(const char* text, konig_graph** out) {
  return guarded([&] {
    *out = new konig_graph{konig::parse_graph_file(text ? text : "")};
  });
}

konig_status konig_graph_build(int n, const int* endpoints, size_t m,
                               konig_graph** out) {
  return guarded([&] {
    auto edges = edges_from_pairs(endpoints, m);
    *out = new konig_graph{
        {konig::Graph::from_edges(n, edges.edges()), std::nullopt, std::nullopt}};
  });
}

konig_status konig_graph_with_matching(const konig_graph* g,
                                       const int* endpoints, size_t m,
                                       konig_graph** out) {
  return guarded([&] {
    konig::GraphFile file = g->file;
    file.matching =
        konig::Matching::checked(file.graph, edges_from_pairs(endpoints, m));
    *out = new konig_graph{std::move(file)};
  });
}

konig_status konig_graph_with_param(const konig_graph* g, int k,
                                    konig_graph** out) {
  return guarded([&] {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    konig::GraphFile file = g->file;
    file.k = k;
    *out = new konig_graph{std::move(file)};
  });
}

int konig_graph_vertex_count(const konig_graph* g) {
  return g->file.graph.vertex_count();
}

size_t konig_graph_edge_count(const konig_graph* g) {
  return g->file.graph.edge_count();
}

konig_status konig_graph_edges(const konig_graph* g, int* endpoints) {
  return guarded([&] {
    size_t i = 0;
    for (const konig::Edge& e : g->file.graph.edges()) {
      endpoints[i++] = e.u;
      endpoints[i++] = e.v;
    }
  });
}

int konig_graph_has_matching(const konig_graph* g) {
  return g->file.matching.has_value() ? 1 : 0;
}

size_t konig_graph_matching_size(const konig_graph* g) {
  return g->file.matching ? g->file.matching->size() : 0;
}

konig_status konig_graph_matching_edges(const konig_graph* g, int* endpoints) {
  return guarded([&] {
    size_t i = 0;
    for (const konig::Edge& e : require_matching(g).edges()) {
      endpoints[i++] = e.u;
      endpoints[i++] = e.v;
    }
  });
}

int konig_graph_has_param(const konig_graph* g) {
  return g->file.k.has_value() ? 1 : 0;
}

int konig_graph_param(const konig_graph* g) { return g->file.k.value_or(-1); }

konig_status konig_graph_to_text(const konig_graph* g, char** out) {
  return guarded([&] { *out = dup_text(konig::write_graph_file(g->file)); });
}

konig_status konig_maximum_matching(const konig_graph* g, char** out) {
  return guarded([&] {
    *out = dup_text(konig::format_matching(konig::maximum_matching(g->file.graph)));
  });
}

konig_status konig_recognize(const konig_graph* g, int* is_konig,
                             char** witness) {
  return guarded([&] {
    auto w = konig::koenig_witness(g->file.graph);
    *is_konig = w.has_value() ? 1 : 0;
    *witness = dup_text(konig::format_witness(w));
  });
}

konig_status konig_lp(const konig_graph* g, char** out) {
  return guarded([&] {
    *out = dup_text(konig::format_lp(konig::nt_decomposition(g->file.graph)));
  });
}

konig_status konig_brute_min_vc(const konig_graph* g, char** out) {
  return guarded([&] {
    *out = dup_text(
        konig::format_vertex_set(konig::brute_force_min_vc(g->file.graph)));
  });
}

konig_status konig_brute_ked(const konig_graph* g, int k, int* found,
                             char** out) {
  return guarded([&] {
    auto f = konig::brute_force_min_ked(g->file.graph, k);
    *found = f.has_value() ? 1 : 0;
    *out = dup_text(konig::format_edge_deletion(f));
  });
}

konig_status konig_brute_ked_dfm(const konig_graph* g, int k, int* found,
                                 char** out) {
  return guarded([&] {
    auto f = konig::brute_force_min_ked_dfm(g->file.graph, require_matching(g), k);
    *found = f.has_value() ? 1 : 0;
    *out = dup_text(konig::format_edge_deletion(f));
  });
}

konig_status konig_solve_keddfm(const konig_graph* g, int k, int* found,
                                char** out) {
  return guarded([&] {
    auto f = konig::solve_keddfm(dfm_instance(g, k));
    *found = f.has_value() ? 1 : 0;
    *out = dup_text(konig::format_edge_deletion(f));
  });
}

konig_status konig_solve_is(const konig_graph* g, int k, int* found,
                            char** out) {
  return guarded([&] {
    auto s = konig::solve_independent_set(g->file.graph, k);
    *found = s.has_value() ? 1 : 0;
    *out = dup_text(konig::format_vertex_set(s));
  });
}

konig_status konig_cnf_parse(const char* text, konig_cnf** out) {
  return guarded([&] {
    *out = new konig_cnf{konig::parse_cnf(text ? text : "")};
  });
}

int konig_cnf_nvars(const konig_cnf* c) { return c->cnf.nvars(); }

long long konig_cnf_clause_count(const konig_cnf* c) {
  return c->cnf.copy_count();
}

konig_status konig_cnf_to_text(const konig_cnf* c, char** out) {
  return guarded([&] { *out = dup_text(konig::write_cnf(c->cnf)); });
}

konig_status konig_solve_2sat(const konig_cnf* c, int* sat, char** out) {
  return guarded([&] {
    konig::TwoSatResult res = konig::solve_2sat(c->cnf);
    *sat = res.satisfiable ? 1 : 0;
    std::ostringstream os;
    if (res.satisfiable) {
      for (int v = 1; v <= c->cnf.nvars(); ++v) {
        os << "v " << (res.assignment[v] ? v : -v) << '\n';
      }
    } else {
      os << "contradiction on variable " << res.witness_var << '\n';
    }
    *out = dup_text(os.str());
  });
}

konig_status konig_almost_2sat(const konig_cnf* c, int k, int* found,
                               char** out) {
  return guarded([&] {
    auto d = konig::almost_2sat(c->cnf, k);
    *found = d.has_value() ? 1 : 0;
    *out = dup_text(konig::format_clause_deletion(c->cnf, d));
  });
}

konig_status konig_brute_almost_2sat(const konig_cnf* c, int k, int* found,
                                     char** out) {
  return guarded([&] {
    auto d = konig::brute_force_almost_2sat(c->cnf, k);
    *found = d.has_value() ? 1 : 0;
    *out = dup_text(konig::format_clause_deletion(c->cnf, d));
  });
}

konig_status konig_reduce_is2ked(const konig_graph* g, int k,
                                 konig_graph** out) {
  return guarded([&] {
    konig::KedInstance inst = konig::reduce_is_to_ked(g->file.graph, k);
    *out = new konig_graph{{inst.graph(), std::nullopt, k}};
  });
}

konig_status konig_reduce_a2sat2keddfm(const konig_cnf* c, int k,
                                       konig_graph** out, char** warnings) {
  return guarded([&] {
    konig::A2SatReduction red = konig::reduce_a2sat_to_keddfm(c->cnf, k);
    *out = new konig_graph{
        {red.instance.graph(), red.instance.matching(), red.instance.k()}};
    if (warnings) {
      std::ostringstream os;
      for (const std::string& w : red.warnings) os << w << '\n';
      *warnings = dup_text(os.str());
    }
  });
}

konig_status konig_reduce_keddfm2a2sat(const konig_graph* g, int k,
                                       konig_cnf** out) {
  return guarded([&] {
    *out = new konig_cnf{konig::reduce_keddfm_to_a2sat(dfm_instance(g, k))};
  });
}

konig_status konig_lift_is2ked(const konig_graph* reduced,
                               const char* vertex_set_text, char** out) {
  return guarded([&] {
    auto s = konig::parse_vertex_set_text(vertex_set_text ? vertex_set_text : "");
    if (!s) throw std::invalid_argument("solution text answers NO");
    konig::KedInstance inst = ked_instance(reduced, -1);
    *out = dup_text(
        konig::format_edge_deletion(konig::build_ked_from_is(inst, *s)));
  });
}

konig_status konig_lift_ked2is(const konig_graph* reduced,
                               const char* edge_deletion_text, char** out) {
  return guarded([&] {
    auto f = konig::parse_edge_deletion_text(
        edge_deletion_text ? edge_deletion_text : "");
    if (!f) throw std::invalid_argument("solution text answers NO");
    konig::KedInstance inst = ked_instance(reduced, -1);
    *out = dup_text(
        konig::format_vertex_set(konig::lift_ked_to_is(inst, *f)));
  });
}

konig_status konig_lift_a2sat2keddfm(const konig_graph* instance, int k,
                                     const char* clause_deletion_text,
                                     char** out) {
  return guarded([&] {
    konig::KedDfmInstance inst = dfm_instance(instance, k);
    konig::TwoCnf phi = konig::reduce_keddfm_to_a2sat(inst);
    auto d = konig::parse_clause_deletion_text(
        phi, clause_deletion_text ? clause_deletion_text : "");
    if (!d) throw std::invalid_argument("solution text answers NO");
    *out = dup_text(
        konig::format_edge_deletion(konig::lift_a2sat_to_keddfm(inst, *d)));
  });
}

konig_status konig_lift_keddfm2a2sat(const konig_graph* instance, int k,
                                     const char* edge_deletion_text,
                                     char** out) {
  return guarded([&] {
    konig::KedDfmInstance inst = dfm_instance(instance, k);
    auto f = konig::parse_edge_deletion_text(
        edge_deletion_text ? edge_deletion_text : "");
    if (!f) throw std::invalid_argument("solution text answers NO");
    konig::TwoCnf phi = konig::reduce_keddfm_to_a2sat(inst);
    *out = dup_text(konig::format_clause_deletion(
        phi, konig::lift_keddfm_to_a2sat(inst, *f)));
  });
}

konig_status konig_verify_matching(const konig_graph* g, const char* text,
                                   int* ok) {
  return guarded([&] {
    konig::EdgeSet edges = konig::parse_matching_text(text ? text : "");
    *ok = konig::is_matching(g->file.graph, edges) &&
                  edges.size() == konig::maximum_matching(g->file.graph).size()
              ? 1
              : 0;
  });
}

konig_status konig_verify_recognize(const konig_graph* g, const char* text,
                                    int* ok) {
  return guarded([&] {
    konig::WitnessText w = konig::parse_witness_text(text ? text : "");
    if (!w.is_konig) {
      *ok = konig::is_koenig(g->file.graph) ? 0 : 1;
      return;
    }
    if (!konig::is_matching(g->file.graph, w.matching)) {
      *ok = 0;
      return;
    }
    konig::KoenigWitness witness{
        w.cover, konig::Matching::checked(g->file.graph, w.matching)};
    *ok = konig::check_witness(g->file.graph, witness) ? 1 : 0;
  });
}

konig_status konig_verify_lp(const konig_graph* g, const char* text, int* ok) {
  return guarded([&] {
    konig::HalfIntegralVC sol =
        konig::parse_lp_text(text ? text : "", g->file.graph.vertex_count());
    *ok = konig::verify_nt(g->file.graph, sol) ? 1 : 0;
  });
}

konig_status konig_verify_ked(const konig_graph* g, int k, const char* text,
                              int* ok) {
  return guarded([&] {
    auto f = konig::parse_edge_deletion_text(text ? text : "");
    if (!f) {
      *ok = konig::brute_force_min_ked(g->file.graph, k).has_value() ? 0 : 1;
      return;
    }
    *ok = static_cast<int>(f->size()) <= k &&
                  konig::is_koenig(konig::delete_edges(g->file.graph, *f))
              ? 1
              : 0;
  });
}

konig_status konig_verify_keddfm(const konig_graph* g, int k, const char* text,
                                 int* ok) {
  return guarded([&] {
    const konig::Matching& m = require_matching(g);
    auto f = konig::parse_edge_deletion_text(text ? text : "");
    if (!f) {
      *ok = konig::brute_force_min_ked_dfm(g->file.graph, m, k).has_value() ? 0
                                                                            : 1;
      return;
    }
    bool disjoint = true;
    for (const konig::Edge& e : *f) {
      if (m.edges().contains(e)) disjoint = false;
    }
    *ok = disjoint && static_cast<int>(f->size()) <= k &&
                  konig::is_koenig(konig::delete_edges(g->file.graph, *f))
              ? 1
              : 0;
  });
}

konig_status konig_verify_a2sat(const konig_cnf* c, int k, const char* text,
                                int* ok) {
  return guarded([&] {
    auto d = konig::parse_clause_deletion_text(c->cnf, text ? text : "");
    if (!d) {
      *ok = konig::almost_2sat(c->cnf, k).has_value() ? 0 : 1;
      return;
    }
    *ok = d->total() <= k &&
                  konig::solve_2sat(konig::apply_deletions(c->cnf, *d)).satisfiable
              ? 1
              : 0;
  });
}

}  // extern "C"
