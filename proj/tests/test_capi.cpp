// Exercises the extern-C surface end to end: parse, solve, reduce, lift,
// verify, and the error-code contract.

#include "doctest.h"

#include <cstring>
#include <string>

#include "konig.h"

namespace {

struct Text {
  char* p = nullptr;
  ~Text() { konig_text_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct G {
  konig_graph* p = nullptr;
  ~G() { konig_graph_free(p); }
};

struct C {
  konig_cnf* p = nullptr;
  ~C() { konig_cnf_free(p); }
};

constexpr const char* kC4 = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n";
constexpr const char* kK3 = "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n";
constexpr const char* kTriangleInstance =
    "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\nm 1 2\nk 1\n";

}  // namespace

TEST_CASE("graph parse, accessors and serialization") {
  G g;
  REQUIRE(konig_graph_parse(kTriangleInstance, &g.p) == KONIG_OK);
  CHECK(konig_graph_vertex_count(g.p) == 3);
  CHECK(konig_graph_edge_count(g.p) == 3);
  CHECK(konig_graph_has_matching(g.p) == 1);
  CHECK(konig_graph_matching_size(g.p) == 1);
  CHECK(konig_graph_has_param(g.p) == 1);
  CHECK(konig_graph_param(g.p) == 1);
  int endpoints[6];
  REQUIRE(konig_graph_edges(g.p, endpoints) == KONIG_OK);
  CHECK(endpoints[0] == 1);
  CHECK(endpoints[1] == 2);
  Text text;
  REQUIRE(konig_graph_to_text(g.p, &text.p) == KONIG_OK);
  CHECK(text.str() == kTriangleInstance);

  G bad;
  CHECK(konig_graph_parse("p edge 2 1\ne 1 1\n", &bad.p) == KONIG_ERR_PARSE);
  CHECK(std::strstr(konig_last_error(), "line 2") != nullptr);
}

TEST_CASE("recognition and matching through the C API") {
  G c4;
  REQUIRE(konig_graph_parse(kC4, &c4.p) == KONIG_OK);
  int is_konig = 0;
  Text witness;
  REQUIRE(konig_recognize(c4.p, &is_konig, &witness.p) == KONIG_OK);
  CHECK(is_konig == 1);
  CHECK(witness.str() == "KONIG\ns 1 3\nm 1 2\nm 3 4\n");
  int ok = 0;
  REQUIRE(konig_verify_recognize(c4.p, witness.p, &ok) == KONIG_OK);
  CHECK(ok == 1);
  // A NOT-KONIG claim is re-derived: wrong for C4, right for K3.
  REQUIRE(konig_verify_recognize(c4.p, "NOT-KONIG\n", &ok) == KONIG_OK);
  CHECK(ok == 0);

  Text m;
  REQUIRE(konig_maximum_matching(c4.p, &m.p) == KONIG_OK);
  CHECK(m.str() == "s 2\nm 1 2\nm 3 4\n");
  REQUIRE(konig_verify_matching(c4.p, m.p, &ok) == KONIG_OK);
  CHECK(ok == 1);
  REQUIRE(konig_verify_matching(c4.p, "s 1\nm 1 2\n", &ok) == KONIG_OK);
  CHECK(ok == 0);

  G k3;
  REQUIRE(konig_graph_parse(kK3, &k3.p) == KONIG_OK);
  REQUIRE(konig_verify_recognize(k3.p, "NOT-KONIG\n", &ok) == KONIG_OK);
  CHECK(ok == 1);
  Text lp;
  REQUIRE(konig_lp(k3.p, &lp.p) == KONIG_OK);
  CHECK(lp.str() == "vcf 3/2\nS0:\nShalf: 1 2 3\nS1:\n");
  REQUIRE(konig_verify_lp(k3.p, lp.p, &ok) == KONIG_OK);
  CHECK(ok == 1);
}

TEST_CASE("deletion solvers through the C API") {
  G k3;
  REQUIRE(konig_graph_parse(kK3, &k3.p) == KONIG_OK);
  int found = 0;
  Text out;
  REQUIRE(konig_brute_ked(k3.p, 1, &found, &out.p) == KONIG_OK);
  CHECK(found == 1);
  CHECK(out.str() == "s 1\nd 1 2\n");
  int ok = 0;
  REQUIRE(konig_verify_ked(k3.p, 1, out.p, &ok) == KONIG_OK);
  CHECK(ok == 1);

  G inst;
  REQUIRE(konig_graph_parse(kTriangleInstance, &inst.p) == KONIG_OK);
  Text dfm;
  REQUIRE(konig_solve_keddfm(inst.p, 1, &found, &dfm.p) == KONIG_OK);
  CHECK(found == 1);
  CHECK(dfm.str() == "s 1\nd 1 3\n");
  REQUIRE(konig_verify_keddfm(inst.p, 1, dfm.p, &ok) == KONIG_OK);
  CHECK(ok == 1);
  // The oracle agrees.
  Text dfm2;
  REQUIRE(konig_brute_ked_dfm(inst.p, 1, &found, &dfm2.p) == KONIG_OK);
  CHECK(found == 1);
  CHECK(dfm2.str() == dfm.str());

  // Missing matching lines are a contract violation.
  G plain;
  REQUIRE(konig_graph_parse(kK3, &plain.p) == KONIG_OK);
  CHECK(konig_solve_keddfm(plain.p, 1, &found, &dfm.p) == KONIG_ERR_INVALID);

  // Guard errors surface as their own status.
  G big;
  {
    std::string text = "p edge 40 780\n";
    for (int u = 1; u <= 40; ++u)
      for (int v = u + 1; v <= 40; ++v)
        text += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    REQUIRE(konig_graph_parse(text.c_str(), &big.p) == KONIG_OK);
  }
  Text guard;
  CHECK(konig_brute_ked(big.p, 4, &found, &guard.p) == KONIG_ERR_GUARD);
}

TEST_CASE("formula solvers through the C API") {
  C contradiction;
  REQUIRE(konig_cnf_parse("p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n",
                          &contradiction.p) == KONIG_OK);
  CHECK(konig_cnf_nvars(contradiction.p) == 2);
  CHECK(konig_cnf_clause_count(contradiction.p) == 4);
  int sat = 1;
  Text assignment;
  REQUIRE(konig_solve_2sat(contradiction.p, &sat, &assignment.p) == KONIG_OK);
  CHECK(sat == 0);
  int found = 0;
  Text d;
  REQUIRE(konig_almost_2sat(contradiction.p, 1, &found, &d.p) == KONIG_OK);
  CHECK(found == 1);
  int ok = 0;
  REQUIRE(konig_verify_a2sat(contradiction.p, 1, d.p, &ok) == KONIG_OK);
  CHECK(ok == 1);
  Text d0;
  REQUIRE(konig_almost_2sat(contradiction.p, 0, &found, &d0.p) == KONIG_OK);
  CHECK(found == 0);
  CHECK(d0.str() == "s NO\n");
  REQUIRE(konig_verify_a2sat(contradiction.p, 0, d0.p, &ok) == KONIG_OK);
  CHECK(ok == 1);
  // The exhaustive route agrees with the branching solver.
  Text slow;
  REQUIRE(konig_brute_almost_2sat(contradiction.p, 1, &found, &slow.p) ==
          KONIG_OK);
  CHECK(found == 1);
  CHECK(slow.str() == d.str());
}

TEST_CASE("minimum vertex cover through the C API") {
  G k3;
  REQUIRE(konig_graph_parse(kK3, &k3.p) == KONIG_OK);
  Text cover;
  REQUIRE(konig_brute_min_vc(k3.p, &cover.p) == KONIG_OK);
  CHECK(cover.str() == "s 2\nv 1\nv 2\n");
}

TEST_CASE("reductions and lifting through the C API") {
  // Independent set -> deletion instance and back.
  G c5;
  REQUIRE(konig_graph_parse("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n",
                            &c5.p) == KONIG_OK);
  G reduced;
  REQUIRE(konig_reduce_is2ked(c5.p, 2, &reduced.p) == KONIG_OK);
  CHECK(konig_graph_vertex_count(reduced.p) == 14);
  CHECK(konig_graph_edge_count(reduced.p) == 50);
  CHECK(konig_graph_param(reduced.p) == 2);
  Text ked;
  REQUIRE(konig_lift_is2ked(reduced.p, "s 2\nv 1\nv 3\n", &ked.p) == KONIG_OK);
  CHECK(ked.str() == "s 2\nd 1 6\nd 3 8\n");
  Text back;
  REQUIRE(konig_lift_ked2is(reduced.p, ked.p, &back.p) == KONIG_OK);
  CHECK(back.str() == "s 2\nv 1\nv 3\n");

  // Formula -> instance; instance -> formula.
  C phi;
  REQUIRE(konig_cnf_parse("p cnf 2 2\n1 2 0\n-1 -2 0\n", &phi.p) == KONIG_OK);
  G inst;
  Text warnings;
  REQUIRE(konig_reduce_a2sat2keddfm(phi.p, 0, &inst.p, &warnings.p) == KONIG_OK);
  CHECK(konig_graph_vertex_count(inst.p) == 4);
  CHECK(konig_graph_has_matching(inst.p) == 1);
  CHECK(warnings.str().empty());

  G tri;
  REQUIRE(konig_graph_parse(kTriangleInstance, &tri.p) == KONIG_OK);
  C derived;
  REQUIRE(konig_reduce_keddfm2a2sat(tri.p, 1, &derived.p) == KONIG_OK);
  Text cnf_text;
  REQUIRE(konig_cnf_to_text(derived.p, &cnf_text.p) == KONIG_OK);
  CHECK(cnf_text.str() ==
        "p cnf 3 8\n1 2 0\n1 2 0\n1 3 0\n2 3 0\n-1 -2 0\n-1 -2 0\n-3 0\n-3 0\n");
  Text lifted;
  REQUIRE(konig_lift_a2sat2keddfm(tri.p, 1, "s 1\nd 1 3 0\n", &lifted.p) ==
          KONIG_OK);
  CHECK(lifted.str() == "s 1\nd 1 3\n");
  Text clause_back;
  REQUIRE(konig_lift_keddfm2a2sat(tri.p, 1, lifted.p, &clause_back.p) ==
          KONIG_OK);
  CHECK(clause_back.str() == "s 1\nd 1 3 0\n");
}

TEST_CASE("instances can be assembled programmatically") {
  int endpoints[] = {1, 2, 1, 3, 2, 3};
  G k3;
  REQUIRE(konig_graph_build(3, endpoints, 3, &k3.p) == KONIG_OK);
  int mate[] = {1, 2};
  G with_m;
  REQUIRE(konig_graph_with_matching(k3.p, mate, 1, &with_m.p) == KONIG_OK);
  G inst;
  REQUIRE(konig_graph_with_param(with_m.p, 1, &inst.p) == KONIG_OK);
  Text text;
  REQUIRE(konig_graph_to_text(inst.p, &text.p) == KONIG_OK);
  CHECK(text.str() == kTriangleInstance);
  int found = 0;
  Text out;
  REQUIRE(konig_solve_keddfm(inst.p, 1, &found, &out.p) == KONIG_OK);
  CHECK(found == 1);

  // Overlapping matching edges are rejected at construction.
  int bad[] = {1, 2, 2, 3};
  G overlap;
  CHECK(konig_graph_with_matching(k3.p, bad, 2, &overlap.p) ==
        KONIG_ERR_INVALID);
}

TEST_CASE("independent set demo through the C API") {
  G c5;
  REQUIRE(konig_graph_parse("p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n",
                            &c5.p) == KONIG_OK);
  int found = 0;
  Text out;
  REQUIRE(konig_solve_is(c5.p, 2, &found, &out.p) == KONIG_OK);
  CHECK(found == 1);
  G k4;
  REQUIRE(konig_graph_parse("p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n",
                            &k4.p) == KONIG_OK);
  Text none;
  REQUIRE(konig_solve_is(k4.p, 2, &found, &none.p) == KONIG_OK);
  CHECK(found == 0);
  CHECK(none.str() == "s NO\n");
}
