#include <doctest.h>

#include "gammab/bcolor.hpp"
#include "gammab/generators.hpp"
#include "oracles.hpp"

using namespace gammab;

TEST_CASE("is_proper and is_b_coloring examples") {
  CHECK(is_b_coloring(gen_complete(2), Coloring({1, 2})));
  CHECK_FALSE(is_b_coloring(gen_complete(2), Coloring({1, 1})));
  CHECK(is_proper(gen_cycle(5), Coloring({1, 2, 1, 2, 3})));
  CHECK_FALSE(is_proper(gen_cycle(5), Coloring({1, 2, 1, 2, 1})));
  CHECK(is_b_coloring(gen_R(4), r_tree_bcoloring(4)));
  CHECK_FALSE(is_b_coloring(gen_path(4), Coloring({1, 2, 3, 1})));
  CHECK(is_b_coloring(gen_complete(5), Coloring({1, 2, 3, 4, 5})));
}

TEST_CASE("domination_report") {
  DominationReport k3 = domination_report(gen_complete(3), Coloring({1, 2, 3}));
  CHECK(k3.all_dominated());
  CHECK(k3.dominator[0] == 0);
  CHECK(k3.dominator[1] == 1);
  CHECK(k3.dominator[2] == 2);

  DominationReport p4 = domination_report(gen_path(4), Coloring({1, 2, 3, 1}));
  CHECK_FALSE(p4.dominator[0].has_value());
  CHECK(p4.dominator[1] == 1);
  CHECK(p4.dominator[2] == 2);
  CHECK(p4.first_undominated() == 1);

  DominationReport flat = domination_report(Graph(2), Coloring({1, 1}));
  CHECK(flat.all_dominated());
  CHECK(flat.first_undominated() == 0);

  CHECK_THROWS_AS(domination_report(gen_complete(2), Coloring({1, 1})), GraphError);
}

TEST_CASE("eliminate_classes examples") {
  EliminationResult p4 = eliminate_classes_traced(gen_path(4), Coloring({1, 2, 3, 1}));
  CHECK(p4.coloring.colors() == std::vector<int>{2, 1, 2, 1});
  REQUIRE(p4.rounds.size() == 1);
  CHECK(p4.rounds[0].removed_class == 1);
  REQUIRE(p4.rounds[0].moves.size() == 2);
  CHECK(p4.rounds[0].moves[0].vertex == 0);
  CHECK(p4.rounds[0].moves[0].from == 1);
  CHECK(p4.rounds[0].moves[0].to == 3);
  CHECK(p4.rounds[0].moves[1].vertex == 3);
  CHECK(p4.rounds[0].moves[1].to == 2);

  Coloring k3({1, 2, 3});
  EliminationResult same = eliminate_classes_traced(gen_complete(3), k3);
  CHECK(same.coloring == k3);
  CHECK(same.rounds.empty());

  CHECK(eliminate_classes(Graph(4), Coloring({1, 2, 3, 4})).colors() ==
        std::vector<int>{1, 1, 1, 1});

  CHECK_THROWS_AS(eliminate_classes(gen_complete(2), Coloring({1, 1})), GraphError);
}

TEST_CASE("m_number") {
  CHECK(m_number(gen_complete(4)) == 4);
  CHECK(m_number(gen_path(4)) == 2);
  for (int t = 2; t <= 6; ++t)
    CHECK(m_number(gen_B(t)) == t);
  for (int k = 3; k <= 5; ++k)
    CHECK(m_number(gen_R(k)) == k);
  CHECK(m_number(gen_complete(1)) == 1);
  CHECK_THROWS_AS(m_number(Graph(0)), GraphError);
}

TEST_CASE("chromatic and clique examples") {
  CHECK(chromatic_number(gen_complete(5)).value == 5);
  CHECK(clique_number(gen_complete(5)).value == 5);
  CHECK(oracle::chromatic(gen_cycle(5)) == 3);
  CHECK(oracle::clique(gen_cycle(5)) == 2);
  CHECK(chromatic_number(gen_cycle(5)).value == 3);
  CHECK(clique_number(gen_cycle(5)).value == 2);
  CHECK(chromatic_number(gen_B(3)).value == 2);
  CHECK(clique_number(gen_B(3)).value == 2);
  CHECK_THROWS_AS(chromatic_number(Graph(0)), GraphError);
  CHECK_THROWS_AS(clique_number(Graph(0)), GraphError);
}

TEST_CASE("chromatic and clique numbers against brute force up to 8 vertices") {
  Rng rng(321);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(rng.uniform_int(1, 8), rng);
    ChromaticResult chi = chromatic_number(g);
    CliqueResult omega = clique_number(g);
    CAPTURE(emit_graph(g, GraphFormat::graph6));
    REQUIRE(chi.value == oracle::chromatic(g));
    REQUIRE(omega.value == oracle::clique(g));
    REQUIRE(chi.witness.classes() == chi.value);
    REQUIRE(oracle::proper(g, chi.witness.colors()));
    REQUIRE(omega.witness.size() == omega.value);
    for (int u : omega.witness.members())
      for (int v : omega.witness.members())
        if (u != v)
          REQUIRE(g.adjacent(u, v));
  }
}

TEST_CASE("b_number examples") {
  for (int n = 1; n <= 6; ++n)
    CHECK(b_number(gen_complete(n)).value == n);
  for (int t = 2; t <= 5; ++t)
    CHECK(b_number(gen_B(t)).value == 2);
  for (int k = 3; k <= 4; ++k)
    CHECK(b_number(gen_R(k)).value == k);
  CHECK(oracle::b_number(gen_path(5)) == 3);
  CHECK(b_number(gen_path(5)).value == 3);
  CHECK(b_number(Graph(3)).value == 1);
  CHECK_THROWS_AS(b_number(Graph(0)), GraphError);
}

TEST_CASE("b_number against partition search up to 7 vertices") {
  Rng rng(999);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(rng.uniform_int(1, 7), rng);
    BResult r = b_number(g);
    CAPTURE(emit_graph(g, GraphFormat::graph6));
    REQUIRE(r.value == oracle::b_number(g));
    REQUIRE(r.witness.classes() == r.value);
    REQUIRE(is_b_coloring(g, r.witness));
    REQUIRE(oracle::b_coloring(g, r.witness.colors(), r.value));
  }
}

TEST_CASE("find_b_coloring") {
  // C_4 has b-colorings with 2 colors but none with 3.
  CHECK(find_b_coloring(gen_cycle(4), 2).has_value());
  CHECK_FALSE(find_b_coloring(gen_cycle(4), 3).has_value());
  auto c = find_b_coloring(gen_path(5), 3);
  REQUIRE(c.has_value());
  CHECK(is_b_coloring(gen_path(5), *c));
}

TEST_CASE("invariant chain on random graphs") {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(rng.uniform_int(1, 11), rng);
    int omega = clique_number(g).value;
    int chi = chromatic_number(g).value;
    int b = b_number(g).value;
    int m = m_number(g);
    CHECK(omega <= chi);
    CHECK(chi <= b);
    CHECK(b <= m);
    CHECK(m <= g.max_degree() + 1);
  }
}

TEST_CASE("trees satisfy b >= m - 1") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Graph t = gen_random_tree(2 + static_cast<int>(seed % 11), seed);
    CHECK(b_number(t).value >= m_number(t) - 1);
  }
}

TEST_CASE("elimination ends in a b-coloring with at most b colors") {
  Rng rng(4242);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(rng.uniform_int(1, 9), rng);
    Coloring start(oracle::random_proper_coloring(g, rng));
    Coloring end = eliminate_classes(g, start);
    REQUIRE(is_b_coloring(g, end));
    REQUIRE(oracle::b_coloring(g, end.colors(), end.classes()));
    REQUIRE(end.classes() <= start.classes());
    REQUIRE(end.classes() <= b_number(g).value);
  }
}

TEST_CASE("B_4 interior has a larger b-number") {
  Graph interior = induced_subgraph(gen_B(4), VertexSet::of({0, 1, 2, 4, 5, 6}));
  CHECK(oracle::b_number(interior) == 3);
  CHECK(b_number(interior).value == 3);
  CHECK(b_number(gen_B(4)).value == 2);
}
