#include <doctest.h>

#include <numeric>

#include "gammab/bcolor.hpp"
#include "gammab/generators.hpp"
#include "gammab/grundy.hpp"
#include "oracles.hpp"

using namespace gammab;

TEST_CASE("first_fit examples") {
  Coloring k3 = first_fit(gen_complete(3), Ordering({2, 0, 1}));
  CHECK(k3[2] == 1);
  CHECK(k3[0] == 2);
  CHECK(k3[1] == 3);

  // (1,1,2,3) in visit order 0,3,1,2.
  Ordering visit({0, 3, 1, 2});
  Coloring p4 = first_fit(gen_path(4), visit);
  std::vector<int> in_visit_order;
  for (int v : visit.sequence())
    in_visit_order.push_back(p4[v]);
  CHECK(in_visit_order == std::vector<int>{1, 1, 2, 3});
  CHECK(p4.colors() == std::vector<int>{1, 2, 3, 1});
  CHECK(is_grundy_coloring(gen_path(4), p4));

  Coloring flat = first_fit(Graph(3), Ordering({1, 2, 0}));
  CHECK(flat.colors() == std::vector<int>{1, 1, 1});

  CHECK_THROWS_AS(first_fit(gen_path(4), Ordering::identity(3)), GraphError);
}

TEST_CASE("is_grundy_coloring examples") {
  CHECK_FALSE(is_grundy_coloring(gen_complete(2), Coloring({1, 1})));
  CHECK_THROWS_AS(Coloring({1, 3, 1}), GraphError); // color 2 unused
  // (1,3,1) on P_3 is not expressible as a Coloring; the same gap with all
  // colors used: vertex 1 has color 3 but no neighbour of color 2.
  Graph p3_plus = build_graph(4, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_grundy_coloring(p3_plus, Coloring({1, 3, 1, 2})));
  CHECK(is_grundy_coloring(gen_path(3), Coloring({1, 2, 1})));
}

TEST_CASE("oracle values from enumeration") {
  CHECK(grundy_oracle(gen_path(4)) == 3);
  CHECK(grundy_oracle(gen_complete(4)) == 4);
  // C_4 is K_{2,2}: every First-Fit run uses exactly two colors.
  CHECK(grundy_oracle(gen_cycle(4)) == 2);
  CHECK(grundy_oracle(gen_cycle(5)) == 3);
  CHECK(grundy_oracle(gen_complete_bipartite(1, 5)) == 2);
  CHECK(grundy_oracle(gen_path(5)) == 3);
  CHECK_THROWS_AS(grundy_oracle(gen_path(10)), CapExceeded);
}

TEST_CASE("partition oracle agrees with the ordering oracle") {
  Rng rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(rng.uniform_int(1, 7), rng);
    REQUIRE(oracle::grundy_by_partitions(g) == grundy_oracle(g));
  }
}

TEST_CASE("grundy_number examples") {
  for (int n = 1; n <= 7; ++n)
    CHECK(grundy_number(gen_complete(n)).value == n);
  CHECK(grundy_number(gen_path(4)).value == 3);
  CHECK(grundy_number(gen_complete_bipartite(1, 5)).value == 2);
  for (int t = 2; t <= 5; ++t)
    CHECK(grundy_number(gen_B(t)).value == t + 1);
  CHECK(grundy_number(gen_complete(1)).value == 1);
}

TEST_CASE("grundy_number equals the oracle, witness replays") {
  Rng rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(rng.uniform_int(1, 8), rng);
    GrundyResult r = grundy_number(g);
    CAPTURE(emit_graph(g, GraphFormat::graph6));
    REQUIRE(r.value == grundy_oracle(g));
    REQUIRE(first_fit(g, r.witness).classes() == r.value);
  }
}

TEST_CASE("first_fit always yields a Grundy coloring") {
  Rng rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform_int(1, 12);
    Graph g = oracle::random_graph(n, rng);
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(seq[i], seq[rng.uniform_int(0, i)]);
    Coloring c = first_fit(g, Ordering(seq));
    REQUIRE(is_grundy_coloring(g, c));
    REQUIRE(oracle::grundy_coloring(g, c.colors(), c.classes()));
    REQUIRE(first_fit(g, Ordering(seq)) == c);
  }
}

TEST_CASE("chi <= Gamma <= Delta + 1") {
  Rng rng(66);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(rng.uniform_int(1, 12), rng);
    int gamma = grundy_number(g).value;
    CHECK(chromatic_number(g).value <= gamma);
    CHECK(gamma <= g.max_degree() + 1);
  }
}

TEST_CASE("Gamma of a disjoint union is the larger Gamma") {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(rng.uniform_int(1, 6), rng);
    Graph h = oracle::random_graph(rng.uniform_int(1, 6), rng);
    CHECK(grundy_number(disjoint_union(g, h)).value ==
          std::max(grundy_number(g).value, grundy_number(h).value));
  }
}

TEST_CASE("oracle witness is lexicographically first") {
  GrundyResult r = grundy_oracle_witness(gen_path(4));
  CHECK(r.value == 3);
  CHECK(r.witness.sequence() == std::vector<int>{0, 1, 3, 2});
}

TEST_CASE("larger instances stay within the exact cap") {
  for (int k = 2; k <= 5; ++k)
    CHECK(grundy_number(gen_R(k)).value <= 2 * k);
  CHECK(grundy_number(gen_caterpillar(4, 4)).value == 4);
  CHECK(grundy_number(gen_cycle(12)).value == 3);
  CHECK(grundy_number(gen_B(7)).value == 8);
}
