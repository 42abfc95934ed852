#include <doctest.h>

#include "gammab/bcolor.hpp"
#include "gammab/generators.hpp"
#include "gammab/monotone.hpp"
#include "oracles.hpp"

using namespace gammab;

namespace {

// Largest b over all nonempty proper induced subgraphs, by plain enumeration.
int max_sub_b(const Graph &g) {
  int best = 0;
  const std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
  for (std::uint64_t s = 1; s < full; ++s)
    best = std::max(best, oracle::b_number(induced_subgraph(g, VertexSet(s))));
  return best;
}

} // namespace

TEST_CASE("B_4 is not b-monotone") {
  MonotonicityVerdict v = is_b_monotone(gen_B(4));
  CHECK_FALSE(v.monotone);
  CHECK(v.b_graph == 2);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->b_value == 3);
  CHECK(v.witness->vertices == VertexSet::of({0, 1, 2, 3, 4, 5}));
  CHECK(verify_witness(gen_B(4), v));

  // The set obtained by deleting the two degree-4 vertices.
  Graph b4 = gen_B(4);
  VertexSet interior = b4.vertices();
  interior.erase(3);
  interior.erase(7);
  CHECK(b_number(induced_subgraph(b4, interior)).value == 3);
}

TEST_CASE("monotone examples") {
  MonotonicityVerdict k5 = is_b_monotone(gen_complete(5));
  CHECK(k5.monotone);
  CHECK_FALSE(k5.witness.has_value());
  CHECK(k5.b_graph == 5);
  CHECK(is_b_monotone(gen_path(4)).monotone);
  CHECK(is_b_monotone(gen_complete(1)).monotone);
}

TEST_CASE("B_t is not b-monotone for t = 4, 5") {
  for (int t = 4; t <= 5; ++t) {
    MonotonicityVerdict v = is_b_monotone(gen_B(t));
    CHECK_FALSE(v.monotone);
    CHECK(verify_witness(gen_B(t), v));
  }
}

TEST_CASE("exact verdict agrees with plain enumeration") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(rng.uniform_int(2, 7), rng);
    MonotonicityVerdict v = is_b_monotone(g);
    int b = oracle::b_number(g);
    int sub = max_sub_b(g);
    CAPTURE(emit_graph(g, GraphFormat::graph6));
    CHECK(v.b_graph == b);
    CHECK(v.monotone == (sub <= b));
    if (!v.monotone)
      CHECK(verify_witness(g, v));
  }
}

TEST_CASE("witness ranking: least excess, then largest, then lexicographic") {
  Rng rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = oracle::random_graph(rng.uniform_int(4, 7), rng);
    MonotonicityVerdict v = is_b_monotone(g);
    if (v.monotone)
      continue;
    const int n = g.order();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    int best_excess = 1 << 20;
    int best_size = 0;
    std::vector<int> best_members;
    for (std::uint64_t s = 1; s < full; ++s) {
      VertexSet set(s);
      int excess = oracle::b_number(induced_subgraph(g, set)) - v.b_graph;
      if (excess <= 0)
        continue;
      auto members = set.members();
      bool better = excess < best_excess ||
                    (excess == best_excess && set.size() > best_size) ||
                    (excess == best_excess && set.size() == best_size && members < best_members);
      if (better) {
        best_excess = excess;
        best_size = set.size();
        best_members = members;
      }
    }
    CHECK(v.witness->vertices.members() == best_members);
    CHECK(v.witness->b_value == v.b_graph + best_excess);
  }
}

TEST_CASE("verdict does not depend on the worker count") {
  Graph g = gen_B(5);
  MonotonicityVerdict one = is_b_monotone(g, kMonotoneMaxVertices, 1);
  for (unsigned workers : {2U, 3U, 7U}) {
    MonotonicityVerdict many = is_b_monotone(g, kMonotoneMaxVertices, workers);
    CHECK(many.monotone == one.monotone);
    CHECK(many.witness->vertices == one.witness->vertices);
    CHECK(many.witness->b_value == one.witness->b_value);
  }
}

TEST_CASE("exact mode cap") {
  CHECK_THROWS_AS(is_b_monotone(gen_path(15)), CapExceeded);
  CHECK_NOTHROW(is_b_monotone(gen_path(15), 15));
}

TEST_CASE("sampled mode") {
  MonotonicityVerdict b6 = sample_b_monotone(gen_B(6), 5000, 7);
  CHECK_FALSE(b6.monotone);
  CHECK(verify_witness(gen_B(6), b6));
  CHECK(sample_b_monotone(gen_complete(6), 500, 3).monotone);
  CHECK(sample_b_monotone(gen_path(5), 100, 1).monotone);
  CHECK(is_b_monotone(gen_path(5)).monotone);

  MonotonicityVerdict again = sample_b_monotone(gen_B(6), 5000, 7);
  CHECK(again.witness->vertices == b6.witness->vertices);
}

TEST_CASE("sampled mode never contradicts exact mode") {
  Rng rng(600);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(rng.uniform_int(2, 8), rng);
    MonotonicityVerdict exact = is_b_monotone(g);
    MonotonicityVerdict sampled = sample_b_monotone(g, 2000, static_cast<std::uint64_t>(trial));
    if (exact.monotone)
      CHECK(sampled.monotone);
    if (!sampled.monotone)
      CHECK(verify_witness(g, sampled));
  }
}
