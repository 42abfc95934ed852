#ifndef GAMMAB_MONOTONE_HPP
#define GAMMAB_MONOTONE_HPP

#include <cstdint>
#include <optional>

#include "gammab/graph.hpp"

namespace gammab {

inline constexpr int kMonotoneMaxVertices = 14;

struct MonotoneWitness {
  VertexSet vertices; // induces H with b(H) = b_value > b(g)
  int b_value = 0;
};

struct MonotonicityVerdict {
  bool monotone = true;
  int b_graph = 0; // b(g)
  std::optional<MonotoneWitness> witness;
  std::uint64_t subsets_checked = 0;  // b computed
  std::uint64_t subsets_pruned = 0;   // skipped because m(H) <= b(g)
};

/// Exhaustive check over every nonempty proper induced subgraph. Violating
/// sets are ranked by smallest excess b(H) - b(g), then largest size, then
/// lexicographic order of members; the first is the witness. Throws
/// CapExceeded above max_vertices; use sample_b_monotone for larger graphs. Work is split over `workers` threads
/// (0 = hardware concurrency); the result does not depend on the split.
MonotonicityVerdict is_b_monotone(const Graph &g,
                                  int max_vertices = kMonotoneMaxVertices,
                                  unsigned workers = 0);

/// Randomized falsifier. `monotone == true` only means no violation was found.
/// Each trial draws a size uniformly from 1..n-1, then a uniform subset of
/// that size. The first violating set found is returned.
MonotonicityVerdict sample_b_monotone(const Graph &g, int trials, std::uint64_t seed);

/// Recomputes b on the witness subgraph.
bool verify_witness(const Graph &g, const MonotonicityVerdict &verdict);

} // namespace gammab

#endif
