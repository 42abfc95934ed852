#ifndef GAMMAB_GRUNDY_HPP
#define GAMMAB_GRUNDY_HPP

#include "gammab/coloring.hpp"
#include "gammab/graph.hpp"

namespace gammab {

inline constexpr int kOracleMaxVertices = 9;

/// Greedy coloring: each vertex, in the given order, takes the least positive
/// color absent from its already-colored neighbours.
Coloring first_fit(const Graph &g, const Ordering &order);

/// Proper, and every vertex of color j has a neighbour of each color i < j.
bool is_grundy_coloring(const Graph &g, const Coloring &c);

struct GrundyResult {
  int value = 0;
  Ordering witness; // first_fit(g, witness) uses exactly `value` colors
};

/// Exact Grundy number.
///
/// Decides "some First-Fit run uses k colors" for k = 2, 3, ... by building
/// the classes of a partial Grundy coloring from the top down: a single vertex
/// of color k, then for i = k-1 .. 1 an independent set of still-free vertices
/// hitting the neighbourhood of every vertex already placed. A partial Grundy
/// coloring of an induced subgraph extends to a First-Fit run with at least as
/// many colors (color its classes first, in color order), so this is exact.
/// Pruning: a placed vertex must keep >= i free neighbours while class i is
/// open, and candidates whose free degree is below i-1 are skipped. False
/// twins are interchangeable, so only the first of a twin group is branched.
GrundyResult grundy_number(const Graph &g);

/// Max First-Fit color count over all n! orderings. Throws CapExceeded for
/// n > kOracleMaxVertices.
int grundy_oracle(const Graph &g);

/// Same search, also returning the lexicographically first best ordering.
GrundyResult grundy_oracle_witness(const Graph &g);

} // namespace gammab

#endif
