#ifndef GAMMAB_BCOLOR_HPP
#define GAMMAB_BCOLOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "gammab/coloring.hpp"
#include "gammab/graph.hpp"

namespace gammab {

/// dominator[c-1] is the least-indexed color-dominating vertex of class c.
struct DominationReport {
  std::vector<std::optional<int>> dominator;

  bool all_dominated() const;
  /// Lowest class (1-based) without a dominating vertex, or 0.
  int first_undominated() const;
};

/// Throws GraphError when c is not a proper coloring of g.
DominationReport domination_report(const Graph &g, const Coloring &c);

/// Proper, and every class has a vertex seeing all other colors.
bool is_b_coloring(const Graph &g, const Coloring &c);

struct ClassMove {
  int vertex;
  int from; // color names before compaction of this round
  int to;
};

struct EliminationRound {
  int removed_class;
  std::vector<ClassMove> moves;
};

struct EliminationResult {
  Coloring coloring;
  std::vector<EliminationRound> rounds;
};

/// Repeatedly dissolves the lowest class with no dominating vertex: each of
/// its vertices, in ascending order, moves to the lowest other class holding
/// none of its neighbours; colors are then compacted. Stops at a b-coloring.
EliminationResult eliminate_classes_traced(const Graph &g, const Coloring &c);
Coloring eliminate_classes(const Graph &g, const Coloring &c);

/// max{ i : d_i >= i-1 } over the non-increasing degree sequence.
int m_number(const Graph &g);

struct ChromaticResult {
  int value = 0;
  Coloring witness;
};

struct CliqueResult {
  int value = 0;
  VertexSet witness;
};

ChromaticResult chromatic_number(const Graph &g);
CliqueResult clique_number(const Graph &g);

struct BResult {
  int value = 0;
  Coloring witness;
};

/// Some b-coloring of g with exactly k colors, if one exists.
std::optional<Coloring> find_b_coloring(const Graph &g, int k);

/// Exact b-chromatic number: the first k from m(g) down to chi(g) admitting a
/// b-coloring with exactly k colors.
BResult b_number(const Graph &g);

} // namespace gammab

#endif
