#ifndef GAMMAB_PATTERN_HPP
#define GAMMAB_PATTERN_HPP

#include <optional>
#include <span>
#include <vector>

#include "gammab/graph.hpp"

namespace gammab {

/// Injective map pattern vertex -> host vertex preserving both edges and
/// non-edges.
struct Embedding {
  std::vector<int> image; // image[u] is the host vertex of pattern vertex u

  friend bool operator==(const Embedding &, const Embedding &) = default;
};

/// Order in which find_induced assigns pattern vertices: each next vertex has
/// the most already-placed neighbours, then the highest degree, then the
/// lowest index. A new component starts when no placed vertex has a neighbour
/// left.
std::vector<int> search_order(const Graph &pattern);

/// Induced copy of pattern in host, if any. Among all embeddings, returns the
/// one whose images listed in search_order(pattern) are lexicographically
/// least.
std::optional<Embedding> find_induced(const Graph &host, const Graph &pattern);

/// True iff host contains none of patterns as an induced subgraph.
bool is_free(const Graph &host, std::span<const Graph> patterns);

/// Edge-by-edge and non-edge-by-non-edge check of an embedding.
bool is_induced_embedding(const Graph &host, const Graph &pattern,
                          const Embedding &e);

} // namespace gammab

#endif
