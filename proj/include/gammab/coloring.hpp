#ifndef GAMMAB_COLORING_HPP
#define GAMMAB_COLORING_HPP

#include <span>
#include <vector>

#include "gammab/graph.hpp"

namespace gammab {

/// Total map vertex -> color in 1..k where every color is used.
/// Properness is a property checked against a graph, not part of the type.
class Coloring {
public:
  Coloring() = default;

  /// Throws GraphError unless every entry is in 1..k and each color occurs.
  explicit Coloring(std::vector<int> colors);

  /// Relabels arbitrary positive labels to 1..k in increasing label order.
  static Coloring compacted(std::span<const int> labels);

  int classes() const { return k_; }
  int vertex_count() const { return static_cast<int>(colors_.size()); }
  int operator[](int v) const { return colors_[v]; }
  const std::vector<int> &colors() const { return colors_; }

  /// Vertices of color c (1-based).
  VertexSet color_class(int c) const;

  friend bool operator==(const Coloring &, const Coloring &) = default;

private:
  std::vector<int> colors_;
  int k_ = 0;
};

/// A permutation of the vertices 0..n-1.
class Ordering {
public:
  Ordering() = default;

  /// Throws GraphError unless sequence is a permutation of 0..size-1.
  explicit Ordering(std::vector<int> sequence);

  static Ordering identity(int n);

  int size() const { return static_cast<int>(seq_.size()); }
  int operator[](int i) const { return seq_[i]; }
  const std::vector<int> &sequence() const { return seq_; }

  friend bool operator==(const Ordering &, const Ordering &) = default;

private:
  std::vector<int> seq_;
};

bool is_proper(const Graph &g, const Coloring &c);

} // namespace gammab

#endif
