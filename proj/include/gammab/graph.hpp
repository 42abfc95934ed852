#ifndef GAMMAB_GRAPH_HPP
#define GAMMAB_GRAPH_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gammab {

inline constexpr int kMaxVertices = 64;

/// Rejected input or a request outside an operation's domain.
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual graph. offset() is the byte at which parsing failed.
class ParseError : public GraphError {
public:
  ParseError(const std::string &what, std::size_t offset)
      : GraphError(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Instance larger than a solver's configured cap.
class CapExceeded : public GraphError {
public:
  using GraphError::GraphError;
};

/// Subset of the vertices of a host graph, one bit per vertex.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> members);
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  /// Members in ascending order.
  std::vector<int> members() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
  std::uint64_t bits_ = 0;
};

enum class GraphFormat { graph6, edge_list };

/// Finite simple undirected graph on vertices 0..n-1, at most 64 vertices.
/// Adjacency rows are single machine words.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const; // edge count

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t row(int v) const { return rows_[v]; }
  VertexSet neighbours(int v) const { return VertexSet(rows_[v]); }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int max_degree() const;
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Edges with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  friend Graph build_graph(int, const std::vector<std::pair<int, int>> &);
  void add_edge(int u, int v);

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

Graph build_graph(int n, const std::vector<std::pair<int, int>> &edges);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const Graph &g, GraphFormat format);

/// Degrees sorted non-increasing.
std::vector<int> degree_sequence(const Graph &g);

/// Vertices of s are relabelled 0..|s|-1 in ascending order.
Graph induced_subgraph(const Graph &g, VertexSet s);

bool is_connected(const Graph &g);
bool is_tree(const Graph &g);

/// Disjoint union; vertices of h follow those of g.
Graph disjoint_union(const Graph &g, const Graph &h);

} // namespace gammab

#endif
