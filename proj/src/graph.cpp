#include "gammab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gammab {

VertexSet VertexSet::of(std::initializer_list<int> members) {
  VertexSet s;
  for (int v : members) {
    if (v < 0 || v >= kMaxVertices)
      throw GraphError("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw GraphError("vertex count " + std::to_string(n) +
                     " outside 0.." + std::to_string(kMaxVertices));
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v)
    twice += degree(v);
  return twice / 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v)
    best = std::max(best, degree(v));
  return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (std::uint64_t b = rows_[u] >> u; b != 0; b &= b - 1)
      out.emplace_back(u, u + std::countr_zero(b));
  return out;
}

void Graph::add_edge(int u, int v) {
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>> &edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has a vertex outside 0.." + std::to_string(n - 1));
    if (u == v)
      throw GraphError("loop at vertex " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

namespace {

Graph parse_graph6(std::string_view text) {
  // Trailing newline is tolerated since graph6 files are line oriented.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.starts_with(">>graph6<<"))
    text.remove_prefix(10);
  if (text.empty())
    throw ParseError("graph6: missing header", 0);

  auto value_at = [&](std::size_t i) -> int {
    if (i >= text.size())
      throw ParseError("graph6: truncated header", i);
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: byte outside 63..126", i);
    return c - 63;
  };

  int n = 0;
  std::size_t pos = 0;
  if (value_at(0) < 63) {
    n = value_at(0);
    pos = 1;
  } else {
    if (value_at(1) == 63)
      throw ParseError("graph6: vertex counts above 2^18 not supported", 1);
    n = (value_at(1) << 12) | (value_at(2) << 6) | value_at(3);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds " +
                         std::to_string(kMaxVertices),
                     0);

  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes)
    throw ParseError("graph6: truncated bit stream", text.size());
  if (text.size() > pos + bytes)
    throw ParseError("graph6: trailing bytes", pos + bytes);

  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int chunk = value_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1)
        edges.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k)
    if ((value_at(pos + k / 6) >> (5 - k % 6)) & 1)
      throw ParseError("graph6: nonzero padding bits", pos + k / 6);
  return build_graph(n, edges);
}

std::string emit_graph6(const Graph &g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

class EdgeListReader {
public:
  explicit EdgeListReader(std::string_view text) : text_(text) {}

  Graph read() {
    skip_blank();
    if (pos_ >= text_.size())
      throw ParseError("edge-list: missing vertex count", pos_);
    int n = number();
    if (n > kMaxVertices)
      throw ParseError("edge-list: vertex count exceeds " +
                           std::to_string(kMaxVertices),
                       0);
    end_of_line();

    std::vector<std::pair<int, int>> edges;
    for (;;) {
      skip_blank();
      if (pos_ >= text_.size())
        break;
      std::size_t line_start = pos_;
      int u = number();
      skip_spaces();
      int v = number();
      end_of_line();
      if (u >= n || v >= n)
        throw ParseError("edge-list: vertex out of range", line_start);
      if (u == v)
        throw ParseError("edge-list: loop edge", line_start);
      edges.emplace_back(u, v);
    }
    return build_graph(n, edges);
  }

private:
  void skip_spaces() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  int number() {
    int value = 0;
    const char *first = text_.data() + pos_;
    const char *last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || value < 0)
      throw ParseError("edge-list: expected a non-negative integer", pos_);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void end_of_line() {
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == '\r')
      ++pos_;
    if (pos_ < text_.size() && text_[pos_] != '\n')
      throw ParseError("edge-list: unexpected character", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string emit_edge_list(const Graph &g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges())
    out << u << ' ' << v << '\n';
  return out.str();
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text)
                                       : EdgeListReader(text).read();
}

std::string emit_graph(const Graph &g, GraphFormat format) {
  return format == GraphFormat::graph6 ? emit_graph6(g) : emit_edge_list(g);
}

std::vector<int> degree_sequence(const Graph &g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v)
    d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph induced_subgraph(const Graph &g, VertexSet s) {
  if ((s.bits() & ~g.vertices().bits()) != 0)
    throw GraphError("vertex set has members outside the host graph");
  std::vector<int> keep = s.members();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return build_graph(static_cast<int>(keep.size()), edges);
}

bool is_connected(const Graph &g) {
  if (g.order() == 0)
    return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1)
      next |= g.row(std::countr_zero(b));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices().bits();
}

bool is_tree(const Graph &g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

Graph disjoint_union(const Graph &g, const Graph &h) {
  auto edges = g.edges();
  for (auto [u, v] : h.edges())
    edges.emplace_back(u + g.order(), v + g.order());
  return build_graph(g.order() + h.order(), edges);
}

} // namespace gammab
