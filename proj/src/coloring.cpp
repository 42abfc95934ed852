#include "gammab/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace gammab {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
  k_ = colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
  std::vector<bool> used(k_ + 1, false);
  for (int c : colors_) {
    if (c < 1)
      throw GraphError("colors must be positive, got " + std::to_string(c));
    used[c] = true;
  }
  for (int c = 1; c <= k_; ++c)
    if (!used[c])
      throw GraphError("color " + std::to_string(c) + " is unused; colors must "
                       "form the range 1..k");
}

Coloring Coloring::compacted(std::span<const int> labels) {
  std::vector<int> distinct(labels.begin(), labels.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> out;
  out.reserve(labels.size());
  for (int c : labels) {
    if (c < 1)
      throw GraphError("colors must be positive, got " + std::to_string(c));
    auto it = std::lower_bound(distinct.begin(), distinct.end(), c);
    out.push_back(static_cast<int>(it - distinct.begin()) + 1);
  }
  return Coloring(std::move(out));
}

VertexSet Coloring::color_class(int c) const {
  VertexSet s;
  for (int v = 0; v < vertex_count(); ++v)
    if (colors_[v] == c)
      s.insert(v);
  return s;
}

Ordering::Ordering(std::vector<int> sequence) : seq_(std::move(sequence)) {
  std::vector<bool> seen(seq_.size(), false);
  for (int v : seq_) {
    if (v < 0 || v >= size() || seen[v])
      throw GraphError("ordering is not a permutation of 0.." +
                       std::to_string(size() - 1));
    seen[v] = true;
  }
}

Ordering Ordering::identity(int n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return Ordering(std::move(seq));
}

bool is_proper(const Graph &g, const Coloring &c) {
  if (c.vertex_count() != g.order())
    return false;
  for (auto [u, v] : g.edges())
    if (c[u] == c[v])
      return false;
  return true;
}

} // namespace gammab
