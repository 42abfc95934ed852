#include "gammab/pattern.hpp"

namespace gammab {

std::vector<int> search_order(const Graph &pattern) {
  const int p = pattern.order();
  std::vector<int> order;
  order.reserve(p);
  std::uint64_t placed = 0;
  for (int step = 0; step < p; ++step) {
    int best = -1;
    int best_links = -1;
    int best_degree = -1;
    for (int u = 0; u < p; ++u) {
      if ((placed >> u) & 1U)
        continue;
      int links = std::popcount(pattern.row(u) & placed);
      int degree = pattern.degree(u);
      if (links > best_links || (links == best_links && degree > best_degree)) {
        best = u;
        best_links = links;
        best_degree = degree;
      }
    }
    order.push_back(best);
    placed |= std::uint64_t{1} << best;
  }
  return order;
}

namespace {

class InducedSearch {
public:
  InducedSearch(const Graph &host, const Graph &pattern)
      : host_(host), pattern_(pattern), order_(search_order(pattern)),
        image_(pattern.order(), -1) {}

  std::optional<Embedding> run() {
    if (pattern_.order() > host_.order())
      return std::nullopt;
    if (extend(0, 0))
      return Embedding{image_};
    return std::nullopt;
  }

private:
  bool extend(std::size_t depth, std::uint64_t used) {
    if (depth == order_.size())
      return true;
    const int u = order_[depth];
    std::uint64_t candidates = host_.vertices().bits() & ~used;
    for (std::size_t i = 0; i < depth; ++i) {
      const int w = order_[i];
      if (pattern_.adjacent(u, w))
        candidates &= host_.row(image_[w]);
      else
        candidates &= ~host_.row(image_[w]);
    }
    const int need = pattern_.degree(u);
    for (std::uint64_t b = candidates; b != 0; b &= b - 1) {
      const int x = std::countr_zero(b);
      if (host_.degree(x) < need)
        continue;
      image_[u] = x;
      if (extend(depth + 1, used | (std::uint64_t{1} << x)))
        return true;
    }
    image_[u] = -1;
    return false;
  }

  const Graph &host_;
  const Graph &pattern_;
  std::vector<int> order_;
  std::vector<int> image_;
};

} // namespace

std::optional<Embedding> find_induced(const Graph &host, const Graph &pattern) {
  return InducedSearch(host, pattern).run();
}

bool is_free(const Graph &host, std::span<const Graph> patterns) {
  for (const Graph &p : patterns)
    if (find_induced(host, p))
      return false;
  return true;
}

bool is_induced_embedding(const Graph &host, const Graph &pattern,
                          const Embedding &e) {
  const int p = pattern.order();
  if (static_cast<int>(e.image.size()) != p)
    return false;
  std::uint64_t used = 0;
  for (int x : e.image) {
    if (x < 0 || x >= host.order() || ((used >> x) & 1U))
      return false;
    used |= std::uint64_t{1} << x;
  }
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v)
      if (pattern.adjacent(u, v) != host.adjacent(e.image[u], e.image[v]))
        return false;
  return true;
}

} // namespace gammab
