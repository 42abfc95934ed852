#include "gammab/grundy.hpp"

#include <algorithm>
#include <numeric>

namespace gammab {

Coloring first_fit(const Graph &g, const Ordering &order) {
  if (order.size() != g.order())
    throw GraphError("ordering has " + std::to_string(order.size()) +
                     " entries for a graph on " + std::to_string(g.order()) +
                     " vertices");
  std::vector<int> colors(g.order(), 0);
  for (int i = 0; i < order.size(); ++i) {
    const int v = order[i];
    std::uint64_t seen = 0; // bit c set when color c is on a neighbour
    for (std::uint64_t b = g.row(v); b != 0; b &= b - 1) {
      const int c = colors[std::countr_zero(b)];
      if (c > 0 && c < 64)
        seen |= std::uint64_t{1} << c;
    }
    colors[v] = std::countr_one(seen | 1U);
  }
  return Coloring(std::move(colors));
}

bool is_grundy_coloring(const Graph &g, const Coloring &c) {
  if (!is_proper(g, c))
    return false;
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t seen = 0;
    for (std::uint64_t b = g.row(v); b != 0; b &= b - 1)
      if (c[std::countr_zero(b)] < 64)
        seen |= std::uint64_t{1} << c[std::countr_zero(b)];
    for (int i = 1; i < c[v]; ++i)
      if (i >= 64 || !((seen >> i) & 1U))
        return false;
  }
  return true;
}

namespace {

class GrundySearch {
public:
  explicit GrundySearch(const Graph &g) : g_(g) {
    const int n = g.order();
    twin_group_.resize(n);
    for (int v = 0; v < n; ++v) {
      twin_group_[v] = v;
      for (int u = 0; u < v; ++u)
        if (g.row(u) == g.row(v)) {
          twin_group_[v] = u;
          break;
        }
    }
  }

  /// Fills classes_[1..k] when some First-Fit run reaches color k.
  bool reaches(int k) {
    classes_.assign(k + 1, 0);
    return place_top(k);
  }

  Ordering witness() const {
    std::vector<int> seq;
    std::uint64_t placed = 0;
    for (std::size_t i = 1; i < classes_.size(); ++i) {
      for (std::uint64_t b = classes_[i]; b != 0; b &= b - 1)
        seq.push_back(std::countr_zero(b));
      placed |= classes_[i];
    }
    for (int v = 0; v < g_.order(); ++v)
      if (!((placed >> v) & 1U))
        seq.push_back(v);
    return Ordering(std::move(seq));
  }

private:
  bool place_top(int k) {
    std::uint64_t tried = 0;
    for (int v = 0; v < g_.order(); ++v) {
      if (g_.degree(v) < k - 1)
        continue;
      const std::uint64_t group = std::uint64_t{1} << twin_group_[v];
      if (tried & group)
        continue;
      tried |= group;
      classes_[k] = std::uint64_t{1} << v;
      if (open_level(k - 1, classes_[k]))
        return true;
    }
    return false;
  }

  // Every vertex in `placed` sits in a class above `level` and still needs a
  // neighbour in each of the classes 1..level.
  bool open_level(int level, std::uint64_t placed) {
    if (level == 0)
      return true;
    const std::uint64_t free = g_.vertices().bits() & ~placed;
    for (std::uint64_t b = placed; b != 0; b &= b - 1)
      if (std::popcount(g_.row(std::countr_zero(b)) & free) < level)
        return false;
    std::uint64_t viable = 0;
    for (std::uint64_t b = free; b != 0; b &= b - 1) {
      const int w = std::countr_zero(b);
      if (std::popcount(g_.row(w) & free) >= level - 1)
        viable |= std::uint64_t{1} << w;
    }
    return grow_class(level, placed, free, viable, 0, 0);
  }

  bool grow_class(int level, std::uint64_t placed, std::uint64_t free,
                  std::uint64_t viable, std::uint64_t cls, std::uint64_t excluded) {
    std::uint64_t blocked = cls | excluded;
    for (std::uint64_t b = cls; b != 0; b &= b - 1)
      blocked |= g_.row(std::countr_zero(b));
    const std::uint64_t open = viable & ~blocked;

    // Most constrained placed vertex not yet adjacent to the class.
    int pick = -1;
    int pick_count = 65;
    std::uint64_t pick_cands = 0;
    for (std::uint64_t b = placed; b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      if (g_.row(u) & cls)
        continue;
      const std::uint64_t cands = g_.row(u) & open;
      const int count = std::popcount(cands);
      if (count < pick_count) {
        pick = u;
        pick_count = count;
        pick_cands = cands;
        if (count == 0)
          return false;
      }
    }
    if (pick < 0) {
      classes_[level] = cls;
      return open_level(level - 1, placed | cls);
    }

    std::uint64_t tried = 0;
    for (std::uint64_t b = pick_cands; b != 0; b &= b - 1) {
      const int w = std::countr_zero(b);
      const std::uint64_t bit = std::uint64_t{1} << w;
      const std::uint64_t group = std::uint64_t{1} << twin_group_[w];
      if (tried & group) {
        excluded |= bit;
        continue;
      }
      tried |= group;
      const std::uint64_t next = cls | bit;
      if (keeps_enough(level, placed, free & ~next) &&
          grow_class(level, placed, free, viable, next, excluded))
        return true;
      excluded |= bit;
    }
    return false;
  }

  bool keeps_enough(int level, std::uint64_t placed, std::uint64_t rest) const {
    for (std::uint64_t b = placed; b != 0; b &= b - 1)
      if (std::popcount(g_.row(std::countr_zero(b)) & rest) < level - 1)
        return false;
    return true;
  }

  const Graph &g_;
  std::vector<int> twin_group_; // least vertex with the same neighbourhood
  std::vector<std::uint64_t> classes_;
};

} // namespace

GrundyResult grundy_number(const Graph &g) {
  if (g.order() == 0)
    throw GraphError("Grundy number is defined for graphs with n >= 1");
  GrundySearch search(g);
  int best = 1;
  search.reaches(1);
  Ordering witness = search.witness();
  const int limit = g.max_degree() + 1;
  for (int k = 2; k <= limit && search.reaches(k); ++k) {
    best = k;
    witness = search.witness();
  }
  return {best, std::move(witness)};
}

int grundy_oracle(const Graph &g) { return grundy_oracle_witness(g).value; }

GrundyResult grundy_oracle_witness(const Graph &g) {
  if (g.order() == 0)
    throw GraphError("Grundy number is defined for graphs with n >= 1");
  if (g.order() > kOracleMaxVertices)
    throw CapExceeded("permutation oracle is limited to " +
                      std::to_string(kOracleMaxVertices) + " vertices");
  std::vector<int> seq(g.order());
  std::iota(seq.begin(), seq.end(), 0);
  GrundyResult best;
  do {
    Ordering order(seq);
    const int used = first_fit(g, order).classes();
    if (used > best.value)
      best = {used, std::move(order)};
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

} // namespace gammab
