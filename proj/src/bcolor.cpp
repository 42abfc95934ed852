#include "gammab/bcolor.hpp"

#include <algorithm>
#include <array>

namespace gammab {

bool DominationReport::all_dominated() const {
  return first_undominated() == 0;
}

int DominationReport::first_undominated() const {
  for (std::size_t i = 0; i < dominator.size(); ++i)
    if (!dominator[i])
      return static_cast<int>(i) + 1;
  return 0;
}

namespace {

// Bit c-1 set for each color c on a neighbour of v.
std::uint64_t neighbour_colors(const Graph &g, const std::vector<int> &colors, int v) {
  std::uint64_t seen = 0;
  for (std::uint64_t b = g.row(v); b != 0; b &= b - 1)
    seen |= std::uint64_t{1} << (colors[std::countr_zero(b)] - 1);
  return seen;
}

std::uint64_t low_bits(int k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

} // namespace

DominationReport domination_report(const Graph &g, const Coloring &c) {
  if (!is_proper(g, c))
    throw GraphError("coloring is not proper for this graph");
  const int k = c.classes();
  DominationReport report;
  report.dominator.assign(k, std::nullopt);
  const std::uint64_t all = low_bits(k);
  for (int v = 0; v < g.order(); ++v) {
    auto &slot = report.dominator[c[v] - 1];
    if (slot)
      continue;
    std::uint64_t own = std::uint64_t{1} << (c[v] - 1);
    if ((neighbour_colors(g, c.colors(), v) | own) == all)
      slot = v;
  }
  return report;
}

bool is_b_coloring(const Graph &g, const Coloring &c) {
  if (!is_proper(g, c))
    return false;
  return domination_report(g, c).all_dominated();
}

EliminationResult eliminate_classes_traced(const Graph &g, const Coloring &c) {
  if (!is_proper(g, c))
    throw GraphError("class elimination needs a proper coloring");
  EliminationResult result{c, {}};
  for (;;) {
    const DominationReport report = domination_report(g, result.coloring);
    const int target = report.first_undominated();
    if (target == 0)
      return result;

    std::vector<int> colors = result.coloring.colors();
    EliminationRound round{target, {}};
    for (int v : result.coloring.color_class(target).members()) {
      const std::uint64_t blocked =
          neighbour_colors(g, colors, v) | (std::uint64_t{1} << (target - 1));
      // v is not dominating, so some other class misses its neighbourhood.
      const int to = std::countr_one(blocked) + 1;
      round.moves.push_back({v, target, to});
      colors[v] = to;
    }
    result.rounds.push_back(std::move(round));
    result.coloring = Coloring::compacted(colors);
  }
}

Coloring eliminate_classes(const Graph &g, const Coloring &c) {
  return eliminate_classes_traced(g, c).coloring;
}

int m_number(const Graph &g) {
  if (g.order() == 0)
    throw GraphError("m is defined for graphs with n >= 1");
  const std::vector<int> d = degree_sequence(g);
  int m = 0;
  for (int i = 1; i <= g.order(); ++i)
    if (d[i - 1] >= i - 1)
      m = i;
  return m;
}

namespace {

class CliqueSearch {
public:
  explicit CliqueSearch(const Graph &g) : g_(g) {}

  CliqueResult run() {
    expand(0, g_.vertices().bits(), 0);
    return {std::popcount(best_), VertexSet(best_)};
  }

private:
  // Bron-Kerbosch with Tomita pivoting; keeps the first maximum found.
  void expand(std::uint64_t clique, std::uint64_t cand, std::uint64_t done) {
    if (cand == 0) {
      if (done == 0 && std::popcount(clique) > std::popcount(best_))
        best_ = clique;
      return;
    }
    if (std::popcount(clique) + std::popcount(cand) <= std::popcount(best_))
      return;
    int pivot = -1;
    int pivot_cover = -1;
    for (std::uint64_t b = cand | done; b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      const int cover = std::popcount(cand & g_.row(u));
      if (cover > pivot_cover) {
        pivot = u;
        pivot_cover = cover;
      }
    }
    for (std::uint64_t b = cand & ~g_.row(pivot); b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      const std::uint64_t bit = std::uint64_t{1} << v;
      expand(clique | bit, cand & g_.row(v), done & g_.row(v));
      cand &= ~bit;
      done |= bit;
    }
  }

  const Graph &g_;
  std::uint64_t best_ = 0;
};

// k-colorability by DSATUR-ordered backtracking; a vertex may open at most one
// new color beyond those already in use.
class ColorabilitySearch {
public:
  ColorabilitySearch(const Graph &g, int k) : g_(g), k_(k), colors_(g.order(), 0) {}

  std::optional<Coloring> run() {
    if (extend(0, 0))
      return Coloring(colors_);
    return std::nullopt;
  }

private:
  bool extend(int colored, int used) {
    if (colored == g_.order())
      return true;
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    std::uint64_t pick_seen = 0;
    for (int v = 0; v < g_.order(); ++v) {
      if (colors_[v] != 0)
        continue;
      std::uint64_t seen = 0;
      int free_deg = 0;
      for (std::uint64_t b = g_.row(v); b != 0; b &= b - 1) {
        const int c = colors_[std::countr_zero(b)];
        if (c != 0)
          seen |= std::uint64_t{1} << (c - 1);
        else
          ++free_deg;
      }
      const int sat = std::popcount(seen);
      if (sat > pick_sat || (sat == pick_sat && free_deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = free_deg;
        pick_seen = seen;
      }
    }
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      if ((pick_seen >> (c - 1)) & 1U)
        continue;
      colors_[pick] = c;
      if (extend(colored + 1, std::max(used, c)))
        return true;
    }
    colors_[pick] = 0;
    return false;
  }

  const Graph &g_;
  int k_;
  std::vector<int> colors_;
};

// Search for a b-coloring with exactly k colors. Classes are named by their
// chosen dominating vertices: d_1 < d_2 < ... < d_k with d_i colored i. The
// remaining vertices are then colored by MRV backtracking with forward
// checking on domains and on each dominator's missing colors.
class BColoringSearch {
public:
  BColoringSearch(const Graph &g, int k) : g_(g), k_(k) {
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) >= k - 1)
        candidates_.push_back(v);
  }

  std::optional<Coloring> run() {
    if (static_cast<int>(candidates_.size()) < k_)
      return std::nullopt;
    State s;
    for (int v = 0; v < g_.order(); ++v)
      s.domain[v] = low_bits(k_);
    std::vector<int> chosen;
    if (!choose(s, chosen, 0))
      return std::nullopt;
    return Coloring(std::vector<int>(result_.begin(), result_.begin() + g_.order()));
  }

private:
  struct State {
    std::array<std::uint64_t, kMaxVertices> domain{};
    std::array<int, kMaxVertices> color{};
    std::array<std::uint64_t, kMaxVertices> need{}; // by class index
    int colored = 0;
  };

  bool choose(const State &s, std::vector<int> &chosen, std::size_t start) {
    const int cls = static_cast<int>(chosen.size()) + 1;
    if (cls > k_) {
      for (int i = 0; i < k_; ++i)
        dominator_[i] = chosen[i];
      return feasible(s) && extend(s);
    }
    const std::size_t left = static_cast<std::size_t>(k_ - cls);
    for (std::size_t i = start; i + left < candidates_.size(); ++i) {
      const int v = candidates_[i];
      State next = s;
      next.need[cls - 1] = low_bits(k_) & ~(std::uint64_t{1} << (cls - 1));
      // Colors already on v's neighbours count toward its needs.
      for (std::uint64_t b = g_.row(v); b != 0; b &= b - 1) {
        const int c = s.color[std::countr_zero(b)];
        if (c != 0)
          next.need[cls - 1] &= ~(std::uint64_t{1} << (c - 1));
      }
      chosen.push_back(v);
      dominator_[cls - 1] = v;
      if (assign(next, v, cls, cls - 1) && choose(next, chosen, i + 1))
        return true;
      chosen.pop_back();
    }
    return false;
  }

  // Colors v with c, pruning neighbour domains and dominator needs. Only the
  // first `dominators` classes have a dominator fixed so far.
  bool assign(State &s, int v, int c, int dominators) {
    const std::uint64_t bit = std::uint64_t{1} << (c - 1);
    if (!(s.domain[v] & bit))
      return false;
    s.color[v] = c;
    s.domain[v] = bit;
    ++s.colored;
    for (std::uint64_t b = g_.row(v); b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      if (s.color[u] == 0) {
        s.domain[u] &= ~bit;
        if (s.domain[u] == 0)
          return false;
      }
    }
    for (int i = 0; i < dominators; ++i)
      if (g_.adjacent(dominator_[i], v))
        s.need[i] &= ~bit;
    return true;
  }

  bool feasible(const State &s) const {
    for (int i = 0; i < k_; ++i) {
      const std::uint64_t missing = s.need[i];
      if (missing == 0)
        continue;
      std::uint64_t reachable = 0;
      int open = 0;
      for (std::uint64_t b = g_.row(dominator_[i]); b != 0; b &= b - 1) {
        const int u = std::countr_zero(b);
        if (s.color[u] == 0) {
          reachable |= s.domain[u];
          ++open;
        }
      }
      if ((reachable & missing) != missing || open < std::popcount(missing))
        return false;
    }
    return true;
  }

  bool extend(const State &s) {
    if (s.colored == g_.order()) {
      for (int i = 0; i < k_; ++i)
        if (s.need[i] != 0)
          return false;
      std::copy(s.color.begin(), s.color.end(), result_.begin());
      return true;
    }
    std::uint64_t needy = 0; // neighbours of dominators still missing colors
    for (int i = 0; i < k_; ++i)
      if (s.need[i] != 0)
        needy |= g_.row(dominator_[i]);

    int pick = -1;
    int pick_size = 65;
    bool pick_needy = false;
    for (int v = 0; v < g_.order(); ++v) {
      if (s.color[v] != 0)
        continue;
      const int size = std::popcount(s.domain[v]);
      const bool is_needy = (needy >> v) & 1U;
      if (size < pick_size || (size == pick_size && is_needy && !pick_needy)) {
        pick = v;
        pick_size = size;
        pick_needy = is_needy;
      }
    }
    for (std::uint64_t b = s.domain[pick]; b != 0; b &= b - 1) {
      const int c = std::countr_zero(b) + 1;
      State next = s;
      if (assign(next, pick, c, k_) && feasible(next) && extend(next))
        return true;
    }
    return false;
  }

  const Graph &g_;
  int k_;
  std::vector<int> candidates_;
  std::array<int, kMaxVertices> dominator_{};
  std::array<int, kMaxVertices> result_{};
};

} // namespace

CliqueResult clique_number(const Graph &g) {
  if (g.order() == 0)
    throw GraphError("clique number is defined for graphs with n >= 1");
  return CliqueSearch(g).run();
}

ChromaticResult chromatic_number(const Graph &g) {
  if (g.order() == 0)
    throw GraphError("chromatic number is defined for graphs with n >= 1");
  for (int k = clique_number(g).value;; ++k)
    if (auto c = ColorabilitySearch(g, k).run())
      return {k, std::move(*c)};
}

std::optional<Coloring> find_b_coloring(const Graph &g, int k) {
  if (k < 1 || k > g.order())
    return std::nullopt;
  if (k == 1) {
    if (g.size() != 0)
      return std::nullopt;
    return Coloring(std::vector<int>(g.order(), 1));
  }
  return BColoringSearch(g, k).run();
}

BResult b_number(const Graph &g) {
  if (g.order() == 0)
    throw GraphError("b-chromatic number is defined for graphs with n >= 1");
  ChromaticResult chi = chromatic_number(g);
  for (int k = m_number(g); k > chi.value; --k)
    if (auto c = find_b_coloring(g, k))
      return {k, std::move(*c)};
  // Every optimal proper coloring is a b-coloring.
  return {chi.value, std::move(chi.witness)};
}

} // namespace gammab
