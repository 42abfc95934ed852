#ifndef GAMMAB_GENERATORS_HPP
#define GAMMAB_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gammab/coloring.hpp"
#include "gammab/graph.hpp"

namespace gammab {

/// Seeded generator used for every randomized routine. mt19937_64 output is
/// fixed by the standard; draws go through uniform_below() rather than
/// std::uniform_int_distribution so sequences match across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound).
  std::uint64_t uniform_below(std::uint64_t bound);
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform_below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  bool coin() { return (engine_() >> 63) != 0; }

  static constexpr const char *name() { return "mt19937_64"; }

private:
  std::mt19937_64 engine_;
};

enum class FamilyKind {
  path,
  complete,
  complete_bipartite,
  B,
  R,
  caterpillar,
  random_tree,
};

/// A named family member, e.g. "B:4", "cat:10x3", "tree:8:seed=42".
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<int> params;
  std::uint64_t seed = 0;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  Graph build() const;

  friend bool operator==(const FamilySpec &, const FamilySpec &) = default;
};

std::string_view family_name(FamilyKind kind);

Graph gen_path(int k);
Graph gen_complete(int n);
Graph gen_complete_bipartite(int s, int t);

/// K_{t,t} minus the matching a_i b_i, i = 1..t-1. Side a is 0..t-1, side b
/// is t..2t-1; a_t = t-1 and b_t = 2t-1 keep degree t.
Graph gen_B(int t);

/// Root 0, children 1..k-1, then the k-2 private leaves of each child in
/// child order.
Graph gen_R(int k);

/// The k-coloring of gen_R(k) in which child i dominates color i and the root
/// takes color k. Leaves of child i take the colors 1..k-1 other than i,
/// ascending.
Coloring r_tree_bcoloring(int k);

/// Spine 0..s-1, then the l leaves of each spine vertex in spine order.
Graph gen_caterpillar(int s, int l);

/// Uniform labelled tree decoded from a seeded random Pruefer sequence.
Graph gen_random_tree(int n, std::uint64_t seed);

/// Pruefer decode; entries must lie in 0..n-1 and sequence length be n-2.
Graph tree_from_pruefer(int n, const std::vector<int> &sequence);

Graph gen_cycle(int n);

} // namespace gammab

#endif
