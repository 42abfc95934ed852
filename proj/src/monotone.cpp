#include "gammab/monotone.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "gammab/bcolor.hpp"
#include "gammab/generators.hpp"

namespace gammab {

namespace {

enum class SubsetStatus : std::uint8_t { unseen, pruned, checked, violating };

// All subsets of {0..n-1} of the given size, in lexicographic order of their
// ascending member lists.
std::vector<std::uint64_t> subsets_of_size(int n, int size) {
  std::vector<std::uint64_t> out;
  std::vector<int> pick(size);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    std::uint64_t mask = 0;
    for (int v : pick)
      mask |= std::uint64_t{1} << v;
    out.push_back(mask);
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i)
      --i;
    if (i < 0)
      return out;
    ++pick[i];
    for (int j = i + 1; j < size; ++j)
      pick[j] = pick[j - 1] + 1;
  }
}

// Returns b(H) when H can beat `bound`, otherwise nullopt (pruned by m).
std::optional<int> b_if_candidate(const Graph &h, int bound) {
  if (m_number(h) <= bound)
    return std::nullopt;
  return b_number(h).value;
}

} // namespace

MonotonicityVerdict is_b_monotone(const Graph &g, int max_vertices, unsigned workers) {
  const int n = g.order();
  if (n == 0)
    throw GraphError("b-monotonicity is defined for graphs with n >= 1");
  if (n > max_vertices)
    throw CapExceeded("exact b-monotonicity check is capped at " +
                      std::to_string(max_vertices) + " vertices (graph has " +
                      std::to_string(n) + "); use sampled mode instead");
  if (workers == 0)
    workers = std::max(1U, std::thread::hardware_concurrency());

  MonotonicityVerdict verdict;
  verdict.b_graph = b_number(g).value;
  const int least_excess = verdict.b_graph + 1;

  for (int size = n - 1; size >= 1; --size) {
    const std::vector<std::uint64_t> sets = subsets_of_size(n, size);
    std::vector<SubsetStatus> status(sets.size(), SubsetStatus::unseen);
    std::vector<int> values(sets.size(), 0);

    // A chunk stops early only on a violation of the least possible excess.
    auto scan = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        auto b = b_if_candidate(induced_subgraph(g, VertexSet(sets[i])), verdict.b_graph);
        if (!b) {
          status[i] = SubsetStatus::pruned;
          continue;
        }
        values[i] = *b;
        if (*b > verdict.b_graph) {
          status[i] = SubsetStatus::violating;
          if (*b == least_excess)
            return;
        } else {
          status[i] = SubsetStatus::checked;
        }
      }
    };

    const std::size_t chunks = std::min<std::size_t>(workers, sets.size());
    const std::size_t per = (sets.size() + chunks - 1) / chunks;
    if (chunks <= 1) {
      scan(0, sets.size());
    } else {
      std::vector<std::thread> pool;
      for (std::size_t c = 0; c < chunks; ++c)
        pool.emplace_back(scan, c * per, std::min(sets.size(), (c + 1) * per));
      for (auto &t : pool)
        t.join();
    }

    // Everything before the first least-excess hit was scanned by every
    // split, so the counts and the choice below are split-independent.
    std::size_t stop = sets.size();
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (status[i] == SubsetStatus::violating && values[i] == least_excess) {
        stop = i + 1;
        break;
      }
    for (std::size_t i = 0; i < stop; ++i) {
      if (status[i] == SubsetStatus::pruned)
        ++verdict.subsets_pruned;
      else
        ++verdict.subsets_checked;
      if (status[i] == SubsetStatus::violating &&
          (!verdict.witness || values[i] < verdict.witness->b_value)) {
        verdict.monotone = false;
        verdict.witness = MonotoneWitness{VertexSet(sets[i]), values[i]};
      }
    }
    if (verdict.witness && verdict.witness->b_value == least_excess)
      return verdict;
  }
  return verdict;
}

MonotonicityVerdict sample_b_monotone(const Graph &g, int trials, std::uint64_t seed) {
  if (trials < 1)
    throw GraphError("sampled monotonicity needs at least one trial");
  const int n = g.order();
  if (n == 0)
    throw GraphError("b-monotonicity is defined for graphs with n >= 1");
  MonotonicityVerdict verdict;
  verdict.b_graph = b_number(g).value;
  if (n == 1)
    return verdict;

  Rng rng(seed);
  std::vector<int> pool(n);
  for (int trial = 0; trial < trials; ++trial) {
    const int size = rng.uniform_int(1, n - 1);
    std::iota(pool.begin(), pool.end(), 0);
    VertexSet s;
    for (int i = 0; i < size; ++i) {
      const int j = i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
      s.insert(pool[i]);
    }
    auto b = b_if_candidate(induced_subgraph(g, s), verdict.b_graph);
    if (!b) {
      ++verdict.subsets_pruned;
      continue;
    }
    ++verdict.subsets_checked;
    if (*b > verdict.b_graph) {
      verdict.monotone = false;
      verdict.witness = MonotoneWitness{s, *b};
      return verdict;
    }
  }
  return verdict;
}

bool verify_witness(const Graph &g, const MonotonicityVerdict &verdict) {
  if (!verdict.witness)
    return verdict.monotone;
  const MonotoneWitness &w = *verdict.witness;
  if (w.vertices.empty())
    return false;
  const int b_graph = b_number(g).value;
  const int b_sub = b_number(induced_subgraph(g, w.vertices)).value;
  return !verdict.monotone && b_sub == w.b_value && b_sub > b_graph &&
         b_graph == verdict.b_graph;
}

} // namespace gammab
