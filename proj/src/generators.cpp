#include "gammab/generators.hpp"

#include <charconv>
#include <limits>

namespace gammab {

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0)
    throw GraphError("uniform_below: empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = engine_();
    if (r >= threshold)
      return r % bound;
  }
}

namespace {

void require(bool ok, const std::string &what) {
  if (!ok)
    throw GraphError(what);
}

} // namespace

Graph gen_path(int k) {
  require(k >= 1, "path needs k >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i)
    edges.emplace_back(i, i + 1);
  return build_graph(k, edges);
}

Graph gen_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

Graph gen_complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      edges.emplace_back(u, v);
  return build_graph(n, edges);
}

Graph gen_complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, "complete bipartite graph needs s, t >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < t; ++v)
      edges.emplace_back(u, s + v);
  return build_graph(s + t, edges);
}

Graph gen_B(int t) {
  require(t >= 2, "B_t needs t >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (i != j || i == t - 1)
        edges.emplace_back(i, t + j);
  return build_graph(2 * t, edges);
}

Graph gen_R(int k) {
  require(k >= 2, "R_k needs k >= 2");
  const int n = 1 + (k - 1) * (k - 1);
  std::vector<std::pair<int, int>> edges;
  int next_leaf = k;
  for (int child = 1; child < k; ++child) {
    edges.emplace_back(0, child);
    for (int j = 0; j < k - 2; ++j)
      edges.emplace_back(child, next_leaf++);
  }
  return build_graph(n, edges);
}

Coloring r_tree_bcoloring(int k) {
  require(k >= 2, "R_k needs k >= 2");
  std::vector<int> colors(1 + (k - 1) * (k - 1));
  colors[0] = k;
  int next_leaf = k;
  for (int child = 1; child < k; ++child) {
    colors[child] = child;
    for (int c = 1; c < k; ++c)
      if (c != child)
        colors[next_leaf++] = c;
  }
  return Coloring(std::move(colors));
}

Graph gen_caterpillar(int s, int l) {
  require(s >= 1 && l >= 0, "caterpillar needs s >= 1 and l >= 0");
  require(s * (l + 1) <= kMaxVertices, "caterpillar exceeds the vertex capacity");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < s; ++i)
    edges.emplace_back(i, i + 1);
  int next_leaf = s;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < l; ++j)
      edges.emplace_back(i, next_leaf++);
  return build_graph(s * (l + 1), edges);
}

Graph tree_from_pruefer(int n, const std::vector<int> &sequence) {
  require(n >= 1, "tree needs n >= 1");
  if (n == 1)
    return build_graph(1, {});
  require(static_cast<int>(sequence.size()) == n - 2,
          "Pruefer sequence must have length n-2");
  std::vector<int> degree(n, 1);
  for (int a : sequence) {
    require(a >= 0 && a < n, "Pruefer entry out of range");
    ++degree[a];
  }
  std::vector<std::pair<int, int>> edges;
  for (int a : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1)
      ++leaf;
    edges.emplace_back(leaf, a);
    --degree[leaf];
    --degree[a];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
        break;
      }
    }
  }
  return build_graph(n, edges);
}

Graph gen_random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  Rng rng(seed);
  std::vector<int> seq(n >= 2 ? n - 2 : 0);
  for (int &a : seq)
    a = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
  return tree_from_pruefer(n, seq);
}

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
  case FamilyKind::path: return "path";
  case FamilyKind::complete: return "K";
  case FamilyKind::complete_bipartite: return "Kst";
  case FamilyKind::B: return "B";
  case FamilyKind::R: return "R";
  case FamilyKind::caterpillar: return "cat";
  case FamilyKind::random_tree: return "tree";
  }
  return "?";
}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw GraphError("bad family spec '" + std::string(whole) + "': '" +
                     std::string(text) + "' is not an integer");
  return value;
}

std::vector<int> split_ints(std::string_view text, char sep, std::string_view whole) {
  std::vector<int> out;
  for (;;) {
    auto cut = text.find(sep);
    out.push_back(parse_int(text.substr(0, cut), whole));
    if (cut == std::string_view::npos)
      return out;
    text.remove_prefix(cut + 1);
  }
}

} // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw GraphError("bad family spec '" + std::string(text) +
                     "': expected <kind>:<params>");
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);

  FamilySpec spec;
  std::size_t arity = 1;
  if (kind == "path") {
    spec.kind = FamilyKind::path;
  } else if (kind == "K") {
    spec.kind = FamilyKind::complete;
  } else if (kind == "B") {
    spec.kind = FamilyKind::B;
  } else if (kind == "R") {
    spec.kind = FamilyKind::R;
  } else if (kind == "Kst") {
    spec.kind = FamilyKind::complete_bipartite;
    arity = 2;
  } else if (kind == "cat") {
    spec.kind = FamilyKind::caterpillar;
    spec.params = split_ints(rest, 'x', text);
    arity = 2;
  } else if (kind == "tree") {
    spec.kind = FamilyKind::random_tree;
    auto cut = rest.find(':');
    if (cut != std::string_view::npos) {
      std::string_view seed = rest.substr(cut + 1);
      if (!seed.starts_with("seed="))
        throw GraphError("bad family spec '" + std::string(text) +
                         "': expected seed=<int>");
      seed.remove_prefix(5);
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(seed.data(), seed.data() + seed.size(), value);
      if (ec != std::errc() || ptr != seed.data() + seed.size())
        throw GraphError("bad family spec '" + std::string(text) + "': bad seed");
      spec.seed = value;
      rest = rest.substr(0, cut);
    }
  } else {
    throw GraphError("unknown family '" + std::string(kind) + "'");
  }
  if (spec.params.empty())
    spec.params = split_ints(rest, ',', text);
  if (spec.params.size() != arity)
    throw GraphError("bad family spec '" + std::string(text) + "': expected " +
                     std::to_string(arity) + " parameter(s)");
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(family_name(kind));
  out += ':';
  switch (kind) {
  case FamilyKind::complete_bipartite:
    out += std::to_string(params.at(0)) + "," + std::to_string(params.at(1));
    break;
  case FamilyKind::caterpillar:
    out += std::to_string(params.at(0)) + "x" + std::to_string(params.at(1));
    break;
  case FamilyKind::random_tree:
    out += std::to_string(params.at(0)) + ":seed=" + std::to_string(seed);
    break;
  default:
    out += std::to_string(params.at(0));
  }
  return out;
}

Graph FamilySpec::build() const {
  switch (kind) {
  case FamilyKind::path: return gen_path(params.at(0));
  case FamilyKind::complete: return gen_complete(params.at(0));
  case FamilyKind::complete_bipartite:
    return gen_complete_bipartite(params.at(0), params.at(1));
  case FamilyKind::B: return gen_B(params.at(0));
  case FamilyKind::R: return gen_R(params.at(0));
  case FamilyKind::caterpillar: return gen_caterpillar(params.at(0), params.at(1));
  case FamilyKind::random_tree: return gen_random_tree(params.at(0), seed);
  }
  throw GraphError("unknown family");
}

} // namespace gammab
