#include "gammab/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "gammab/bcolor.hpp"
#include "gammab/family_lab.hpp"
#include "gammab/generators.hpp"
#include "gammab/grundy.hpp"
#include "gammab/monotone.hpp"
#include "gammab/pattern.hpp"
#include "gammab/report_json.hpp"

namespace gammab::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string g6;
  std::string file;
  std::string family;

  void attach(CLI::App *cmd) {
    cmd->add_option("--g6", g6, "Inline graph6 string");
    cmd->add_option("--file", file, "Edge-list file: n on the first line, then 'u v' pairs");
    cmd->add_option("--family", family, "Family member, e.g. B:4, R:5, cat:10x3, tree:8:seed=42");
  }

  void validate() const {
    const int given = !g6.empty() + !file.empty() + !family.empty();
    if (given != 1)
      throw UsageError("exactly one of --g6, --file, --family is required");
  }

  Graph load() const {
    if (!g6.empty())
      return parse_graph(g6, GraphFormat::graph6);
    if (!family.empty())
      return FamilySpec::parse(family).build();
    std::ifstream in(file, std::ios::binary);
    if (!in)
      throw GraphError("cannot read '" + file + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_graph(text.str(), GraphFormat::edge_list);
  }
};

std::vector<int> parse_color_list(const std::string &text) {
  std::vector<int> out;
  std::string_view rest(text);
  while (!rest.empty()) {
    auto cut = rest.find(',');
    std::string_view item = rest.substr(0, cut);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw UsageError("--coloring expects comma-separated integers, got '" + text + "'");
    out.push_back(value);
    if (cut == std::string_view::npos)
      break;
    rest.remove_prefix(cut + 1);
  }
  return out;
}

Coloring coloring_for(const Graph &g, const std::string &text) {
  std::vector<int> colors = parse_color_list(text);
  if (static_cast<int>(colors.size()) != g.order())
    throw GraphError("coloring has " + std::to_string(colors.size()) +
                     " entries for a graph on " + std::to_string(g.order()) + " vertices");
  return Coloring(std::move(colors));
}

std::pair<int, int> parse_range(const std::string &text) {
  auto dots = text.find("..");
  int lo = 0;
  int hi = 0;
  auto read = [&](std::string_view part, int &value) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    return ec == std::errc() && ptr == part.data() + part.size();
  };
  std::string_view all(text);
  if (dots == std::string::npos || !read(all.substr(0, dots), lo) ||
      !read(all.substr(dots + 2), hi) || lo > hi)
    throw UsageError("--range expects <from>..<to> with from <= to, got '" + text + "'");
  return {lo, hi};
}

FamilyKind parse_kind(const std::string &name) {
  for (FamilyKind k : {FamilyKind::path, FamilyKind::complete, FamilyKind::complete_bipartite,
                       FamilyKind::B, FamilyKind::R, FamilyKind::caterpillar,
                       FamilyKind::random_tree})
    if (family_name(k) == name)
      return k;
  throw UsageError("unknown family '" + name + "' (path, K, Kst, B, R, cat, tree)");
}

void require_cap(const Graph &g, int cap, const char *what) {
  if (g.order() > cap)
    throw CapExceeded(std::string(what) + " is capped at " + std::to_string(cap) +
                      " vertices (graph has " + std::to_string(g.order()) +
                      "); raise it with --cap-n or GAMMAB_CAP_N");
}

std::string dump(const Json &j) { return j.dump() + "\n"; }

} // namespace

Outcome run(const std::vector<std::string> &args) {
  CLI::App app{"Exact Grundy and b-chromatic number laboratory", "gammab"};
  app.require_subcommand(1);
  app.fallthrough();

  int cap_n = 0;
  unsigned workers = 0;
  std::uint64_t seed = 0;
  app.add_option("--cap-n", cap_n, "Vertex cap for exact Grundy/b solvers (default 14)")
      ->check(CLI::Range(1, kMaxVertices));
  app.add_option("--workers", workers, "Worker threads for sweeps and monotone (0 = auto)");
  app.add_option("--seed", seed, "Seed for randomized modes");

  GraphSource source;
  std::string format;
  std::string coloring;
  bool use_oracle = false;
  bool exact = false;
  std::vector<std::uint64_t> sample;
  std::vector<std::string> patterns_g6;
  std::vector<std::string> patterns_family;
  std::string range;
  std::string sweep_family_name;
  std::string timestamp;

  std::function<Outcome(const Caps &)> action;

  auto graph_command = [&](const char *name, const char *help) {
    CLI::App *cmd = app.add_subcommand(name, help);
    source.attach(cmd);
    return cmd;
  };

  CLI::App *gen = graph_command("gen", "Emit a graph");
  gen->add_option("--format", format, "json (default), g6 or edgelist")
      ->check(CLI::IsMember({"json", "g6", "edgelist"}));
  gen->callback([&] {
    action = [&](const Caps &) {
      const Graph g = source.load();
      if (format == "g6")
        return Outcome{kOk, emit_graph(g, GraphFormat::graph6) + "\n", {}};
      if (format == "edgelist")
        return Outcome{kOk, emit_graph(g, GraphFormat::edge_list), {}};
      Json edges = Json::array();
      for (auto [u, v] : g.edges())
        edges.push_back({u, v});
      return Outcome{kOk,
                     dump({{"n", g.order()},
                           {"graph6", emit_graph(g, GraphFormat::graph6)},
                           {"edges", edges}}),
                     {}};
    };
  });

  CLI::App *gamma = graph_command("gamma", "Grundy number with a First-Fit witness ordering");
  gamma->add_flag("--oracle", use_oracle, "Maximize over all orderings (n <= 9)");
  gamma->callback([&] {
    action = [&](const Caps &caps) {
      const Graph g = source.load();
      GrundyResult r;
      if (use_oracle) {
        r = grundy_oracle_witness(g);
      } else {
        require_cap(g, caps.exact_n, "exact Grundy number");
        r = grundy_number(g);
      }
      return Outcome{kOk,
                     dump({{"gamma", r.value},
                           {"witness", to_json(r.witness)},
                           {"method", use_oracle ? "oracle" : "exact"}}),
                     {}};
    };
  });

  CLI::App *bnum = graph_command("bnum", "b-chromatic number with a witness b-coloring");
  bnum->callback([&] {
    action = [&](const Caps &caps) {
      const Graph g = source.load();
      require_cap(g, caps.exact_n, "exact b-chromatic number");
      BResult r = b_number(g);
      return Outcome{kOk, dump({{"value", r.value}, {"witness", to_json(r.witness)}}), {}};
    };
  });

  CLI::App *m = graph_command("m", "m(G) with the degree sequence as witness");
  m->callback([&] {
    action = [&](const Caps &) {
      const Graph g = source.load();
      return Outcome{kOk, dump({{"value", m_number(g)}, {"witness", degree_sequence(g)}}), {}};
    };
  });

  CLI::App *chi = graph_command("chi", "Chromatic number with an optimal coloring");
  chi->callback([&] {
    action = [&](const Caps &) {
      ChromaticResult r = chromatic_number(source.load());
      return Outcome{kOk, dump({{"value", r.value}, {"witness", to_json(r.witness)}}), {}};
    };
  });

  CLI::App *omega = graph_command("omega", "Clique number with a maximum clique");
  omega->callback([&] {
    action = [&](const Caps &) {
      CliqueResult r = clique_number(source.load());
      return Outcome{kOk, dump({{"value", r.value}, {"witness", to_json(r.witness)}}), {}};
    };
  });

  CLI::App *eliminate = graph_command("eliminate", "Dissolve undominated classes of a coloring");
  eliminate->add_option("--coloring", coloring, "Comma-separated colors by vertex index")->required();
  eliminate->callback([&] {
    action = [&](const Caps &) {
      const Graph g = source.load();
      EliminationResult r = eliminate_classes_traced(g, coloring_for(g, coloring));
      Json rounds = Json::array();
      for (const EliminationRound &round : r.rounds) {
        Json moves = Json::array();
        for (const ClassMove &mv : round.moves)
          moves.push_back({{"vertex", mv.vertex}, {"from", mv.from}, {"to", mv.to}});
        rounds.push_back({{"removed_class", round.removed_class}, {"moves", moves}});
      }
      return Outcome{kOk,
                     dump({{"value", r.coloring.classes()},
                           {"witness", to_json(r.coloring)},
                           {"rounds", rounds}}),
                     {}};
    };
  });

  CLI::App *check_grundy = graph_command("check-grundy", "Validate a Grundy coloring");
  check_grundy->add_option("--coloring", coloring, "Comma-separated colors by vertex index")->required();
  check_grundy->callback([&] {
    action = [&](const Caps &) {
      const Graph g = source.load();
      const Coloring c = coloring_for(g, coloring);
      return Outcome{kOk,
                     dump({{"value", is_grundy_coloring(g, c)},
                           {"proper", is_proper(g, c)},
                           {"witness", to_json(c)}}),
                     {}};
    };
  });

  CLI::App *check_b = graph_command("check-bcoloring", "Validate a b-coloring");
  check_b->add_option("--coloring", coloring, "Comma-separated colors by vertex index")->required();
  check_b->callback([&] {
    action = [&](const Caps &) {
      const Graph g = source.load();
      const Coloring c = coloring_for(g, coloring);
      Json dominators = nullptr;
      if (is_proper(g, c)) {
        dominators = Json::array();
        for (const auto &d : domination_report(g, c).dominator)
          dominators.push_back(d ? Json(*d) : Json(nullptr));
      }
      return Outcome{kOk,
                     dump({{"value", is_b_coloring(g, c)},
                           {"proper", is_proper(g, c)},
                           {"witness", dominators}}),
                     {}};
    };
  });

  CLI::App *forb = graph_command("forb", "Induced-subgraph freeness against patterns");
  forb->add_option("--pattern", patterns_g6, "Pattern as graph6 (repeatable)");
  forb->add_option("--pattern-family", patterns_family, "Pattern as family member (repeatable)");
  forb->callback([&] {
    if (patterns_g6.empty() && patterns_family.empty())
      throw UsageError("forb needs at least one --pattern or --pattern-family");
    action = [&](const Caps &) {
      const Graph host = source.load();
      std::vector<std::pair<std::string, Graph>> patterns;
      for (const auto &p : patterns_g6)
        patterns.emplace_back(p, parse_graph(p, GraphFormat::graph6));
      for (const auto &p : patterns_family)
        patterns.emplace_back(p, FamilySpec::parse(p).build());
      Json witness = nullptr;
      for (const auto &[name, pattern] : patterns) {
        if (auto e = find_induced(host, pattern)) {
          witness = {{"pattern", name}, {"embedding", e->image}};
          break;
        }
      }
      return Outcome{kOk, dump({{"value", witness.is_null()}, {"witness", witness}}), {}};
    };
  });

  CLI::App *monotone = graph_command("monotone", "b-monotonicity verdict");
  auto *exact_flag = monotone->add_flag("--exact", exact, "Enumerate all induced subgraphs (default)");
  monotone->add_option("--sample", sample, "Randomized search: <trials> <seed>")
      ->expected(2)
      ->excludes(exact_flag);
  monotone->callback([&] {
    action = [&](const Caps &caps) {
      const Graph g = source.load();
      MonotonicityVerdict v;
      Json j;
      if (!sample.empty()) {
        if (sample[0] < 1 || sample[0] > 100000000)
          throw UsageError("--sample trials must be in 1..100000000");
        require_cap(g, caps.exact_n, "b-chromatic number");
        v = sample_b_monotone(g, static_cast<int>(sample[0]), sample[1]);
        j = to_json(v);
        j["mode"] = "sample";
      } else {
        v = is_b_monotone(g, caps.exact_n, workers);
        j = to_json(v);
        j["mode"] = "exact";
      }
      return Outcome{kOk, dump(j), {}};
    };
  });

  CLI::App *prof = graph_command("profile", "All invariants (n, Delta, omega, chi, m, Gamma, b)");
  prof->callback([&] {
    action = [&](const Caps &caps) {
      return Outcome{kOk, dump(to_json(profile(source.load(), caps))), {}};
    };
  });

  CLI::App *sweep = app.add_subcommand("sweep", "Profile a family over a parameter range");
  sweep->add_option("--family", sweep_family_name, "path, K, Kst, B, R, cat or tree")->required();
  sweep->add_option("--range", range, "<from>..<to>")->required();
  sweep->add_option("--format", format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--timestamp", timestamp, "Recorded verbatim in the report metadata");
  sweep->callback([&] {
    const FamilyKind kind = parse_kind(sweep_family_name);
    const auto [lo, hi] = parse_range(range);
    action = [&, kind, lo, hi](const Caps &caps) {
      SweepOptions options;
      options.seed = seed;
      options.caps = caps;
      options.workers = workers;
      if (!timestamp.empty())
        options.timestamp = timestamp;
      const SweepReport r = sweep_family(kind, lo, hi, options);
      return Outcome{kOk, emit_report(r, format == "csv" ? ReportFormat::csv : ReportFormat::json),
                     {}};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    CLI::App *chosen = app.get_subcommands().front();
    if (chosen != sweep)
      source.validate();
  } catch (const CLI::ParseError &e) {
    std::ostringstream out;
    std::ostringstream err;
    if (app.exit(e, out, err) == 0)
      return {kOk, out.str(), {}};
    return {kUsageError, {}, err.str()};
  } catch (const UsageError &e) {
    return {kUsageError, {}, std::string("usage error: ") + e.what() + "\n"};
  }

  try {
    Caps caps = Caps::from_env();
    if (cap_n > 0)
      caps.exact_n = cap_n;
    return action(caps);
  } catch (const UsageError &e) {
    return {kUsageError, {}, std::string("usage error: ") + e.what() + "\n"};
  } catch (const GraphError &e) {
    return {kDomainError, {}, std::string("error: ") + e.what() + "\n"};
  }
}

} // namespace gammab::cli
