#include "gammab/family_lab.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <future>
#include <sstream>
#include <thread>

#include "gammab/bcolor.hpp"
#include "gammab/grundy.hpp"
#include "gammab/report_json.hpp"

namespace gammab {

Caps Caps::from_env() {
  Caps caps;
  if (const char *raw = std::getenv("GAMMAB_CAP_N")) {
    std::string_view text(raw);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1 ||
        value > kMaxVertices)
      throw GraphError("GAMMAB_CAP_N must be an integer in 1..64");
    caps.exact_n = value;
  }
  return caps;
}

std::optional<int> ProfileRecord::gamma_minus_b() const {
  if (!gamma || !b)
    return std::nullopt;
  return *gamma - *b;
}

bool ProfileRecord::chain_holds() const {
  const int top = max_degree + 1;
  auto le = [](std::optional<int> lo, std::optional<int> hi) {
    return !lo || !hi || *lo <= *hi;
  };
  const std::optional<int> delta1 = top;
  return le(omega, chi) && le(chi, b) && le(b, m) && le(m, delta1) &&
         le(chi, gamma) && le(gamma, delta1) && le(omega, b) && le(chi, m);
}

ProfileRecord profile(const Graph &g, const Caps &caps) {
  if (g.order() == 0)
    throw GraphError("profile needs a graph with n >= 1");
  ProfileRecord r;
  r.n = g.order();
  r.max_degree = g.max_degree();
  r.m = m_number(g);

  CliqueResult clique = clique_number(g);
  r.omega = clique.value;
  r.clique_witness = clique.witness;

  ChromaticResult chi = chromatic_number(g);
  r.chi = chi.value;
  r.chi_witness = std::move(chi.witness);

  if (g.order() <= caps.exact_n) {
    GrundyResult gamma = grundy_number(g);
    r.gamma = gamma.value;
    r.gamma_witness = std::move(gamma.witness);
    BResult b = b_number(g);
    r.b = b.value;
    r.b_witness = std::move(b.witness);
  } else {
    r.uncomputed = {"gamma", "b"};
  }
  return r;
}

TreeBoundVerdict check_tree_bound(const Graph &t, const Caps &caps) {
  if (!is_tree(t))
    throw GraphError("tree bound check needs a tree");
  if (t.order() > caps.exact_n)
    throw CapExceeded("tree has " + std::to_string(t.order()) +
                      " vertices; exact cap is " + std::to_string(caps.exact_n));
  TreeBoundVerdict v;
  v.gamma = grundy_number(t).value;
  v.m = m_number(t);
  v.b = b_number(t).value;
  v.gamma_le_2m = v.gamma <= 2 * v.m;
  v.gamma_le_2b_plus_2 = v.gamma <= 2 * v.b + 2;
  v.b_ge_m_minus_1 = v.b >= v.m - 1;
  return v;
}

Prop3Verdict check_prop3_B(int t) {
  if (t < 2 || t > kProp3MaxT)
    throw CapExceeded("B_t check supports 2 <= t <= " + std::to_string(kProp3MaxT));
  const Graph g = gen_B(t);
  Prop3Verdict v;
  v.t = t;
  v.gamma = grundy_number(g).value;
  v.b = b_number(g).value;
  const Graph p6 = gen_path(6);
  v.p6_free = is_free(g, std::span<const Graph>(&p6, 1));
  if (t >= 3) {
    v.p5_checked = true;
    v.p5 = find_induced(g, gen_path(5));
  }
  return v;
}

const CheckResult *SweepReport::check(std::string_view name) const {
  for (const CheckResult &c : checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

std::string_view outcome_name(CheckOutcome outcome) {
  switch (outcome) {
  case CheckOutcome::pass: return "pass";
  case CheckOutcome::fail: return "fail";
  case CheckOutcome::skipped: return "skipped";
  }
  return "?";
}

FamilySpec sweep_member(FamilyKind kind, int p, std::uint64_t seed) {
  FamilySpec spec;
  spec.kind = kind;
  switch (kind) {
  case FamilyKind::complete_bipartite:
  case FamilyKind::caterpillar:
    spec.params = {p, p};
    break;
  case FamilyKind::random_tree:
    spec.params = {p};
    spec.seed = seed;
    break;
  default:
    spec.params = {p};
  }
  return spec;
}

namespace {

bool is_tree_family(FamilyKind kind) {
  return kind == FamilyKind::path || kind == FamilyKind::R ||
         kind == FamilyKind::caterpillar || kind == FamilyKind::random_tree;
}

// Accumulates a pass/fail verdict over the members a check applies to.
class CheckTally {
public:
  explicit CheckTally(std::string name) : name_(std::move(name)) {}

  void record(int param, bool ok) {
    ++seen_;
    if (!ok)
      failures_.push_back(param);
  }

  CheckResult finish(std::string details = {}) const {
    CheckResult c{name_, CheckOutcome::skipped, std::move(details)};
    if (seen_ == 0) {
      if (c.details.empty())
        c.details = "no computed members";
      return c;
    }
    c.outcome = failures_.empty() ? CheckOutcome::pass : CheckOutcome::fail;
    std::ostringstream out;
    out << seen_ << " member(s) checked";
    if (!failures_.empty()) {
      out << "; failing params:";
      for (int p : failures_)
        out << ' ' << p;
    }
    if (!c.details.empty())
      out << "; " << c.details;
    c.details = out.str();
    return c;
  }

private:
  std::string name_;
  int seen_ = 0;
  std::vector<int> failures_;
};

// Consecutive computed values of a column, in parameter order.
std::vector<std::pair<int, int>> column(const SweepReport &r,
                                        std::optional<int> (*get)(const ProfileRecord &)) {
  std::vector<std::pair<int, int>> out;
  for (const SweepRow &row : r.rows)
    if (auto v = get(row.record))
      out.emplace_back(row.param, *v);
  return out;
}

std::optional<int> get_gamma(const ProfileRecord &r) { return r.gamma; }
std::optional<int> get_b(const ProfileRecord &r) { return r.b; }
std::optional<int> get_gap(const ProfileRecord &r) { return r.gamma_minus_b(); }

std::string column_text(const std::vector<std::pair<int, int>> &col) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < col.size(); ++i)
    out << (i ? "," : "") << col[i].second;
  out << ')';
  return out.str();
}

CheckResult strictly_increasing(std::string name, const std::vector<std::pair<int, int>> &col) {
  CheckResult c{std::move(name), CheckOutcome::skipped, column_text(col)};
  if (col.size() < 2) {
    c.details += " fewer than two computed members";
    return c;
  }
  c.outcome = CheckOutcome::pass;
  for (std::size_t i = 1; i < col.size(); ++i)
    if (col[i].second <= col[i - 1].second)
      c.outcome = CheckOutcome::fail;
  return c;
}

void add_family_checks(SweepReport &r) {
  CheckTally chain("invariant_chain");
  for (const SweepRow &row : r.rows)
    chain.record(row.param, row.record.chain_holds());
  r.checks.push_back(chain.finish());

  if (is_tree_family(r.family)) {
    CheckTally two_m("tree_gamma_le_2m");
    CheckTally two_b("tree_gamma_le_2b_plus_2");
    CheckTally lower("tree_b_ge_m_minus_1");
    for (const SweepRow &row : r.rows) {
      const ProfileRecord &p = row.record;
      if (!p.gamma || !p.b)
        continue;
      two_m.record(row.param, *p.gamma <= 2 * *p.m);
      two_b.record(row.param, *p.gamma <= 2 * *p.b + 2);
      lower.record(row.param, *p.b >= *p.m - 1);
    }
    r.checks.push_back(two_m.finish());
    r.checks.push_back(two_b.finish());
    r.checks.push_back(lower.finish());
  }

  switch (r.family) {
  case FamilyKind::B: {
    CheckTally gamma("B_gamma_eq_t_plus_1");
    CheckTally b("B_b_eq_2");
    CheckTally gap("B_gamma_minus_b_eq_t_minus_1");
    CheckTally p6("B_induced_P6_free");
    CheckTally p5("B_contains_induced_P5");
    const Graph path6 = gen_path(6);
    const Graph path5 = gen_path(5);
    for (const SweepRow &row : r.rows) {
      const int t = row.param;
      const Graph g = row.spec.build();
      p6.record(t, is_free(g, std::span<const Graph>(&path6, 1)));
      if (t >= 3)
        p5.record(t, find_induced(g, path5).has_value());
      if (row.record.gamma)
        gamma.record(t, *row.record.gamma == t + 1);
      if (row.record.b)
        b.record(t, *row.record.b == 2);
      if (auto d = row.record.gamma_minus_b())
        gap.record(t, *d == t - 1);
    }
    r.checks.push_back(gamma.finish());
    r.checks.push_back(b.finish());
    r.checks.push_back(gap.finish());
    r.checks.push_back(p6.finish());
    r.checks.push_back(p5.finish("t >= 3 only; B_2 is P_4"));
    r.checks.push_back(strictly_increasing("trend_gamma_minus_b_increasing", column(r, get_gap)));
    break;
  }
  case FamilyKind::R: {
    CheckTally coloring("R_constructed_coloring_is_b_coloring");
    CheckTally leaves("R_leaf_count");
    CheckTally m("R_m_eq_k");
    CheckTally b("R_b_eq_k");
    for (const SweepRow &row : r.rows) {
      const int k = row.param;
      const Graph g = row.spec.build();
      coloring.record(k, is_b_coloring(g, r_tree_bcoloring(k)) &&
                             r_tree_bcoloring(k).classes() == k);
      int leaf_count = 0;
      for (int v = 0; v < g.order(); ++v)
        leaf_count += g.degree(v) == 1 ? 1 : 0;
      // R_2 is a single edge: both ends are leaves.
      leaves.record(k, k == 2 ? leaf_count == 2 : leaf_count == (k - 1) * (k - 2));
      m.record(k, *row.record.m == k);
      if (row.record.b)
        b.record(k, *row.record.b == k);
    }
    r.checks.push_back(coloring.finish());
    r.checks.push_back(leaves.finish());
    r.checks.push_back(m.finish());
    r.checks.push_back(b.finish());
    break;
  }
  case FamilyKind::caterpillar: {
    r.checks.push_back(strictly_increasing("trend_b_increasing", column(r, get_b)));
    const auto gammas = column(r, get_gamma);
    int bound = 0;
    for (auto [p, g] : gammas)
      bound = std::max(bound, g);
    CheckResult constant{"gamma_bounded_by_observed_constant", CheckOutcome::skipped,
                         column_text(gammas)};
    CheckTally three("caterpillar_gamma_le_3");
    for (auto [p, g] : gammas)
      three.record(p, g <= 3);
    if (!gammas.empty()) {
      constant.outcome = CheckOutcome::pass;
      constant.details += " C = " + std::to_string(bound);
    }
    r.checks.push_back(constant);
    r.checks.push_back(three.finish());
    break;
  }
  default:
    break;
  }
}

} // namespace

SweepReport sweep_family(FamilyKind kind, int from, int to, const SweepOptions &options) {
  SweepReport report;
  report.family = kind;
  report.from = from;
  report.to = to;
  report.options = options;
  if (from > to)
    throw GraphError("sweep range is empty: " + std::to_string(from) + ".." +
                     std::to_string(to));

  const int count = to - from + 1;
  report.rows.resize(count);
  for (int i = 0; i < count; ++i) {
    report.rows[i].param = from + i;
    report.rows[i].spec = sweep_member(kind, from + i, options.seed);
  }
  // Build every member up front so parameter errors surface before any work.
  std::vector<Graph> graphs;
  graphs.reserve(count);
  for (const SweepRow &row : report.rows)
    graphs.push_back(row.spec.build());

  unsigned workers = options.workers;
  if (workers == 0)
    workers = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::future<void>> pending;
  for (unsigned w = 0; w < std::min<unsigned>(workers, count); ++w) {
    pending.push_back(std::async(std::launch::async, [&, w] {
      for (int i = static_cast<int>(w); i < count; i += static_cast<int>(workers))
        report.rows[i].record = profile(graphs[i], options.caps);
    }));
  }
  for (auto &f : pending)
    f.get();

  add_family_checks(report);
  return report;
}

namespace {

std::string csv_field(std::optional<int> v) {
  return v ? std::to_string(*v) : std::string();
}

} // namespace

std::string emit_report(const SweepReport &report, ReportFormat format) {
  if (format == ReportFormat::json)
    return to_json(report).dump(2) + "\n";
  std::ostringstream out;
  out << "family,param,n,delta,omega,chi,m,gamma,b,gamma_minus_b\n";
  for (const SweepRow &row : report.rows) {
    const ProfileRecord &p = row.record;
    out << family_name(report.family) << ',' << row.param << ',' << p.n << ','
        << p.max_degree << ',' << csv_field(p.omega) << ',' << csv_field(p.chi)
        << ',' << csv_field(p.m) << ',' << csv_field(p.gamma) << ','
        << csv_field(p.b) << ',' << csv_field(p.gamma_minus_b()) << '\n';
  }
  return out.str();
}

Json to_json(const VertexSet &s) { return Json(s.members()); }

Json to_json(const Coloring &c) { return Json(c.colors()); }

Json to_json(const Ordering &o) { return Json(o.sequence()); }

namespace {

Json optional_int(std::optional<int> v) { return v ? Json(*v) : Json(nullptr); }

} // namespace

Json to_json(const ProfileRecord &r) {
  Json j;
  j["n"] = r.n;
  j["delta"] = r.max_degree;
  j["omega"] = optional_int(r.omega);
  j["chi"] = optional_int(r.chi);
  j["m"] = optional_int(r.m);
  j["gamma"] = optional_int(r.gamma);
  j["b"] = optional_int(r.b);
  j["gamma_minus_b"] = optional_int(r.gamma_minus_b());
  Json w = Json::object();
  if (r.clique_witness)
    w["clique"] = to_json(*r.clique_witness);
  if (r.chi_witness)
    w["chi_coloring"] = to_json(*r.chi_witness);
  if (r.gamma_witness)
    w["gamma_ordering"] = to_json(*r.gamma_witness);
  if (r.b_witness)
    w["b_coloring"] = to_json(*r.b_witness);
  j["witnesses"] = w;
  j["uncomputed"] = r.uncomputed;
  return j;
}

Json to_json(const MonotonicityVerdict &v) {
  Json j;
  j["monotone"] = v.monotone;
  j["b"] = v.b_graph;
  if (v.witness) {
    j["witness"] = {{"vertices", to_json(v.witness->vertices)},
                    {"b", v.witness->b_value}};
  } else {
    j["witness"] = nullptr;
  }
  j["subsets_checked"] = v.subsets_checked;
  j["subsets_pruned"] = v.subsets_pruned;
  return j;
}

Json to_json(const CheckResult &c) {
  return Json{{"name", c.name},
              {"verdict", std::string(outcome_name(c.outcome))},
              {"details", c.details}};
}

Json to_json(const SweepReport &r) {
  Json j;
  j["family"] = std::string(family_name(r.family));
  j["range"] = {{"from", r.from}, {"to", r.to}};
  Json records = Json::array();
  for (const SweepRow &row : r.rows) {
    Json rec;
    rec["param"] = row.param;
    rec["spec"] = row.spec.to_string();
    const Json fields = to_json(row.record);
    for (auto &[key, value] : fields.items())
      rec[key] = value;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  Json checks = Json::array();
  for (const CheckResult &c : r.checks)
    checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  j["metadata"] = {
      {"seed", r.options.seed},
      {"rng", Rng::name()},
      {"caps", {{"exact_n", r.options.caps.exact_n}, {"oracle_n", r.options.caps.oracle_n}}},
      {"timestamp", r.options.timestamp ? Json(*r.options.timestamp) : Json(nullptr)},
  };
  return j;
}

} // namespace gammab
