#ifndef GAMMAB_FAMILY_LAB_HPP
#define GAMMAB_FAMILY_LAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammab/coloring.hpp"
#include "gammab/generators.hpp"
#include "gammab/graph.hpp"
#include "gammab/pattern.hpp"

namespace gammab {

/// Vertex-count limits for the exact solvers.
struct Caps {
  int exact_n = 14;  // Grundy number, b-chromatic number, exact monotonicity
  int oracle_n = 9;  // permutation oracle

  /// Defaults, with exact_n replaced by GAMMAB_CAP_N when that is set.
  static Caps from_env();
};

/// The invariant tuple (n, Delta, omega, chi, m, Gamma, b) of one graph.
/// Fields left empty were not computed because the graph exceeds a cap.
struct ProfileRecord {
  int n = 0;
  int max_degree = 0;
  std::optional<int> omega;
  std::optional<int> chi;
  std::optional<int> m;
  std::optional<int> gamma;
  std::optional<int> b;

  std::optional<VertexSet> clique_witness;
  std::optional<Coloring> chi_witness;
  std::optional<Ordering> gamma_witness;
  std::optional<Coloring> b_witness;

  std::vector<std::string> uncomputed;

  bool complete() const { return uncomputed.empty(); }
  std::optional<int> gamma_minus_b() const;

  /// omega <= chi <= b <= m <= Delta+1 and chi <= Gamma <= Delta+1 over the
  /// fields that were computed.
  bool chain_holds() const;
};

ProfileRecord profile(const Graph &g, const Caps &caps = {});

struct TreeBoundVerdict {
  int gamma = 0;
  int m = 0;
  int b = 0;
  bool gamma_le_2m = false;        // stronger intermediate inequality
  bool gamma_le_2b_plus_2 = false; // the tree bound itself
  bool b_ge_m_minus_1 = false;

  bool holds() const { return gamma_le_2m && gamma_le_2b_plus_2; }
};

/// Throws GraphError when t is not a tree, CapExceeded above caps.exact_n.
TreeBoundVerdict check_tree_bound(const Graph &t, const Caps &caps = {});

inline constexpr int kProp3MaxT = 6;

struct Prop3Verdict {
  int t = 0;
  int gamma = 0;
  int b = 0;
  bool p6_free = false;
  std::optional<Embedding> p5; // absent for t = 2, where the check is skipped
  bool p5_checked = false;

  bool gamma_ok() const { return gamma == t + 1; }
  bool b_ok() const { return b == 2; }
  bool p5_ok() const { return !p5_checked || p5.has_value(); }
  bool holds() const { return gamma_ok() && b_ok() && p6_free && p5_ok(); }
};

/// Gamma(B_t) = t+1, b(B_t) = 2, B_t is induced-P6-free and, for t >= 3,
/// contains an induced P5. Throws CapExceeded outside 2 <= t <= 6.
Prop3Verdict check_prop3_B(int t);

enum class CheckOutcome { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckOutcome outcome = CheckOutcome::skipped;
  std::string details;
};

struct SweepRow {
  int param = 0;
  FamilySpec spec;
  ProfileRecord record;
};

struct SweepOptions {
  std::uint64_t seed = 0; // random_tree members
  Caps caps;
  unsigned workers = 0; // 0 = hardware concurrency
  std::optional<std::string> timestamp; // omitted by default so reports are reproducible
};

struct SweepReport {
  FamilyKind family = FamilyKind::B;
  int from = 0;
  int to = 0;
  std::vector<SweepRow> rows;
  std::vector<CheckResult> checks;
  SweepOptions options;

  const CheckResult *check(std::string_view name) const;
};

/// The member of a family at sweep parameter p: B:p, R:p, path:p, K:p,
/// Kst:p,p, cat:p x p, tree:p:seed=<seed>.
FamilySpec sweep_member(FamilyKind kind, int p, std::uint64_t seed);

/// Profiles every member for p in [from, to] and attaches the checks that
/// apply to the family. Members over the caps keep partial records.
SweepReport sweep_family(FamilyKind kind, int from, int to, const SweepOptions &options = {});

enum class ReportFormat { json, csv };

std::string emit_report(const SweepReport &report, ReportFormat format);

std::string_view outcome_name(CheckOutcome outcome);

} // namespace gammab

#endif
