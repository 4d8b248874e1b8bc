#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "nsg/inequality.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// A vertex of the semigroup tree. Children remove one minimal generator
/// larger than the Frobenius number, so every semigroup has exactly one
/// parent (re-adjoin F) and the root is the full monoid.
struct TreeNode {
  NumericalSemigroup semigroup;
  int genus = 0;
  /// Minimal generators > F(S), ascending.
  std::vector<int> effective_generators;
};

TreeNode make_node(NumericalSemigroup s);
TreeNode root_node();
std::vector<TreeNode> children(const TreeNode& node);

/// Largest genus the packed tree walker supports.
inline constexpr int kMaxEnumerationGenus = 40;

using Filter = std::function<bool(const NumericalSemigroup&, const InvariantReport&)>;
using Visitor = std::function<void(const NumericalSemigroup&, const InvariantReport&)>;

enum class NamedFilter { all, symmetric, almost_symmetric, positioned, wilf_generator };
NamedFilter parse_filter(std::string_view name);
std::string_view to_string(NamedFilter f);
Filter make_filter(NamedFilter f);

struct EnumerationOptions {
  /// Worker threads for subtree processing; 0 means hardware concurrency.
  unsigned workers = 1;
  /// Subtrees rooted at this genus are the unit of work.
  int frontier_genus = 12;
  /// Throw ResourceLimit once more nodes than this have been visited.
  std::optional<std::uint64_t> node_budget;
  /// Up to this genus every classification runs both characterizations.
  int cross_check_genus = 20;
  /// Prints nodes/sec and the frontier to standard error.
  bool progress = false;
};

struct GenusCounts {
  std::uint64_t total = 0;
  std::uint64_t matched = 0;  // passed the filter
  std::uint64_t symmetric = 0;
  std::uint64_t almost_symmetric = 0;
  std::uint64_t positioned = 0;
  std::uint64_t ordinary = 0;
  std::uint64_t lech_extremal = 0;
  std::uint64_t wilf_generator = 0;
  std::uint64_t dimd_equality = 0;
  std::uint64_t lech_equality = 0;

  GenusCounts& operator+=(const GenusCounts& o);
  friend bool operator==(const GenusCounts&, const GenusCounts&) = default;
};

struct Violation {
  CheckId check_id{};
  int genus = 0;
  std::vector<int> generators;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool almost_symmetric = false;
  bool wilf_generator = false;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Per-genus counts and every failed check. Counts cover all visited
/// semigroups; checks and `matched` cover those passing the filter.
struct CensusSummary {
  int max_genus = 0;
  std::vector<GenusCounts> per_genus;
  std::vector<Violation> violations;
  /// Semigroups where a predicted equality characterization failed.
  std::vector<Violation> equality_counterexamples;

  explicit CensusSummary(int g_max = 0) : max_genus(g_max), per_genus(static_cast<std::size_t>(g_max) + 1) {}

  /// Commutative merge; call canonicalize() afterwards.
  void merge(const CensusSummary& other);
  /// Sorts violation lists by (genus, generators, check id).
  void canonicalize();
  std::uint64_t total() const;
  std::size_t violation_count(CheckId id) const;

  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

/// Visits every semigroup of genus <= g_max exactly once. `visitor` may be
/// invoked concurrently from several workers and must be thread safe.
CensusSummary enumerate_by_genus(int g_max, const Filter& filter = {}, const Visitor& visitor = {},
                                 const EnumerationOptions& options = {});

/// Counts per genus by direct enumeration of gap sets inside [1, 2g],
/// independent of the tree. Throws OracleTooLarge for g_max > 10.
std::vector<std::uint64_t> brute_force_census(int g_max);

struct SweepResult {
  CensusSummary summary;
  /// 0 when no check failed and no equality prediction broke, 1 otherwise.
  int exit_status = 0;
};

/// Runs the selected checks plus the bookkeeping and equality analysis on
/// every semigroup passing `filter`.
SweepResult sweep(int g_max, const std::vector<CheckId>& checks, const Filter& filter = {},
                  const EnumerationOptions& options = {});

}  // namespace nsg
