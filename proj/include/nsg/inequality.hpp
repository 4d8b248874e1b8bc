#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nsg/ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

enum class CheckId { abhyankar, dimd, cor13_strong, cor13_weak, lech, wilf, depth, ag_key };

inline constexpr std::array<CheckId, 8> kAllChecks = {
    CheckId::abhyankar, CheckId::dimd, CheckId::cor13_strong, CheckId::cor13_weak,
    CheckId::lech,      CheckId::wilf, CheckId::depth,        CheckId::ag_key};

std::string_view to_string(CheckId id);
/// Throws ParseError on unknown names.
CheckId parse_check_id(std::string_view name);

/// One instance of "lhs <= rhs".
struct InequalityVerdict {
  CheckId check_id{};
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
  bool equality = false;
  std::vector<int> semigroup;

  static InequalityVerdict make(CheckId id, std::int64_t lhs, std::int64_t rhs, std::vector<int> gens = {});
};

/// Length bookkeeping behind the almost Gorenstein bound:
///   e_c = len_xRbar_m + len_m_xc,   nu * n = len_m_xc + len_ker_phi.
struct BookkeepingReport {
  std::int64_t len_m_xc = 0;
  std::int64_t len_xRbar_m = 0;
  std::int64_t len_ker_phi = 0;
  std::int64_t e_c = 0;

  friend bool operator==(const BookkeepingReport&, const BookkeepingReport&) = default;
};

/// The numbers every verdict is computed from. Good semigroups of the plane
/// feed the same record.
struct InvariantNumbers {
  std::int64_t e = 1;
  std::int64_t nu = 1;
  std::int64_t conductor = 0;  // e(c)
  std::int64_t n = 0;          // l(R/c)
  std::int64_t depth_q = 0;
};

InvariantNumbers numbers_of(const NumericalSemigroup& s);

/// Verdicts for abhyankar, dimd, cor13_strong, cor13_weak, lech, wilf, depth
/// and ag_key, in that order.
std::vector<InequalityVerdict> evaluate_checks(const InvariantNumbers& v, const BookkeepingReport& b,
                                               const std::vector<int>& gens = {});

/// Each length is computed twice: as a set cardinality over ideals and by a
/// closed formula. A mismatch, or any negative length, throws
/// InternalInconsistency.
BookkeepingReport ag_bookkeeping(const SemigroupPtr& s);

/// Same quantities from the closed formulas alone.
BookkeepingReport ag_bookkeeping_formula(const NumericalSemigroup& s);

std::vector<InequalityVerdict> check_all(const SemigroupPtr& s);

enum class DimdClass { full_monoid, ordinary, none };
std::string_view to_string(DimdClass c);

struct EqualityAnalysis {
  bool dimd_equality = false;
  DimdClass dimd_class = DimdClass::none;
  bool lech_equality = false;
  std::optional<int> lech_k;
  bool cor13_strong_equality = false;
  bool cor13_weak_equality = false;
  /// Set when a predicted equivalence fails; holds the offending verdict.
  std::optional<InequalityVerdict> counterexample;
};

/// dimd equality iff (full monoid or n = 1); lech equality iff S is some S_k.
EqualityAnalysis equality_analysis(const NumericalSemigroup& s);

}  // namespace nsg
