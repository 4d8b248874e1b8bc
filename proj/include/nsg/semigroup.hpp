#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "nsg/error.hpp"

namespace nsg {

/// A cofinite submonoid of the naturals.
///
/// Membership below the conductor is stored as a bitset over [0, c); every
/// integer >= c is a member and no negative integer is. The scalar invariants
/// (e, nu, F, c, n, genus) are fixed at construction, so instances are
/// immutable and may be shared between threads.
class NumericalSemigroup {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  /// The full monoid of naturals.
  NumericalSemigroup();

  /// Additive closure of `gens`. Throws EmptyGenerators or NotCofinite.
  static NumericalSemigroup from_generators(std::span<const int> gens);

  /// Builds S from its membership over [0, conductor); bit z set iff z is in S.
  /// Bit 0 must be set and the bitset must describe a monoid whose largest gap
  /// is conductor - 1. Minimal generators are recomputed.
  static NumericalSemigroup from_members(const Bits& below_conductor);

  /// Trusted constructor used by the enumeration engine, which already knows
  /// the minimal generators. No validation beyond debug assertions.
  static NumericalSemigroup from_parts(Bits below_conductor, std::vector<int> minimal_generators);

  bool contains(std::int64_t z) const noexcept {
    if (z < 0) return false;
    if (z >= conductor_) return true;
    return members_[static_cast<std::size_t>(z)];
  }

  const std::vector<int>& minimal_generators() const noexcept { return generators_; }
  /// Bit z set iff z in S, for z in [0, conductor).
  const Bits& members_below_conductor() const noexcept { return members_; }

  int multiplicity() const noexcept { return generators_.front(); }
  int embedding_dimension() const noexcept { return static_cast<int>(generators_.size()); }
  int frobenius() const noexcept { return conductor_ - 1; }
  int conductor() const noexcept { return conductor_; }
  /// n(S): number of elements below the conductor.
  int small_elements_count() const noexcept { return small_count_; }
  int genus() const noexcept { return conductor_ - small_count_; }
  bool is_full() const noexcept { return conductor_ == 0; }

  /// Gaps in increasing order.
  std::vector<int> gaps() const;
  /// Members below the conductor in increasing order (the "small elements").
  std::vector<int> small_elements() const;

  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.conductor_ == b.conductor_ && a.members_ == b.members_;
  }

 private:
  NumericalSemigroup(Bits members, std::vector<int> generators);

  Bits members_;
  std::vector<int> generators_;
  int conductor_ = 0;
  int small_count_ = 0;
};

/// Ap(S, m) = { s in S : s - m not in S }, sorted. Throws NotAMember.
std::vector<int> apery_set(const NumericalSemigroup& s, int m);

/// Minimal generators recomputed from membership alone.
std::vector<int> minimal_generators_from_members(const NumericalSemigroup::Bits& below_conductor);

/// Parses "7 9 11 19" (whitespace and/or comma separated). Throws ParseError.
std::vector<int> parse_generator_list(std::string_view text);

struct ClassFlags {
  bool symmetric = false;
  bool almost_symmetric = false;
  bool positioned = false;
  bool ordinary = false;
  bool lech_extremal = false;
  bool wilf_generator = false;

  friend bool operator==(const ClassFlags&, const ClassFlags&) = default;
};

struct InvariantReport {
  std::vector<int> minimal_generators;
  int e = 1;
  int nu = 1;
  int frobenius = -1;
  int conductor = 0;
  int n = 0;
  int genus = 0;
  int depth_q = 0;
  int type_t = 0;
  std::vector<int> pseudo_frobenius;
  ClassFlags flags;
};

/// Scalar invariants plus pseudo-Frobenius numbers. Classification flags are
/// left default; see classify().
InvariantReport invariants(const NumericalSemigroup& s);

/// ceil(c / e), with 0 for the full monoid.
inline int depth(const NumericalSemigroup& s) {
  return (s.conductor() + s.multiplicity() - 1) / s.multiplicity();
}

}  // namespace nsg
