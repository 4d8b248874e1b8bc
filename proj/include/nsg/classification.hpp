#pragma once

#include <optional>

#include "nsg/ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

// Each predicate with two characterizations evaluates both and throws
// InternalInconsistency when they disagree.

/// omega = S.
bool is_symmetric(const SemigroupPtr& s);

/// omega in M - M, cross-checked against F - a + n_i in S for every gap a
/// and minimal generator n_i.
bool is_almost_symmetric(const SemigroupPtr& s);

/// omega in M - e, cross-checked against F - a + e in S for every gap a.
bool is_positioned(const SemigroupPtr& s);

struct WilfGenerator {
  bool exists = false;
  std::optional<int> witness;
};

/// Smallest minimal generator n_i != e with n_i + omega inside M.
/// Throws FullMonoid.
WilfGenerator wilf_generator_exists(const SemigroupPtr& s);

/// n(S) <= 1: the full monoid or {0} u [c, inf).
bool is_ordinary(const NumericalSemigroup& s);

struct LechExtremal {
  bool extremal = false;
  std::optional<int> k;
};

/// S = {0, e, ..., (k-1)e} u [ke, inf) with k = n(S); cross-checked
/// against c = e * n.
LechExtremal is_lech_extremal(const NumericalSemigroup& s);

/// Direct (scan-only) characterizations, without building ideals. The census
/// uses these above its cross-check genus.
namespace direct {
bool is_symmetric(const NumericalSemigroup& s);
bool is_almost_symmetric(const NumericalSemigroup& s);
bool is_positioned(const NumericalSemigroup& s);
std::optional<int> wilf_generator(const NumericalSemigroup& s);
}  // namespace direct

/// Every flag. With `cross_check` false only the direct characterizations run.
ClassFlags classify(const SemigroupPtr& s, bool cross_check = true);

}  // namespace nsg
