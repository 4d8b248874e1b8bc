#include "nsg/classification.hpp"

namespace nsg {

namespace {

bool agree(bool via_ideals, bool via_scan, const char* what, const NumericalSemigroup& s) {
  if (via_ideals != via_scan) {
    throw Error(ErrorCode::InternalInconsistency,
                std::string(what) + " characterizations disagree on " + s.to_string());
  }
  return via_ideals;
}

// F - a + shift in S for every gap a (negative a land past F).
bool omega_shift_inside(const NumericalSemigroup& s, int shift) {
  const int f = s.frobenius();
  const auto& bits = s.members_below_conductor();
  for (int a = 1; a < s.conductor(); ++a) {
    if (!bits[static_cast<std::size_t>(a)] && !s.contains(f - a + shift)) return false;
  }
  return true;
}

}  // namespace

namespace direct {

bool is_symmetric(const NumericalSemigroup& s) {
  const int f = s.frobenius();
  for (int z = 0; z <= f; ++z) {
    if (s.contains(z) == s.contains(f - z)) return false;
  }
  return true;
}

bool is_almost_symmetric(const NumericalSemigroup& s) {
  for (int g : s.minimal_generators()) {
    if (!omega_shift_inside(s, g)) return false;
  }
  return true;
}

bool is_positioned(const NumericalSemigroup& s) {
  return omega_shift_inside(s, s.multiplicity());
}

std::optional<int> wilf_generator(const NumericalSemigroup& s) {
  if (s.is_full()) throw Error(ErrorCode::FullMonoid, "the full monoid has no maximal-ideal generators besides 1");
  for (int g : s.minimal_generators()) {
    if (g == s.multiplicity()) continue;
    // g + omega in M: g + 0 = g is in M, the rest is the shifted-gap test.
    if (omega_shift_inside(s, g)) return g;
  }
  return std::nullopt;
}

}  // namespace direct

bool is_symmetric(const SemigroupPtr& s) {
  const bool via_ideals = canonical_ideal(s) == semigroup_ideal(s);
  return agree(via_ideals, direct::is_symmetric(*s), "symmetric", *s);
}

bool is_almost_symmetric(const SemigroupPtr& s) {
  const auto m = maximal_ideal(s);
  const bool via_ideals = contains_ideal(difference(m, m), canonical_ideal(s));
  return agree(via_ideals, direct::is_almost_symmetric(*s), "almost symmetric", *s);
}

bool is_positioned(const SemigroupPtr& s) {
  // M - e(S) = { z : z + e in M }.
  const auto shifted = translate(maximal_ideal(s), -s->multiplicity());
  const bool via_ideals = contains_ideal(shifted, canonical_ideal(s));
  return agree(via_ideals, direct::is_positioned(*s), "positioned", *s);
}

WilfGenerator wilf_generator_exists(const SemigroupPtr& s) {
  const auto scan = direct::wilf_generator(*s);
  const auto m = maximal_ideal(s);
  const auto omega = canonical_ideal(s);
  std::optional<int> via_ideals;
  for (int g : s->minimal_generators()) {
    if (g == s->multiplicity()) continue;
    if (contains_ideal(m, translate(omega, g))) {
      via_ideals = g;
      break;
    }
  }
  if (via_ideals != scan) {
    throw Error(ErrorCode::InternalInconsistency, "wilf generator characterizations disagree on " + s->to_string());
  }
  return {scan.has_value(), scan};
}

bool is_ordinary(const NumericalSemigroup& s) { return s.small_elements_count() <= 1; }

LechExtremal is_lech_extremal(const NumericalSemigroup& s) {
  const int e = s.multiplicity();
  const int k = s.small_elements_count();
  // S_k = {0, e, ..., (k-1)e} u [ke, inf).
  bool equal = s.conductor() == k * e;
  for (int z = 0; equal && z < s.conductor(); ++z) {
    equal = s.contains(z) == (z % e == 0);
  }
  const bool arithmetic = static_cast<long long>(s.conductor()) == static_cast<long long>(e) * k;
  if (equal != arithmetic) {
    throw Error(ErrorCode::InternalInconsistency, "lech extremality tests disagree on " + s.to_string());
  }
  if (!equal) return {};
  return {true, k};
}

ClassFlags classify(const SemigroupPtr& s, bool cross_check) {
  ClassFlags f;
  if (cross_check) {
    f.symmetric = is_symmetric(s);
    f.almost_symmetric = is_almost_symmetric(s);
    f.positioned = is_positioned(s);
    f.wilf_generator = s->is_full() ? false : wilf_generator_exists(s).exists;
  } else {
    f.symmetric = direct::is_symmetric(*s);
    f.almost_symmetric = direct::is_almost_symmetric(*s);
    f.positioned = direct::is_positioned(*s);
    f.wilf_generator = s->is_full() ? false : direct::wilf_generator(*s).has_value();
  }
  f.ordinary = is_ordinary(*s);
  f.lech_extremal = is_lech_extremal(*s).extremal;
  return f;
}

}  // namespace nsg
