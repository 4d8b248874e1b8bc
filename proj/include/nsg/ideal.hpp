#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

inline SemigroupPtr share(NumericalSemigroup s) {
  return std::make_shared<const NumericalSemigroup>(std::move(s));
}

/// A relative ideal I of a numerical semigroup S: a subset of Z, bounded
/// below, with I + S contained in I.
///
/// Normal form is (min_element, window, threshold): the window covers
/// [min_element, threshold), every integer >= threshold is in I, and
/// threshold is minimal. Equal sets have equal normal forms.
class RelativeIdeal {
 public:
  using Bits = NumericalSemigroup::Bits;

  const NumericalSemigroup& parent() const noexcept { return *parent_; }
  const SemigroupPtr& parent_ptr() const noexcept { return parent_; }

  int min_element() const noexcept { return min_; }
  int threshold() const noexcept { return threshold_; }
  /// Bit i set iff min_element() + i is in I, for i in [0, threshold - min).
  const Bits& window() const noexcept { return window_; }

  bool contains(std::int64_t z) const noexcept {
    if (z < min_) return false;
    if (z >= threshold_) return true;
    return window_[static_cast<std::size_t>(z - min_)];
  }

  /// Members in [min_element, threshold).
  std::vector<int> small_elements() const;

  /// Membership over [lo, hi) as a bitset; bit i answers lo + i.
  Bits membership(int lo, int hi) const;

  /// "{-1, 1, 2, 3 ->}" style listing.
  std::string to_string() const;

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b);

  /// Normalizes a candidate set given on [lo, lo + raw.size()) with every
  /// integer past the range a member. Does not check closure under S.
  static RelativeIdeal normalize(SemigroupPtr parent, int lo, const Bits& raw);

 private:
  RelativeIdeal(SemigroupPtr parent, int min, int threshold, Bits window)
      : parent_(std::move(parent)), min_(min), threshold_(threshold), window_(std::move(window)) {}

  SemigroupPtr parent_;
  int min_ = 0;
  int threshold_ = 0;
  Bits window_;
};

bool same_parent(const RelativeIdeal& a, const RelativeIdeal& b);

/// Union of x + S over xs. Throws EmptyGenerators.
RelativeIdeal ideal_from_generators(SemigroupPtr s, std::span<const int> xs);
RelativeIdeal principal_ideal(SemigroupPtr s, int x);
/// S viewed as an ideal of itself.
RelativeIdeal semigroup_ideal(SemigroupPtr s);
/// M = S \ {0}.
RelativeIdeal maximal_ideal(SemigroupPtr s);
/// omega = { F(S) - a : a in Z \ S }; contains S, contained in N, minimum 0.
RelativeIdeal canonical_ideal(SemigroupPtr s);
/// C = { z >= c(S) }.
RelativeIdeal conductor_ideal(SemigroupPtr s);
/// { z >= 0 }, the value set of the integral closure.
RelativeIdeal naturals_ideal(SemigroupPtr s);

RelativeIdeal translate(const RelativeIdeal& i, int z);
/// I + J = { a + b }.
RelativeIdeal add(const RelativeIdeal& i, const RelativeIdeal& j);
RelativeIdeal intersect(const RelativeIdeal& i, const RelativeIdeal& j);
/// I - J = { z : z + J in I }.
RelativeIdeal difference(const RelativeIdeal& i, const RelativeIdeal& j);
/// True iff J is a subset of I.
bool contains_ideal(const RelativeIdeal& i, const RelativeIdeal& j);
/// |I \ J| for J contained in I. Throws NotContained with a witness of J \ I.
std::int64_t length_between(const RelativeIdeal& i, const RelativeIdeal& j);

/// Ideal expressions for the command line:
///   expr    := term (('+' | '-' | '&') term)*      left associative
///   term    := 'omega' | 'M' | 'C' | 'S' | 'N' | integer | 'gens:' int(,int)* | '(' expr ')'
/// An integer z denotes the principal ideal z + S, so "12 + S" is a translate.
/// '+' is the ideal sum, '-' the difference I - J, '&' the intersection.
RelativeIdeal evaluate_ideal_expression(SemigroupPtr s, std::string_view expr);

}  // namespace nsg
