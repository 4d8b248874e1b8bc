#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nsg/inequality.hpp"
#include "nsg/semigroup.hpp"

namespace nsg::plane {

struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

inline Point pmin(Point a, Point b) { return {std::min(a.x, b.x), std::min(a.y, b.y)}; }
inline Point pmax(Point a, Point b) { return {std::max(a.x, b.x), std::max(a.y, b.y)}; }
/// Componentwise order.
inline bool leq(Point a, Point b) { return a.x <= b.x && a.y <= b.y; }
std::string to_string(Point p);

/// A subset of Z^2 stored on the box [lo, top]: p is a member iff p >= lo
/// and min(p, top) is marked. Good semigroups and good ideals satisfy this
/// with top at (or above) their conductor.
class SaturatedSet {
 public:
  SaturatedSet() = default;
  SaturatedSet(Point lo, Point top);

  Point lo() const noexcept { return lo_; }
  Point top() const noexcept { return top_; }
  int width() const noexcept { return top_.x - lo_.x + 1; }
  int height() const noexcept { return top_.y - lo_.y + 1; }

  bool contains(Point p) const noexcept {
    if (p.x < lo_.x || p.y < lo_.y) return false;
    return marked(pmin(p, top_));
  }
  /// p must lie inside the box.
  bool marked(Point p) const noexcept { return cells_[index(p)] != 0; }
  void mark(Point p, bool on = true) { cells_[index(p)] = on ? 1 : 0; }

  /// Marked box points in (x, y) lexicographic order.
  std::vector<Point> marked_points() const;

  friend bool operator==(const SaturatedSet&, const SaturatedSet&) = default;

 private:
  std::size_t index(Point p) const noexcept {
    return static_cast<std::size_t>(p.x - lo_.x) * static_cast<std::size_t>(height()) +
           static_cast<std::size_t>(p.y - lo_.y);
  }

  Point lo_{};
  Point top_{};
  std::vector<unsigned char> cells_;
};

/// A two-branch good semigroup of N^2: contains (0,0), is closed under
/// addition and componentwise minimum, satisfies the completion axiom and
/// contains gamma + N^2 for its conductor gamma.
class GoodSemigroupPlane {
 public:
  /// Validates and normalizes. Points beyond `conductor` are saturated to it;
  /// the stored conductor is recomputed as the least one.
  /// Throws NotMinClosed, CompletionFails, NoConductor, NotAdditivelyClosed.
  static GoodSemigroupPlane from_small_elements(std::span<const Point> points, Point conductor);
  /// Validates a set already saturated at its box top.
  static GoodSemigroupPlane from_saturated(const SaturatedSet& set);

  bool contains(Point p) const noexcept { return set_.contains(p); }
  Point conductor() const noexcept { return set_.top(); }
  const SaturatedSet& set() const noexcept { return set_; }
  /// Members <= conductor.
  std::vector<Point> small_elements() const { return set_.marked_points(); }

  /// Projections onto each axis, as numerical semigroups.
  const NumericalSemigroup& projection(int axis) const { return axis == 0 ? proj_x_ : proj_y_; }

  friend bool operator==(const GoodSemigroupPlane& a, const GoodSemigroupPlane& b) { return a.set_ == b.set_; }

 private:
  explicit GoodSemigroupPlane(SaturatedSet set);

  SaturatedSet set_;
  NumericalSemigroup proj_x_;
  NumericalSemigroup proj_y_;
};

using PlanePtr = std::shared_ptr<const GoodSemigroupPlane>;

/// A good ideal E of a good semigroup S: E + S in E, closed under minimum,
/// completion axiom, bounded below, with a conductor.
class GoodIdealPlane {
 public:
  /// Points are saturated to `top`; lo is the componentwise minimum of the
  /// points. Throws NotGoodIdeal (with a witness) on any failed axiom.
  static GoodIdealPlane from_points(PlanePtr parent, std::span<const Point> points, Point top);
  static GoodIdealPlane from_saturated(PlanePtr parent, const SaturatedSet& set);

  const GoodSemigroupPlane& parent() const noexcept { return *parent_; }
  const PlanePtr& parent_ptr() const noexcept { return parent_; }
  bool contains(Point p) const noexcept { return set_.contains(p); }
  Point min_element() const noexcept { return set_.lo(); }
  Point conductor() const noexcept { return set_.top(); }
  const SaturatedSet& set() const noexcept { return set_; }

  friend bool operator==(const GoodIdealPlane& a, const GoodIdealPlane& b) { return a.set_ == b.set_; }

 private:
  GoodIdealPlane(PlanePtr parent, SaturatedSet set) : parent_(std::move(parent)), set_(std::move(set)) {}

  PlanePtr parent_;
  SaturatedSet set_;
};

/// S itself, its maximal ideal S \ {0}, the conductor ideal gamma + N^2, and
/// v + N^2 (v + the integral closure).
GoodIdealPlane whole_ideal(const PlanePtr& s);
GoodIdealPlane maximal_ideal(const PlanePtr& s);
GoodIdealPlane conductor_ideal(const PlanePtr& s);
GoodIdealPlane closure_translate(const PlanePtr& s, Point v);

GoodIdealPlane translate(const GoodIdealPlane& e, Point v);
GoodIdealPlane intersect(const GoodIdealPlane& e, const GoodIdealPlane& f);
/// F inside E, checked on the box covering both.
bool contains_ideal(const GoodIdealPlane& e, const GoodIdealPlane& f);

/// Length of a saturated chain of members of E from min(E) to `top`
/// (top >= conductor of E). Throws ChainAmbiguity when two saturated chains
/// have different lengths.
int chain_length_to(const GoodIdealPlane& e, Point top);

/// d(E \ F) for good ideals F inside E: the common length of saturated
/// chains of good ideals from F to E. Computed as the difference of
/// saturated element-chain lengths up to a common corner.
/// Throws NotContained, ChainAmbiguity, ParentMismatch.
int distance(const GoodIdealPlane& e, const GoodIdealPlane& f);

struct ChainOracleResult {
  std::size_t ideals = 0;  // good ideals G with F <= G <= E
  int shortest = 0;        // shortest maximal chain of good ideals F -> E
  int longest = 0;         // longest one
};

/// Enumerates every good ideal between F and E (box of at most 128 points,
/// at most `budget` ideals) and measures maximal chains through covers.
/// Throws OracleTooLarge.
ChainOracleResult distance_oracle(const GoodIdealPlane& e, const GoodIdealPlane& f,
                                  std::size_t budget = 2'000'000);

/// The interval [F, E] of good ideals with rank(G) = longest chain F -> G.
/// `graded` holds when every cover raises the rank by exactly one, so all
/// maximal chains between any two members have the same length.
struct IdealLattice {
  std::vector<GoodIdealPlane> ideals;
  std::vector<int> rank;
  bool graded = true;
};
IdealLattice ideal_lattice(const GoodIdealPlane& e, const GoodIdealPlane& f, std::size_t budget = 2'000'000);

/// Every good ideal G of `s` with F <= G <= E; same limits as distance_oracle.
std::vector<GoodIdealPlane> enumerate_good_ideals(const GoodIdealPlane& e, const GoodIdealPlane& f,
                                                  std::size_t budget = 2'000'000);

struct PlaneInvariantReport {
  Point multiplicity_vector;
  std::int64_t e = 0;  // e(proj_1) + e(proj_2)
  std::int64_t nu = 0;
  Point conductor;
  std::int64_t e_c = 0;        // gamma_1 + gamma_2
  std::int64_t len_R_c = 0;    // d(S \ C)
  std::int64_t depth_q = 0;
  BookkeepingReport bookkeeping;
  std::vector<InequalityVerdict> verdicts;
};

/// nu is supplied by the caller: the value semigroup does not determine it.
/// Throws MultiplicityVectorMissing when M has no least element.
PlaneInvariantReport invariants_plane(const PlanePtr& s, int nu);

using Rational = boost::multiprecision::cpp_rational;

struct SeriesTerm {
  int exponent = 0;
  Rational coefficient;
};

/// One generator of the algebra: a pair of truncated power series, one per branch.
struct BranchPair {
  std::vector<SeriesTerm> branch1;
  std::vector<SeriesTerm> branch2;
};

/// Value semigroup of the algebra generated by `generators` inside
/// K[[t]] x K[[u]], computed exactly over the rationals modulo (t^N, u^N).
/// Components that vanish modulo the truncation have infinite value and only
/// show up through saturation. Throws ZeroGenerator, TruncationTooSmall.
GoodSemigroupPlane from_parametrization(std::span<const BranchPair> generators, int truncation);

}  // namespace nsg::plane
