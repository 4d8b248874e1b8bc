#include "nsg/good_semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace nsg::plane {

std::string to_string(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

SaturatedSet::SaturatedSet(Point lo, Point top) : lo_(lo), top_(top) {
  if (top.x < lo.x || top.y < lo.y) {
    throw Error(ErrorCode::NoConductor, "box top " + to_string(top) + " below " + to_string(lo));
  }
  cells_.assign(static_cast<std::size_t>(width()) * static_cast<std::size_t>(height()), 0);
}

std::vector<Point> SaturatedSet::marked_points() const {
  std::vector<Point> out;
  for (int x = lo_.x; x <= top_.x; ++x) {
    for (int y = lo_.y; y <= top_.y; ++y) {
      if (marked({x, y})) out.push_back({x, y});
    }
  }
  return out;
}

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& what, Point a, Point b) {
  throw Error(code, what + " at " + to_string(a) + ", " + to_string(b));
}

// Rectangle counts of marked points: count(a, b) for a <= b inside the box.
class RectCounter {
 public:
  explicit RectCounter(const SaturatedSet& s) : lo_(s.lo()), w_(s.width()), h_(s.height()) {
    sums_.assign(static_cast<std::size_t>(w_ + 1) * static_cast<std::size_t>(h_ + 1), 0);
    for (int i = 0; i < w_; ++i) {
      for (int j = 0; j < h_; ++j) {
        at(i + 1, j + 1) = at(i, j + 1) + at(i + 1, j) - at(i, j) + (s.marked({lo_.x + i, lo_.y + j}) ? 1 : 0);
      }
    }
  }

  int count(Point a, Point b) const {
    const int i0 = a.x - lo_.x, j0 = a.y - lo_.y, i1 = b.x - lo_.x + 1, j1 = b.y - lo_.y + 1;
    return at(i1, j1) - at(i0, j1) - at(i1, j0) + at(i0, j0);
  }

 private:
  int& at(int i, int j) { return sums_[static_cast<std::size_t>(i) * static_cast<std::size_t>(h_ + 1) + static_cast<std::size_t>(j)]; }
  int at(int i, int j) const { return sums_[static_cast<std::size_t>(i) * static_cast<std::size_t>(h_ + 1) + static_cast<std::size_t>(j)]; }

  Point lo_;
  int w_, h_;
  std::vector<int> sums_;
};

void check_min_closed(const SaturatedSet& s, ErrorCode code) {
  const auto pts = s.marked_points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!s.marked(pmin(pts[i], pts[j]))) fail(code, "minimum not a member", pts[i], pts[j]);
    }
  }
}

// Completion on the saturated encoding. Along each line {coord_i = v} with
// v below the top, every member other than the one furthest along j needs a
// member with the same j and larger i. On the top line {coord_i = top_i}
// (a ray of equal-j members) every member below the top in j needs a member
// of that line further along j.
void check_completion(const SaturatedSet& s, ErrorCode code) {
  const Point lo = s.lo(), top = s.top();
  for (int axis = 0; axis < 2; ++axis) {
    auto make = [axis](int i, int j) { return axis == 0 ? Point{i, j} : Point{j, i}; };
    const int ilo = axis == 0 ? lo.x : lo.y, itop = axis == 0 ? top.x : top.y;
    const int jlo = axis == 0 ? lo.y : lo.x, jtop = axis == 0 ? top.y : top.x;
    // reach[j] = largest i with (i, j) marked.
    std::vector<int> reach(static_cast<std::size_t>(jtop - jlo + 1), std::numeric_limits<int>::min());
    for (int i = ilo; i <= itop; ++i) {
      for (int j = jlo; j <= jtop; ++j) {
        if (s.marked(make(i, j))) reach[static_cast<std::size_t>(j - jlo)] = i;
      }
    }
    for (int i = ilo; i <= itop; ++i) {
      int last = std::numeric_limits<int>::min();
      for (int j = jtop; j >= jlo; --j) {
        if (!s.marked(make(i, j))) continue;
        if (last == std::numeric_limits<int>::min()) {
          last = j;
          if (i == itop && j < jtop) fail(code, "completion fails on the saturated line", make(i, j), make(i, j));
          continue;
        }
        if (i < itop && reach[static_cast<std::size_t>(j - jlo)] <= i) {
          fail(code, "completion fails", make(i, j), make(i, last));
        }
      }
    }
  }
}

void check_add_closed(const SaturatedSet& s) {
  const auto pts = s.marked_points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      if (!s.contains(pts[i] + pts[j])) fail(ErrorCode::NotAdditivelyClosed, "sum not a member", pts[i], pts[j]);
    }
  }
}

// Least point d of the box with [d, top] fully marked; it must be unique.
Point least_conductor(const SaturatedSet& s, ErrorCode code) {
  if (!s.marked(s.top())) fail(code, "box top is not a member", s.top(), s.top());
  const RectCounter rc(s);
  std::vector<Point> minimal;
  for (int x = s.lo().x; x <= s.top().x; ++x) {
    for (int y = s.lo().y; y <= s.top().y; ++y) {
      const Point d{x, y};
      const int area = (s.top().x - x + 1) * (s.top().y - y + 1);
      if (rc.count(d, s.top()) != area) continue;
      bool dominated = false;
      for (const Point& m : minimal) dominated = dominated || leq(m, d);
      if (!dominated) minimal.push_back(d);
    }
  }
  if (minimal.size() != 1) fail(code, "no least conductor", minimal.front(), minimal.back());
  return minimal.front();
}

// Re-encodes on [least member, least conductor].
SaturatedSet normalize(const SaturatedSet& s, ErrorCode code) {
  const auto pts = s.marked_points();
  if (pts.empty()) throw Error(code, "empty set");
  Point lo = pts.front();
  for (const Point& p : pts) lo = pmin(lo, p);
  if (!s.marked(lo)) fail(code, "no least element", lo, lo);
  const Point top = least_conductor(s, code);
  SaturatedSet out(lo, top);
  for (int x = lo.x; x <= top.x; ++x) {
    for (int y = lo.y; y <= top.y; ++y) {
      if (s.contains({x, y})) out.mark({x, y});
    }
  }
  return out;
}

NumericalSemigroup project(const SaturatedSet& s, int axis) {
  const int top = axis == 0 ? s.top().x : s.top().y;
  std::vector<char> hit(static_cast<std::size_t>(top) + 1, 0);
  for (const Point& p : s.marked_points()) hit[static_cast<std::size_t>(axis == 0 ? p.x : p.y)] = 1;
  int c = top + 1;
  while (c > 0 && hit[static_cast<std::size_t>(c - 1)]) --c;
  NumericalSemigroup::Bits bits(static_cast<std::size_t>(c));
  for (int z = 0; z < c; ++z) {
    if (hit[static_cast<std::size_t>(z)]) bits.set(static_cast<std::size_t>(z));
  }
  return NumericalSemigroup::from_members(bits);
}

SaturatedSet saturate_points(std::span<const Point> points, Point lo, Point top) {
  SaturatedSet s(lo, top);
  for (const Point& p : points) {
    if (p.x < lo.x || p.y < lo.y) throw Error(ErrorCode::NoConductor, "point " + to_string(p) + " below the box");
    s.mark(pmin(p, top));
  }
  return s;
}

void check_ideal_closure(const GoodSemigroupPlane& parent, const SaturatedSet& e) {
  const Point reach = pmax(parent.conductor(), e.top() - e.lo());
  for (const Point& p : e.marked_points()) {
    for (int x = 0; x <= reach.x; ++x) {
      for (int y = 0; y <= reach.y; ++y) {
        if (parent.contains({x, y}) && !e.contains(p + Point{x, y})) {
          fail(ErrorCode::NotGoodIdeal, "E + S not inside E", p, Point{x, y});
        }
      }
    }
  }
}

void require_same_parent(const GoodIdealPlane& a, const GoodIdealPlane& b) {
  if (a.parent_ptr() != b.parent_ptr() && !(a.parent() == b.parent())) {
    throw Error(ErrorCode::ParentMismatch, "good ideals over different semigroups");
  }
}

// Membership of `e` copied onto [lo, top].
SaturatedSet rebox(const GoodIdealPlane& e, Point lo, Point top) {
  SaturatedSet s(lo, top);
  for (int x = lo.x; x <= top.x; ++x) {
    for (int y = lo.y; y <= top.y; ++y) {
      if (e.contains({x, y})) s.mark({x, y});
    }
  }
  return s;
}

}  // namespace

GoodSemigroupPlane::GoodSemigroupPlane(SaturatedSet set)
    : set_(std::move(set)), proj_x_(project(set_, 0)), proj_y_(project(set_, 1)) {}

GoodSemigroupPlane GoodSemigroupPlane::from_small_elements(std::span<const Point> points, Point conductor) {
  auto s = saturate_points(points, {0, 0}, conductor);
  s.mark({0, 0});
  s.mark(conductor);
  return from_saturated(s);
}

GoodSemigroupPlane GoodSemigroupPlane::from_saturated(const SaturatedSet& set) {
  if (set.lo() != Point{0, 0}) throw Error(ErrorCode::NoConductor, "good semigroups live in N^2 from (0,0)");
  if (!set.marked({0, 0})) fail(ErrorCode::NotAdditivelyClosed, "(0,0) is not a member", {0, 0}, {0, 0});
  check_min_closed(set, ErrorCode::NotMinClosed);
  check_completion(set, ErrorCode::CompletionFails);
  check_add_closed(set);
  return GoodSemigroupPlane(normalize(set, ErrorCode::NoConductor));
}

GoodIdealPlane GoodIdealPlane::from_points(PlanePtr parent, std::span<const Point> points, Point top) {
  if (points.empty()) throw Error(ErrorCode::NotGoodIdeal, "empty point set");
  Point lo = pmin(points.front(), top);
  for (const Point& p : points) lo = pmin(lo, p);
  return from_saturated(std::move(parent), saturate_points(points, lo, top));
}

GoodIdealPlane GoodIdealPlane::from_saturated(PlanePtr parent, const SaturatedSet& set) {
  check_min_closed(set, ErrorCode::NotGoodIdeal);
  check_completion(set, ErrorCode::NotGoodIdeal);
  auto normal = normalize(set, ErrorCode::NotGoodIdeal);
  check_ideal_closure(*parent, normal);
  return GoodIdealPlane(std::move(parent), std::move(normal));
}

GoodIdealPlane whole_ideal(const PlanePtr& s) { return GoodIdealPlane::from_saturated(s, s->set()); }

GoodIdealPlane maximal_ideal(const PlanePtr& s) {
  const Point top = s->conductor() + Point{1, 1};
  SaturatedSet set({0, 0}, top);
  for (int x = 0; x <= top.x; ++x) {
    for (int y = 0; y <= top.y; ++y) {
      if (s->contains({x, y})) set.mark({x, y});
    }
  }
  set.mark({0, 0}, false);
  return GoodIdealPlane::from_saturated(s, set);
}

GoodIdealPlane conductor_ideal(const PlanePtr& s) { return closure_translate(s, s->conductor()); }

GoodIdealPlane closure_translate(const PlanePtr& s, Point v) {
  SaturatedSet set(v, v);
  set.mark(v);
  return GoodIdealPlane::from_saturated(s, set);
}

GoodIdealPlane translate(const GoodIdealPlane& e, Point v) {
  const auto& src = e.set();
  SaturatedSet set(src.lo() + v, src.top() + v);
  for (const Point& p : src.marked_points()) set.mark(p + v);
  return GoodIdealPlane::from_saturated(e.parent_ptr(), set);
}

GoodIdealPlane intersect(const GoodIdealPlane& e, const GoodIdealPlane& f) {
  require_same_parent(e, f);
  const Point lo = pmax(e.min_element(), f.min_element());
  const Point top = pmax(pmax(e.conductor(), f.conductor()), lo);
  SaturatedSet set(lo, top);
  for (int x = lo.x; x <= top.x; ++x) {
    for (int y = lo.y; y <= top.y; ++y) {
      if (e.contains({x, y}) && f.contains({x, y})) set.mark({x, y});
    }
  }
  return GoodIdealPlane::from_saturated(e.parent_ptr(), set);
}

bool contains_ideal(const GoodIdealPlane& e, const GoodIdealPlane& f) {
  require_same_parent(e, f);
  const Point lo = pmin(e.min_element(), f.min_element());
  const Point top = pmax(e.conductor(), f.conductor());
  for (int x = lo.x; x <= top.x; ++x) {
    for (int y = lo.y; y <= top.y; ++y) {
      if (f.contains({x, y}) && !e.contains({x, y})) return false;
    }
  }
  return true;
}

int chain_length_to(const GoodIdealPlane& e, Point top) {
  if (!leq(e.conductor(), top)) {
    throw Error(ErrorCode::NoConductor, "chain corner " + to_string(top) + " below the conductor");
  }
  const auto box = rebox(e, e.min_element(), top);
  const RectCounter rc(box);
  const auto pts = box.marked_points();
  // Longest and shortest saturated chain from each member up to `top`,
  // processed from the top down (larger coordinate sum first).
  std::map<Point, std::pair<int, int>> best;
  std::vector<Point> order = pts;
  std::sort(order.begin(), order.end(), [](Point a, Point b) { return a.x + a.y > b.x + b.y; });
  for (const Point& p : order) {
    if (p == top) {
      best[p] = {0, 0};
      continue;
    }
    int longest = -1, shortest = std::numeric_limits<int>::max();
    for (const Point& q : order) {
      if (q == p || !leq(p, q) || rc.count(p, q) != 2) continue;
      const auto& [ql, qs] = best.at(q);
      longest = std::max(longest, ql + 1);
      shortest = std::min(shortest, qs + 1);
    }
    best[p] = {longest, shortest};
  }
  const auto [longest, shortest] = best.at(e.min_element());
  if (longest != shortest) {
    throw Error(ErrorCode::ChainAmbiguity, "saturated chains of lengths " + std::to_string(shortest) + " and " +
                                               std::to_string(longest) + " from " + to_string(e.min_element()));
  }
  return longest;
}

int distance(const GoodIdealPlane& e, const GoodIdealPlane& f) {
  require_same_parent(e, f);
  if (!contains_ideal(e, f)) throw Error(ErrorCode::NotContained, "F is not contained in E");
  const Point top = pmax(e.conductor(), f.conductor());
  return chain_length_to(e, top) - chain_length_to(f, top);
}

namespace {

using Mask = unsigned __int128;

struct OracleBox {
  Point lo, top;
  std::vector<Point> pts;  // decreasing coordinate sum
  std::map<Point, int> index;

  OracleBox(Point l, Point t) : lo(l), top(t) {
    for (int x = lo.x; x <= top.x; ++x) {
      for (int y = lo.y; y <= top.y; ++y) pts.push_back({x, y});
    }
    if (pts.size() > 128) {
      throw Error(ErrorCode::OracleTooLarge, "oracle box " + to_string(lo) + ".." + to_string(top) + " has " +
                                                 std::to_string(pts.size()) + " points, limit 128");
    }
    std::stable_sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x + a.y > b.x + b.y; });
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
  }

  static Mask bit(int i) { return Mask{1} << i; }

  SaturatedSet to_set(Mask m) const {
    SaturatedSet s(lo, top);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (m >> i & 1) s.mark(pts[i]);
    }
    return s;
  }
};

std::vector<Mask> enumerate_masks(const GoodIdealPlane& e, const GoodIdealPlane& f, std::size_t budget,
                                  OracleBox& box) {
  require_same_parent(e, f);
  if (!contains_ideal(e, f)) throw Error(ErrorCode::NotContained, "F is not contained in E");
  const auto& parent = e.parent();
  const int n = static_cast<int>(box.pts.size());

  // up[i]: points p + s (s in S \ 0, saturated at top) that must accompany p.
  // vray/hray[i]: points straight above / to the right of p.
  std::vector<Mask> up(static_cast<std::size_t>(n)), vray(static_cast<std::size_t>(n)), hray(static_cast<std::size_t>(n));
  const Point reach = pmax(parent.conductor(), box.top - box.lo);
  for (int i = 0; i < n; ++i) {
    const Point p = box.pts[static_cast<std::size_t>(i)];
    for (int x = 0; x <= reach.x; ++x) {
      for (int y = 0; y <= reach.y; ++y) {
        if ((x == 0 && y == 0) || !parent.contains({x, y})) continue;
        const Point q = pmin(p + Point{x, y}, box.top);
        if (q != p) up[static_cast<std::size_t>(i)] |= OracleBox::bit(box.index.at(q));
      }
    }
    for (int j = 0; j < n; ++j) {
      const Point q = box.pts[static_cast<std::size_t>(j)];
      if (q.x == p.x && q.y > p.y) vray[static_cast<std::size_t>(i)] |= OracleBox::bit(j);
      if (q.y == p.y && q.x > p.x) hray[static_cast<std::size_t>(i)] |= OracleBox::bit(j);
    }
  }

  std::vector<Mask> found;
  std::size_t steps = 0;
  std::function<void(int, Mask)> go = [&](int k, Mask in) {
    if (++steps > budget * 8 || found.size() > budget) {
      throw Error(ErrorCode::OracleTooLarge, "good ideal enumeration exceeded its budget");
    }
    if (k == n) {
      const auto set = box.to_set(in);
      try {
        check_completion(set, ErrorCode::NotGoodIdeal);
      } catch (const Error&) {
        return;
      }
      found.push_back(in);
      return;
    }
    const Point p = box.pts[static_cast<std::size_t>(k)];
    const bool must_in = f.contains(p);
    const bool must_out = !e.contains(p);
    const auto uk = static_cast<std::size_t>(k);
    const bool can_in = (up[uk] & ~in) == 0;
    // Excluding p breaks min-closure when members sit on both rays from p.
    const bool can_out = !((in & vray[uk]) != 0 && (in & hray[uk]) != 0);
    if (can_in && !must_out) go(k + 1, in | OracleBox::bit(k));
    if (can_out && !must_in) go(k + 1, in);
  };
  go(0, 0);
  return found;
}

int popcount(Mask m) {
  return __builtin_popcountll(static_cast<std::uint64_t>(m)) + __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

}  // namespace

std::vector<GoodIdealPlane> enumerate_good_ideals(const GoodIdealPlane& e, const GoodIdealPlane& f,
                                                  std::size_t budget) {
  OracleBox box(pmin(e.min_element(), f.min_element()), pmax(e.conductor(), f.conductor()));
  std::vector<GoodIdealPlane> out;
  for (Mask m : enumerate_masks(e, f, budget, box)) {
    out.push_back(GoodIdealPlane::from_saturated(e.parent_ptr(), box.to_set(m)));
  }
  return out;
}

namespace {

struct MaskLattice {
  std::vector<Mask> masks;  // by increasing size: F first, E last
  std::vector<std::vector<std::size_t>> covers;
};

MaskLattice build_lattice(const GoodIdealPlane& e, const GoodIdealPlane& f, std::size_t budget, OracleBox& box) {
  MaskLattice lat;
  lat.masks = enumerate_masks(e, f, budget, box);
  auto& masks = lat.masks;
  std::stable_sort(masks.begin(), masks.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  const std::size_t n = masks.size();
  auto subset = [](Mask a, Mask b) { return a != b && (a & ~b) == 0; };

  // Upper covers of each ideal: proper supersets with nothing in between.
  lat.covers.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> above;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (subset(masks[i], masks[j])) above.push_back(j);
    }
    for (std::size_t j : above) {
      bool direct = true;
      for (std::size_t k : above) {
        if (k >= j) break;
        if (subset(masks[k], masks[j])) {
          direct = false;
          break;
        }
      }
      if (direct) lat.covers[i].push_back(j);
    }
  }
  return lat;
}

}  // namespace

ChainOracleResult distance_oracle(const GoodIdealPlane& e, const GoodIdealPlane& f, std::size_t budget) {
  OracleBox box(pmin(e.min_element(), f.min_element()), pmax(e.conductor(), f.conductor()));
  const auto lat = build_lattice(e, f, budget, box);
  const std::size_t n = lat.masks.size();
  constexpr int kUnset = std::numeric_limits<int>::min();
  std::vector<int> longest(n, kUnset), shortest(n, std::numeric_limits<int>::max());
  longest[0] = shortest[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (longest[i] == kUnset) continue;
    for (std::size_t j : lat.covers[i]) {
      longest[j] = std::max(longest[j], longest[i] + 1);
      shortest[j] = std::min(shortest[j], shortest[i] + 1);
    }
  }
  return {n, shortest[n - 1], longest[n - 1]};
}

IdealLattice ideal_lattice(const GoodIdealPlane& e, const GoodIdealPlane& f, std::size_t budget) {
  OracleBox box(pmin(e.min_element(), f.min_element()), pmax(e.conductor(), f.conductor()));
  const auto lat = build_lattice(e, f, budget, box);
  const std::size_t n = lat.masks.size();
  IdealLattice out;
  out.rank.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : lat.covers[i]) out.rank[j] = std::max(out.rank[j], out.rank[i] + 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : lat.covers[i]) out.graded = out.graded && out.rank[j] == out.rank[i] + 1;
  }
  for (Mask m : lat.masks) out.ideals.push_back(GoodIdealPlane::from_saturated(e.parent_ptr(), box.to_set(m)));
  return out;
}

PlaneInvariantReport invariants_plane(const PlanePtr& s, int nu) {
  PlaneInvariantReport r;
  std::optional<Point> least;
  for (const Point& p : s->small_elements()) {
    if (p == Point{0, 0}) continue;
    least = least ? pmin(*least, p) : p;
  }
  if (!least || !s->contains(*least) || *least == Point{0, 0}) {
    throw Error(ErrorCode::MultiplicityVectorMissing, "the maximal ideal has no least element");
  }
  r.multiplicity_vector = *least;
  r.e = s->projection(0).multiplicity() + s->projection(1).multiplicity();
  r.nu = nu;
  r.conductor = s->conductor();
  r.e_c = static_cast<std::int64_t>(r.conductor.x) + r.conductor.y;

  const auto whole = whole_ideal(s);
  const auto m = maximal_ideal(s);
  const auto c = conductor_ideal(s);
  r.len_R_c = distance(whole, c);
  r.depth_q = r.e > 0 ? (r.e_c + r.e - 1) / r.e : 0;

  auto& b = r.bookkeeping;
  b.len_m_xc = distance(m, translate(c, r.multiplicity_vector));
  b.len_xRbar_m = distance(closure_translate(s, r.multiplicity_vector), m);
  b.len_ker_phi = static_cast<std::int64_t>(nu) * r.len_R_c - b.len_m_xc;
  b.e_c = r.e_c;
  if (b.e_c != b.len_xRbar_m + b.len_m_xc) {
    throw Error(ErrorCode::InternalInconsistency, "e(c) != l(xRbar/m) + l(m/xc) for a plane semigroup");
  }
  r.verdicts = evaluate_checks({r.e, r.nu, r.e_c, r.len_R_c, r.depth_q}, b);
  return r;
}

namespace {

// Elements of K[[t]] x K[[u]] modulo (t^N, u^N): coordinates 0..N-1 hold
// branch 1, N..2N-1 branch 2.
using Vec = std::vector<Rational>;

Vec multiply(const Vec& a, const Vec& b, int n) {
  Vec out(a.size());
  for (int branch = 0; branch < 2; ++branch) {
    const int off = branch * n;
    for (int i = 0; i < n; ++i) {
      if (a[static_cast<std::size_t>(off + i)] == 0) continue;
      for (int j = 0; i + j < n; ++j) {
        if (b[static_cast<std::size_t>(off + j)] == 0) continue;
        out[static_cast<std::size_t>(off + i + j)] += a[static_cast<std::size_t>(off + i)] * b[static_cast<std::size_t>(off + j)];
      }
    }
  }
  return out;
}

int leading(const Vec& v, int from, int to) {
  for (int i = from; i < to; ++i) {
    if (v[static_cast<std::size_t>(i)] != 0) return i;
  }
  return to;
}

// Row echelon basis over columns [from, to), rows keyed by pivot, pivot entry 1.
class Echelon {
 public:
  Echelon(int from, int to) : from_(from), to_(to) {}

  // Reduces v in place; returns its leading column after reduction (to_ if zero).
  int reduce(Vec& v) const {
    for (int col = from_; col < to_; ++col) {
      if (v[static_cast<std::size_t>(col)] == 0) continue;
      auto it = rows_.find(col);
      if (it == rows_.end()) return col;
      const Rational factor = v[static_cast<std::size_t>(col)];
      const Vec& row = it->second;
      for (int k = col; k < static_cast<int>(v.size()); ++k) v[static_cast<std::size_t>(k)] -= factor * row[static_cast<std::size_t>(k)];
    }
    return to_;
  }

  // Adds v if independent; returns whether it was added.
  bool insert(Vec v) {
    const int pivot = reduce(v);
    if (pivot == to_) return false;
    const Rational inv = 1 / v[static_cast<std::size_t>(pivot)];
    for (auto& x : v) x *= inv;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  const std::map<int, Vec>& rows() const { return rows_; }

 private:
  int from_, to_;
  std::map<int, Vec> rows_;
};

Vec dense(const BranchPair& g, int n) {
  Vec v(static_cast<std::size_t>(2 * n));
  auto fill = [&](const std::vector<SeriesTerm>& terms, int off) {
    for (const auto& t : terms) {
      if (t.exponent < 0) throw Error(ErrorCode::ParseError, "negative exponent in a parametrization");
      if (t.exponent < n) v[static_cast<std::size_t>(off + t.exponent)] += t.coefficient;
    }
  };
  fill(g.branch1, 0);
  fill(g.branch2, n);
  return v;
}

}  // namespace

GoodSemigroupPlane from_parametrization(std::span<const BranchPair> generators, int truncation) {
  const int n = truncation;
  if (n < 2) throw Error(ErrorCode::TruncationTooSmall, "truncation must be at least 2");
  std::vector<Vec> gens;
  for (const auto& g : generators) {
    auto v = dense(g, n);
    if (leading(v, 0, 2 * n) == 2 * n) throw Error(ErrorCode::ZeroGenerator, "a generator vanishes modulo the truncation");
    gens.push_back(std::move(v));
  }
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators");

  // The algebra is the span of all monomials: close {1} under multiplication
  // by the generators.
  Echelon span(0, 2 * n);
  Vec one(static_cast<std::size_t>(2 * n));
  one[0] = 1;
  one[static_cast<std::size_t>(n)] = 1;
  std::vector<Vec> frontier{one};
  span.insert(one);
  while (!frontier.empty()) {
    Vec v = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      Vec p = multiply(v, g, n);
      Vec probe = p;
      if (span.reduce(probe) == 2 * n) continue;
      span.insert(p);
      frontier.push_back(std::move(p));
    }
  }

  // Full reduction so that {ord_1 >= a} is spanned by rows with pivot >= a.
  std::map<int, Vec> rows = span.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    for (auto& [pivot, row] : rows) {
      if (pivot >= it->first) break;
      const Rational factor = row[static_cast<std::size_t>(it->first)];
      if (factor == 0) continue;
      for (std::size_t k = 0; k < row.size(); ++k) row[k] -= factor * it->second[k];
    }
  }

  // Index n on either axis stands for "n or more" (including infinity).
  SaturatedSet box({0, 0}, {n, n});
  for (int a = 0; a <= n; ++a) {
    Echelon tail(n, 2 * n);  // second-branch parts of {ord_1 > a}
    for (const auto& [pivot, row] : rows) {
      if (pivot > a) tail.insert(row);
    }
    std::vector<int> tail_values;
    for (const auto& [pivot, row] : tail.rows()) tail_values.push_back(pivot - n);
    if (a == n) {
      for (int b : tail_values) box.mark({n, b});
      box.mark({n, n});
      break;
    }
    auto it = rows.find(a);
    if (it == rows.end()) continue;
    // ord_2 over g + tail: the reduced order m, and every tail order below it.
    Vec g = it->second;
    for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = 0;
    const int m = tail.reduce(g) - n;
    box.mark({a, m});
    for (int b : tail_values) {
      if (b < m) box.mark({a, b});
    }
  }

  GoodSemigroupPlane result = [&] {
    try {
      return GoodSemigroupPlane::from_saturated(box);
    } catch (const Error& err) {
      throw Error(ErrorCode::TruncationTooSmall, std::string("value set did not stabilize: ") + err.what());
    }
  }();
  for (int axis = 0; axis < 2; ++axis) {
    const int gamma = axis == 0 ? result.conductor().x : result.conductor().y;
    const int e = result.projection(axis).multiplicity();
    if (gamma + e > n - 1) {
      throw Error(ErrorCode::TruncationTooSmall,
                  "conductor " + to_string(result.conductor()) + " too close to truncation " + std::to_string(n));
    }
  }
  return result;
}

}  // namespace nsg::plane
