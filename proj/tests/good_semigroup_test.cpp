#include <doctest.h>

#include <random>

#include "nsg/good_semigroup.hpp"
#include "nsg/report.hpp"
#include "support.hpp"

using namespace nsg;
using namespace nsg::plane;

namespace {

const std::string kFixtures = NSG_FIXTURE_DIR;

PlanePtr load(const std::string& name) {
  return std::make_shared<const GoodSemigroupPlane>(report::parse_plane_semigroup(report::read_json_file(kFixtures + "/" + name)));
}

GoodIdealPlane load_ideal(const PlanePtr& s, const std::string& name) {
  const auto j = report::read_json_file(kFixtures + "/" + name);
  std::vector<Point> pts;
  for (const auto& p : j["small_elements"]) pts.push_back({p[0].get<int>(), p[1].get<int>()});
  return GoodIdealPlane::from_points(s, pts, {j["conductor"][0].get<int>(), j["conductor"][1].get<int>()});
}

PlanePtr full_plane() {
  const std::vector<Point> origin{{0, 0}};
  return std::make_shared<const GoodSemigroupPlane>(GoodSemigroupPlane::from_small_elements(origin, {0, 0}));
}

}  // namespace

TEST_CASE("figure semigroup invariants") {
  const auto s = load("figure_semigroup.json");
  CHECK(s->conductor() == Point{6, 6});
  CHECK(s->contains({3, 100}));
  CHECK(s->contains({100, 4}));
  CHECK(!s->contains({5, 5}));
  CHECK(!s->contains({3, 5}));
  CHECK(s->projection(0).minimal_generators() == std::vector<int>{3, 4});

  const auto r = invariants_plane(s, 4);
  CHECK(r.multiplicity_vector == Point{3, 3});
  CHECK(r.e == 6);
  CHECK(r.e_c == 12);
  CHECK(r.len_R_c == 5);
  CHECK(r.bookkeeping.len_m_xc == 10);
  CHECK(r.bookkeeping.len_ker_phi == 10);
  CHECK(r.bookkeeping.len_xRbar_m == 2);
  for (const auto& v : r.verdicts) CHECK(v.holds);
}

TEST_CASE("canonical ideal distance") {
  const auto s = load("figure_semigroup.json");
  const auto omega = load_ideal(s, "figure_canonical_ideal.json");
  CHECK(contains_ideal(omega, whole_ideal(s)));
  CHECK(omega.contains({100, 0}));
  CHECK(!omega.contains({5, 6}));
  const auto inner = intersect(translate(conductor_ideal(s), {-3, -3}), omega);
  CHECK(distance(omega, inner) == 2);
  const auto oracle = distance_oracle(omega, inner);
  CHECK(oracle.shortest == 2);
  CHECK(oracle.longest == 2);
  // Chains of good ideals through S itself.
  const auto whole = distance_oracle(whole_ideal(s), conductor_ideal(s));
  CHECK(whole.shortest == 5);
  CHECK(whole.longest == 5);
  const auto big = distance_oracle(omega, conductor_ideal(s));
  CHECK(big.shortest == big.longest);
  CHECK(big.longest == distance(omega, conductor_ideal(s)));
}

TEST_CASE("parametrized example") {
  const auto param = report::parse_parametrization(report::read_json_file(kFixtures + "/two_branch_param.json"));
  const auto s = std::make_shared<const GoodSemigroupPlane>(from_parametrization(param.generators, param.truncation));
  const auto r = invariants_plane(s, 3);
  CHECK(r.e == 3);
  CHECK(r.e_c == 5);
  CHECK(r.len_R_c == 2);
  CHECK(r.multiplicity_vector == Point{1, 2});
  CHECK(*s == *load("two_branch_param_semigroup.json"));
  // Stable under a larger truncation.
  CHECK(*s == from_parametrization(param.generators, 30));
  CHECK_THROWS_AS(from_parametrization(param.generators, 4), Error);
}

TEST_CASE("parametrization with <3,4> on both branches") {
  // (t^3, u^3), (t^4, u^4): both branches have value semigroup <3, 4>.
  std::vector<BranchPair> gens = {
      {{{3, 1}}, {{3, 1}}},
      {{{4, 1}}, {{4, 1}, {5, 1}}},
  };
  const auto s = from_parametrization(gens, 24);
  CHECK(s.projection(0).minimal_generators() == std::vector<int>{3, 4});
  CHECK(s.projection(1).minimal_generators() == std::vector<int>{3, 4});
  std::vector<BranchPair> zero = {{{{40, 1}}, {}}};
  try {
    from_parametrization(zero, 16);
    FAIL("expected ZeroGenerator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroGenerator);
  }
}

TEST_CASE("validation errors") {
  const std::vector<Point> not_min = {{0, 0}, {2, 3}, {3, 2}, {4, 4}};
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code_of([&] { GoodSemigroupPlane::from_small_elements(not_min, {4, 4}); }) == ErrorCode::NotMinClosed);
  const std::vector<Point> not_add = {{0, 0}, {2, 2}, {5, 5}};
  const auto add_code = code_of([&] { GoodSemigroupPlane::from_small_elements(not_add, {5, 5}); });
  CHECK((add_code == ErrorCode::NotAdditivelyClosed || add_code == ErrorCode::CompletionFails));
  // (2,3) and (2,5) share x = 2 but nothing continues from (2,3).
  const std::vector<Point> incomplete = {{0, 0}, {2, 3}, {2, 5}, {6, 6}};
  CHECK(code_of([&] { GoodSemigroupPlane::from_small_elements(incomplete, {6, 6}); }) == ErrorCode::CompletionFails);

  const auto s = load("figure_semigroup.json");
  // (1,1) + (3,3) is missing.
  const std::vector<Point> not_ideal = {{1, 1}, {6, 6}};
  CHECK(code_of([&] { GoodIdealPlane::from_points(s, not_ideal, {6, 6}); }) == ErrorCode::NotGoodIdeal);
  const std::vector<Point> no_conductor = {{3, 3}};
  CHECK(code_of([&] { GoodIdealPlane::from_points(s, no_conductor, {6, 6}); }) == ErrorCode::NotGoodIdeal);
  const auto m = maximal_ideal(s);
  CHECK(code_of([&] { distance(m, whole_ideal(s)); }) == ErrorCode::NotContained);
  CHECK(code_of([&] { distance(whole_ideal(full_plane()), m); }) == ErrorCode::ParentMismatch);
}

TEST_CASE("distance of a corner in N^2") {
  const auto n2 = full_plane();
  const auto whole = whole_ideal(n2);
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      CHECK(distance(whole, closure_translate(n2, {a, b})) == a + b);
    }
  }
  // N^2 \ {0} has no least element, so it is not a good ideal.
  CHECK_THROWS_AS(maximal_ideal(n2), Error);
}

TEST_CASE("distance is well defined and additive on N^2 boxes") {
  const auto n2 = full_plane();
  const auto whole = whole_ideal(n2);
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      const auto bottom = closure_translate(n2, {a, b});
      const auto lat = ideal_lattice(whole, bottom);
      CAPTURE(a);
      CAPTURE(b);
      // Graded: every maximal chain between any two members has one length.
      CHECK(lat.graded);
      for (std::size_t i = 0; i < lat.ideals.size(); ++i) {
        REQUIRE(distance(lat.ideals[i], bottom) == lat.rank[i]);
      }
      CHECK(lat.rank.back() == a + b);
      if (a == 6 && b == 6) {
        // Additivity through random middle ideals, and the oracle on pairs.
        std::mt19937_64 rng(nsg::testing::kSeed);
        std::uniform_int_distribution<std::size_t> pick(0, lat.ideals.size() - 1);
        int tested = 0;
        for (int t = 0; t < 4000 && tested < 200; ++t) {
          const auto& e = lat.ideals[pick(rng)];
          const auto& f = lat.ideals[pick(rng)];
          const auto& g = lat.ideals[pick(rng)];
          if (!contains_ideal(e, f) || !contains_ideal(f, g)) continue;
          CHECK(distance(e, g) == distance(e, f) + distance(f, g));
          if (tested < 40) {
            const auto o = distance_oracle(e, g);
            CHECK(o.shortest == o.longest);
            CHECK(o.longest == distance(e, g));
          }
          ++tested;
        }
        CHECK(tested >= 100);
      }
    }
  }
}

TEST_CASE("ideal lattice of the figure semigroup is graded") {
  const auto s = load("figure_semigroup.json");
  const auto lat = ideal_lattice(whole_ideal(s), conductor_ideal(s));
  CHECK(lat.graded);
  CHECK(lat.rank.back() == 5);
  for (const auto& e : lat.ideals) CHECK(contains_ideal(whole_ideal(s), e));

  const auto omega = load_ideal(s, "figure_canonical_ideal.json");
  const auto c = conductor_ideal(s);
  const auto wide = ideal_lattice(omega, c);
  CHECK(wide.graded);
  CHECK(wide.ideals.size() > lat.ideals.size());
  for (std::size_t i = 0; i < wide.ideals.size(); ++i) CHECK(distance(wide.ideals[i], c) == wide.rank[i]);
}

TEST_CASE("oracle limits") {
  const auto n2 = full_plane();
  CHECK_THROWS_AS(distance_oracle(whole_ideal(n2), closure_translate(n2, {12, 12})), Error);
  CHECK_THROWS_AS(distance_oracle(whole_ideal(n2), closure_translate(n2, {6, 6}), 10), Error);
}

TEST_CASE("json round trip") {
  const auto s = load("figure_semigroup.json");
  const auto again = report::parse_plane_semigroup(report::to_json(*s));
  CHECK(again == *s);
}
