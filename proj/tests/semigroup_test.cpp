#include <doctest.h>

#include <algorithm>

#include "nsg/semigroup.hpp"
#include "support.hpp"

using namespace nsg;

namespace {

NumericalSemigroup sg(std::vector<int> gens) { return NumericalSemigroup::from_generators(gens); }

}  // namespace

TEST_CASE("fixture invariants") {
  struct Row {
    std::vector<int> gens;
    int e, nu, c, n, genus;
  };
  const std::vector<Row> rows = {
      {{7, 9, 11, 19}, 7, 4, 25, 12, 13},
      {{7, 9, 11, 13}, 7, 4, 20, 8, 12},
      {{17, 27, 29}, 17, 3, 158, 74, 84},
      {{7, 9, 11, 15}, 7, 4, 20, 8, 12},
  };
  for (const auto& r : rows) {
    const auto s = sg(r.gens);
    CAPTURE(s.to_string());
    CHECK(s.multiplicity() == r.e);
    CHECK(s.embedding_dimension() == r.nu);
    CHECK(s.conductor() == r.c);
    CHECK(s.small_elements_count() == r.n);
    CHECK(s.genus() == r.genus);
    CHECK(s.minimal_generators() == r.gens);
  }
}

TEST_CASE("full monoid conventions") {
  const NumericalSemigroup full;
  CHECK(full.is_full());
  CHECK(full.frobenius() == -1);
  CHECK(full.conductor() == 0);
  CHECK(full.small_elements_count() == 0);
  CHECK(full.genus() == 0);
  CHECK(depth(full) == 0);
  CHECK(full.minimal_generators() == std::vector<int>{1});
  CHECK(sg({1}) == full);
  CHECK(sg({1, 5, 9}) == full);
  const auto r = invariants(full);
  CHECK(r.pseudo_frobenius.empty());
  CHECK(r.type_t == 0);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(sg({}), Error);
  try {
    sg({6, 9, 15});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCofinite);
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
  try {
    sg({0, 3});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  CHECK(parse_generator_list("7 9, 11\t19") == std::vector<int>{7, 9, 11, 19});
  CHECK_THROWS_AS(parse_generator_list("7 x 9"), Error);
  CHECK_THROWS_AS(parse_generator_list("-3 4"), Error);
  CHECK_THROWS_AS(parse_generator_list("99999999999999999999"), Error);
}

TEST_CASE("from_members rejects non-closed sets") {
  NumericalSemigroup::Bits bits(6);
  bits.set(0);
  bits.set(3);
  bits.set(4);
  CHECK_NOTHROW(NumericalSemigroup::from_members(bits));
  bits.set(1);
  CHECK_THROWS_AS(NumericalSemigroup::from_members(bits), Error);
}

TEST_CASE("membership agrees with generator sums") {
  std::mt19937_64 rng(nsg::testing::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const auto gens = nsg::testing::random_generators(rng, 25);
    const auto s = NumericalSemigroup::from_generators(gens);
    const int bound = s.conductor() + 2 * s.multiplicity() + 5;
    const auto oracle = nsg::testing::members_by_sums(gens, bound);
    for (int z = 0; z < bound; ++z) {
      REQUIRE_MESSAGE(s.contains(z) == (oracle.count(z) == 1), s.to_string() << " at " << z);
    }
    CHECK(!s.contains(-1));
  }
}

TEST_CASE("random semigroup invariants") {
  std::mt19937_64 rng(nsg::testing::kSeed + 1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = NumericalSemigroup::from_generators(nsg::testing::random_generators(rng));
    CAPTURE(s.to_string());
    CHECK(s.small_elements_count() + s.genus() == s.conductor());
    CHECK(s.frobenius() + 1 == s.conductor());
    CHECK(s.embedding_dimension() <= s.multiplicity());
    // Minimal generators are idempotent under re-closure.
    const auto again = NumericalSemigroup::from_generators(s.minimal_generators());
    CHECK(again == s);
    CHECK(again.minimal_generators() == s.minimal_generators());

    const int e = s.multiplicity();
    const auto apery = apery_set(s, e);
    REQUIRE(apery.size() == static_cast<std::size_t>(e));
    std::int64_t sum = 0;
    std::vector<int> residues;
    for (int w : apery) {
      residues.push_back(w % e);
      CHECK(s.contains(w));
      CHECK(!s.contains(w - e));
      sum += w;
    }
    std::sort(residues.begin(), residues.end());
    for (int i = 0; i < e; ++i) CHECK(residues[static_cast<std::size_t>(i)] == i);
    // Selmer: g = (sum of Apery) / e - (e - 1) / 2.
    CHECK(2 * sum == 2 * static_cast<std::int64_t>(e) * s.genus() + static_cast<std::int64_t>(e) * (e - 1));
    CHECK(*std::max_element(apery.begin(), apery.end()) - e == s.frobenius());

    const auto r = invariants(s);
    CHECK(r.type_t == static_cast<int>(r.pseudo_frobenius.size()));
    CHECK(r.pseudo_frobenius.back() == s.frobenius());
    CHECK(r.type_t <= e - 1);
    for (int f : r.pseudo_frobenius) {
      CHECK(!s.contains(f));
      for (int m : s.minimal_generators()) CHECK(s.contains(f + m));
    }
    CHECK(r.depth_q == (s.conductor() + e - 1) / e);
  }
}

TEST_CASE("pseudo-Frobenius numbers by direct search") {
  for (const auto& s : nsg::testing::all_semigroups(9)) {
    if (s.is_full()) continue;
    std::vector<int> direct;
    for (int z : s.gaps()) {
      bool pf = true;
      for (int m = s.multiplicity(); m < s.conductor() + s.multiplicity() && pf; ++m) {
        if (s.contains(m) && !s.contains(z + m)) pf = false;
      }
      if (pf) direct.push_back(z);
    }
    CHECK(invariants(s).pseudo_frobenius == direct);
  }
}

TEST_CASE("apery set requires a member") {
  const auto s = sg({7, 9, 11, 19});
  CHECK_THROWS_AS(apery_set(s, 8), Error);
  CHECK(apery_set(s, 9).size() == 9);
}

TEST_CASE("to_string") {
  CHECK(sg({19, 7, 11, 9, 14}).to_string() == "<7,9,11,19>");
  CHECK(NumericalSemigroup().to_string() == "<1>");
}
