// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Time limits are fixed below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "nsg/classification.hpp"
#include "nsg/enumeration.hpp"
#include "nsg/good_semigroup.hpp"
#include "nsg/ideal.hpp"
#include "nsg/report.hpp"

using namespace nsg;

namespace {

constexpr double kFixtureSeconds = 1.0;
constexpr double kPlaneSeconds = 5.0;
constexpr double kOracleSeconds = 30.0;
constexpr double kSweepSeconds = 300.0;
constexpr int kSweepGenus = 30;
constexpr std::uint64_t kSeed = 20261018;

// Collects failed expectations for one criterion.
class Expect {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream msg;
      msg << what << ": got " << got << ", want " << want;
      failures_.push_back(msg.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

int failed = 0;

void criterion(int id, const std::string& title, double limit, const std::function<void(Expect&)>& body) {
  Expect expect;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(expect);
  } catch (const std::exception& e) {
    expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit) {
    std::ostringstream msg;
    msg << "took " << secs << " s, limit " << limit << " s";
    expect(false, msg.str());
  }
  const bool ok = expect.failures().empty();
  failed += ok ? 0 : 1;
  std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs, limit);
  for (const auto& f : expect.failures()) std::printf("       %s\n", f.c_str());
  std::fflush(stdout);
}

SemigroupPtr sg(std::vector<int> gens) { return share(NumericalSemigroup::from_generators(gens)); }

void fixtures(Expect& ex) {
  {
    const auto s = sg({7, 9, 11, 19});
    ex.eq(s->multiplicity(), 7, "<7,9,11,19> e");
    ex.eq(s->embedding_dimension(), 4, "<7,9,11,19> nu");
    ex.eq(s->conductor(), 25, "<7,9,11,19> c");
    ex.eq(s->small_elements_count(), 12, "<7,9,11,19> n");
    ex(is_almost_symmetric(s), "<7,9,11,19> almost symmetric");
    ex(canonical_ideal(s) == ideal_from_generators(s, std::vector<int>{0, 12}), "<7,9,11,19> omega = S u (12+S)");
    const auto b = ag_bookkeeping(s);
    ex.eq(b.len_m_xc, 18, "<7,9,11,19> l(m/xc)");
    ex.eq(b.len_ker_phi, 30, "<7,9,11,19> l(ker phi)");
    ex.eq(b.len_xRbar_m, 7, "<7,9,11,19> l(xRbar/m)");
  }
  {
    const auto s = sg({7, 9, 11, 13});
    ex.eq(s->small_elements_count(), 8, "<7,9,11,13> n");
    ex.eq(s->embedding_dimension(), 4, "<7,9,11,13> nu");
    ex.eq(s->conductor(), 20, "<7,9,11,13> c");
    ex(is_positioned(s), "<7,9,11,13> positioned");
    ex(!is_almost_symmetric(s), "<7,9,11,13> not almost symmetric");
    const auto w = wilf_generator_exists(s);
    ex(w.exists && w.witness == 9, "<7,9,11,13> wilf generator 9");
  }
  {
    const auto s = sg({17, 27, 29});
    ex.eq(s->small_elements_count(), 74, "<17,27,29> n");
    ex.eq(s->embedding_dimension(), 3, "<17,27,29> nu");
    ex.eq(s->conductor(), 158, "<17,27,29> c");
    ex(is_positioned(s), "<17,27,29> positioned");
    ex(!wilf_generator_exists(s).exists, "<17,27,29> no wilf generator");
    const auto wilf = check_all(s)[5];
    ex(wilf.check_id == CheckId::wilf && wilf.lhs == 158 && wilf.rhs == 222 && wilf.holds, "<17,27,29> wilf 158 <= 222");
  }
  {
    const auto s = sg({7, 9, 11, 15});
    ex.eq(s->small_elements_count(), 8, "<7,9,11,15> n");
    ex.eq(s->embedding_dimension(), 4, "<7,9,11,15> nu");
    ex.eq(s->conductor(), 20, "<7,9,11,15> c");
    ex(!is_positioned(s), "<7,9,11,15> not positioned");
    const auto wilf = check_all(s)[5];
    ex(wilf.lhs == 20 && wilf.rhs == 32 && wilf.holds, "<7,9,11,15> wilf 20 <= 32");
  }
}

void good_semigroups(Expect& ex) {
  using namespace nsg::plane;
  const std::string dir = NSG_FIXTURE_DIR;
  const auto s = std::make_shared<const GoodSemigroupPlane>(
      report::parse_plane_semigroup(report::read_json_file(dir + "/figure_semigroup.json")));
  const auto r = invariants_plane(s, 4);
  ex.eq(r.e, 6, "figure e");
  ex.eq(r.e_c, 12, "figure e(c)");
  ex.eq(r.len_R_c, 5, "figure l(R/c)");
  ex.eq(r.bookkeeping.len_m_xc, 10, "figure l(m/xc)");
  ex.eq(r.bookkeeping.len_ker_phi, 10, "figure l(ker phi)");
  ex.eq(r.bookkeeping.len_xRbar_m, 2, "figure l(xRbar/m)");

  const auto om = report::read_json_file(dir + "/figure_canonical_ideal.json");
  std::vector<Point> pts;
  for (const auto& p : om["small_elements"]) pts.push_back({p[0].get<int>(), p[1].get<int>()});
  const auto omega = GoodIdealPlane::from_points(s, pts, {6, 6});
  const auto inner = intersect(translate(conductor_ideal(s), {-3, -3}), omega);
  ex.eq(distance(omega, inner), 2, "figure d(omega \\ (C - (3,3)) n omega)");

  const auto param = report::parse_parametrization(report::read_json_file(dir + "/two_branch_param.json"));
  const auto p = std::make_shared<const GoodSemigroupPlane>(from_parametrization(param.generators, param.truncation));
  const auto q = invariants_plane(p, 3);
  ex.eq(q.e, 3, "parametrized e");
  ex.eq(q.e_c, 5, "parametrized e(c)");
  ex.eq(q.len_R_c, 2, "parametrized l(R/c)");
}

void oracle_totals(Expect& ex) {
  const auto brute = brute_force_census(10);
  const auto tree = enumerate_by_genus(10);
  for (int g = 0; g <= 10; ++g) {
    ex.eq(tree.per_genus[static_cast<std::size_t>(g)].total, brute[static_cast<std::size_t>(g)],
          "genus " + std::to_string(g) + " tree vs brute force");
  }
  const std::vector<std::uint64_t> known = {1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204};
  ex(brute == known, "brute force counts match the known sequence");
}

void sweeps(Expect& ex) {
  EnumerationOptions options;
  options.workers = 0;
  const auto result = sweep(kSweepGenus, {kAllChecks.begin(), kAllChecks.end()}, {}, options);
  const auto& s = result.summary;
  for (CheckId id : {CheckId::abhyankar, CheckId::dimd, CheckId::cor13_strong, CheckId::cor13_weak, CheckId::lech,
                     CheckId::depth}) {
    ex.eq(s.violation_count(id), std::size_t{0}, std::string("violations of ") + std::string(to_string(id)));
  }
  ex.eq(s.equality_counterexamples.size(), std::size_t{0}, "equality characterization failures");
  for (std::size_t g = 0; g < s.per_genus.size(); ++g) {
    const auto& k = s.per_genus[g];
    ex.eq(k.dimd_equality, std::uint64_t{1}, "dimd equality cases at genus " + std::to_string(g));
    ex.eq(k.ordinary, std::uint64_t{1}, "ordinary semigroups at genus " + std::to_string(g));
    std::uint64_t divisors = g == 0 ? 1 : 0;
    for (std::size_t d = 1; d <= g; ++d) divisors += g % d == 0;
    ex.eq(k.lech_equality, divisors, "lech equality cases at genus " + std::to_string(g));
    ex.eq(k.lech_extremal, divisors, "S_k family members at genus " + std::to_string(g));
  }
  std::size_t special = 0;
  for (const auto& v : s.violations) {
    if ((v.check_id == CheckId::wilf || v.check_id == CheckId::ag_key) && (v.almost_symmetric || v.wilf_generator)) {
      ++special;
    }
  }
  ex.eq(special, std::size_t{0}, "wilf/ag_key violations among almost symmetric or wilf-generator semigroups");
  std::uint64_t as = 0, wg = 0;
  for (const auto& k : s.per_genus) {
    as += k.almost_symmetric;
    wg += k.wilf_generator;
  }
  ex.eq(s.per_genus.back().total, std::uint64_t{5646773}, "genus 30 count");
  std::printf("       swept %llu semigroups (%llu almost symmetric, %llu with a wilf generator); wilf violations "
              "overall: %zu\n",
              static_cast<unsigned long long>(s.total()), static_cast<unsigned long long>(as),
              static_cast<unsigned long long>(wg), s.violation_count(CheckId::wilf));
}

void properties(Expect& ex) {
  // Duality and reciprocity on 500 random ideals over 50 random semigroups.
  std::mt19937_64 rng(kSeed);
  int ideals = 0;
  for (int k = 0; k < 50; ++k) {
    std::uniform_int_distribution<int> pick_e(2, 20);
    const int e = pick_e(rng);
    std::uniform_int_distribution<int> pick(e + 1, 3 * e);
    std::vector<int> gens{e};
    int g = pick(rng);
    while (std::gcd(g, e) != 1) ++g;
    gens.push_back(g);
    gens.push_back(pick(rng));
    const auto s = share(NumericalSemigroup::from_generators(gens));
    const auto omega = canonical_ideal(s);
    const int c = std::max(1, s->conductor());
    std::uniform_int_distribution<int> x(-c, 2 * c);
    for (int t = 0; t < 10; ++t) {
      const auto j = ideal_from_generators(s, std::vector<int>{x(rng), x(rng)});
      const auto i = add(j, ideal_from_generators(s, std::vector<int>{0, x(rng)}));
      ex(difference(omega, difference(omega, j)) == j, "duality on " + s->to_string());
      ex(length_between(i, j) == length_between(difference(omega, j), difference(omega, i)),
         "reciprocity on " + s->to_string());
      ++ideals;
    }
  }
  ex.eq(ideals, 500, "random ideals tested");

  // Distance on N^2: graded lattices and additivity for every box up to (6,6).
  using namespace nsg::plane;
  const std::vector<Point> origin{{0, 0}};
  const auto n2 = std::make_shared<const GoodSemigroupPlane>(GoodSemigroupPlane::from_small_elements(origin, {0, 0}));
  const auto whole = whole_ideal(n2);
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      const auto bottom = closure_translate(n2, {a, b});
      const auto lat = ideal_lattice(whole, bottom);
      ex(lat.graded, "lattice graded up to " + to_string(Point{a, b}));
      for (std::size_t i = 0; i < lat.ideals.size(); ++i) {
        ex(distance(lat.ideals[i], bottom) == lat.rank[i], "distance equals rank");
        for (std::size_t j = 0; j < lat.ideals.size(); ++j) {
          if (!contains_ideal(lat.ideals[i], lat.ideals[j])) continue;
          ex(distance(whole, lat.ideals[j]) == distance(whole, lat.ideals[i]) + distance(lat.ideals[i], lat.ideals[j]),
             "additivity");
        }
      }
    }
  }

  // Parallel and sequential genus-20 summaries.
  std::string reference;
  for (unsigned workers : {1u, 2u, std::max(2u, std::thread::hardware_concurrency())}) {
    EnumerationOptions options;
    options.workers = workers;
    const auto text = report::dump(report::to_json(sweep(20, {kAllChecks.begin(), kAllChecks.end()}, {}, options).summary));
    if (reference.empty()) reference = text;
    ex(text == reference, "summary with " + std::to_string(workers) + " workers differs");
  }
}

}  // namespace

int main() {
  criterion(1, "numerical semigroup fixtures", kFixtureSeconds, fixtures);
  criterion(2, "good semigroup fixtures", kPlaneSeconds, good_semigroups);
  criterion(3, "tree totals equal brute-force totals up to genus 10", kOracleSeconds, oracle_totals);
  criterion(4, "census sweeps up to genus 30", kSweepSeconds, sweeps);
  criterion(5, "property suites (seed 20261018)", kSweepSeconds, properties);
  std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
