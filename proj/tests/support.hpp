#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "nsg/enumeration.hpp"
#include "nsg/semigroup.hpp"

namespace nsg::testing {

inline constexpr std::uint64_t kSeed = 20261018;

/// Members of <gens> in [0, bound) by repeated addition of generators.
inline std::set<int> members_by_sums(const std::vector<int>& gens, int bound) {
  std::set<int> out{0};
  std::vector<int> todo{0};
  while (!todo.empty()) {
    const int z = todo.back();
    todo.pop_back();
    for (int g : gens) {
      if (z + g < bound && out.insert(z + g).second) todo.push_back(z + g);
    }
  }
  return out;
}

/// Random cofinite semigroup: multiplicity in [2, max_e], a few extra
/// generators, and one generator coprime to the multiplicity.
inline std::vector<int> random_generators(std::mt19937_64& rng, int max_e = 40) {
  std::uniform_int_distribution<int> pick_e(2, max_e);
  const int e = pick_e(rng);
  std::uniform_int_distribution<int> pick(e + 1, 3 * e);
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<int> gens{e};
  int g = pick(rng);
  while (std::gcd(g, e) != 1) ++g;
  gens.push_back(g);
  for (int k = count(rng); k > 0; --k) gens.push_back(pick(rng));
  return gens;
}

/// Every semigroup of genus <= g_max through the generic (unpacked) tree.
inline std::vector<NumericalSemigroup> all_semigroups(int g_max) {
  std::vector<NumericalSemigroup> out;
  std::vector<TreeNode> level{root_node()};
  for (int g = 0; g <= g_max; ++g) {
    std::vector<TreeNode> next;
    for (auto& node : level) {
      if (g < g_max) {
        for (auto& child : children(node)) next.push_back(std::move(child));
      }
      out.push_back(std::move(node.semigroup));
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace nsg::testing
