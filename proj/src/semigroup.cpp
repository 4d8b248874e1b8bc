#include "nsg/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace nsg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::InputTooLarge: return "InputTooLarge";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::FullMonoid: return "FullMonoid";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::NotMinClosed: return "NotMinClosed";
    case ErrorCode::CompletionFails: return "CompletionFails";
    case ErrorCode::NoConductor: return "NoConductor";
    case ErrorCode::NotAdditivelyClosed: return "NotAdditivelyClosed";
    case ErrorCode::NotGoodIdeal: return "NotGoodIdeal";
    case ErrorCode::ChainAmbiguity: return "ChainAmbiguity";
    case ErrorCode::MultiplicityVectorMissing: return "MultiplicityVectorMissing";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

// Closure window is [0, min*max]; beyond this many bits we refuse.
constexpr std::int64_t kMaxClosureWindow = std::int64_t{1} << 31;

}  // namespace

NumericalSemigroup::NumericalSemigroup() : generators_{1} {}

NumericalSemigroup::NumericalSemigroup(Bits members, std::vector<int> generators)
    : members_(std::move(members)), generators_(std::move(generators)) {
  conductor_ = static_cast<int>(members_.size());
  small_count_ = static_cast<int>(members_.count());
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "generator list is empty");
  int g = 0;
  for (int x : gens) {
    if (x <= 0) {
      throw Error(ErrorCode::ParseError, "generators must be positive, got " + std::to_string(x));
    }
    g = std::gcd(g, x);
  }
  if (g != 1) {
    throw Error(ErrorCode::NotCofinite, "gcd of generators is " + std::to_string(g));
  }

  std::vector<int> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::int64_t lo = sorted.front();
  const std::int64_t hi = sorted.back();
  const std::int64_t window = lo * hi;
  if (window > kMaxClosureWindow) {
    throw Error(ErrorCode::InputTooLarge, "closure window " + std::to_string(window) + " too large");
  }

  // reach[z] for z in [0, window]; the Frobenius number is below lo*hi.
  std::vector<char> reach(static_cast<std::size_t>(window) + 1, 0);
  reach[0] = 1;
  for (std::int64_t z = 1; z <= window; ++z) {
    for (int x : sorted) {
      if (x > z) break;
      if (reach[static_cast<std::size_t>(z - x)]) {
        reach[static_cast<std::size_t>(z)] = 1;
        break;
      }
    }
  }
  std::int64_t conductor = window;
  while (conductor > 0 && reach[static_cast<std::size_t>(conductor - 1)]) --conductor;

  Bits members(static_cast<std::size_t>(conductor));
  for (std::int64_t z = 0; z < conductor; ++z) {
    if (reach[static_cast<std::size_t>(z)]) members.set(static_cast<std::size_t>(z));
  }
  auto minimal = minimal_generators_from_members(members);
  return NumericalSemigroup(std::move(members), std::move(minimal));
}

NumericalSemigroup NumericalSemigroup::from_members(const Bits& below_conductor) {
  const std::size_t c = below_conductor.size();
  if (c > 0) {
    if (!below_conductor[0]) throw Error(ErrorCode::NotAMember, "0 must be a member");
    if (below_conductor[c - 1]) {
      throw Error(ErrorCode::InternalInconsistency, "conductor - 1 must be a gap");
    }
    for (std::size_t a = 1; a < c; ++a) {
      if (!below_conductor[a]) continue;
      for (std::size_t b = a; a + b < c; ++b) {
        if (below_conductor[b] && !below_conductor[a + b]) {
          throw Error(ErrorCode::InternalInconsistency,
                      "membership set is not additively closed at " + std::to_string(a) + "+" +
                          std::to_string(b));
        }
      }
    }
  }
  auto minimal = minimal_generators_from_members(below_conductor);
  return NumericalSemigroup(below_conductor, std::move(minimal));
}

NumericalSemigroup NumericalSemigroup::from_parts(Bits below_conductor,
                                                  std::vector<int> minimal_generators) {
  assert(!minimal_generators.empty());
  return NumericalSemigroup(std::move(below_conductor), std::move(minimal_generators));
}

std::vector<int> minimal_generators_from_members(const NumericalSemigroup::Bits& below) {
  const int c = static_cast<int>(below.size());
  if (c == 0) return {1};
  auto member = [&](int z) { return z >= c || below[static_cast<std::size_t>(z)]; };
  int e = 1;
  while (!member(e)) ++e;
  // Every minimal generator lies in [e, c + e).
  std::vector<int> gens;
  for (int x = e; x < c + e; ++x) {
    if (!member(x)) continue;
    bool decomposable = false;
    for (int a = e; 2 * a <= x; ++a) {
      if (member(a) && member(x - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(x);
  }
  return gens;
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(genus()));
  for (int z = 0; z < conductor_; ++z) {
    if (!members_[static_cast<std::size_t>(z)]) out.push_back(z);
  }
  return out;
}

std::vector<int> NumericalSemigroup::small_elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(small_count_));
  for (auto i = members_.find_first(); i != Bits::npos; i = members_.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ',';
    os << generators_[i];
  }
  os << '>';
  return os.str();
}

std::vector<int> apery_set(const NumericalSemigroup& s, int m) {
  if (m <= 0 || !s.contains(m)) {
    throw Error(ErrorCode::NotAMember, std::to_string(m) + " is not a nonzero element of " + s.to_string());
  }
  // Smallest member in each residue class mod m.
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    int w = r;
    while (!s.contains(w)) w += m;
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> parse_generator_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto is_sep = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == ','; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc() || ptr != text.data() + j) {
      throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text.substr(i, j - i)) + "'");
    }
    if (value <= 0 || value > std::numeric_limits<int>::max()) {
      throw Error(ErrorCode::ParseError, "generators must be positive integers, got " + std::to_string(value));
    }
    out.push_back(static_cast<int>(value));
    i = j;
  }
  return out;
}

InvariantReport invariants(const NumericalSemigroup& s) {
  InvariantReport r;
  r.minimal_generators = s.minimal_generators();
  r.e = s.multiplicity();
  r.nu = s.embedding_dimension();
  r.frobenius = s.frobenius();
  r.conductor = s.conductor();
  r.n = s.small_elements_count();
  r.genus = s.genus();
  r.depth_q = depth(s);
  // PF(S): gaps z with z + n_i in S for every minimal generator.
  const auto& gens = s.minimal_generators();
  for (int z = 1; z < s.conductor(); ++z) {
    if (s.contains(z)) continue;
    bool pf = true;
    for (int g : gens) {
      if (!s.contains(z + g)) {
        pf = false;
        break;
      }
    }
    if (pf) r.pseudo_frobenius.push_back(z);
  }
  r.type_t = static_cast<int>(r.pseudo_frobenius.size());
  return r;
}

}  // namespace nsg
