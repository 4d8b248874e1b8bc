#include "nsg/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "nsg/classification.hpp"
#include "nsg/ideal.hpp"

namespace nsg {

TreeNode make_node(NumericalSemigroup s) {
  TreeNode node{std::move(s), 0, {}};
  node.genus = node.semigroup.genus();
  for (int g : node.semigroup.minimal_generators()) {
    if (g > node.semigroup.frobenius()) node.effective_generators.push_back(g);
  }
  return node;
}

TreeNode root_node() { return make_node(NumericalSemigroup()); }

std::vector<TreeNode> children(const TreeNode& node) {
  std::vector<TreeNode> out;
  const auto& s = node.semigroup;
  for (int x : node.effective_generators) {
    // Removing x > F leaves a monoid whose conductor is x + 1.
    NumericalSemigroup::Bits bits(static_cast<std::size_t>(x) + 1);
    for (int z = 0; z < x; ++z) {
      if (s.contains(z)) bits.set(static_cast<std::size_t>(z));
    }
    out.push_back(make_node(NumericalSemigroup::from_members(bits)));
  }
  return out;
}

NamedFilter parse_filter(std::string_view name) {
  if (name == "all") return NamedFilter::all;
  if (name == "symmetric") return NamedFilter::symmetric;
  if (name == "almost-symmetric") return NamedFilter::almost_symmetric;
  if (name == "positioned") return NamedFilter::positioned;
  if (name == "wilf-generator") return NamedFilter::wilf_generator;
  throw Error(ErrorCode::ParseError, "unknown filter '" + std::string(name) + "'");
}

std::string_view to_string(NamedFilter f) {
  switch (f) {
    case NamedFilter::all: return "all";
    case NamedFilter::symmetric: return "symmetric";
    case NamedFilter::almost_symmetric: return "almost-symmetric";
    case NamedFilter::positioned: return "positioned";
    case NamedFilter::wilf_generator: return "wilf-generator";
  }
  return "unknown";
}

Filter make_filter(NamedFilter f) {
  switch (f) {
    case NamedFilter::all: return {};
    case NamedFilter::symmetric:
      return [](const NumericalSemigroup&, const InvariantReport& r) { return r.flags.symmetric; };
    case NamedFilter::almost_symmetric:
      return [](const NumericalSemigroup&, const InvariantReport& r) { return r.flags.almost_symmetric; };
    case NamedFilter::positioned:
      return [](const NumericalSemigroup&, const InvariantReport& r) { return r.flags.positioned; };
    case NamedFilter::wilf_generator:
      return [](const NumericalSemigroup&, const InvariantReport& r) { return r.flags.wilf_generator; };
  }
  return {};
}

GenusCounts& GenusCounts::operator+=(const GenusCounts& o) {
  total += o.total;
  matched += o.matched;
  symmetric += o.symmetric;
  almost_symmetric += o.almost_symmetric;
  positioned += o.positioned;
  ordinary += o.ordinary;
  lech_extremal += o.lech_extremal;
  wilf_generator += o.wilf_generator;
  dimd_equality += o.dimd_equality;
  lech_equality += o.lech_equality;
  return *this;
}

void CensusSummary::merge(const CensusSummary& other) {
  if (other.per_genus.size() > per_genus.size()) per_genus.resize(other.per_genus.size());
  max_genus = std::max(max_genus, other.max_genus);
  for (std::size_t g = 0; g < other.per_genus.size(); ++g) per_genus[g] += other.per_genus[g];
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  equality_counterexamples.insert(equality_counterexamples.end(), other.equality_counterexamples.begin(),
                                  other.equality_counterexamples.end());
}

void CensusSummary::canonicalize() {
  auto key = [](const Violation& v) { return std::tie(v.genus, v.generators, v.check_id); };
  auto less = [&](const Violation& a, const Violation& b) { return key(a) < key(b); };
  std::sort(violations.begin(), violations.end(), less);
  std::sort(equality_counterexamples.begin(), equality_counterexamples.end(), less);
}

std::uint64_t CensusSummary::total() const {
  std::uint64_t t = 0;
  for (const auto& c : per_genus) t += c.total;
  return t;
}

std::size_t CensusSummary::violation_count(CheckId id) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.check_id == id; }));
}

namespace {

// Packed tree vertex: dec[y] counts the pairs a <= b in S with a + b = y, so
// y is in S iff dec[y] > 0 and y > 0 is a minimal generator iff dec[y] == 1.
constexpr int kCapacity = 3 * kMaxEnumerationGenus + 8;

struct PackedNode {
  std::array<std::uint8_t, kCapacity> dec;
  int conductor;
  int multiplicity;
  int genus;

  static PackedNode root() {
    PackedNode n{};
    for (int y = 0; y < kCapacity; ++y) n.dec[static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(y / 2 + 1);
    n.conductor = 0;
    n.multiplicity = 1;
    n.genus = 0;
    return n;
  }

  int generator_range_begin() const { return std::max(conductor, 1); }
  int generator_range_end() const { return generator_range_begin() + multiplicity; }

  bool is_generator(int y) const { return dec[static_cast<std::size_t>(y)] == 1; }

  PackedNode remove(int x) const {
    PackedNode child;
    child.dec = dec;
    for (int y = x; y < kCapacity; ++y) {
      if (dec[static_cast<std::size_t>(y - x)] > 0) --child.dec[static_cast<std::size_t>(y)];
    }
    child.conductor = x + 1;
    child.multiplicity = (x == multiplicity) ? multiplicity + 1 : multiplicity;
    child.genus = genus + 1;
    return child;
  }

  NumericalSemigroup materialize() const {
    NumericalSemigroup::Bits bits(static_cast<std::size_t>(conductor));
    for (int y = 0; y < conductor; ++y) {
      if (dec[static_cast<std::size_t>(y)] > 0) bits.set(static_cast<std::size_t>(y));
    }
    std::vector<int> gens;
    for (int y = 1; y < generator_range_end(); ++y) {
      if (is_generator(y)) gens.push_back(y);
    }
    return NumericalSemigroup::from_parts(std::move(bits), std::move(gens));
  }
};

// Work applied to every visited node, writing into a per-worker summary.
class NodeProcessor {
 public:
  NodeProcessor(const Filter& filter, const Visitor& visitor, const EnumerationOptions& options,
                const std::vector<CheckId>* checks)
      : filter_(filter), visitor_(visitor), options_(options), checks_(checks) {}

  void operator()(const PackedNode& node, CensusSummary& out) const {
    auto s = share(node.materialize());
    const bool cross_check = node.genus <= options_.cross_check_genus;
    auto report = invariants(*s);
    report.flags = classify(s, cross_check);

    auto& counts = out.per_genus[static_cast<std::size_t>(node.genus)];
    ++counts.total;
    counts.symmetric += report.flags.symmetric;
    counts.almost_symmetric += report.flags.almost_symmetric;
    counts.positioned += report.flags.positioned;
    counts.ordinary += report.flags.ordinary;
    counts.lech_extremal += report.flags.lech_extremal;
    counts.wilf_generator += report.flags.wilf_generator;

    const auto eq = equality_analysis(*s);
    counts.dimd_equality += eq.dimd_equality;
    counts.lech_equality += eq.lech_equality;
    if (eq.counterexample) {
      out.equality_counterexamples.push_back(as_violation(*eq.counterexample, node.genus, report));
    }

    if (filter_ && !filter_(*s, report)) return;
    ++counts.matched;
    if (visitor_) visitor_(*s, report);
    if (!checks_) return;

    // Bookkeeping is cross-checked against ideal cardinalities only where
    // the classification is.
    const auto book = cross_check ? ag_bookkeeping(s) : ag_bookkeeping_formula(*s);
    for (const auto& v : evaluate_checks(numbers_of(*s), book)) {
      if (v.holds) continue;
      if (std::find(checks_->begin(), checks_->end(), v.check_id) == checks_->end()) continue;
      out.violations.push_back(as_violation(v, node.genus, report));
    }
  }

 private:
  static Violation as_violation(const InequalityVerdict& v, int genus, const InvariantReport& r) {
    return {v.check_id, genus, r.minimal_generators, v.lhs, v.rhs, r.flags.almost_symmetric, r.flags.wilf_generator};
  }

  const Filter& filter_;
  const Visitor& visitor_;
  const EnumerationOptions& options_;
  const std::vector<CheckId>* checks_;
};

class Walker {
 public:
  Walker(int g_max, const EnumerationOptions& options, const NodeProcessor& process)
      : g_max_(g_max), options_(options), process_(process) {}

  CensusSummary run() {
    const unsigned workers =
        options_.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options_.workers;
    const int frontier = std::clamp(options_.frontier_genus, 0, g_max_);
    start_ = std::chrono::steady_clock::now();

    // Above the frontier the tree is small; walk it here and collect the
    // frontier subtrees as tasks.
    CensusSummary head(g_max_);
    std::vector<PackedNode> tasks;
    collect(PackedNode::root(), frontier, head, tasks);

    std::vector<CensusSummary> partial(workers, CensusSummary(g_max_));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](unsigned id) {
      try {
        for (;;) {
          if (stop_.load(std::memory_order_relaxed)) return;
          const std::size_t t = next.fetch_add(1);
          if (t >= tasks.size()) return;
          descend(tasks[t], partial[id]);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop_ = true;
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
      for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& p : partial) head.merge(p);
    head.canonicalize();
    if (options_.progress) report_progress(true);
    return head;
  }

 private:
  void visit(const PackedNode& node, CensusSummary& out) {
    const auto seen = visited_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (options_.node_budget && seen > *options_.node_budget) {
      stop_ = true;
      throw Error(ErrorCode::ResourceLimit, "node budget of " + std::to_string(*options_.node_budget) + " exceeded");
    }
    process_(node, out);
    if (options_.progress && seen % (1u << 20) == 0) report_progress(false);
  }

  void collect(const PackedNode& node, int frontier, CensusSummary& out, std::vector<PackedNode>& tasks) {
    if (node.genus == frontier) {
      tasks.push_back(node);
      return;
    }
    visit(node, out);
    for (int x = node.generator_range_begin(); x < node.generator_range_end(); ++x) {
      if (node.is_generator(x)) collect(node.remove(x), frontier, out, tasks);
    }
  }

  void descend(const PackedNode& node, CensusSummary& out) {
    if (stop_.load(std::memory_order_relaxed)) return;
    visit(node, out);
    if (node.genus == g_max_) return;
    for (int x = node.generator_range_begin(); x < node.generator_range_end(); ++x) {
      if (node.is_generator(x)) descend(node.remove(x), out);
    }
  }

  void report_progress(bool done) const {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const auto n = visited_.load();
    std::fprintf(stderr, "[census] %s%llu nodes, %.0f nodes/sec, frontier genus %d\n", done ? "done: " : "",
                 static_cast<unsigned long long>(n), secs > 0 ? static_cast<double>(n) / secs : 0.0,
                 std::clamp(options_.frontier_genus, 0, g_max_));
  }

  int g_max_;
  const EnumerationOptions& options_;
  const NodeProcessor& process_;
  std::atomic<std::uint64_t> visited_{0};
  std::atomic<bool> stop_{false};
  std::chrono::steady_clock::time_point start_;
};

CensusSummary run_census(int g_max, const Filter& filter, const Visitor& visitor, const EnumerationOptions& options,
                         const std::vector<CheckId>* checks) {
  if (g_max < 0 || g_max > kMaxEnumerationGenus) {
    throw Error(ErrorCode::InputTooLarge,
                "max genus must lie in [0, " + std::to_string(kMaxEnumerationGenus) + "], got " + std::to_string(g_max));
  }
  NodeProcessor process(filter, visitor, options, checks);
  return Walker(g_max, options, process).run();
}

}  // namespace

CensusSummary enumerate_by_genus(int g_max, const Filter& filter, const Visitor& visitor,
                                 const EnumerationOptions& options) {
  return run_census(g_max, filter, visitor, options, nullptr);
}

SweepResult sweep(int g_max, const std::vector<CheckId>& checks, const Filter& filter,
                  const EnumerationOptions& options) {
  SweepResult result{run_census(g_max, filter, {}, options, &checks), 0};
  if (!result.summary.violations.empty() || !result.summary.equality_counterexamples.empty()) {
    result.exit_status = 1;
  }
  return result;
}

std::vector<std::uint64_t> brute_force_census(int g_max) {
  if (g_max < 0 || g_max > 10) {
    throw Error(ErrorCode::OracleTooLarge, "brute-force census is limited to genus 10, got " + std::to_string(g_max));
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g_max) + 1, 0);
  counts[0] = 1;
  for (int g = 1; g <= g_max; ++g) {
    // Gap sets are g-subsets of [1, 2g]; bit i stands for the integer i + 1.
    const int width = 2 * g;
    const std::uint32_t all = (std::uint32_t{1} << width) - 1;
    std::uint32_t gaps = (std::uint32_t{1} << g) - 1;
    while (gaps <= all) {
      const std::uint32_t members = all & ~gaps;
      bool closed = true;
      for (int a = 0; a < width && closed; ++a) {
        if (!(members >> a & 1u)) continue;
        // (a+1) + (b+1) sits at bit a + b + 1.
        const std::uint32_t sums = (members << (a + 1)) & all;
        closed = (sums & gaps) == 0;
      }
      counts[static_cast<std::size_t>(g)] += closed;
      // Next subset of the same size (Gosper).
      const std::uint32_t low = gaps & (~gaps + 1);
      const std::uint32_t ripple = gaps + low;
      if (ripple == 0 || ripple > all + 1) break;
      gaps = (((ripple ^ gaps) >> 2) / low) | ripple;
    }
  }
  return counts;
}

}  // namespace nsg
