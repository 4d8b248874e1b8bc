#include "nsg/cli.hpp"

#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nsg/enumeration.hpp"
#include "nsg/good_semigroup.hpp"
#include "nsg/report.hpp"

namespace nsg::cli {

namespace {

using report::Json;

SemigroupPtr semigroup_from_args(const std::vector<std::string>& words) {
  std::string text;
  for (const auto& w : words) text += w + " ";
  const auto gens = parse_generator_list(text);
  return share(NumericalSemigroup::from_generators(gens));
}

std::vector<CheckId> parse_checks(const std::string& list) {
  if (list.empty() || list == "all") return {kAllChecks.begin(), kAllChecks.end()};
  std::vector<CheckId> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_check_id(item));
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "no check ids in '" + list + "'");
  return out;
}

struct Context {
  std::vector<std::string> command;
  std::ostream& out;
  std::ostream& err;
};

int cmd_info(const Context& ctx, const std::vector<std::string>& gens, bool json) {
  const auto s = semigroup_from_args(gens);
  const auto rec = report::describe(s);
  if (json) {
    ctx.out << report::dump(report::document(ctx.command, report::to_json(rec)));
  } else {
    report::print_record(ctx.out, rec);
  }
  for (const auto& v : rec.verdicts) {
    if (!v.holds) return 1;
  }
  return 0;
}

int cmd_ideal(const Context& ctx, const std::vector<std::string>& gens, const std::string& expr, bool json) {
  const auto s = semigroup_from_args(gens);
  const auto ideal = evaluate_ideal_expression(s, expr);
  if (json) {
    Json body = {{"generators", s->minimal_generators()}, {"expression", expr}, {"ideal", report::to_json(ideal)}};
    ctx.out << report::dump(report::document(ctx.command, body));
  } else {
    report::print_ideal(ctx.out, ideal);
  }
  return 0;
}

struct VerifyArgs {
  int max_genus = 0;
  std::string filter = "all";
  std::string checks = "all";
  unsigned workers = 0;
  int frontier = 12;
  std::string csv_path;
  bool json = false;
  bool progress = false;
};

int cmd_verify(const Context& ctx, const VerifyArgs& a) {
  const auto checks = parse_checks(a.checks);
  const auto named = parse_filter(a.filter);
  EnumerationOptions options;
  options.workers = a.workers;
  options.frontier_genus = a.frontier;
  options.progress = a.progress;

  Filter filter = make_filter(named);
  std::ofstream csv;
  std::mutex csv_mutex;
  if (!a.csv_path.empty()) {
    csv.open(a.csv_path);
    if (!csv) throw Error(ErrorCode::ParseError, "cannot write " + a.csv_path);
    csv << report::kCsvHeader << "\n";
    // The per-semigroup stream rides on the filter, which sees every node.
    filter = [&, base = filter](const NumericalSemigroup& s, const InvariantReport& r) {
      if (base && !base(s, r)) return false;
      const auto verdicts = evaluate_checks(numbers_of(s), ag_bookkeeping_formula(s), r.minimal_generators);
      std::lock_guard lock(csv_mutex);
      for (const auto& v : verdicts) {
        for (CheckId id : checks) {
          if (id == v.check_id) csv << report::csv_row(v) << "\n";
        }
      }
      return true;
    };
  }

  const auto result = sweep(a.max_genus, checks, filter, options);
  if (a.json) {
    Json names = Json::array();
    for (CheckId id : checks) names.push_back(std::string(to_string(id)));
    Json body = {{"filter", std::string(to_string(named))},
                 {"checks", names},
                 {"summary", report::to_json(result.summary)},
                 {"exit_status", result.exit_status}};
    ctx.out << report::dump(report::document(ctx.command, body));
  } else {
    report::print_census(ctx.out, result.summary, true);
    report::print_violations(ctx.out, result.summary);
  }
  return result.exit_status;
}

int cmd_enumerate(const Context& ctx, int max_genus, bool count, bool json, unsigned workers) {
  EnumerationOptions options;
  options.workers = count ? workers : 1;
  if (count) {
    const auto summary = enumerate_by_genus(max_genus, {}, {}, options);
    if (json) {
      Json rows = Json::array();
      for (const auto& k : summary.per_genus) rows.push_back(k.total);
      ctx.out << report::dump(report::document(ctx.command, {{"counts", rows}, {"total", summary.total()}}));
    } else {
      report::print_census(ctx.out, summary, false);
    }
    return 0;
  }
  // Listing mode: one semigroup per line, sorted for stable output.
  std::vector<std::pair<int, std::vector<int>>> all;
  std::mutex m;
  enumerate_by_genus(
      max_genus, {},
      [&](const NumericalSemigroup& s, const InvariantReport& r) {
        std::lock_guard lock(m);
        all.emplace_back(s.genus(), r.minimal_generators);
      },
      options);
  std::sort(all.begin(), all.end());
  if (json) {
    Json rows = Json::array();
    for (const auto& [g, gens] : all) rows.push_back({{"genus", g}, {"generators", gens}});
    ctx.out << report::dump(report::document(ctx.command, {{"semigroups", rows}}));
  } else {
    for (const auto& [g, gens] : all) {
      ctx.out << g << " <";
      for (std::size_t i = 0; i < gens.size(); ++i) ctx.out << (i ? "," : "") << gens[i];
      ctx.out << ">\n";
    }
  }
  return 0;
}

int cmd_oracle(const Context& ctx, int max_genus, bool json) {
  const auto brute = brute_force_census(max_genus);
  const auto tree = enumerate_by_genus(max_genus);
  bool agree = true;
  Json rows = Json::array();
  if (!json) ctx.out << "genus       tree      brute\n";
  for (int g = 0; g <= max_genus; ++g) {
    const auto t = tree.per_genus[static_cast<std::size_t>(g)].total;
    const auto b = brute[static_cast<std::size_t>(g)];
    agree = agree && t == b;
    rows.push_back({{"genus", g}, {"tree", t}, {"brute_force", b}});
    if (!json) {
      std::ostringstream line;
      line << std::setw(5) << g << std::setw(11) << t << std::setw(11) << b << (t == b ? "" : "  MISMATCH") << "\n";
      ctx.out << line.str();
    }
  }
  std::uint64_t brute_total = 0;
  for (auto b : brute) brute_total += b;
  if (json) {
    ctx.out << report::dump(report::document(
        ctx.command, {{"rows", rows}, {"agree", agree}, {"tree_total", tree.total()}, {"brute_force_total", brute_total}}));
  } else {
    ctx.out << "total" << std::setw(11) << tree.total() << std::setw(11) << brute_total << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_gs2_info(const Context& ctx, const std::string& file, int nu, bool json) {
  const auto s = std::make_shared<const plane::GoodSemigroupPlane>(report::parse_plane_semigroup(report::read_json_file(file)));
  const auto r = plane::invariants_plane(s, nu);
  if (json) {
    Json body = report::to_json(r);
    body["semigroup"] = report::to_json(*s);
    ctx.out << report::dump(report::document(ctx.command, body));
  } else {
    report::print_plane(ctx.out, *s);
    report::print_plane_report(ctx.out, r);
  }
  for (const auto& v : r.verdicts) {
    if (!v.holds) return 1;
  }
  return 0;
}

int cmd_gs2_from_param(const Context& ctx, const std::string& file, std::optional<int> nu, bool json) {
  const auto param = report::parse_parametrization(report::read_json_file(file));
  const auto s = std::make_shared<const plane::GoodSemigroupPlane>(
      plane::from_parametrization(param.generators, param.truncation));
  std::optional<plane::PlaneInvariantReport> r;
  if (nu) r = plane::invariants_plane(s, *nu);
  if (json) {
    Json body = report::to_json(*s);
    if (r) body["invariants"] = report::to_json(*r);
    ctx.out << report::dump(report::document(ctx.command, body));
  } else {
    report::print_plane(ctx.out, *s);
    if (r) {
      ctx.out << "\n";
      report::print_plane_report(ctx.out, *r);
    }
  }
  if (r) {
    for (const auto& v : r->verdicts) {
      if (!v.holds) return 1;
    }
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical and good semigroup invariants, ideal arithmetic and census sweeps", "nsg"};
  app.require_subcommand(1);

  std::vector<std::string> gens;
  std::string expr;
  bool json = false;
  bool count = false;
  int max_genus = 0;
  unsigned workers = 0;
  std::string file;
  int nu = 0;
  VerifyArgs verify;

  auto* info = app.add_subcommand("info", "Invariants, classification and inequality verdicts");
  info->add_option("gens", gens, "Generators, e.g. 7 9 11 19")->required();
  info->add_flag("--json", json, "Canonical JSON output");

  auto* ideal = app.add_subcommand("ideal", "Evaluate an ideal expression");
  ideal->add_option("gens", gens, "Generators")->required();
  ideal->add_option("--expr", expr, "Expression over omega, M, C, S, N, integers and gens:a,b")->required();
  ideal->add_flag("--json", json, "Canonical JSON output");

  auto* ver = app.add_subcommand("verify", "Sweep all semigroups up to a genus and run the checks");
  ver->add_option("--max-genus", verify.max_genus, "Largest genus")->required();
  ver->add_option("--filter", verify.filter, "all|symmetric|almost-symmetric|positioned|wilf-generator");
  ver->add_option("--check", verify.checks, "Comma separated check ids, default all");
  ver->add_option("--workers", verify.workers, "Worker threads, 0 for all cores");
  ver->add_option("--frontier", verify.frontier, "Genus of the subtrees handed to workers");
  ver->add_option("--csv", verify.csv_path, "Write every verdict row to this file");
  ver->add_flag("--progress", verify.progress, "Progress on standard error");
  ver->add_flag("--json", verify.json, "Canonical JSON output");

  auto* en = app.add_subcommand("enumerate", "Census of semigroups by genus");
  en->add_option("--max-genus", max_genus, "Largest genus")->required();
  en->add_flag("--count", count, "Print counts per genus instead of listing");
  en->add_option("--workers", workers, "Worker threads for counting, 0 for all cores");
  en->add_flag("--json", json, "Canonical JSON output");

  auto* orc = app.add_subcommand("oracle", "Compare tree counts with brute-force enumeration (genus <= 10)");
  orc->add_option("--max-genus", max_genus, "Largest genus")->required();
  orc->add_flag("--json", json, "Canonical JSON output");

  auto* gs2 = app.add_subcommand("gs2", "Two-branch good semigroups");
  gs2->require_subcommand(1);
  auto* gs_info = gs2->add_subcommand("info", "Invariants of a good semigroup given as JSON");
  gs_info->add_option("--file", file, "JSON with small_elements and conductor")->required();
  gs_info->add_option("--nu", nu, "Embedding dimension of the ring")->required()->check(CLI::PositiveNumber);
  gs_info->add_flag("--json", json, "Canonical JSON output");
  auto* gs_param = gs2->add_subcommand("from-param", "Value semigroup of a two-branch parametrization");
  gs_param->add_option("--file", file, "JSON with generators and truncation")->required();
  auto* nu_opt = gs_param->add_option("--nu", nu, "Also report invariants with this embedding dimension")
                     ->check(CLI::PositiveNumber);
  gs_param->add_flag("--json", json, "Canonical JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Context ctx{{}, out, err};
  for (int i = 1; i < argc; ++i) ctx.command.emplace_back(argv[i]);

  try {
    if (info->parsed()) return cmd_info(ctx, gens, json);
    if (ideal->parsed()) return cmd_ideal(ctx, gens, expr, json);
    if (ver->parsed()) return cmd_verify(ctx, verify);
    if (en->parsed()) return cmd_enumerate(ctx, max_genus, count, json, workers);
    if (orc->parsed()) return cmd_oracle(ctx, max_genus, json);
    if (gs_info->parsed()) return cmd_gs2_info(ctx, file, nu, json);
    if (gs_param->parsed()) {
      return cmd_gs2_from_param(ctx, file, nu_opt->count() ? std::optional<int>(nu) : std::nullopt, json);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InternalInconsistency ? 1 : 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace nsg::cli
