#include "nsg/report.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "nsg/classification.hpp"

namespace nsg::report {

namespace {

std::string join(const std::vector<int>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Json point_json(plane::Point p) { return Json::array({p.x, p.y}); }

plane::Point parse_point(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw Error(ErrorCode::ParseError, std::string(what) + " must be a pair of integers, got " + j.dump());
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

plane::Rational parse_integer(const Json& j) {
  if (j.is_number_integer()) return plane::Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    const bool ok = !text.empty() && text.find_first_not_of("-0123456789") == std::string::npos &&
                    text.find('-', 1) == std::string::npos && text != "-";
    if (ok) return plane::Rational(boost::multiprecision::cpp_int(text));
  }
  throw Error(ErrorCode::ParseError, "coefficient parts must be integers, got " + j.dump());
}

std::vector<plane::SeriesTerm> parse_series(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "branch must be an array of [exp, num, den] terms");
  std::vector<plane::SeriesTerm> out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer()) {
      throw Error(ErrorCode::ParseError, "series term must be [exp, num, den], got " + term.dump());
    }
    const auto exp = term[0].get<std::int64_t>();
    if (exp < 0 || exp > 100000) throw Error(ErrorCode::ParseError, "exponent out of range: " + term.dump());
    const auto num = parse_integer(term[1]);
    const auto den = parse_integer(term[2]);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in " + term.dump());
    out.push_back({static_cast<int>(exp), num / den});
  }
  return out;
}

}  // namespace

Json document(const std::vector<std::string>& command, Json body) {
  Json doc = std::move(body);
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["command"] = command;
  return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SemigroupRecord describe(const SemigroupPtr& s) {
  auto inv = invariants(*s);
  inv.flags = classify(s, true);
  std::optional<int> witness;
  if (!s->is_full()) witness = wilf_generator_exists(s).witness;
  auto book = ag_bookkeeping(s);
  auto verdicts = evaluate_checks(numbers_of(*s), book, inv.minimal_generators);
  return {std::move(inv), witness, book, std::move(verdicts), canonical_ideal(s)};
}

Json to_json(const InequalityVerdict& v) {
  return {{"check_id", std::string(to_string(v.check_id))}, {"lhs", v.lhs}, {"rhs", v.rhs},
          {"holds", v.holds}, {"equality", v.equality}};
}

Json to_json(const BookkeepingReport& b) {
  return {{"len_m_xc", b.len_m_xc}, {"len_xRbar_m", b.len_xRbar_m}, {"len_ker_phi", b.len_ker_phi}, {"e_c", b.e_c}};
}

Json to_json(const RelativeIdeal& i) {
  return {{"min_element", i.min_element()}, {"threshold", i.threshold()}, {"small_elements", i.small_elements()}};
}

Json to_json(const SemigroupRecord& r) {
  const auto& v = r.invariants;
  Json j = {
      {"generators", v.minimal_generators},
      {"e", v.e},
      {"nu", v.nu},
      {"frobenius", v.frobenius},
      {"conductor", v.conductor},
      {"n", v.n},
      {"genus", v.genus},
      {"depth_q", v.depth_q},
      {"type", v.type_t},
      {"pseudo_frobenius", v.pseudo_frobenius},
      {"symmetric", v.flags.symmetric},
      {"almost_symmetric", v.flags.almost_symmetric},
      {"positioned", v.flags.positioned},
      {"ordinary", v.flags.ordinary},
      {"lech_extremal", v.flags.lech_extremal},
      {"wilf_generator", v.flags.wilf_generator},
      {"wilf_generator_witness", r.wilf_witness ? Json(*r.wilf_witness) : Json(nullptr)},
      {"bookkeeping", to_json(r.bookkeeping)},
      {"canonical_ideal", to_json(r.canonical)},
  };
  Json verdicts = Json::object();
  for (const auto& verdict : r.verdicts) {
    auto vj = to_json(verdict);
    vj.erase("check_id");
    verdicts[std::string(to_string(verdict.check_id))] = vj;
  }
  j["verdicts"] = verdicts;
  return j;
}

Json to_json(const Violation& v) {
  return {{"check_id", std::string(to_string(v.check_id))},
          {"genus", v.genus},
          {"generators", v.generators},
          {"lhs", v.lhs},
          {"rhs", v.rhs},
          {"almost_symmetric", v.almost_symmetric},
          {"wilf_generator", v.wilf_generator}};
}

Json to_json(const CensusSummary& c) {
  Json rows = Json::array();
  for (std::size_t g = 0; g < c.per_genus.size(); ++g) {
    const auto& k = c.per_genus[g];
    rows.push_back({{"genus", g},
                    {"total", k.total},
                    {"matched", k.matched},
                    {"symmetric", k.symmetric},
                    {"almost_symmetric", k.almost_symmetric},
                    {"positioned", k.positioned},
                    {"ordinary", k.ordinary},
                    {"lech_extremal", k.lech_extremal},
                    {"wilf_generator", k.wilf_generator},
                    {"dimd_equality", k.dimd_equality},
                    {"lech_equality", k.lech_equality}});
  }
  Json violations = Json::array();
  for (const auto& v : c.violations) violations.push_back(to_json(v));
  Json counter = Json::array();
  for (const auto& v : c.equality_counterexamples) counter.push_back(to_json(v));
  Json by_check = Json::object();
  for (CheckId id : kAllChecks) by_check[std::string(to_string(id))] = c.violation_count(id);
  return {{"max_genus", c.max_genus},
          {"total", c.total()},
          {"per_genus", rows},
          {"violations", violations},
          {"violation_counts", by_check},
          {"equality_counterexamples", counter}};
}

Json to_json(const plane::PlaneInvariantReport& r) {
  Json verdicts = Json::object();
  for (const auto& v : r.verdicts) {
    auto vj = to_json(v);
    vj.erase("check_id");
    verdicts[std::string(to_string(v.check_id))] = vj;
  }
  return {{"multiplicity_vector", point_json(r.multiplicity_vector)},
          {"e", r.e},
          {"nu", r.nu},
          {"conductor", point_json(r.conductor)},
          {"e_c", r.e_c},
          {"len_R_c", r.len_R_c},
          {"depth_q", r.depth_q},
          {"bookkeeping", to_json(r.bookkeeping)},
          {"verdicts", verdicts}};
}

Json to_json(const plane::GoodSemigroupPlane& s) {
  Json pts = Json::array();
  for (const auto& p : s.small_elements()) pts.push_back(point_json(p));
  return {{"small_elements", pts}, {"conductor", point_json(s.conductor())}};
}

std::string csv_row(const InequalityVerdict& v) {
  std::ostringstream out;
  out << to_string(v.check_id) << ',' << join(v.semigroup, " ") << ',' << v.lhs << ',' << v.rhs << ','
      << (v.holds ? "true" : "false") << ',' << (v.equality ? "true" : "false");
  return out.str();
}

plane::GoodSemigroupPlane parse_plane_semigroup(const Json& j) {
  if (!j.is_object() || !j.contains("small_elements") || !j.contains("conductor")) {
    throw Error(ErrorCode::ParseError, "good semigroup JSON needs 'small_elements' and 'conductor'");
  }
  const auto gamma = parse_point(j["conductor"], "conductor");
  if (gamma.x < 0 || gamma.y < 0 || gamma.x > 4096 || gamma.y > 4096) {
    throw Error(ErrorCode::InputTooLarge, "conductor out of range: " + plane::to_string(gamma));
  }
  if (!j["small_elements"].is_array()) throw Error(ErrorCode::ParseError, "'small_elements' must be an array");
  std::vector<plane::Point> pts;
  for (const auto& p : j["small_elements"]) {
    const auto q = parse_point(p, "small element");
    if (q.x < 0 || q.y < 0) throw Error(ErrorCode::ParseError, "small element outside N^2: " + p.dump());
    pts.push_back(q);
  }
  return plane::GoodSemigroupPlane::from_small_elements(pts, gamma);
}

Parametrization parse_parametrization(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array() || !j.contains("truncation") ||
      !j["truncation"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "parametrization JSON needs a 'generators' array and an integer 'truncation'");
  }
  Parametrization p;
  const auto n = j["truncation"].get<std::int64_t>();
  if (n > 512) throw Error(ErrorCode::InputTooLarge, "truncation above 512");
  p.truncation = static_cast<int>(n);
  for (const auto& g : j["generators"]) {
    if (!g.is_object() || !g.contains("branch1") || !g.contains("branch2")) {
      throw Error(ErrorCode::ParseError, "each generator needs 'branch1' and 'branch2'");
    }
    p.generators.push_back({parse_series(g["branch1"]), parse_series(g["branch2"])});
  }
  return p;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void print_verdicts(std::ostream& out, const std::vector<InequalityVerdict>& verdicts) {
  out << std::left << std::setw(14) << "check" << std::right << std::setw(10) << "lhs" << std::setw(10) << "rhs"
      << "  holds  equality\n";
  for (const auto& v : verdicts) {
    out << std::left << std::setw(14) << to_string(v.check_id) << std::right << std::setw(10) << v.lhs
        << std::setw(10) << v.rhs << "  " << std::left << std::setw(5) << yes_no(v.holds) << "  "
        << yes_no(v.equality) << std::right << "\n";
  }
}

void print_record(std::ostream& out, const SemigroupRecord& r) {
  const auto& v = r.invariants;
  auto row = [&out](const char* key, const auto& value) {
    out << std::left << std::setw(20) << key << value << std::right << "\n";
  };
  row("generators", "<" + join(v.minimal_generators, ",") + ">");
  row("e", v.e);
  row("nu", v.nu);
  row("frobenius", v.frobenius);
  row("conductor", v.conductor);
  row("n", v.n);
  row("genus", v.genus);
  row("depth q", v.depth_q);
  row("type", v.type_t);
  row("pseudo-frobenius", "{" + join(v.pseudo_frobenius, ", ") + "}");
  row("symmetric", yes_no(v.flags.symmetric));
  row("almost symmetric", yes_no(v.flags.almost_symmetric));
  row("positioned", yes_no(v.flags.positioned));
  row("ordinary", yes_no(v.flags.ordinary));
  row("lech extremal", yes_no(v.flags.lech_extremal));
  row("wilf generator", r.wilf_witness ? std::to_string(*r.wilf_witness) : std::string("none"));
  row("canonical ideal", r.canonical.to_string());
  row("l(m/xc)", r.bookkeeping.len_m_xc);
  row("l(ker phi)", r.bookkeeping.len_ker_phi);
  row("l(xRbar/m)", r.bookkeeping.len_xRbar_m);
  row("e(c)", r.bookkeeping.e_c);
  out << "\n";
  print_verdicts(out, r.verdicts);
}

void print_ideal(std::ostream& out, const RelativeIdeal& i) {
  out << "min element  " << i.min_element() << "\n"
      << "threshold    " << i.threshold() << "\n"
      << "elements     " << i.to_string() << "\n";
}

void print_census(std::ostream& out, const CensusSummary& c, bool with_classes) {
  out << std::setw(5) << "genus" << std::setw(12) << "count";
  if (with_classes) {
    out << std::setw(10) << "matched" << std::setw(8) << "sym" << std::setw(8) << "asym" << std::setw(10) << "posit"
        << std::setw(10) << "wilfgen" << std::setw(8) << "dimd=" << std::setw(8) << "lech=";
  }
  out << "\n";
  for (std::size_t g = 0; g < c.per_genus.size(); ++g) {
    const auto& k = c.per_genus[g];
    out << std::setw(5) << g << std::setw(12) << k.total;
    if (with_classes) {
      out << std::setw(10) << k.matched << std::setw(8) << k.symmetric << std::setw(8) << k.almost_symmetric
          << std::setw(10) << k.positioned << std::setw(10) << k.wilf_generator << std::setw(8) << k.dimd_equality
          << std::setw(8) << k.lech_equality;
    }
    out << "\n";
  }
  out << "total " << c.total() << "\n";
}

void print_violations(std::ostream& out, const CensusSummary& c) {
  out << "violations:";
  for (CheckId id : kAllChecks) out << ' ' << to_string(id) << '=' << c.violation_count(id);
  out << "\n";
  for (const auto& v : c.violations) {
    out << "  " << to_string(v.check_id) << " <" << join(v.generators, ",") << "> lhs=" << v.lhs << " rhs=" << v.rhs
        << "\n";
  }
  if (!c.equality_counterexamples.empty()) {
    out << "equality characterization failures: " << c.equality_counterexamples.size() << "\n";
    for (const auto& v : c.equality_counterexamples) {
      out << "  " << to_string(v.check_id) << " <" << join(v.generators, ",") << "> lhs=" << v.lhs
          << " rhs=" << v.rhs << "\n";
    }
  }
}

void print_plane(std::ostream& out, const plane::GoodSemigroupPlane& s) {
  out << "conductor       " << plane::to_string(s.conductor()) << "\n";
  out << "small elements ";
  for (const auto& p : s.small_elements()) out << ' ' << plane::to_string(p);
  out << "\n";
}

void print_plane_report(std::ostream& out, const plane::PlaneInvariantReport& r) {
  auto row = [&out](const char* key, const auto& value) {
    out << std::left << std::setw(20) << key << value << std::right << "\n";
  };
  row("multiplicity vec", plane::to_string(r.multiplicity_vector));
  row("e", r.e);
  row("nu", r.nu);
  row("conductor", plane::to_string(r.conductor));
  row("e(c)", r.e_c);
  row("l(R/c)", r.len_R_c);
  row("depth q", r.depth_q);
  row("l(m/xc)", r.bookkeeping.len_m_xc);
  row("l(ker phi)", r.bookkeeping.len_ker_phi);
  row("l(xRbar/m)", r.bookkeeping.len_xRbar_m);
  out << "\n";
  print_verdicts(out, r.verdicts);
}

}  // namespace nsg::report
